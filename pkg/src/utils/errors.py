"""
Module: errors.py
-----------------
Hiérarchie d'exceptions du jeu de blocage.

Chaque exception porte le code de sortie que le point d'entrée
renvoie au système, afin que les erreurs de lecture, de domaine,
d'entrée/sortie et de résolution restent distinguables.

Classes:
    BlockPeekError: Classe de base
    DomainError: Entrée physique ou mathématique invalide
    ConfigError: Configuration ou fichier d'entrée illisible
    SolverError: Programme linéaire numériquement singulier
    ExportError: Écriture impossible d'un fichier de sortie

Version: 1.0
"""

from typing import Optional


class BlockPeekError(Exception):
    """Classe de base de toutes les erreurs du projet"""

    exit_code = 1


class DomainError(BlockPeekError, ValueError):
    """Valeur hors du domaine de validité d'une opération"""

    exit_code = 3


class ConfigError(BlockPeekError):
    """
    Erreur de lecture d'une configuration ou d'un fichier d'entrée

    Args:
        message: Description de l'erreur
        source: Fichier concerné
        line: Ligne fautive (1-indexée) si connue
        column: Colonne fautive si connue
        field: Champ fautif si connu
    """

    exit_code = 2

    def __init__(self, message: str, source: Optional[str] = None,
                 line: Optional[int] = None, column: Optional[int] = None,
                 field: Optional[str] = None):
        self.source = source
        self.line = line
        self.column = column
        self.field = field
        super().__init__(self._compose(message))

    def _compose(self, message: str) -> str:
        location = []
        if self.source:
            location.append(str(self.source))
        if self.line is not None:
            location.append(f"ligne {self.line}")
        if self.column is not None:
            location.append(f"colonne {self.column}")
        if self.field:
            location.append(f"champ '{self.field}'")
        if location:
            return f"{', '.join(location)}: {message}"
        return message


class SolverError(BlockPeekError, ArithmeticError):
    """Échec numérique du simplexe, avec rapport de conditionnement"""

    exit_code = 5

    def __init__(self, message: str, condition_number: Optional[float] = None,
                 shape: Optional[tuple] = None):
        self.condition_number = condition_number
        self.shape = shape
        details = []
        if shape is not None:
            details.append(f"matrice {shape[0]}x{shape[1]}")
        if condition_number is not None:
            details.append(f"conditionnement {condition_number:.3e}")
        if details:
            message = f"{message} ({', '.join(details)})"
        super().__init__(message)


class ExportError(BlockPeekError, OSError):
    """Fichier de sortie impossible à écrire"""

    exit_code = 4
