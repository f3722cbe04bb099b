"""
Module: game.py
---------------
Types du jeu à somme nulle entre le récepteur R et l'adversaire A.

Classes:
    ActionGrid: Les 15 positions angulaires α_k = (k/7)·30°
    PayoffMatrix: Efficacités spectrales ν (lignes: θ_R, colonnes: θ_A)
    MixedStrategy: Distribution de probabilité sur les actions
    Equilibrium: Profil de stratégies mixtes et valeur du jeu

Relations:
    - PayoffMatrix est construite par core.game.build_payoff_matrix
    - Equilibrium est produit par core.game.solve_zero_sum_lp
      ou approché par core.fictitious_play

Version: 1.0
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from src.utils.errors import DomainError

GRID_SIZE = 15
PROBABILITY_TOLERANCE = 1e-9


def grid_angle(k: int) -> float:
    """α_k = (k/7)·30°, exact aux multiples de 7 (α_7 = 30, α_14 = 60)"""
    return k * 30.0 / 7.0


def _frozen(values, dtype=float) -> np.ndarray:
    array = np.array(values, dtype=dtype)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class ActionGrid:
    """Ensemble d'actions partagé par R et A"""
    angles: Tuple[float, ...]

    def __post_init__(self):
        expected = tuple(grid_angle(k) for k in range(GRID_SIZE))
        if len(self.angles) != GRID_SIZE or not np.allclose(self.angles, expected, atol=1e-9):
            raise DomainError("La grille d'actions doit contenir α_k = (k/7)·30° pour k = 0..14")

    def __len__(self):
        return len(self.angles)

    def __getitem__(self, index):
        return self.angles[index]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.angles, dtype=float)


@dataclass(frozen=True, eq=False)
class PayoffMatrix:
    """
    :param values: Matrice ν en b/s/Hz, finie et positive
    :param row_angles: Angles des actions de R (lignes)
    :param col_angles: Angles des actions de A (colonnes)
    """
    values: np.ndarray
    row_angles: Tuple[float, ...]
    col_angles: Tuple[float, ...]

    def __post_init__(self):
        values = _frozen(self.values)
        if values.ndim != 2 or values.shape != (len(self.row_angles), len(self.col_angles)):
            raise DomainError(f"Dimensions incohérentes: {values.shape} pour "
                              f"{len(self.row_angles)}x{len(self.col_angles)} angles")
        if not np.all(np.isfinite(values)) or np.any(values < 0.0):
            raise DomainError("Les gains du jeu doivent être finis et positifs")
        object.__setattr__(self, 'values', values)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.values.shape


@dataclass(frozen=True, eq=False)
class MixedStrategy:
    """Poids non négatifs de somme 1"""
    probs: np.ndarray

    def __post_init__(self):
        probs = _frozen(self.probs)
        if probs.ndim != 1 or probs.size == 0:
            raise DomainError("Une stratégie mixte est un vecteur non vide")
        if not np.all(np.isfinite(probs)) or np.any(probs < 0.0):
            raise DomainError("Les probabilités doivent être finies et positives")
        if abs(probs.sum() - 1.0) > PROBABILITY_TOLERANCE:
            raise DomainError(f"Les probabilités doivent sommer à 1, somme = {probs.sum():.12f}")
        object.__setattr__(self, 'probs', probs)

    @classmethod
    def pure(cls, index: int, size: int = GRID_SIZE) -> 'MixedStrategy':
        probs = np.zeros(size)
        probs[index] = 1.0
        return cls(probs)

    @classmethod
    def from_weights(cls, weights: Sequence[float]) -> 'MixedStrategy':
        """Normalise des poids positifs (bruit d'arrondi négatif ramené à 0)"""
        weights = np.clip(np.asarray(weights, dtype=float), 0.0, None)
        total = weights.sum()
        if total <= 0.0:
            raise DomainError("Poids tous nuls: impossible de normaliser")
        return cls(weights / total)

    def __len__(self):
        return self.probs.size

    def to_list(self):
        return [float(p) for p in self.probs]


@dataclass(frozen=True, eq=False)
class Equilibrium:
    """
    :param x_r: Stratégie mixte du récepteur (maximiseur)
    :param x_a: Stratégie mixte de l'adversaire (minimiseur)
    :param value: Valeur du jeu en b/s/Hz
    """
    x_r: MixedStrategy
    x_a: MixedStrategy
    value: float

    def __str__(self):
        return (f"Equilibrium: v={self.value:.4f}, "
                f"|supp R|={int(np.count_nonzero(self.x_r.probs > 1e-6))}, "
                f"|supp A|={int(np.count_nonzero(self.x_a.probs > 1e-6))}")

    def to_dict(self) -> dict:
        return {
            'value': float(self.value),
            'x_r': self.x_r.to_list(),
            'x_a': self.x_a.to_list(),
        }
