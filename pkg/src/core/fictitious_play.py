"""
Module: fictitious_play.py
--------------------------
Jeu fictif (Brown) pour approcher l'équilibre du jeu à somme nulle.

À chaque étape, R joue la meilleure réponse pure à l'historique de A,
puis A la meilleure réponse pure à l'historique de R (départage par le
plus petit indice, ce qui rend l'exécution déterministe). Les
fréquences empiriques convergent vers un équilibre, à un rythme lent.

Fonctions:
    fictitious_play: Approximation pour une matrice
    fictitious_play_batch: Même itération vectorisée sur une pile de matrices

Version: 1.0
"""

import logging
from dataclasses import dataclass

import numpy as np

from src.core.game import MatrixLike, as_payoff_array
from src.models.game import Equilibrium, MixedStrategy
from src.utils.errors import DomainError

logger = logging.getLogger('blockpeek.game')


@dataclass(frozen=True, eq=False)
class FictitiousPlayBatch:
    """
    Résultat pour une pile de B matrices m x n

    lower et upper encadrent la valeur exacte de chaque jeu.
    """
    x_r: np.ndarray      # (B, m)
    x_a: np.ndarray      # (B, n)
    value: np.ndarray    # (B,)
    lower: np.ndarray    # (B,)
    upper: np.ndarray    # (B,)
    iterations: int

    def equilibrium(self, index: int = 0) -> Equilibrium:
        return Equilibrium(x_r=MixedStrategy.from_weights(self.x_r[index]),
                           x_a=MixedStrategy.from_weights(self.x_a[index]),
                           value=float(self.value[index]))


def fictitious_play_batch(stack: np.ndarray, iterations: int) -> FictitiousPlayBatch:
    """
    Jeu fictif sur B matrices à la fois

    Args:
        stack: Tableau (B, m, n) ou matrice (m, n)
        iterations: Nombre d'étapes (>= 1)
    """
    if isinstance(iterations, bool) or not isinstance(iterations, (int, np.integer)) or iterations < 1:
        raise DomainError(f"Le nombre d'itérations doit être un entier >= 1, reçu {iterations!r}")
    stack = np.asarray(stack, dtype=float)
    if stack.ndim == 2:
        stack = stack[np.newaxis]
    if stack.ndim != 3 or stack.shape[1] == 0 or stack.shape[2] == 0:
        raise DomainError(f"Pile de matrices (B, m, n) attendue, forme {stack.shape}")
    if not np.all(np.isfinite(stack)):
        raise DomainError("Matrice de gains non finie")

    batch, m, n = stack.shape
    index = np.arange(batch)
    row_cum = np.zeros((batch, m))   # gain cumulé de chaque ligne contre l'historique de A
    col_cum = np.zeros((batch, n))   # gain cumulé de chaque colonne contre l'historique de R
    row_count = np.zeros((batch, m))
    col_count = np.zeros((batch, n))

    for _ in range(iterations):
        rows = row_cum.argmax(axis=1)
        row_count[index, rows] += 1.0
        col_cum += stack[index, rows, :]

        cols = col_cum.argmin(axis=1)
        col_count[index, cols] += 1.0
        row_cum += stack[index, :, cols]

    upper = row_cum.max(axis=1) / iterations
    lower = col_cum.min(axis=1) / iterations
    logger.debug(f"Jeu fictif: {batch} matrice(s), {iterations} itérations")
    return FictitiousPlayBatch(
        x_r=row_count / iterations,
        x_a=col_count / iterations,
        value=(upper + lower) / 2.0,
        lower=lower,
        upper=upper,
        iterations=iterations,
    )


def fictitious_play(matrix: MatrixLike, iterations: int) -> Equilibrium:
    """
    Équilibre approché par jeu fictif

    Args:
        matrix: PayoffMatrix ou tableau m x n fini
        iterations: Nombre d'étapes (>= 1)

    Returns:
        Fréquences empiriques et valeur (max cumul lignes + min cumul colonnes) / 2t
    """
    return fictitious_play_batch(as_payoff_array(matrix), iterations).equilibrium(0)
