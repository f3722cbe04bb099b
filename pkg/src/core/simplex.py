"""
Module: simplex.py
------------------
Simplexe primal sur tableau dense, règle de Bland.

Résout  max cᵀy  s.c.  My <= b, y >= 0  avec b >= 0: la base des
variables d'écart est réalisable, une seule phase suffit. Les
variables duales se lisent sur les coûts réduits des écarts.

Classes:
    SimplexResult: Solution primale, duale, objectif, pivots
    SimplexTableau: Tableau et pivotage

Version: 1.0
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.utils.errors import DomainError, SolverError

logger = logging.getLogger('blockpeek.game')

EPSILON = 1e-12


@dataclass(frozen=True, eq=False)
class SimplexResult:
    primal: np.ndarray
    dual: np.ndarray
    objective: float
    pivots: int


class SimplexTableau:
    """
    Tableau [M | I | b] et ligne des coûts réduits

    Args:
        c: Coefficients de l'objectif (n,)
        matrix: Contraintes (m, n)
        b: Seconds membres (m,), positifs
    """

    def __init__(self, c: np.ndarray, matrix: np.ndarray, b: np.ndarray):
        matrix = np.asarray(matrix, dtype=float)
        c = np.asarray(c, dtype=float)
        b = np.asarray(b, dtype=float)
        if matrix.ndim != 2 or c.shape != (matrix.shape[1],) or b.shape != (matrix.shape[0],):
            raise DomainError(f"Dimensions incohérentes: c{c.shape}, M{matrix.shape}, b{b.shape}")
        if np.any(b < 0.0):
            raise DomainError("Les seconds membres doivent être positifs")

        self.m, self.n = matrix.shape
        self.source = matrix
        self.rows = np.hstack((matrix, np.eye(self.m), b.reshape(-1, 1)))
        self.reduced = np.concatenate((c, np.zeros(self.m)))
        self.objective = 0.0
        self.basis = np.arange(self.n, self.n + self.m)
        self.pivots = 0

    def _entering(self):
        # Bland: plus petit indice de coût réduit positif
        candidates = np.nonzero(self.reduced > EPSILON)[0]
        return int(candidates[0]) if candidates.size else None

    def _leaving(self, column: int) -> int:
        positive = np.nonzero(self.rows[:, column] > EPSILON)[0]
        if positive.size == 0:
            raise SolverError("Programme linéaire non borné",
                              condition_number=np.linalg.cond(self.source), shape=self.source.shape)
        ratios = self.rows[positive, -1] / self.rows[positive, column]
        ties = positive[ratios <= ratios.min() + EPSILON]
        # Égalité: la variable de base d'indice minimal sort
        return int(ties[np.argmin(self.basis[ties])])

    def pivot(self, row: int, column: int) -> None:
        self.rows[row] /= self.rows[row, column]
        for i in range(self.m):
            if i != row and self.rows[i, column] != 0.0:
                self.rows[i] -= self.rows[i, column] * self.rows[row]
        # arrondi: les seconds membres restent positifs
        np.maximum(self.rows[:, -1], 0.0, out=self.rows[:, -1])
        step = self.reduced[column]
        self.objective += step * self.rows[row, -1]
        self.reduced -= step * self.rows[row, :-1]
        self.basis[row] = column
        self.pivots += 1

    def solve(self, max_pivots: Optional[int] = None) -> SimplexResult:
        """Itère jusqu'à l'optimum ou lève SolverError"""
        if max_pivots is None:
            max_pivots = 50 * (self.m + self.n)

        column = self._entering()
        while column is not None:
            if self.pivots >= max_pivots:
                raise SolverError(f"Pas de convergence après {self.pivots} pivots",
                                  condition_number=np.linalg.cond(self.source), shape=self.source.shape)
            self.pivot(self._leaving(column), column)
            column = self._entering()

        if not (np.all(np.isfinite(self.rows)) and np.all(np.isfinite(self.reduced))):
            raise SolverError("Tableau non fini après pivotage",
                              condition_number=np.linalg.cond(self.source), shape=self.source.shape)

        primal = np.zeros(self.n + self.m)
        primal[self.basis] = self.rows[:, -1]
        dual = -self.reduced[self.n:]
        logger.debug(f"Simplexe: optimum {self.objective:.6f} en {self.pivots} pivots")
        return SimplexResult(primal=primal[:self.n], dual=dual,
                             objective=float(self.objective), pivots=self.pivots)
