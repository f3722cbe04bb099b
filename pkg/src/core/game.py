"""
Module: game.py
---------------
Construction et résolution du jeu à somme nulle R contre A.

R (lignes) maximise l'efficacité spectrale ν, A (colonnes) la minimise.
La résolution passe par le programme linéaire classique: la matrice est
translatée pour devenir strictement positive, puis

    max 1ᵀy  s.c.  By <= 1, y >= 0

donne la stratégie de A (y normalisé) et, par dualité, celle de R.

Fonctions:
    action_grid: Les 15 angles α_k
    build_payoff_matrix: Matrice ν pour un scénario et un champ r₃
    solve_zero_sum_lp: Équilibre exact par simplexe
    support: Actions jouées avec une probabilité > epsilon
    pure_security_levels: Niveaux de sécurité en stratégies pures
    indifference_residuals: Écarts à l'indifférence sur les supports

Version: 1.0
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Set, Union

import numpy as np

from src.core.channel import deterministic_grid, spectral_efficiency
from src.core.simplex import SimplexTableau
from src.models.game import GRID_SIZE, ActionGrid, Equilibrium, MixedStrategy, PayoffMatrix, grid_angle
from src.models.scenario import Scenario
from src.utils.errors import DomainError, SolverError

logger = logging.getLogger('blockpeek.game')

MatrixLike = Union[PayoffMatrix, np.ndarray]


@lru_cache(maxsize=1)
def action_grid() -> ActionGrid:
    """Grille α_k = (k/7)·30°, k = 0..14"""
    return ActionGrid(tuple(grid_angle(k) for k in range(GRID_SIZE)))


def build_payoff_matrix(scenario: Scenario, fading_field: Optional[np.ndarray] = None) -> PayoffMatrix:
    """
    Matrice de gains ν(α_i, α_j)

    Args:
        scenario: Paramètres physiques (ρ_A fixé)
        fading_field: Champ r₃ complexe 15x15, aucun multitrajet si None
    """
    combined = deterministic_grid(scenario).combined
    if fading_field is not None:
        fading_field = np.asarray(fading_field)
        if fading_field.shape != combined.shape:
            raise DomainError(f"Champ r₃ de forme {fading_field.shape}, attendu {combined.shape}")
        if not np.all(np.isfinite(fading_field)):
            raise DomainError("Champ r₃ non fini")
        combined = combined + fading_field

    grid = action_grid()
    return PayoffMatrix(values=spectral_efficiency(combined, scenario),
                        row_angles=grid.angles, col_angles=grid.angles)


def as_payoff_array(matrix: MatrixLike) -> np.ndarray:
    values = matrix.values if isinstance(matrix, PayoffMatrix) else np.asarray(matrix, dtype=float)
    if values.ndim != 2 or values.size == 0:
        raise DomainError(f"Matrice de gains 2-D non vide attendue, forme {values.shape}")
    if not np.all(np.isfinite(values)):
        raise DomainError("La matrice de gains contient des valeurs non finies")
    return values


def solve_zero_sum_lp(matrix: MatrixLike) -> Equilibrium:
    """
    Équilibre de Nash exact en stratégies mixtes

    Args:
        matrix: PayoffMatrix ou tableau m x n fini (lignes: maximiseur)

    Returns:
        Equilibrium (x_r, x_a, valeur) avec valeur dans [min A, max A]
    """
    values = as_payoff_array(matrix)
    low, high = float(values.min()), float(values.max())
    scale = high - low if high > low else 1.0
    shifted = (values - low) / scale + 1.0

    m, n = shifted.shape
    result = SimplexTableau(np.ones(n), shifted, np.ones(m)).solve()
    if result.objective <= 0.0:
        raise SolverError("Objectif nul à l'optimum",
                          condition_number=np.linalg.cond(shifted), shape=shifted.shape)

    x_a = MixedStrategy.from_weights(result.primal)
    x_r = MixedStrategy.from_weights(result.dual)
    raw_value = (1.0 / result.objective - 1.0) * scale + low
    value = min(max(raw_value, low), high)
    if abs(raw_value - value) > 1e-9 * max(1.0, scale):
        logger.warning(f"Valeur {raw_value:.9f} ramenée dans [{low:.6f}, {high:.6f}]")

    # Contrôle de dualité sur la matrice d'origine
    guaranteed = float((x_r.probs @ values).min())
    conceded = float((values @ x_a.probs).max())
    if conceded - guaranteed > 1e-7 * max(1.0, scale):
        raise SolverError(f"Écart de dualité {conceded - guaranteed:.3e}",
                          condition_number=np.linalg.cond(shifted), shape=shifted.shape)

    logger.debug(f"LP résolu en {result.pivots} pivots, valeur {value:.6f}")
    return Equilibrium(x_r=x_r, x_a=x_a, value=value)


def support(strategy: MixedStrategy, epsilon: float = 1e-6) -> Set[int]:
    """Indices des actions de probabilité > epsilon"""
    if not 0.0 < epsilon < 1.0:
        raise DomainError(f"epsilon doit être dans ]0, 1[, reçu {epsilon}")
    return {int(k) for k in np.nonzero(strategy.probs > epsilon)[0]}


@dataclass(frozen=True)
class SecurityLevels:
    maximin: float    # ce que R garantit en stratégie pure
    minimax: float    # ce que A concède en stratégie pure

    @property
    def has_saddle_point(self) -> bool:
        return abs(self.minimax - self.maximin) <= 1e-12

    def to_dict(self) -> dict:
        return {'maximin': self.maximin, 'minimax': self.minimax,
                'saddle_point': self.has_saddle_point}


def pure_security_levels(matrix: MatrixLike) -> SecurityLevels:
    """maximin <= valeur <= minimax; égalité ssi point selle"""
    values = as_payoff_array(matrix)
    return SecurityLevels(maximin=float(values.min(axis=1).max()),
                          minimax=float(values.max(axis=0).min()))


def indifference_residuals(matrix: MatrixLike, equilibrium: Equilibrium,
                           epsilon: float = 1e-6) -> dict:
    """
    Écarts aux conditions d'équilibre

    Sur le support de chaque joueur, le gain contre la stratégie adverse
    doit être égal à la valeur; hors support, il ne doit pas être meilleur.
    """
    values = as_payoff_array(matrix)
    v = equilibrium.value
    row_payoffs = values @ equilibrium.x_a.probs
    col_payoffs = equilibrium.x_r.probs @ values

    rows = np.zeros(values.shape[0], dtype=bool)
    rows[list(support(equilibrium.x_r, epsilon))] = True
    cols = np.zeros(values.shape[1], dtype=bool)
    cols[list(support(equilibrium.x_a, epsilon))] = True

    def _max_or_zero(array):
        return float(array.max()) if array.size else 0.0

    return {
        'row_support': _max_or_zero(np.abs(row_payoffs[rows] - v)),
        'row_outside': _max_or_zero(np.clip(row_payoffs[~rows] - v, 0.0, None)),
        'col_support': _max_or_zero(np.abs(col_payoffs[cols] - v)),
        'col_outside': _max_or_zero(np.clip(v - col_payoffs[~cols], 0.0, None)),
        'duality_gap': float(row_payoffs.max() - col_payoffs.min()),
    }
