"""
Module: fading.py
-----------------
Composante multitrajet r₃: gaussienne complexe circulaire centrée.

|r₃| suit une loi de Rayleigh de paramètre σ = √(P/2) où P est la
puissance moyenne du scénario. Tous les tirages passent par un
numpy.random.Generator fourni par l'appelant.

Version: 1.0
"""

import math
from typing import Tuple

import numpy as np

from src.models.game import GRID_SIZE
from src.models.scenario import FadingMode, Scenario


def _sigma(scenario: Scenario) -> float:
    return math.sqrt(scenario.fading_mean_power / 2.0)


def draw_fading(rng: np.random.Generator, scenario: Scenario) -> complex:
    """Un tirage de r₃"""
    real, imag = rng.normal(0.0, _sigma(scenario), size=2)
    return complex(real, imag)


def draw_fading_field(rng: np.random.Generator, scenario: Scenario,
                      shape: Tuple[int, int] = (GRID_SIZE, GRID_SIZE)) -> np.ndarray:
    """
    Champ de r₃ pour toutes les cases d'une matrice de gains

    Args:
        rng: Générateur de la réalisation
        scenario: Puissance moyenne et mode d'évanouissement
        shape: Dimensions de la matrice

    Returns:
        Tableau complexe de forme shape: tirages indépendants (per_cell),
        un tirage répété (shared) ou des zéros (disabled)
    """
    if scenario.fading_mode is FadingMode.DISABLED:
        return np.zeros(shape, dtype=complex)
    if scenario.fading_mode is FadingMode.SHARED:
        return np.full(shape, draw_fading(rng, scenario), dtype=complex)

    draws = rng.normal(0.0, _sigma(scenario), size=tuple(shape) + (2,))
    return draws[..., 0] + 1j * draws[..., 1]
