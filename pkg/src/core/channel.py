"""
Module: channel.py
------------------
Gain complexe du canal T -> R et efficacité spectrale.

    r₁  trajet direct: amplitude de Friis, gain de T vers θ_R, perte de blocage
    r₂  diffusion par l'obstacle
    r₃  multitrajet aléatoire (voir fading.py)

r₁₂ = r₁ + r₂ ne dépend que du scénario et des angles: la grille 15x15
est calculée une fois par scénario et mise en cache; chaque réalisation
ne fait qu'y ajouter son champ r₃.

Fonctions:
    los_component: Composante directe r₁
    channel_sample: Échantillon (r₁₂, r₃) pour un couple de positions
    spectral_efficiency: ν = log₂(1 + P_t|r|²/P_n)
    deterministic_grid: Grilles r₁ et r₂ sur la grille d'actions
    scatter_dominance: Cases où la diffusion domine le trajet direct

Version: 1.0
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from src.core.antenna import array_gain_dbi
from src.core.propagation import blockage_loss_db, free_space_amplitude, scattered_component
from src.models.channel_sample import ChannelSample
from src.models.game import GRID_SIZE, grid_angle
from src.models.position import PolarPosition
from src.models.scenario import Scenario

logger = logging.getLogger('blockpeek.channel')


def los_component(pos_r: PolarPosition, pos_a: PolarPosition, scenario: Scenario) -> complex:
    """Composante directe r₁: Friis, gain de T vers θ_R, perte de blocage"""
    amplitude = free_space_amplitude(pos_r.rho, scenario.frequency_hz)
    gain = 10.0 ** (array_gain_dbi(pos_r.theta, scenario) / 20.0)
    loss = 10.0 ** (-blockage_loss_db(pos_r, pos_a, scenario) / 20.0)
    return amplitude * gain * loss


def channel_sample(pos_r: PolarPosition, pos_a: PolarPosition, scenario: Scenario,
                   r3: complex = 0j) -> ChannelSample:
    """
    Échantillon de canal pour R en pos_r et A en pos_a

    Args:
        pos_r: Position du récepteur
        pos_a: Position de l'obstacle (ρ_A < ρ_R)
        scenario: Paramètres physiques
        r3: Tirage multitrajet à ajouter
    """
    r12 = los_component(pos_r, pos_a, scenario) + scattered_component(pos_r, pos_a, scenario)
    return ChannelSample(r12=r12, r3=complex(r3))


def spectral_efficiency(sample: Union[ChannelSample, np.ndarray], scenario: Scenario) -> Union[float, np.ndarray]:
    """
    Efficacité spectrale en b/s/Hz

    Accepte un ChannelSample ou un tableau de gains complexes totaux.
    """
    snr_scale = scenario.tx_power_mw / scenario.noise_power_mw
    if isinstance(sample, ChannelSample):
        return math.log2(1.0 + snr_scale * sample.total_power)
    return np.log2(1.0 + snr_scale * np.abs(sample) ** 2)


@dataclass(frozen=True, eq=False)
class DeterministicGrid:
    """Composantes r₁ et r₂ sur la grille (lignes θ_R, colonnes θ_A)"""
    los: np.ndarray
    scattered: np.ndarray

    @property
    def combined(self) -> np.ndarray:
        return self.los + self.scattered


@lru_cache(maxsize=64)
def deterministic_grid(scenario: Scenario) -> DeterministicGrid:
    """Grilles r₁ et r₂ en lecture seule pour un scénario"""
    los = np.zeros((GRID_SIZE, GRID_SIZE), dtype=complex)
    scattered = np.zeros((GRID_SIZE, GRID_SIZE), dtype=complex)
    angles = [grid_angle(k) for k in range(GRID_SIZE)]

    for i, theta_r in enumerate(angles):
        pos_r = PolarPosition(scenario.rho_r_m, theta_r)
        for j, theta_a in enumerate(angles):
            pos_a = PolarPosition(scenario.rho_a_m, theta_a)
            los[i, j] = los_component(pos_r, pos_a, scenario)
            scattered[i, j] = scattered_component(pos_r, pos_a, scenario)

    los.setflags(write=False)
    scattered.setflags(write=False)
    logger.debug(f"Grille déterministe calculée pour ρ_A={scenario.rho_a_m:.2f} m")
    return DeterministicGrid(los=los, scattered=scattered)


def scatter_dominance(scenario: Scenario, fading_field: Optional[np.ndarray] = None) -> np.ndarray:
    """Masque booléen des cases où |r₂|² > |r₁ + r₃|²"""
    grid = deterministic_grid(scenario)
    direct = grid.los if fading_field is None else grid.los + fading_field
    return np.abs(grid.scattered) ** 2 > np.abs(direct) ** 2
