"""
Module: experiment.py
---------------------
Types des campagnes Monte-Carlo en distance.

Classes:
    SweepConfig: Distances d'obstacle, nombre de réalisations, graine maîtresse
    DistanceAggregate: Statistiques des équilibres pour une distance

Version: 1.0
"""

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from src.models.scenario import Scenario
from src.utils.errors import DomainError

DEFAULT_DISTANCES_M = (1.00, 1.25, 1.50, 1.75, 2.00, 2.25, 2.50)
DEFAULT_REALIZATIONS = 50
DEFAULT_MASTER_SEED = 2023


@dataclass(frozen=True)
class SweepConfig:
    """
    :param distances_m: Valeurs de ρ_A strictement croissantes, < ρ_R
    :param realizations: Réalisations d'évanouissement par distance
    :param master_seed: Graine dont dérivent toutes les graines filles
    :param scenario: Gabarit des paramètres physiques (ρ_A y est remplacé)
    """
    distances_m: Tuple[float, ...] = DEFAULT_DISTANCES_M
    realizations: int = DEFAULT_REALIZATIONS
    master_seed: int = DEFAULT_MASTER_SEED
    scenario: Scenario = field(default_factory=Scenario)

    def __post_init__(self):
        object.__setattr__(self, 'distances_m', tuple(float(d) for d in self.distances_m))
        if not self.distances_m:
            raise DomainError("Au moins une distance est requise")
        if any(b <= a for a, b in zip(self.distances_m, self.distances_m[1:])):
            raise DomainError("Les distances doivent être strictement croissantes")
        if any(d <= 0.0 or d >= self.scenario.rho_r_m for d in self.distances_m):
            raise DomainError(f"Chaque distance doit être dans ]0, {self.scenario.rho_r_m}[ m")
        if isinstance(self.realizations, bool) or not isinstance(self.realizations, int) \
                or self.realizations < 1:
            raise DomainError("Le nombre de réalisations doit être un entier >= 1")
        if isinstance(self.master_seed, bool) or not isinstance(self.master_seed, int) \
                or self.master_seed < 0:
            raise DomainError("La graine maîtresse doit être un entier positif")

    def scenario_at(self, distance_index: int) -> Scenario:
        return self.scenario.with_rho_a(self.distances_m[distance_index])

    def to_dict(self) -> dict:
        data = self.scenario.to_dict()
        data.pop('rho_a_m')
        data.update({
            'distances_m': list(self.distances_m),
            'realizations': self.realizations,
            'master_seed': self.master_seed,
        })
        return data


@dataclass(frozen=True, eq=False)
class DistanceAggregate:
    """
    Statistiques sur les réalisations pour une distance ρ_A.
    Les écarts-types suivent la convention population (division par N).
    """
    rho_a_m: float
    mean_strategy_r: np.ndarray
    mean_strategy_a: np.ndarray
    std_strategy_r: np.ndarray
    std_strategy_a: np.ndarray
    mean_angle_r_deg: float
    mean_angle_a_deg: float
    std_angle_r_deg: float
    std_angle_a_deg: float
    mean_value: float
    std_value: float
    realizations: int

    def confidence_interval(self, sigmas: float = 3.0) -> Tuple[float, float]:
        """Intervalle mean_value ± sigmas·std_value"""
        return (self.mean_value - sigmas * self.std_value,
                self.mean_value + sigmas * self.std_value)

    def to_dict(self) -> dict:
        return {
            'rho_a_m': self.rho_a_m,
            'mean_strategy_r': [float(p) for p in self.mean_strategy_r],
            'mean_strategy_a': [float(p) for p in self.mean_strategy_a],
            'std_strategy_r': [float(p) for p in self.std_strategy_r],
            'std_strategy_a': [float(p) for p in self.std_strategy_a],
            'mean_angle_r_deg': self.mean_angle_r_deg,
            'mean_angle_a_deg': self.mean_angle_a_deg,
            'std_angle_r_deg': self.std_angle_r_deg,
            'std_angle_a_deg': self.std_angle_a_deg,
            'mean_value': self.mean_value,
            'std_value': self.std_value,
            'realizations': self.realizations,
        }
