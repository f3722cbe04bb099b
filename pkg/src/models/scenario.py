"""
Module: scenario.py
-------------------
Constantes physiques d'une instance du jeu de blocage.

Regroupe la fréquence, les puissances, la géométrie, les paramètres du
réseau d'antennes, ceux de l'obstacle cylindrique et les coefficients
du modèle analytique de diffusion.

Classes:
    FadingMode: Granularité des tirages de la composante multitrajet r₃
    Scenario: Paramètres physiques (valeur immuable, hachable)

Attributs (valeurs par défaut):
    frequency_hz: 60 GHz
    tx_power_dbm / noise_power_dbm: 0 dBm / -100 dBm
    rho_r_m / rho_a_m: 3.0 m / 1.5 m
    array_elements_azimuth x elevation: 8 x 4, pas de 0.5 λ
    boresight_gain_dbi: 20 dBi, plancher gain_floor_dbi à -40 dBi
    obstacle: rayon 0.25 m, hauteur 1.75 m, antennes à 1 m
    fading_mean_power_db: -97 dB
    scatter_coefficient: None -> calibré automatiquement

Version: 1.0
"""

import math
from dataclasses import dataclass, fields, replace
from enum import Enum
from typing import Optional

from src.utils.errors import DomainError

SPEED_OF_LIGHT = 299_792_458.0


class FadingMode(Enum):
    """Granularité des tirages de r₃ dans une réalisation"""
    PER_CELL = "per_cell"    # un tirage indépendant par case (θ_R, θ_A)
    SHARED = "shared"        # un seul tirage commun à toute la matrice
    DISABLED = "disabled"    # r₃ = 0


@dataclass(frozen=True)
class Scenario:
    frequency_hz: float = 60e9
    tx_power_dbm: float = 0.0
    noise_power_dbm: float = -100.0
    rho_r_m: float = 3.0
    rho_a_m: float = 1.5
    array_elements_azimuth: int = 8
    array_elements_elevation: int = 4
    element_spacing_wavelengths: float = 0.5
    element_pattern_exponent: float = 2.5
    boresight_gain_dbi: float = 20.0
    gain_floor_dbi: float = -40.0
    obstacle_radius_m: float = 0.25
    obstacle_height_m: float = 1.75
    antenna_height_m: float = 1.0
    clearance_horizon_m: float = 1.0
    fading_mean_power_db: float = -97.0
    fading_mode: FadingMode = FadingMode.PER_CELL
    scatter_coefficient: Optional[float] = None

    def __post_init__(self):
        if isinstance(self.fading_mode, str):
            object.__setattr__(self, 'fading_mode', FadingMode(self.fading_mode))

        for name in ('frequency_hz', 'tx_power_dbm', 'noise_power_dbm', 'rho_r_m', 'rho_a_m',
                     'element_spacing_wavelengths', 'element_pattern_exponent',
                     'boresight_gain_dbi', 'gain_floor_dbi', 'obstacle_radius_m',
                     'obstacle_height_m', 'antenna_height_m', 'clearance_horizon_m',
                     'fading_mean_power_db'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
                raise DomainError(f"Le paramètre {name} doit être un réel fini, reçu {value!r}")

        for name in ('frequency_hz', 'rho_r_m', 'rho_a_m', 'element_spacing_wavelengths',
                     'obstacle_radius_m', 'obstacle_height_m', 'antenna_height_m',
                     'clearance_horizon_m'):
            if getattr(self, name) <= 0.0:
                raise DomainError(f"Le paramètre {name} doit être strictement positif")

        for name in ('array_elements_azimuth', 'array_elements_elevation'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise DomainError(f"Le paramètre {name} doit être un entier >= 1, reçu {value!r}")

        if self.element_pattern_exponent < 0.0:
            raise DomainError("L'exposant du diagramme élémentaire doit être positif")
        if self.rho_a_m >= self.rho_r_m:
            raise DomainError(
                f"L'obstacle doit être entre T et R: rho_a_m={self.rho_a_m} >= rho_r_m={self.rho_r_m}")
        if self.fading_mean_power_db >= 0.0:
            raise DomainError("La puissance moyenne d'évanouissement doit être < 0 dB")
        if self.gain_floor_dbi >= self.boresight_gain_dbi:
            raise DomainError("Le plancher de gain doit être inférieur au gain dans l'axe")
        if self.scatter_coefficient is not None:
            kappa = self.scatter_coefficient
            if isinstance(kappa, bool) or not isinstance(kappa, (int, float)) \
                    or not math.isfinite(kappa) or kappa < 0.0:
                raise DomainError(f"scatter_coefficient doit être un réel >= 0, reçu {kappa!r}")

    def __str__(self):
        return (f"Scenario: f={self.frequency_hz / 1e9:.1f} GHz, "
                f"ρ_R={self.rho_r_m:.2f} m, ρ_A={self.rho_a_m:.2f} m, "
                f"évanouissement={self.fading_mode.value}")

    @property
    def wavelength_m(self) -> float:
        """Longueur d'onde λ = c / f"""
        return SPEED_OF_LIGHT / self.frequency_hz

    @property
    def tx_power_mw(self) -> float:
        return 10.0 ** (self.tx_power_dbm / 10.0)

    @property
    def noise_power_mw(self) -> float:
        return 10.0 ** (self.noise_power_dbm / 10.0)

    @property
    def fading_mean_power(self) -> float:
        """E[|r₃|²] en linéaire, nul si l'évanouissement est désactivé"""
        if self.fading_mode is FadingMode.DISABLED:
            return 0.0
        return 10.0 ** (self.fading_mean_power_db / 10.0)

    def with_rho_a(self, rho_a_m: float) -> 'Scenario':
        """Copie du scénario avec une autre distance d'obstacle"""
        return replace(self, rho_a_m=rho_a_m)

    def to_dict(self) -> dict:
        """Représentation JSON (ordre des champs stable)"""
        data = {}
        for field in fields(self):
            value = getattr(self, field.name)
            data[field.name] = value.value if isinstance(value, Enum) else value
        return data
