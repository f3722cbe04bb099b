"""
Module: position.py
-------------------
Position d'un joueur dans le plan polaire centré sur l'émetteur T.

Classes:
    PolarPosition: Coordonnées (ρ, θ) du récepteur R ou de l'adversaire A

Relations:
    - L'émetteur T est à l'origine (ρ_T = 0) et n'a pas de position propre
    - Utilisée par le module channel pour toutes les longueurs de trajet

Version: 1.0
"""

import math
from dataclasses import dataclass

import numpy as np

from src.utils.errors import DomainError

MAX_ANGLE_DEG = 60.0


@dataclass(frozen=True)
class PolarPosition:
    """
    :param rho: Distance à l'émetteur en mètres (> 0)
    :param theta: Angle en degrés dans [0, 60]
    """
    rho: float
    theta: float

    def __post_init__(self):
        if not math.isfinite(self.rho) or self.rho <= 0.0:
            raise DomainError(f"ρ doit être strictement positif, reçu {self.rho}")
        if not math.isfinite(self.theta) or not 0.0 <= self.theta <= MAX_ANGLE_DEG:
            raise DomainError(f"θ doit être dans [0, {MAX_ANGLE_DEG:g}]°, reçu {self.theta}")

    def __str__(self):
        return f"(ρ={self.rho:.3f} m, θ={self.theta:.3f}°)"

    def to_cartesian(self) -> np.ndarray:
        """Coordonnées cartésiennes (x, y) en mètres, T à l'origine"""
        theta_rad = math.radians(self.theta)
        return np.array([self.rho * math.cos(theta_rad), self.rho * math.sin(theta_rad)])
