"""
Module: channel_sample.py
-------------------------
Échantillon de canal pour une case (θ_R, θ_A) d'une réalisation.

Classes:
    ChannelSample: Composantes complexes r₁₂ (LoS + diffusion) et r₃

Version: 1.0
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class ChannelSample:
    """
    :param r12: Gain complexe déterministe r₁ + r₂
    :param r3: Gain complexe aléatoire (multitrajet)
    """
    r12: complex
    r3: complex = 0j

    @property
    def total(self) -> complex:
        """Gain complexe reçu r₁₂ + r₃"""
        return self.r12 + self.r3

    @property
    def total_power(self) -> float:
        """Gain de puissance |r₁₂ + r₃|²"""
        return abs(self.total) ** 2
