"""
Module: antenna.py
------------------
Diagramme de rayonnement de l'émetteur T.

Coupe azimutale d'un réseau uniforme de 8 éléments espacés de λ/2,
multipliée par un diagramme élémentaire de patch en cos^q(θ) et
normalisée au gain dans l'axe. La dimension en élévation (4 éléments)
est absorbée dans cette normalisation.

Fonctions:
    array_gain_dbi: Gain en dBi pour un angle (ou un tableau d'angles)
    pattern_metrics: Ouverture à -3 dB, lobes secondaires et zéros mesurés

Version: 1.0
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

import numpy as np

from src.models.scenario import Scenario
from src.utils.errors import DomainError

logger = logging.getLogger('blockpeek.channel')

HALF_POWER_DB = -10.0 * np.log10(2.0)
NULL_DEPTH_DB = -25.0


def array_gain_dbi(theta_deg: Union[float, np.ndarray], scenario: Scenario) -> Union[float, np.ndarray]:
    """
    Gain de l'émetteur dans la direction theta_deg

    Args:
        theta_deg: Angle(s) en degrés dans [-90, 90]
        scenario: Paramètres du réseau d'antennes

    Returns:
        Gain en dBi, borné inférieurement par scenario.gain_floor_dbi
    """
    theta = np.asarray(theta_deg, dtype=float)
    if not np.all(np.isfinite(theta)) or np.any(np.abs(theta) > 90.0):
        raise DomainError(f"Angle hors de [-90, 90]°: {theta_deg}")

    # |θ| rend la fonction paire exactement
    theta_rad = np.radians(np.abs(theta))
    n = scenario.array_elements_azimuth
    half_phase = np.pi * scenario.element_spacing_wavelengths * np.sin(theta_rad)

    sin_half = np.sin(half_phase)
    degenerate = np.abs(sin_half) < 1e-12
    with np.errstate(divide='ignore', invalid='ignore'):
        array_factor = np.where(degenerate, 1.0, np.sin(n * half_phase) / (n * np.where(degenerate, 1.0, sin_half)))

    element = np.clip(np.cos(theta_rad), 0.0, None) ** scenario.element_pattern_exponent
    power = array_factor ** 2 * element

    with np.errstate(divide='ignore'):
        gain = scenario.boresight_gain_dbi + 10.0 * np.log10(power)
    gain = np.maximum(gain, scenario.gain_floor_dbi)

    if gain.ndim == 0:
        return float(gain)
    return gain


@dataclass(frozen=True)
class PatternMetrics:
    """Grandeurs mesurées sur le diagramme échantillonné"""
    resolution_deg: float
    boresight_gain_dbi: float
    hpbw_deg: Optional[float]                    # None si le diagramme ne descend jamais à -3 dB
    sidelobes: Tuple[Tuple[float, float], ...]   # (angle, niveau relatif en dB)
    nulls_deg: Tuple[float, ...]

    @property
    def first_sidelobe(self) -> Optional[Tuple[float, float]]:
        return self.sidelobes[0] if self.sidelobes else None

    def as_comment_lines(self) -> List[str]:
        lines = [f"boresight_gain_dbi={self.boresight_gain_dbi:.4f}"]
        if self.hpbw_deg is not None:
            lines.append(f"hpbw_deg={self.hpbw_deg:.4f}")
        for angle, level in self.sidelobes:
            lines.append(f"sidelobe_deg={angle:.2f} level_db={level:.4f}")
        for angle in self.nulls_deg:
            lines.append(f"null_deg={angle:.2f}")
        return lines


def _crossing(angles: np.ndarray, relative: np.ndarray, level: float) -> Optional[float]:
    """Premier angle où le diagramme passe sous level (interpolation linéaire), None sinon"""
    below = np.nonzero(relative < level)[0]
    if below.size == 0:
        return None
    k = below[0]
    a0, a1 = angles[k - 1], angles[k]
    g0, g1 = relative[k - 1], relative[k]
    return float(a0 + (level - g0) * (a1 - a0) / (g1 - g0))


def _group_runs(indices: np.ndarray) -> List[np.ndarray]:
    if indices.size == 0:
        return []
    breaks = np.nonzero(np.diff(indices) > 1)[0] + 1
    return np.split(indices, breaks)


def pattern_metrics(scenario: Scenario, resolution_deg: float = 0.01,
                    max_angle_deg: float = 60.0) -> PatternMetrics:
    """
    Mesure le diagramme sur [0, max_angle_deg] au pas resolution_deg

    Les zéros sont les minima locaux à plus de 25 dB sous l'axe; un plateau
    au plancher de gain compte pour un seul zéro (son centre).
    """
    if not 0.0 < resolution_deg <= 5.0:
        raise DomainError(f"Résolution hors de ]0, 5]°: {resolution_deg}")

    count = int(round(max_angle_deg / resolution_deg)) + 1
    angles = np.linspace(0.0, max_angle_deg, count)
    gains = array_gain_dbi(angles, scenario)
    relative = gains - scenario.boresight_gain_dbi

    crossing = _crossing(angles, relative, HALF_POWER_DB)
    hpbw = None if crossing is None else 2.0 * crossing

    inner = np.arange(1, count - 1)
    left, mid, right = relative[inner - 1], relative[inner], relative[inner + 1]

    minima = inner[(mid <= left) & (mid <= right) & (mid < NULL_DEPTH_DB)]
    nulls = tuple(float(angles[run].mean()) for run in _group_runs(minima))

    maxima = inner[(mid > left) & (mid >= right)]
    first_null = nulls[0] if nulls else 0.0
    sidelobes = tuple((float(angles[k]), float(relative[k])) for k in maxima if angles[k] > first_null)

    if hpbw is None:
        logger.warning(f"Le diagramme ne descend pas à -3 dB avant {max_angle_deg:g}°, ouverture non mesurée")
    logger.debug(f"Diagramme: HPBW={hpbw}°, {len(sidelobes)} lobes secondaires, {len(nulls)} zéros")
    return PatternMetrics(
        resolution_deg=resolution_deg,
        boresight_gain_dbi=float(gains[0]),
        hpbw_deg=hpbw,
        sidelobes=sidelobes,
        nulls_deg=nulls,
    )
