"""
Module: propagation.py
----------------------
Modèles de propagation du canal T -> R en présence de l'obstacle A.

L'obstacle est un cylindre vertical de rayon a et de hauteur h. En
coupe horizontale il présente deux arêtes verticales; chacune est
traitée comme une arête de Fresnel-Kirchhoff, et les deux champs
diffractés sont sommés en puissance.

Fonctions:
    free_space_amplitude: Gain complexe de Friis
    los_clearance: Dégagement du trajet direct par l'obstacle
    path_split: Longueurs T->projection et projection->R
    knife_edge_loss_db: Perte d'une arête (approximation ITU-R P.526)
    blockage_loss_db: Perte de blocage de l'obstacle (double arête)
    scattered_component: Composante r₂ diffusée par l'obstacle
    effective_scatter_coefficient: κ explicite ou calibré

Version: 1.0
"""

import logging
import math
from functools import lru_cache
from typing import Tuple

import numpy as np

from src.core.antenna import array_gain_dbi
from src.models.position import PolarPosition
from src.models.scenario import SPEED_OF_LIGHT, Scenario
from src.utils.errors import DomainError

logger = logging.getLogger('blockpeek.channel')

KNIFE_EDGE_THRESHOLD = -0.78

# Calibration de κ: à cette distance et dans l'axe, la diffusion est
# SCATTER_MARGIN_DB sous le trajet direct non bloqué.
SCATTER_REFERENCE_RHO_M = 1.5
SCATTER_MARGIN_DB = 10.0


def free_space_amplitude(d_m: float, frequency_hz: float) -> complex:
    """
    Gain complexe en espace libre λ/(4πd)·e^(-j2πd/λ)

    Args:
        d_m: Distance en mètres (> 0)
        frequency_hz: Fréquence porteuse en Hz (> 0)
    """
    if not (math.isfinite(d_m) and d_m > 0.0):
        raise DomainError(f"Distance invalide: {d_m}")
    if not (math.isfinite(frequency_hz) and frequency_hz > 0.0):
        raise DomainError(f"Fréquence invalide: {frequency_hz}")
    wavelength = SPEED_OF_LIGHT / frequency_hz
    return wavelength / (4.0 * math.pi * d_m) * complex(np.exp(-2j * math.pi * d_m / wavelength))


def _check_order(pos_r: PolarPosition, pos_a: PolarPosition) -> None:
    if pos_a.rho >= pos_r.rho:
        raise DomainError(f"L'obstacle doit être plus proche que le récepteur: "
                          f"ρ_A={pos_a.rho} >= ρ_R={pos_r.rho}")


def _projection(pos_r: PolarPosition, pos_a: PolarPosition) -> Tuple[float, float, float]:
    """(t, distance perpendiculaire, |R|) de A sur le segment T-R"""
    r = pos_r.to_cartesian()
    a = pos_a.to_cartesian()
    length = float(np.hypot(r[0], r[1]))
    t = float(np.dot(a, r)) / (length * length)
    perpendicular = abs(r[0] * a[1] - r[1] * a[0]) / length
    return t, perpendicular, length


def los_clearance(pos_r: PolarPosition, pos_a: PolarPosition, scenario: Scenario) -> float:
    """
    Distance entre le trajet direct T-R et le bord de l'obstacle

    Négative quand le segment traverse le cylindre. Vaut +inf quand la
    projection de A tombe hors du segment ou quand le bord est à plus de
    scenario.clearance_horizon_m du trajet.
    """
    _check_order(pos_r, pos_a)
    t, perpendicular, _ = _projection(pos_r, pos_a)
    if not 0.0 < t < 1.0:
        return math.inf
    clearance = perpendicular - scenario.obstacle_radius_m
    if clearance > scenario.clearance_horizon_m:
        return math.inf
    return clearance


def path_split(pos_r: PolarPosition, pos_a: PolarPosition) -> Tuple[float, float]:
    """Distances d₁ (T -> pied de A) et d₂ (pied de A -> R) le long du trajet"""
    _check_order(pos_r, pos_a)
    t, _, length = _projection(pos_r, pos_a)
    return t * length, (1.0 - t) * length


def knife_edge_loss_db(clearance_m: float, d1_m: float, d2_m: float, wavelength_m: float) -> float:
    """
    Perte de diffraction d'une arête

    v = -c·√(2(d₁+d₂)/(λd₁d₂)); J(v) = 6.9 + 20·log₁₀(√((v-0.1)²+1) + v - 0.1)
    pour v > -0.78, 0 sinon.
    """
    if d1_m <= 0.0 or d2_m <= 0.0 or wavelength_m <= 0.0:
        raise DomainError(f"Longueurs de trajet invalides: d1={d1_m}, d2={d2_m}, λ={wavelength_m}")
    if math.isnan(clearance_m):
        raise DomainError("Dégagement indéfini")
    if math.isinf(clearance_m) and clearance_m > 0:
        return 0.0

    v = -clearance_m * math.sqrt(2.0 * (d1_m + d2_m) / (wavelength_m * d1_m * d2_m))
    if v <= KNIFE_EDGE_THRESHOLD:
        return 0.0
    shifted = v - 0.1
    return max(0.0, 6.9 + 20.0 * math.log10(math.sqrt(shifted * shifted + 1.0) + shifted))


def blockage_loss_db(pos_r: PolarPosition, pos_a: PolarPosition, scenario: Scenario) -> float:
    """
    Perte de blocage en dB (>= 0)

    Arête proche: dégagement c. Arête opposée: -(c + 2a), toujours
    obstruante. Les champs diffractés s'ajoutent en puissance, plafonnés
    au trajet libre.
    """
    clearance = los_clearance(pos_r, pos_a, scenario)
    if math.isinf(clearance):
        return 0.0

    d1, d2 = path_split(pos_r, pos_a)
    wavelength = scenario.wavelength_m
    near = knife_edge_loss_db(clearance, d1, d2, wavelength)
    far = knife_edge_loss_db(-(clearance + 2.0 * scenario.obstacle_radius_m), d1, d2, wavelength)

    power = min(1.0, 10.0 ** (-near / 10.0) + 10.0 ** (-far / 10.0))
    return -10.0 * math.log10(power)


def _bistatic_power(pos_r: PolarPosition, pos_a: PolarPosition, scenario: Scenario) -> Tuple[float, float]:
    """Puissance diffusée pour κ = 1 et longueur totale T->A->R"""
    a = pos_a.to_cartesian()
    r = pos_r.to_cartesian()
    d_ta = pos_a.rho
    to_receiver = r - a
    d_ar = float(np.hypot(to_receiver[0], to_receiver[1]))
    if d_ar < 1e-9:
        raise DomainError("Le récepteur coïncide avec l'obstacle")

    wavelength = scenario.wavelength_m
    gain = 10.0 ** (array_gain_dbi(pos_a.theta, scenario) / 10.0)

    # Lobe de diffusion centré sur la direction de transmission vers l'avant
    cos_beta = float(np.dot(a, to_receiver)) / (d_ta * d_ar)
    lobe = max(cos_beta, 0.0) ** 2
    height = min(scenario.obstacle_height_m, 2.0 * scenario.antenna_height_m)
    cross_section = 2.0 * math.pi * scenario.obstacle_radius_m * height ** 2 / wavelength * lobe

    power = gain * wavelength ** 2 * cross_section / ((4.0 * math.pi) ** 3 * d_ta ** 2 * d_ar ** 2)
    return power, d_ta + d_ar


@lru_cache(maxsize=32)
def _calibrated_scatter_coefficient(scenario: Scenario) -> float:
    reference = SCATTER_REFERENCE_RHO_M if SCATTER_REFERENCE_RHO_M < scenario.rho_r_m else scenario.rho_r_m / 2.0
    receiver = PolarPosition(scenario.rho_r_m, 0.0)
    bistatic, _ = _bistatic_power(receiver, PolarPosition(reference, 0.0), scenario)
    los = (abs(free_space_amplitude(scenario.rho_r_m, scenario.frequency_hz)) ** 2
           * 10.0 ** (scenario.boresight_gain_dbi / 10.0))
    kappa = 10.0 ** (-SCATTER_MARGIN_DB / 10.0) * los / bistatic
    logger.debug(f"κ calibré: {kappa:.4e} (référence ρ_A={reference:.2f} m)")
    return kappa


def effective_scatter_coefficient(scenario: Scenario) -> float:
    """κ du scénario, ou la valeur calibrée quand il n'est pas fixé"""
    if scenario.scatter_coefficient is not None:
        return float(scenario.scatter_coefficient)
    return _calibrated_scatter_coefficient(scenario)


def scattered_component(pos_r: PolarPosition, pos_a: PolarPosition, scenario: Scenario) -> complex:
    """
    Composante r₂ réfléchie/diffusée par l'obstacle

    Modèle bistatique d'un cylindre: surface équivalente 2πa·h²/λ modulée
    par cos²β (β: écart à la direction de diffusion vers l'avant), gain de
    T vers θ_A et phase de la longueur T->A->R.
    """
    _check_order(pos_r, pos_a)
    kappa = effective_scatter_coefficient(scenario)
    if kappa == 0.0:
        return 0j
    power, path_length = _bistatic_power(pos_r, pos_a, scenario)
    phase = -2.0 * math.pi * path_length / scenario.wavelength_m
    return complex(math.sqrt(kappa * power) * np.exp(1j * phase))
