"""
Tests du canal T -> R et de l'efficacité spectrale.
"""

import math

import numpy as np
import pytest

from src.core.antenna import array_gain_dbi
from src.core.channel import (channel_sample, deterministic_grid, los_component, scatter_dominance,
                              spectral_efficiency)
from src.core.game import action_grid, build_payoff_matrix
from src.core.propagation import blockage_loss_db, free_space_amplitude, los_clearance
from src.models.channel_sample import ChannelSample
from src.models.game import GRID_SIZE
from src.models.position import PolarPosition
from src.models.scenario import Scenario

RECEIVER = PolarPosition(3.0, 0.0)
OFF_PATH = PolarPosition(1.5, 60.0)
CENTER = PolarPosition(1.5, 0.0)


def _db(power):
    return 10.0 * math.log10(power)


def test_unblocked_boresight_gain(scenario):
    sample = channel_sample(RECEIVER, OFF_PATH, scenario)
    assert _db(abs(sample.r12) ** 2) == pytest.approx(-57.55, abs=0.05)
    assert spectral_efficiency(sample, scenario) == pytest.approx(14.1, abs=0.05)


def test_sidelobe_alignment(clean_scenario):
    sample = channel_sample(PolarPosition(3.0, 21.0), OFF_PATH, clean_scenario)
    assert spectral_efficiency(sample, clean_scenario) == pytest.approx(9.7, abs=0.15)


def test_spectral_efficiency_of_known_gain(scenario):
    sample = ChannelSample(r12=complex(10.0 ** (-70.85 / 20.0)))
    assert spectral_efficiency(sample, scenario) == pytest.approx(9.7, abs=0.1)


def test_dead_center_loss_matches_blockage(clean_scenario):
    clear = abs(channel_sample(RECEIVER, OFF_PATH, clean_scenario).r12) ** 2
    blocked = abs(channel_sample(RECEIVER, CENTER, clean_scenario).r12) ** 2
    assert _db(clear / blocked) == pytest.approx(blockage_loss_db(RECEIVER, CENTER, clean_scenario), abs=1e-9)
    assert blocked < clear


@pytest.mark.parametrize('rho_a', [1.0 + 0.25 * k for k in range(7)])
def test_blocked_cells_lose_rate(clean_scenario, rho_a):
    scenario = clean_scenario.with_rho_a(rho_a)
    payoff = build_payoff_matrix(scenario).values
    angles = action_grid().angles
    blocked = 0
    for i, theta_r in enumerate(angles):
        pos_r = PolarPosition(scenario.rho_r_m, theta_r)
        free = free_space_amplitude(scenario.rho_r_m, scenario.frequency_hz) \
            * 10.0 ** (array_gain_dbi(theta_r, scenario) / 20.0)
        unblocked_rate = spectral_efficiency(ChannelSample(r12=free), scenario)
        for j, theta_a in enumerate(angles):
            if los_clearance(pos_r, PolarPosition(rho_a, theta_a), scenario) < 0.0:
                blocked += 1
                assert payoff[i, j] < unblocked_rate
    assert blocked >= GRID_SIZE


def test_cancelling_multipath_gives_zero_rate(scenario):
    r12 = channel_sample(RECEIVER, OFF_PATH, scenario).r12
    assert spectral_efficiency(ChannelSample(r12=r12, r3=-r12), scenario) == 0.0


def test_rate_is_monotone_in_power(scenario):
    gains = np.array([1e-8, 1e-6, 1e-5, 1e-4])
    rates = spectral_efficiency(gains.astype(complex), scenario)
    assert np.all(np.diff(rates) > 0.0)
    assert spectral_efficiency(np.array([0j]), scenario)[0] == 0.0


def test_los_component_carries_antenna_gain(clean_scenario):
    boresight = abs(los_component(RECEIVER, OFF_PATH, clean_scenario))
    null = abs(los_component(PolarPosition(3.0, 30.0), PolarPosition(1.5, 0.0), clean_scenario))
    assert _db(boresight ** 2 / null ** 2) == pytest.approx(60.0, abs=1e-6)


class TestDeterministicGrid:

    def test_shape_and_read_only(self, scenario):
        grid = deterministic_grid(scenario)
        assert grid.los.shape == grid.scattered.shape == (15, 15)
        with pytest.raises(ValueError):
            grid.los[0, 0] = 0j

    def test_cached_per_scenario(self, scenario):
        assert deterministic_grid(scenario) is deterministic_grid(Scenario())
        assert deterministic_grid(scenario) is not deterministic_grid(scenario.with_rho_a(2.0))

    def test_cells_match_pointwise_model(self, scenario):
        grid = deterministic_grid(scenario)
        sample = channel_sample(PolarPosition(3.0, 90.0 / 7.0), PolarPosition(1.5, 60.0 / 7.0), scenario)
        assert grid.combined[3, 2] == pytest.approx(sample.r12, rel=1e-12)

    def test_no_scattering_without_coefficient(self, clean_scenario):
        assert not np.any(deterministic_grid(clean_scenario).scattered)


def test_scatter_dominance_under_blockage(scenario):
    dominant = scatter_dominance(scenario)
    assert dominant.shape == (15, 15)
    assert not dominant[0, 14]
    assert not scatter_dominance(Scenario(scatter_coefficient=0.0)).any()
