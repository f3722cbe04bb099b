"""
Tests de la composante multitrajet r₃.
"""

import math

import numpy as np
import pytest
from scipy import stats

from src.core.fading import draw_fading, draw_fading_field
from src.models.scenario import FadingMode, Scenario


def test_mean_power_matches_scenario(scenario, rng):
    field = draw_fading_field(rng, scenario, shape=(1000, 1000))
    mean_power = np.mean(np.abs(field) ** 2)
    assert mean_power == pytest.approx(10.0 ** -9.7, rel=0.01)


def test_magnitude_is_rayleigh(scenario, rng):
    field = draw_fading_field(rng, scenario, shape=(100, 1000))
    sigma = math.sqrt(scenario.fading_mean_power / 2.0)
    statistic, _ = stats.kstest(np.abs(field).ravel(), 'rayleigh', args=(0.0, sigma))
    assert statistic < 0.01


def test_draws_are_reproducible(scenario):
    a = draw_fading_field(np.random.default_rng(7), scenario)
    b = draw_fading_field(np.random.default_rng(7), scenario)
    np.testing.assert_array_equal(a, b)
    assert draw_fading(np.random.default_rng(7), scenario) == draw_fading(np.random.default_rng(7), scenario)


def test_per_cell_draws_differ(scenario, rng):
    field = draw_fading_field(rng, scenario)
    assert field.shape == (15, 15)
    assert np.unique(field).size == field.size


def test_shared_mode_repeats_one_draw(rng):
    field = draw_fading_field(rng, Scenario(fading_mode=FadingMode.SHARED))
    assert np.all(field == field[0, 0])
    assert field[0, 0] != 0


def test_disabled_mode_is_zero(rng):
    scenario = Scenario(fading_mode='disabled')
    assert scenario.fading_mean_power == 0.0
    assert not np.any(draw_fading_field(rng, scenario))
