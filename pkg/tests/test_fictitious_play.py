"""
Tests du jeu fictif, oracle indépendant du simplexe.
"""

import numpy as np
import pytest

from src.core.fictitious_play import fictitious_play, fictitious_play_batch
from src.core.game import solve_zero_sum_lp
from src.utils.errors import DomainError

MATCHING_PENNIES = np.array([[1.0, -1.0], [-1.0, 1.0]])


def test_constant_matrix_after_one_iteration():
    eq = fictitious_play(np.full((3, 4), 2.5), iterations=1)
    assert eq.value == 2.5
    assert eq.x_r.probs[0] == 1.0


def test_matching_pennies():
    eq = fictitious_play(MATCHING_PENNIES, iterations=100_000)
    assert eq.value == pytest.approx(0.0, abs=1e-2)


def test_bounds_bracket_exact_value():
    matrix = np.random.default_rng(3).uniform(-1.0, 1.0, size=(5, 7))
    exact = solve_zero_sum_lp(matrix).value
    result = fictitious_play_batch(matrix, iterations=2_000)
    assert result.lower[0] <= exact + 1e-12
    assert result.upper[0] >= exact - 1e-12


def test_batch_matches_single_runs():
    stack = np.random.default_rng(4).uniform(0.0, 10.0, size=(3, 4, 4))
    batch = fictitious_play_batch(stack, iterations=500)
    for k in range(3):
        single = fictitious_play(stack[k], iterations=500)
        assert batch.value[k] == single.value
        np.testing.assert_array_equal(batch.x_a[k], single.x_a.probs)


def test_deterministic():
    matrix = np.random.default_rng(5).normal(size=(6, 6))
    a = fictitious_play(matrix, iterations=1_000)
    b = fictitious_play(matrix, iterations=1_000)
    assert a.value == b.value
    np.testing.assert_array_equal(a.x_r.probs, b.x_r.probs)


@pytest.mark.parametrize('iterations', [0, -3, 2.5, True])
def test_iteration_count_validated(iterations):
    with pytest.raises(DomainError):
        fictitious_play(MATCHING_PENNIES, iterations=iterations)


def test_non_finite_matrix_rejected():
    with pytest.raises(DomainError):
        fictitious_play_batch(np.array([[[1.0, np.nan]]]), iterations=10)


@pytest.mark.slow
def test_converges_to_linear_program_value():
    matrix = np.random.default_rng(2024).uniform(0.0, 1.0, size=(6, 6))
    exact = solve_zero_sum_lp(matrix).value
    approx = fictitious_play(matrix, iterations=1_000_000).value
    assert abs(approx - exact) < 5e-3


@pytest.mark.slow
def test_agrees_with_linear_program_on_random_grids():
    stack = np.random.default_rng(99).uniform(0.0, 1.0, size=(100, 15, 15))
    exact = np.array([solve_zero_sum_lp(matrix).value for matrix in stack])
    approx = fictitious_play_batch(stack, iterations=1_000_000).value
    assert np.max(np.abs(approx - exact)) < 1e-2
