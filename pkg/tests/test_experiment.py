"""
Tests de la campagne Monte-Carlo et de l'agrégation des équilibres.
"""

import numpy as np
import pytest

from src.core.experiment import aggregate, run_realization, run_sweep, sweep, weighted_mean_angle
from src.core.game import action_grid
from src.core.realization_pool import RealizationPool, resolve_worker_count
from src.models.experiment import SweepConfig
from src.models.game import Equilibrium, MixedStrategy
from src.models.scenario import FadingMode, Scenario
from src.monitoring.performance_monitor import PerformanceMonitor
from src.seed.seeding import child_seed
from src.utils.errors import ConfigError, DomainError


def _pure(row, col, value):
    return Equilibrium(x_r=MixedStrategy.pure(row), x_a=MixedStrategy.pure(col), value=value)


def _square(x):
    return x * x


class TestRealization:

    def test_same_seed_same_equilibrium(self, scenario):
        a = run_realization(scenario, seed=123)
        b = run_realization(scenario, seed=123)
        assert a.value == b.value
        np.testing.assert_array_equal(a.x_r.probs, b.x_r.probs)
        np.testing.assert_array_equal(a.x_a.probs, b.x_a.probs)

    def test_different_seeds_differ(self, scenario):
        assert run_realization(scenario, seed=1).value != run_realization(scenario, seed=2).value

    def test_disabled_fading_ignores_seed(self):
        scenario = Scenario(fading_mode=FadingMode.DISABLED)
        a = run_realization(scenario, seed=1)
        b = run_realization(scenario, seed=999)
        assert a.value == b.value
        np.testing.assert_array_equal(a.x_r.probs, b.x_r.probs)

    @pytest.mark.parametrize('rho_a', [1.0, 1.75, 2.5])
    def test_value_bounded_by_unblocked_link(self, rho_a):
        scenario = Scenario(rho_a_m=rho_a)
        for seed in range(5):
            assert run_realization(scenario, seed).value <= 14.1 + 0.1


class TestWeightedMeanAngle:

    def test_pure_middle(self):
        assert weighted_mean_angle(MixedStrategy.pure(7), action_grid()) == pytest.approx(30.0)

    def test_extremes_average_to_middle(self):
        probs = np.zeros(15)
        probs[[0, 14]] = 0.5
        assert weighted_mean_angle(MixedStrategy(probs), action_grid()) == pytest.approx(30.0)

    def test_weighted_sum(self):
        probs = np.zeros(15)
        probs[6], probs[10] = 0.25, 0.75
        expected = 0.25 * 180.0 / 7.0 + 0.75 * 300.0 / 7.0
        assert weighted_mean_angle(MixedStrategy(probs), action_grid()) == pytest.approx(expected)
        assert expected == pytest.approx(38.57, abs=0.01)

    def test_size_mismatch(self):
        with pytest.raises(DomainError):
            weighted_mean_angle(MixedStrategy.pure(0, size=3), action_grid())


class TestAggregate:

    def test_single_equilibrium(self):
        eq = _pure(2, 5, 9.0)
        agg = aggregate([eq], action_grid(), rho_a_m=1.5)
        np.testing.assert_array_equal(agg.mean_strategy_r, eq.x_r.probs)
        assert agg.mean_value == 9.0
        assert agg.std_value == 0.0
        assert not np.any(agg.std_strategy_a)
        assert agg.mean_angle_r_deg == pytest.approx(60.0 / 7.0)

    def test_population_standard_deviation(self):
        agg = aggregate([_pure(0, 0, 6.0), _pure(14, 14, 8.0)], action_grid())
        assert agg.mean_value == pytest.approx(7.0)
        assert agg.std_value == pytest.approx(1.0)
        assert agg.mean_angle_r_deg == pytest.approx(30.0)
        assert agg.std_angle_r_deg == pytest.approx(30.0)
        assert agg.confidence_interval() == pytest.approx((4.0, 10.0))
        assert agg.realizations == 2

    def test_mean_strategies_are_distributions(self):
        agg = aggregate([_pure(0, 3, 1.0), _pure(4, 3, 1.0), _pure(4, 9, 1.0)], action_grid())
        assert abs(agg.mean_strategy_r.sum() - 1.0) < 1e-9
        assert agg.mean_strategy_a[3] == pytest.approx(2.0 / 3.0)

    def test_empty_list(self):
        with pytest.raises(DomainError):
            aggregate([], action_grid())


class TestSweep:

    def test_one_aggregate_per_distance(self, small_sweep, single_process):
        aggregates = sweep(small_sweep)
        assert [agg.rho_a_m for agg in aggregates] == [1.0, 1.75, 2.5]
        for agg in aggregates:
            assert agg.realizations == 4
            assert abs(agg.mean_strategy_r.sum() - 1.0) < 1e-9
            assert abs(agg.mean_strategy_a.sum() - 1.0) < 1e-9
            assert 0.0 <= agg.mean_value < 14.1

    def test_outcomes_carry_child_seeds(self, small_sweep, single_process):
        result = run_sweep(small_sweep)
        assert len(result.outcomes) == 12
        first = result.outcomes[5]
        assert (first.distance_index, first.realization_index) == (1, 1)
        assert first.seed == child_seed(11, 1, 1)
        assert first.min_payoff <= first.equilibrium.value <= first.max_payoff
        assert set(first.to_dict()) >= {'value', 'x_r', 'x_a', 'seed', 'scatter_dominant_cells'}

    def test_process_count_does_not_change_results(self, small_sweep):
        inline = run_sweep(small_sweep, workers=1)
        parallel = run_sweep(small_sweep, workers=2)
        for a, b in zip(inline.outcomes, parallel.outcomes):
            assert a.equilibrium.value == b.equilibrium.value
            np.testing.assert_array_equal(a.equilibrium.x_a.probs, b.equilibrium.x_a.probs)

    def test_distance_results_are_independent(self, single_process):
        full = run_sweep(SweepConfig(distances_m=(1.0, 2.0), realizations=2, master_seed=5))
        alone = run_sweep(SweepConfig(distances_m=(1.0,), realizations=2, master_seed=5))
        assert full.aggregates[0].mean_value == alone.aggregates[0].mean_value

    def test_monitor_and_progress(self, small_sweep, single_process):
        monitor = PerformanceMonitor()
        progress = []
        run_sweep(small_sweep, monitor=monitor, on_progress=lambda done, total: progress.append((done, total)))
        assert progress[-1] == (12, 12)
        assert monitor.get_metrics('lp_solve')['lp_solve']['count'] == 12

    def test_peeking_violations_listed(self, small_sweep, single_process):
        result = run_sweep(small_sweep)
        expected = [agg.rho_a_m for agg in result.aggregates if agg.mean_angle_a_deg >= agg.mean_angle_r_deg]
        assert result.peeking_violations == expected

    @pytest.mark.slow
    def test_default_campaign_stays_below_unblocked_link(self):
        outcomes = run_sweep(SweepConfig()).outcomes
        assert len(outcomes) == 7 * 50
        assert all(o.equilibrium.value < 14.1 for o in outcomes)

    @pytest.mark.slow
    def test_default_campaign(self):
        aggregates = sweep(SweepConfig())
        assert len(aggregates) == 7
        assert [agg.rho_a_m for agg in aggregates] == pytest.approx([1.0 + 0.25 * k for k in range(7)])
        assert all(agg.mean_value < 14.1 for agg in aggregates)


class TestSeeding:

    def test_child_seeds_are_stable_and_distinct(self):
        seeds = {child_seed(2023, d, r) for d in range(7) for r in range(50)}
        assert len(seeds) == 350
        assert child_seed(2023, 3, 4) == child_seed(2023, 3, 4)
        assert child_seed(2023, 3, 4) != child_seed(2024, 3, 4)

    @pytest.mark.parametrize('args', [(-1, 0, 0), (1, -2, 0), (1, 0, 1.5), (True, 0, 0)])
    def test_invalid_arguments(self, args):
        with pytest.raises(DomainError):
            child_seed(*args)


class TestRealizationPool:

    def test_results_in_task_order(self, single_process):
        seen = []
        results = RealizationPool().map(_square, range(6), on_result=lambda done, r: seen.append(done))
        assert results == [0, 1, 4, 9, 16, 25]
        assert seen == [1, 2, 3, 4, 5, 6]

    def test_parallel_results_in_task_order(self, monkeypatch):
        monkeypatch.delenv('BLOCKPEEK_THREADS', raising=False)
        assert RealizationPool(2).map(_square, range(20)) == [k * k for k in range(20)]

    def test_environment_caps_workers(self, monkeypatch):
        monkeypatch.setenv('BLOCKPEEK_THREADS', '3')
        assert resolve_worker_count(8) == 3
        assert resolve_worker_count(2) == 2

    @pytest.mark.parametrize('raw', ['zero', '0', '-4'])
    def test_invalid_environment(self, monkeypatch, raw):
        monkeypatch.setenv('BLOCKPEEK_THREADS', raw)
        with pytest.raises(ConfigError):
            resolve_worker_count(2)
