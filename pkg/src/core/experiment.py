"""
Module: experiment.py
---------------------
Campagne Monte-Carlo: équilibres en fonction de la distance ρ_A.

Pour chaque distance et chaque réalisation, un champ r₃ est tiré avec
la graine fille de la réalisation, la matrice de gains est construite
et résolue par programmation linéaire. Les équilibres sont ensuite
moyennés par distance.

Fonctions:
    run_realization: Équilibre d'une réalisation
    weighted_mean_angle: Angle moyen Σ p_k α_k d'une stratégie
    aggregate: Statistiques d'une distance
    run_sweep: Campagne complète avec le détail des réalisations
    sweep: Campagne complète, agrégats seulement

Version: 1.0
"""

import logging
import time
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

import numpy as np

from src.core.channel import scatter_dominance
from src.core.fading import draw_fading_field
from src.core.game import action_grid, build_payoff_matrix, solve_zero_sum_lp
from src.core.realization_pool import RealizationPool
from src.models.experiment import DistanceAggregate, SweepConfig
from src.models.game import ActionGrid, Equilibrium, MixedStrategy
from src.models.scenario import Scenario
from src.monitoring.performance_monitor import PerformanceMonitor
from src.seed.seeding import child_seed, make_rng
from src.utils.errors import DomainError

logger = logging.getLogger('blockpeek.experiment')


@dataclass(frozen=True)
class RealizationTask:
    distance_index: int
    realization_index: int
    scenario: Scenario
    seed: int


@dataclass(frozen=True, eq=False)
class RealizationOutcome:
    """Équilibre d'une réalisation et ses diagnostics"""
    distance_index: int
    realization_index: int
    rho_a_m: float
    seed: int
    equilibrium: Equilibrium
    min_payoff: float
    max_payoff: float
    scatter_dominant_cells: int
    build_time: float
    solve_time: float

    def to_dict(self) -> dict:
        data = {
            'distance_index': self.distance_index,
            'realization_index': self.realization_index,
            'rho_a_m': self.rho_a_m,
            'seed': self.seed,
        }
        data.update(self.equilibrium.to_dict())
        data['min_payoff'] = self.min_payoff
        data['max_payoff'] = self.max_payoff
        data['scatter_dominant_cells'] = self.scatter_dominant_cells
        return data


def _solve_task(task: RealizationTask) -> RealizationOutcome:
    started = time.perf_counter()
    field = draw_fading_field(make_rng(task.seed), task.scenario)
    matrix = build_payoff_matrix(task.scenario, field)
    built = time.perf_counter()
    equilibrium = solve_zero_sum_lp(matrix)
    solved = time.perf_counter()

    return RealizationOutcome(
        distance_index=task.distance_index,
        realization_index=task.realization_index,
        rho_a_m=task.scenario.rho_a_m,
        seed=task.seed,
        equilibrium=equilibrium,
        min_payoff=float(matrix.values.min()),
        max_payoff=float(matrix.values.max()),
        scatter_dominant_cells=int(scatter_dominance(task.scenario, field).sum()),
        build_time=built - started,
        solve_time=solved - built,
    )


def run_realization(scenario: Scenario, seed: int) -> Equilibrium:
    """Tire r₃ avec seed, construit la matrice et la résout"""
    return _solve_task(RealizationTask(0, 0, scenario, seed)).equilibrium


def weighted_mean_angle(strategy: MixedStrategy, grid: ActionGrid) -> float:
    """Σ p_k α_k en degrés, dans [0, 60]"""
    if len(strategy) != len(grid):
        raise DomainError(f"Stratégie de taille {len(strategy)} pour une grille de {len(grid)} actions")
    return float(np.clip(strategy.probs @ grid.as_array(), grid[0], grid[-1]))


def aggregate(equilibria: Sequence[Equilibrium], grid: ActionGrid,
              rho_a_m: float = float('nan')) -> DistanceAggregate:
    """
    Moyennes et écarts-types (population) des équilibres d'une distance

    Args:
        equilibria: Équilibres des réalisations
        grid: Grille d'actions commune
        rho_a_m: Distance de l'obstacle à reporter
    """
    if not equilibria:
        raise DomainError("Aucun équilibre à agréger")

    strategies_r = np.array([eq.x_r.probs for eq in equilibria])
    strategies_a = np.array([eq.x_a.probs for eq in equilibria])
    angles_r = np.array([weighted_mean_angle(eq.x_r, grid) for eq in equilibria])
    angles_a = np.array([weighted_mean_angle(eq.x_a, grid) for eq in equilibria])
    values = np.array([eq.value for eq in equilibria])

    return DistanceAggregate(
        rho_a_m=float(rho_a_m),
        mean_strategy_r=strategies_r.mean(axis=0),
        mean_strategy_a=strategies_a.mean(axis=0),
        std_strategy_r=strategies_r.std(axis=0),
        std_strategy_a=strategies_a.std(axis=0),
        mean_angle_r_deg=float(angles_r.mean()),
        mean_angle_a_deg=float(angles_a.mean()),
        std_angle_r_deg=float(angles_r.std()),
        std_angle_a_deg=float(angles_a.std()),
        mean_value=float(values.mean()),
        std_value=float(values.std()),
        realizations=len(equilibria),
    )


@dataclass(frozen=True, eq=False)
class SweepResult:
    config: SweepConfig
    aggregates: List[DistanceAggregate]
    outcomes: List[RealizationOutcome]

    @property
    def peeking_violations(self) -> List[float]:
        """Distances où A ne se tient pas en moyenne plus près de l'axe que R"""
        return [agg.rho_a_m for agg in self.aggregates if agg.mean_angle_a_deg >= agg.mean_angle_r_deg]


def _tasks(config: SweepConfig) -> List[RealizationTask]:
    tasks = []
    for d in range(len(config.distances_m)):
        scenario = config.scenario_at(d)
        for r in range(config.realizations):
            tasks.append(RealizationTask(d, r, scenario, child_seed(config.master_seed, d, r)))
    return tasks


def run_sweep(config: SweepConfig, workers: Optional[int] = None,
              monitor: Optional[PerformanceMonitor] = None,
              on_progress: Optional[Callable[[int, int], None]] = None) -> SweepResult:
    """
    Exécute la campagne complète

    Args:
        config: Distances, réalisations, graine maîtresse, scénario
        workers: Nombre de processus (plafonné par BLOCKPEEK_THREADS)
        monitor: Collecte des durées, facultative
        on_progress: Rappel (terminées, total)
    """
    tasks = _tasks(config)
    total = len(tasks)
    logger.info(f"Campagne: {len(config.distances_m)} distances x {config.realizations} réalisations, "
                f"graine {config.master_seed}")

    def _received(done: int, outcome: RealizationOutcome):
        if monitor is not None:
            monitor.record('matrix_build', outcome.build_time)
            monitor.record('lp_solve', outcome.solve_time)
            monitor.record('realization', outcome.build_time + outcome.solve_time)
        if on_progress is not None:
            on_progress(done, total)

    outcomes = RealizationPool(workers).map(_solve_task, tasks, on_result=_received)

    grid = action_grid()
    aggregates = []
    for d, rho_a in enumerate(config.distances_m):
        batch = [o for o in outcomes if o.distance_index == d]
        for outcome in batch:
            if not outcome.min_payoff - 1e-9 <= outcome.equilibrium.value <= outcome.max_payoff + 1e-9:
                raise DomainError(f"Valeur hors de la matrice pour la réalisation "
                                  f"({d}, {outcome.realization_index})")
        agg = aggregate([o.equilibrium for o in batch], grid, rho_a_m=rho_a)
        aggregates.append(agg)
        logger.info(f"ρ_A={rho_a:.2f} m: θ_R moyen {agg.mean_angle_r_deg:.2f}°, "
                    f"θ_A moyen {agg.mean_angle_a_deg:.2f}°, ν moyen {agg.mean_value:.3f} b/s/Hz")
        if agg.mean_angle_a_deg >= agg.mean_angle_r_deg:
            logger.warning(f"ρ_A={rho_a:.2f} m: l'adversaire n'est pas plus près de l'axe que le "
                           f"récepteur ({agg.mean_angle_a_deg:.2f}° >= {agg.mean_angle_r_deg:.2f}°)")

    return SweepResult(config=config, aggregates=aggregates, outcomes=outcomes)


def sweep(config: SweepConfig, workers: Optional[int] = None) -> List[DistanceAggregate]:
    """Agrégats par distance, dans l'ordre de config.distances_m"""
    return run_sweep(config, workers=workers).aggregates
