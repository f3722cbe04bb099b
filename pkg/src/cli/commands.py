"""
Module: commands.py
-------------------
Sous-commandes de la ligne de commande.

Chaque commande écrit ses fichiers dans le dossier de sortie et renvoie
un CommandResult; execute() enveloppe la commande, mesure son exécution
et écrit le manifeste.

Fonctions:
    cmd_pattern: pattern.csv (diagramme de T sur [-90, 90]°)
    cmd_payoff: payoff.csv (matrice 15x15 d'une réalisation)
    cmd_solve: equilibrium.json (équilibre d'une matrice)
    cmd_sweep: heatmap_receiver.csv, heatmap_adversary.csv, summary.csv
    execute: Exécution d'une commande et écriture du manifeste

Version: 1.0
"""

import logging
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from src import __version__
from src.core.antenna import array_gain_dbi, pattern_metrics
from src.core.channel import scatter_dominance
from src.core.experiment import run_sweep
from src.core.fading import draw_fading_field
from src.core.game import (action_grid, build_payoff_matrix, indifference_residuals,
                           pure_security_levels, solve_zero_sum_lp, support)
from src.export.csv_writer import (read_matrix_csv, write_heatmap_csv, write_pattern_csv,
                                   write_payoff_csv, write_summary_csv)
from src.export.manifest_writer import file_digest, write_json, write_jsonl, write_manifest
from src.models.experiment import SweepConfig
from src.models.game import PayoffMatrix
from src.models.manifest import RunManifest
from src.models.scenario import Scenario
from src.monitoring.performance_monitor import PerformanceMonitor
from src.seed.seeding import child_seed, make_rng
from src.ui.console_ui import ConsoleUI
from src.utils.errors import DomainError, ExportError

logger = logging.getLogger('blockpeek.cli')

PATTERN_SPAN_DEG = 90.0


@dataclass
class CommandContext:
    """
    :param config: Configuration effective (graine --seed déjà appliquée)
    :param out_dir: Dossier de sortie
    :param config_path: Fichier de configuration lu, s'il y en a un
    """
    config: SweepConfig
    out_dir: Path
    config_path: Optional[Path] = None

    @property
    def scenario(self) -> Scenario:
        return self.config.scenario

    @property
    def master_seed(self) -> int:
        return self.config.master_seed


@dataclass
class CommandResult:
    files: List[Path] = field(default_factory=list)
    metadata: Dict = field(default_factory=dict)


def _single_realization(scenario: Scenario, master_seed: int) -> Tuple[PayoffMatrix, np.ndarray]:
    """Matrice de la réalisation (0, 0) de la graine maîtresse"""
    field_r3 = draw_fading_field(make_rng(child_seed(master_seed, 0, 0)), scenario)
    return build_payoff_matrix(scenario, field_r3), field_r3


def cmd_pattern(ctx: CommandContext, resolution_deg: float = 0.1, figures: bool = False) -> CommandResult:
    """Échantillonne le gain de T de -90° à 90° au pas resolution_deg"""
    if not 0.0 < resolution_deg <= 5.0:
        raise DomainError(f"La résolution doit être dans ]0, 5]°, reçu {resolution_deg}")

    steps = int(np.floor(2.0 * PATTERN_SPAN_DEG / resolution_deg + 1e-9))
    angles = np.round(-PATTERN_SPAN_DEG + resolution_deg * np.arange(steps + 1), 10)
    angles[angles == 0.0] = 0.0   # pas de "-0.0000"
    gains = array_gain_dbi(angles, ctx.scenario)

    metrics = pattern_metrics(ctx.scenario)
    comments = ["diagramme de rayonnement de l'émetteur (dBi)",
                f"resolution_deg={resolution_deg:g}"] + metrics.as_comment_lines()
    result = CommandResult(files=[write_pattern_csv(ctx.out_dir / 'pattern.csv', angles, gains, comments)])
    result.metadata = {'rows': int(angles.size)}

    # Mesures disponibles seulement si le diagramme a un lobe principal et des lobes secondaires
    if metrics.hpbw_deg is not None:
        result.metadata['hpbw_deg'] = metrics.hpbw_deg
        ConsoleUI.print_status_update(f"HPBW {metrics.hpbw_deg:.2f}°")
    if metrics.first_sidelobe is not None:
        angle, level = metrics.first_sidelobe
        result.metadata['first_sidelobe_db'] = level
        ConsoleUI.print_status_update(f"Premier lobe secondaire {level:.2f} dB à {angle:.2f}°")
    if figures:
        from src.export.figures import render_pattern
        result.files.extend(render_pattern(angles, gains, ctx.out_dir))
    return result


def cmd_payoff(ctx: CommandContext) -> CommandResult:
    """Matrice de gains d'une réalisation tirée avec la graine maîtresse"""
    scenario = ctx.scenario
    ConsoleUI.print_scenario(scenario)
    matrix, field_r3 = _single_realization(scenario, ctx.master_seed)
    dominant = int(scatter_dominance(scenario, field_r3).sum())

    logger.info(f"Matrice construite: ν dans [{matrix.values.min():.3f}, {matrix.values.max():.3f}] b/s/Hz, "
                f"{dominant} case(s) dominée(s) par la diffusion")
    path = write_payoff_csv(ctx.out_dir / 'payoff.csv', matrix)
    return CommandResult(files=[path], metadata={
        'rho_a_m': scenario.rho_a_m,
        'min_payoff': float(matrix.values.min()),
        'max_payoff': float(matrix.values.max()),
        'scatter_dominant_cells': dominant,
    })


def cmd_solve(ctx: CommandContext, matrix_path: Optional[Path] = None) -> CommandResult:
    """Équilibre d'une matrice lue (--matrix) ou construite depuis la configuration"""
    row_labels = col_labels = None
    if matrix_path is not None:
        parsed = read_matrix_csv(matrix_path)
        values, row_labels, col_labels = parsed.values, parsed.row_labels, parsed.col_labels
        source = str(matrix_path)
    else:
        matrix, _ = _single_realization(ctx.scenario, ctx.master_seed)
        values = matrix.values
        row_labels = col_labels = tuple(f"{a:.4f}" for a in matrix.row_angles)
        source = 'config'

    equilibrium = solve_zero_sum_lp(values)
    security = pure_security_levels(values)
    residuals = indifference_residuals(values, equilibrium)
    logger.info(f"{equilibrium} (source: {source})")
    if not security.has_saddle_point:
        logger.debug(f"Pas de point selle: maximin {security.maximin:.4f} < minimax {security.minimax:.4f}")

    document = {
        'source': source,
        'shape': list(values.shape),
        'value': float(equilibrium.value),
        'x_r': equilibrium.x_r.to_list(),
        'x_a': equilibrium.x_a.to_list(),
        'support_r': sorted(support(equilibrium.x_r)),
        'support_a': sorted(support(equilibrium.x_a)),
        'residuals': residuals,
        'pure_security': security.to_dict(),
        'row_labels': list(row_labels) if row_labels else None,
        'col_labels': list(col_labels) if col_labels else None,
    }
    path = write_json(ctx.out_dir / 'equilibrium.json', document)
    ConsoleUI.print_status_update(f"Valeur du jeu: {equilibrium.value:.6f} b/s/Hz")
    return CommandResult(files=[path], metadata={'value': float(equilibrium.value), 'source': source})


def cmd_sweep(ctx: CommandContext, dump_realizations: bool = False, figures: bool = False,
              monitor: Optional[PerformanceMonitor] = None) -> CommandResult:
    """Campagne en distance: cartes de chaleur et tableau récapitulatif"""
    ConsoleUI.print_scenario(ctx.scenario)
    total = len(ctx.config.distances_m) * ctx.config.realizations
    outcome = run_sweep(ctx.config, monitor=monitor,
                        on_progress=lambda done, _: ConsoleUI.print_progress(done, total))
    grid = action_grid()
    header = [f"realizations={ctx.config.realizations} master_seed={ctx.master_seed}",
              f"fading_mode={ctx.scenario.fading_mode.value}"]

    files = [
        write_heatmap_csv(ctx.out_dir / 'heatmap_receiver.csv', outcome.aggregates, grid, 'receiver',
                          ["stratégie mixte moyenne du récepteur R à l'équilibre"] + header),
        write_heatmap_csv(ctx.out_dir / 'heatmap_adversary.csv', outcome.aggregates, grid, 'adversary',
                          ["stratégie mixte moyenne de l'adversaire A à l'équilibre"] + header),
        write_summary_csv(ctx.out_dir / 'summary.csv', outcome.aggregates,
                          ["angles moyens (degrés) et valeur du jeu (b/s/Hz) par distance",
                           "std_value: écart-type population, intervalle de confiance mean ± 3 std"] + header),
    ]
    if dump_realizations:
        files.append(write_jsonl(ctx.out_dir / 'realizations.jsonl', (o.to_dict() for o in outcome.outcomes)))
    if figures:
        from src.export.figures import render_sweep
        files.extend(render_sweep(outcome.aggregates, grid, ctx.out_dir))

    ConsoleUI.print_summary_table(outcome.aggregates)
    return CommandResult(files=files, metadata={
        'aggregates': [agg.to_dict() for agg in outcome.aggregates],
        'peeking_violations': outcome.peeking_violations,
    })


def execute(command: str, ctx: CommandContext, handler: Callable[..., CommandResult], **options) -> RunManifest:
    """
    Exécute handler(ctx, **options) puis écrit <out>/manifest.json

    Returns:
        Le manifeste écrit
    """
    manifest = RunManifest(
        command=command,
        config={**ctx.config.to_dict(), 'rho_a_m': ctx.scenario.rho_a_m},
        tool_version=__version__,
        master_seed=ctx.master_seed,
        started_at=datetime.now(timezone.utc).isoformat(timespec='seconds'),
    )
    manifest.metadata['options'] = {k: (str(v) if isinstance(v, Path) else v) for k, v in options.items()
                                    if k != 'monitor'}
    if ctx.config_path is not None:
        manifest.metadata['config_path'] = str(ctx.config_path)

    try:
        ctx.out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ExportError(f"Dossier de sortie inutilisable {ctx.out_dir}: {e.strerror}") from e
    result = handler(ctx, **options)
    for path in result.files:
        manifest.add_file(file_digest(path))
    manifest.metadata['result'] = result.metadata
    monitor = options.get('monitor')
    if monitor is not None:
        manifest.metadata['timings'] = monitor.get_metrics()
    manifest.finished_at = datetime.now(timezone.utc).isoformat(timespec='seconds')

    write_manifest(manifest, ctx.out_dir)
    ConsoleUI.print_success(f"{len(result.files)} fichier(s) écrit(s) dans {ctx.out_dir}")
    return manifest
