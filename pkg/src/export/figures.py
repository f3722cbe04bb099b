"""
Module: figures.py
------------------
Figures PNG facultatives (--figures). Les CSV restent la sortie de référence.

Fonctions:
    render_pattern: Diagramme de rayonnement en dBi
    render_sweep: Cartes de chaleur des stratégies moyennes et angles moyens

Version: 1.0
"""

import logging
from pathlib import Path
from typing import List, Sequence

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from src.models.experiment import DistanceAggregate  # noqa: E402
from src.models.game import ActionGrid  # noqa: E402

logger = logging.getLogger('blockpeek.export')

# Pas d'horodatage ni de version dans les PNG
PNG_METADATA = {'Software': None}


def _save(path: Path) -> Path:
    plt.tight_layout(pad=1.1)
    plt.savefig(path, dpi=120, metadata=PNG_METADATA)
    plt.close()
    logger.info(f"Figure écrite: {path}")
    return path


def render_pattern(angles: np.ndarray, gains: np.ndarray, output_dir: Path) -> List[Path]:
    """Gain de T en fonction de θ"""
    output_files = []
    try:
        plt.figure(figsize=(8, 5))
        plt.plot(angles, gains)
        plt.xlabel('θ (°)')
        plt.ylabel('Gain (dBi)')
        plt.title("Diagramme de rayonnement de l'émetteur")
        plt.grid(True, alpha=0.3)
        output_files.append(_save(Path(output_dir) / 'pattern.png'))
    except Exception as e:
        logger.warning(f"Erreur lors de la création du diagramme: {e}")
        plt.close()
    return output_files


def render_sweep(aggregates: Sequence[DistanceAggregate], grid: ActionGrid, output_dir: Path) -> List[Path]:
    """Cartes (θ, ρ_A) de R et de A, puis angles moyens avec barres ±3σ"""
    output_files = []
    output_dir = Path(output_dir)
    distances = [agg.rho_a_m for agg in aggregates]

    for player, label in (('receiver', 'récepteur R'), ('adversary', 'adversaire A')):
        try:
            data = np.array([agg.mean_strategy_r if player == 'receiver' else agg.mean_strategy_a
                             for agg in aggregates]).T
            plt.figure(figsize=(7, 5))
            plt.pcolormesh(distances, grid.as_array(), data, shading='nearest', vmin=0.0, vmax=1.0)
            plt.colorbar(label='Probabilité moyenne')
            plt.xlabel('ρ_A (m)')
            plt.ylabel('θ (°)')
            plt.title(f"Stratégie mixte moyenne du {label}")
            output_files.append(_save(output_dir / f'heatmap_{player}.png'))
        except Exception as e:
            logger.warning(f"Erreur lors de la création de la carte {player}: {e}")
            plt.close()

    try:
        plt.figure(figsize=(7, 5))
        plt.errorbar(distances, [agg.mean_angle_r_deg for agg in aggregates],
                     yerr=[3.0 * agg.std_angle_r_deg for agg in aggregates], marker='o', capsize=3, label='R')
        plt.errorbar(distances, [agg.mean_angle_a_deg for agg in aggregates],
                     yerr=[3.0 * agg.std_angle_a_deg for agg in aggregates], marker='s', capsize=3, label='A')
        plt.xlabel('ρ_A (m)')
        plt.ylabel('Angle moyen (°)')
        plt.legend()
        plt.grid(True, alpha=0.3)
        output_files.append(_save(output_dir / 'mean_angles.png'))
    except Exception as e:
        logger.warning(f"Erreur lors de la création du graphique des angles: {e}")
        plt.close()

    return output_files
