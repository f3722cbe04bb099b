"""
Module: csv_writer.py
---------------------
Écriture et lecture des fichiers CSV de résultats.

Conventions communes: UTF-8, fins de ligne LF, séparateur virgule,
lignes de commentaire préfixées par '#' (ignorées par gnuplot et par
read_matrix_csv). Gains en 4 décimales, probabilités en 6.

Fonctions:
    write_pattern_csv: Diagramme de rayonnement échantillonné
    write_payoff_csv: Matrice 15x15 avec en-têtes d'angles
    read_matrix_csv: Matrice numérique, avec ou sans en-têtes
    write_heatmap_csv: Stratégie moyenne d'un joueur par distance
    write_summary_csv: Angles moyens et valeur par distance
    round_preserving_sum: Arrondi de probabilités conservant la somme

Version: 1.0
"""

import csv
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.models.experiment import DistanceAggregate
from src.models.game import ActionGrid, PayoffMatrix
from src.utils.errors import ConfigError, ExportError

logger = logging.getLogger('blockpeek.export')

PAYOFF_CORNER = 'theta_r_deg\\theta_a_deg'


def _open_for_write(path: Path):
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        return open(path, 'w', encoding='utf-8', newline='')
    except OSError as e:
        raise ExportError(f"Écriture impossible de {path}: {e.strerror}") from e


def _write_rows(path: Path, header: Sequence[str], rows: Iterable[Sequence[str]],
                comments: Sequence[str] = ()) -> Path:
    path = Path(path)
    with _open_for_write(path) as f:
        try:
            for comment in comments:
                f.write(f"# {comment}\n")
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(header)
            writer.writerows(rows)
        except OSError as e:
            raise ExportError(f"Écriture interrompue de {path}: {e.strerror}") from e
    logger.info(f"Fichier écrit: {path}")
    return path


def round_preserving_sum(probs: Sequence[float], decimals: int = 6) -> np.ndarray:
    """
    Arrondit des probabilités à `decimals` décimales en gardant une somme exacte de 1

    Plus forts restes: chaque valeur reste à moins d'une unité du dernier
    chiffre de sa valeur exacte.
    """
    unit = 10 ** decimals
    scaled = np.asarray(probs, dtype=float) * unit
    floors = np.floor(scaled)
    missing = int(round(unit - floors.sum()))
    if missing > 0:
        order = np.argsort(-(scaled - floors), kind='stable')
        floors[order[:missing]] += 1
    return floors / unit


def write_pattern_csv(path: Path, angles: np.ndarray, gains: np.ndarray,
                      comments: Sequence[str] = ()) -> Path:
    """Colonnes theta_deg, gain_dbi"""
    rows = ([f"{a:.4f}", f"{g:.4f}"] for a, g in zip(angles, gains))
    return _write_rows(path, ['theta_deg', 'gain_dbi'], rows, comments)


def write_payoff_csv(path: Path, matrix: PayoffMatrix) -> Path:
    """16 x 16: ligne d'angles θ_A, puis une ligne par θ_R"""
    header = [PAYOFF_CORNER] + [f"{a:.4f}" for a in matrix.col_angles]
    rows = ([f"{angle:.4f}"] + [f"{v:.4f}" for v in row]
            for angle, row in zip(matrix.row_angles, matrix.values))
    return _write_rows(path, header, rows)


@dataclass(frozen=True, eq=False)
class MatrixFile:
    values: np.ndarray
    row_labels: Optional[Tuple[str, ...]]
    col_labels: Optional[Tuple[str, ...]]


def _parse_float(cell: str, source: str, line: int, column: int) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise ConfigError(f"valeur non numérique {cell!r}", source=source, line=line, column=column)
    if not np.isfinite(value):
        raise ConfigError(f"valeur non finie {cell!r}", source=source, line=line, column=column)
    return value


def read_matrix_csv(path: Path) -> MatrixFile:
    """
    Lit une matrice de gains

    Si la première cellule n'est pas numérique, la première ligne et la
    première colonne sont des en-têtes (format de write_payoff_csv).
    """
    path = Path(path)
    source = str(path)
    try:
        with open(path, 'r', encoding='utf-8', newline='') as f:
            lines = [(number, row) for number, row in enumerate(csv.reader(f), start=1)]
    except OSError as e:
        raise ConfigError(f"lecture impossible ({e.strerror})", source=source) from e
    except csv.Error as e:
        raise ConfigError(f"CSV invalide: {e}", source=source) from e

    lines = [(n, [c.strip() for c in row]) for n, row in lines
             if row and any(c.strip() for c in row) and not row[0].lstrip().startswith('#')]
    if not lines:
        raise ConfigError("aucune donnée", source=source)

    first_line, first_row = lines[0]
    try:
        float(first_row[0])
        has_headers = False
    except ValueError:
        has_headers = True

    col_labels = None
    row_labels: List[str] = []
    data_lines = lines
    if has_headers:
        col_labels = tuple(first_row[1:])
        data_lines = lines[1:]
        if not data_lines:
            raise ConfigError("en-têtes sans données", source=source, line=first_line)

    values = []
    width = None
    for number, row in data_lines:
        cells = row
        offset = 1
        if has_headers:
            row_labels.append(row[0])
            cells = row[1:]
            offset = 2
        if width is None:
            width = len(cells)
        if len(cells) != width or width == 0:
            raise ConfigError(f"{len(cells)} valeurs, {width} attendues", source=source, line=number)
        values.append([_parse_float(c, source, number, k + offset) for k, c in enumerate(cells)])

    if col_labels is not None and len(col_labels) != width:
        raise ConfigError(f"{len(col_labels)} en-têtes de colonnes pour {width} colonnes",
                          source=source, line=first_line)

    logger.debug(f"Matrice {len(values)}x{width} lue depuis {path}")
    return MatrixFile(values=np.array(values, dtype=float),
                      row_labels=tuple(row_labels) if has_headers else None,
                      col_labels=col_labels)


def write_heatmap_csv(path: Path, aggregates: Sequence[DistanceAggregate], grid: ActionGrid,
                      player: str, comments: Sequence[str] = ()) -> Path:
    """
    Lignes rho_a_m, theta_deg, mean_probability pour player 'receiver' ou 'adversary'

    Un bloc par distance, séparé des suivants par l'ordre des lignes.
    """
    if player not in ('receiver', 'adversary'):
        raise ValueError(f"Joueur inconnu: {player}")
    rows = []
    for agg in aggregates:
        strategy = agg.mean_strategy_r if player == 'receiver' else agg.mean_strategy_a
        for angle, prob in zip(grid.angles, round_preserving_sum(strategy)):
            rows.append([f"{agg.rho_a_m:.2f}", f"{angle:.4f}", f"{prob:.6f}"])
    return _write_rows(path, ['rho_a_m', 'theta_deg', 'mean_probability'], rows, comments)


def write_summary_csv(path: Path, aggregates: Sequence[DistanceAggregate],
                      comments: Sequence[str] = ()) -> Path:
    """Une ligne par distance; écart-type en convention population"""
    rows = ([f"{agg.rho_a_m:.2f}", f"{agg.mean_angle_r_deg:.4f}", f"{agg.mean_angle_a_deg:.4f}",
             f"{agg.mean_value:.4f}", f"{agg.std_value:.4f}"] for agg in aggregates)
    return _write_rows(path, ['rho_a_m', 'mean_angle_r', 'mean_angle_a', 'mean_value', 'std_value'],
                       rows, comments)
