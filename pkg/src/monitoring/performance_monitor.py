"""
Module de surveillance des performances des campagnes.

Mesure les durées de construction des matrices de gains, de résolution
des programmes linéaires et des réalisations complètes.

Classes:
    PerformanceMonitor: Moniteur principal des performances
    MetricCollector: Collecteur de durées pour une étape
    TimingMetrics: Structure de données pour les durées

Version: 1.0
"""

import logging
import time
from dataclasses import dataclass
from threading import Lock
from typing import Dict, Optional

STAGES = ('matrix_build', 'lp_solve', 'realization')


@dataclass
class TimingMetrics:
    """Structure pour stocker les durées d'une étape"""
    start_time: float
    count: int = 0
    total_time: float = 0.0
    max_time: float = 0.0
    min_time: float = float('inf')


class MetricCollector:
    """Collecteur de durées d'une étape"""

    def __init__(self, stage: str):
        self.stage = stage
        self.metrics = TimingMetrics(start_time=time.time())
        self.lock = Lock()

    def record(self, duration: float):
        """Enregistre une durée en secondes"""
        with self.lock:
            self.metrics.count += 1
            self.metrics.total_time += duration
            self.metrics.max_time = max(self.metrics.max_time, duration)
            self.metrics.min_time = min(self.metrics.min_time, duration)

    def get_summary(self) -> Dict:
        """Retourne un résumé des durées"""
        with self.lock:
            count = self.metrics.count
            return {
                'stage': self.stage,
                'count': count,
                'total_time': self.metrics.total_time,
                'avg_time': self.metrics.total_time / count if count > 0 else 0.0,
                'max_time': self.metrics.max_time,
                'min_time': self.metrics.min_time if count > 0 else 0.0,
            }


class PerformanceMonitor:
    """Moniteur des durées d'une exécution"""

    def __init__(self):
        self.collectors: Dict[str, MetricCollector] = {stage: MetricCollector(stage) for stage in STAGES}
        self.logger = logging.getLogger('blockpeek.monitor')
        self.lock = Lock()

    def record(self, stage: str, duration: float):
        """Enregistre une durée pour une étape connue"""
        with self.lock:
            collector = self.collectors.get(stage)
        if collector is None:
            self.logger.warning(f"Étape inconnue: {stage}")
            return
        collector.record(duration)

    def report(self):
        """Journalise le rapport des durées"""
        self.logger.info("=== Rapport de Performance ===")
        for stage, summary in self.get_metrics().items():
            if summary['count'] == 0:
                continue
            self.logger.info(f"{stage}: {summary['count']} mesures, "
                             f"moyenne {summary['avg_time'] * 1e3:.2f} ms, "
                             f"max {summary['max_time'] * 1e3:.2f} ms, "
                             f"total {summary['total_time']:.2f} s")

    def get_metrics(self, stage: Optional[str] = None) -> Dict:
        """Récupère les résumés d'une étape ou de toutes"""
        with self.lock:
            if stage:
                if stage in self.collectors:
                    return {stage: self.collectors[stage].get_summary()}
                return {}
            return {name: collector.get_summary() for name, collector in self.collectors.items()}
