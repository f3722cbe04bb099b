"""
Module: realization_pool.py
---------------------------
Répartition des réalisations Monte-Carlo sur plusieurs processus.

Les tâches sont indépendantes: chacune porte sa graine. Les résultats
reviennent dans l'ordre des tâches quel que soit le processus qui les
a calculées.

Classes:
    RealizationPool: Pool de processus borné par BLOCKPEEK_THREADS

Version: 1.0
"""

import logging
import multiprocessing
import os
from typing import Callable, Iterable, List, Optional, TypeVar

from src.utils.errors import ConfigError

THREADS_ENV = 'BLOCKPEEK_THREADS'

T = TypeVar('T')
R = TypeVar('R')


def resolve_worker_count(requested: Optional[int] = None) -> int:
    """
    Nombre de processus: demandé, sinon nombre de CPU, plafonné par BLOCKPEEK_THREADS
    """
    count = requested or multiprocessing.cpu_count()
    raw = os.environ.get(THREADS_ENV)
    if raw is not None and raw.strip():
        try:
            cap = int(raw)
        except ValueError:
            raise ConfigError(f"entier attendu, reçu {raw!r}", source='environnement', field=THREADS_ENV)
        if cap < 1:
            raise ConfigError(f"doit être >= 1, reçu {cap}", source='environnement', field=THREADS_ENV)
        count = min(count, cap)
    return max(1, count)


class RealizationPool:
    """Exécute une fonction sur une liste de tâches, en parallèle ou non"""

    def __init__(self, num_processes: Optional[int] = None):
        """
        Args:
            num_processes: Nombre de processus (défaut: nombre de CPU)
        """
        self.num_processes = resolve_worker_count(num_processes)
        self.logger = logging.getLogger('blockpeek.experiment')

    def map(self, func: Callable[[T], R], tasks: Iterable[T],
            on_result: Optional[Callable[[int, R], None]] = None) -> List[R]:
        """
        Applique func à chaque tâche, résultats dans l'ordre des tâches

        Args:
            func: Fonction de niveau module (sérialisable)
            tasks: Tâches à traiter
            on_result: Rappel (rang, résultat) à chaque résultat reçu
        """
        tasks = list(tasks)
        workers = min(self.num_processes, len(tasks)) if tasks else 1
        results: List[R] = []

        if workers <= 1:
            self.logger.debug(f"Exécution en ligne de {len(tasks)} tâches")
            for task in tasks:
                results.append(func(task))
                if on_result:
                    on_result(len(results), results[-1])
            return results

        chunksize = max(1, len(tasks) // (workers * 4))
        self.logger.info(f"Répartition de {len(tasks)} tâches sur {workers} processus")
        with multiprocessing.Pool(workers) as pool:
            for result in pool.imap(func, tasks, chunksize=chunksize):
                results.append(result)
                if on_result:
                    on_result(len(results), result)
        return results
