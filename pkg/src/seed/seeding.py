"""
Module: seeding.py
------------------
Dérivation des graines filles d'une campagne.

Chaque réalisation (distance d, réalisation r) reçoit une graine
dérivée de la graine maîtresse par numpy.random.SeedSequence avec la
clé (d, r): les résultats ne dépendent ni de l'ordre d'exécution ni du
nombre de processus.

Version: 1.0
"""

import numpy as np

from src.utils.errors import DomainError


def child_seed(master_seed: int, distance_index: int, realization_index: int) -> int:
    """Graine 64 bits de la réalisation (distance_index, realization_index)"""
    for name, value in (('master_seed', master_seed), ('distance_index', distance_index),
                        ('realization_index', realization_index)):
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 0:
            raise DomainError(f"{name} doit être un entier positif, reçu {value!r}")
    sequence = np.random.SeedSequence(int(master_seed), spawn_key=(int(distance_index), int(realization_index)))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def make_rng(seed: int) -> np.random.Generator:
    """Générateur PCG64 d'une réalisation"""
    return np.random.default_rng(seed)
