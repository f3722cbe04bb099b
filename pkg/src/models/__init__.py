"""
Package: models
-------------
Types de données du jeu de blocage.

Ce package contient les valeurs immuables échangées entre les modules
de calcul : positions, scénario physique, échantillons de canal,
matrices de gains, stratégies, équilibres et agrégats de campagne.

Contenu:
    - position.py: Position polaire d'un joueur
    - scenario.py: Constantes physiques et mode d'évanouissement
    - channel_sample.py: Composantes complexes du canal
    - game.py: Grille d'actions, matrice de gains, stratégies, équilibre
    - experiment.py: Configuration de balayage et agrégats par distance
    - manifest.py: Manifeste d'exécution

Relations:
    Scenario
    ├── PolarPosition (R, A)
    └── ChannelSample

    PayoffMatrix
    └── Equilibrium
        └── MixedStrategy (R, A)

Version: 1.0
"""

from .position import PolarPosition
from .scenario import Scenario, FadingMode
from .channel_sample import ChannelSample
from .game import ActionGrid, PayoffMatrix, MixedStrategy, Equilibrium, grid_angle
from .experiment import SweepConfig, DistanceAggregate
from .manifest import RunManifest, ManifestEntry
