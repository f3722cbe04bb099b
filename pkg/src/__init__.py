"""
Package: src
-----------------
Jeu de blocage-observation (blockage-peeking) en ondes millimétriques.

Ce package calcule le canal d'un lien à 60 GHz perturbé par un
obstacle mobile, construit le jeu à somme nulle entre le récepteur et
l'adversaire qui déplace l'obstacle, le résout et conduit les
campagnes Monte-Carlo en fonction de la distance de l'obstacle.

Structure:
    core/: Calculs (antenne, propagation, canal, jeu, campagnes)
    models/: Types de données immuables
    seed/: Configuration et graines
    monitoring/: Mesure des durées
    export/: Fichiers CSV, JSON et figures
    cli/: Sous-commandes de la ligne de commande
    ui/: Interface console et formatage
    utils/: Journalisation et exceptions

Version: 1.0
"""

__version__ = '1.0.0'
