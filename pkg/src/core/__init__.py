"""
Package: core
-------------
Calculs du jeu de blocage.

Contenu:
    - antenna.py: Diagramme de rayonnement de l'émetteur
    - propagation.py: Espace libre, diffraction, diffusion par l'obstacle
    - fading.py: Tirages de la composante multitrajet
    - channel.py: Gain complexe du canal et efficacité spectrale
    - simplex.py: Simplexe dense, règle de Bland
    - game.py: Matrice de gains et équilibre par programmation linéaire
    - fictitious_play.py: Équilibre approché par jeu fictif
    - experiment.py: Campagnes Monte-Carlo en distance
    - realization_pool.py: Répartition des réalisations sur des processus

Relations:
    antenna -> propagation -> channel -> game -> experiment
                                 fading ----------^
"""
