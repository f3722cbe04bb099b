"""
Package: seed
-------------
Initialisation d'une exécution: configuration JSON et graines filles.
"""
