"""
Package: export
---------------
Fichiers de sortie: CSV, JSON, manifeste et figures facultatives.
"""
