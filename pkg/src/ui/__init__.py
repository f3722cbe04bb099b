"""
Package: ui
-----------
Affichage console coloré et formateurs de logs.
"""
