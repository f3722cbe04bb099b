"""
Package: utils
--------------
Journalisation et hiérarchie d'exceptions.
"""
