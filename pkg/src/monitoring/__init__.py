"""
Package: monitoring
-------------------
Mesure des durées des étapes de calcul.
"""
