"""
Package: cli
------------
Sous-commandes pattern, payoff, solve et sweep.
"""
