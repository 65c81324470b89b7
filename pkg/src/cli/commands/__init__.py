"""
Sub-commands of the roundsim CLI
"""

from src.cli.commands import equiv, existential, fixed, gen, symmetry

__all__ = ["equiv", "existential", "fixed", "gen", "symmetry"]
