"""
roundsim - round simulation of letter-to-letter transducers

Decides k-round simulation, k-round equivalence and k-round process symmetry
of finite transducers, searches for a round length that makes a simulation
hold, and generates the standard benchmark instances.
"""

__version__ = "0.1.0"
__author__ = "roundsim Team"
