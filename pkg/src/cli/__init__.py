"""
Command-line interface for roundsim
"""
