"""
roundsim - round simulation and process symmetry checks for transducers

Command-line entry point.
"""

import sys

from src.cli.app import main

if __name__ == "__main__":
    sys.exit(main())
