"""
Core algorithms for roundsim

Contains:
- Automata: runs, letter and word types, membership, intersection
- Round words: Parikh vectors and round equivalence
- Trace product: trace DFA, lifted restrictions, redundant product
- Permutation closure: Parikh-pair types and type profiles
- Simulation: quotient containment and fixed-k checks
- Existential: bounded search with profile reuse
- Symmetry: permuted transducers and generator checks
- Generators and oracles
- Orchestrator and report generator

Submodules are imported directly (``from src.core.simulation import ...``);
only the error hierarchy is re-exported here.
"""

from src.core.errors import (
    AutomatonInputError,
    BudgetExceeded,
    NotARoundWordError,
    ParseError,
    QuotientCapExceeded,
    ReuseMismatchError,
)

__all__ = [
    "AutomatonInputError",
    "NotARoundWordError",
    "ParseError",
    "QuotientCapExceeded",
    "BudgetExceeded",
    "ReuseMismatchError",
]
