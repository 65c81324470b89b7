"""
Data models and schemas for roundsim

Contains Pydantic models for:
- Alphabets, acceptors and transducers
- Round words and Parikh vectors
- Verdicts of simulation, existential and symmetry checks
- Process permutations
- Instance bundles and oracle budgets
- CLI reports
"""

from src.models.automata import Alphabet, Nfa, ProductAlphabet, RedundantProduct, Transducer
from src.models.instances import (
    BundleManifest,
    ExpectedVerdict,
    InstanceBundle,
    Provenance,
    Relation,
)
from src.models.oracle import OracleBudget, OracleVerdict
from src.models.report import ExitCode, Report, ReportOutcome
from src.models.symmetry import Permutation, ProcessAlphabet
from src.models.type_matrix import TypeMatrix
from src.models.verdicts import (
    ContainmentStats,
    Counterexample,
    EquivalenceVerdict,
    ExistentialEquivalenceVerdict,
    ExistentialOutcome,
    ExistentialSymmetryVerdict,
    ExistentialVerdict,
    GeneratorCheck,
    ProfileLogEntry,
    ProfileSource,
    SimulationVerdict,
    SymmetryVerdict,
)
from src.models.words import ParikhPair, ParikhVector, RoundSpec

__all__ = [
    # Automata
    "Alphabet",
    "ProductAlphabet",
    "Nfa",
    "Transducer",
    "RedundantProduct",
    "TypeMatrix",
    # Words
    "RoundSpec",
    "ParikhVector",
    "ParikhPair",
    # Verdicts
    "Counterexample",
    "ContainmentStats",
    "SimulationVerdict",
    "EquivalenceVerdict",
    "ExistentialOutcome",
    "ProfileSource",
    "ProfileLogEntry",
    "ExistentialVerdict",
    "ExistentialEquivalenceVerdict",
    "GeneratorCheck",
    "SymmetryVerdict",
    "ExistentialSymmetryVerdict",
    # Symmetry
    "Permutation",
    "ProcessAlphabet",
    # Instances
    "Provenance",
    "Relation",
    "ExpectedVerdict",
    "InstanceBundle",
    "BundleManifest",
    # Oracles
    "OracleBudget",
    "OracleVerdict",
    # Report
    "ExitCode",
    "ReportOutcome",
    "Report",
]
