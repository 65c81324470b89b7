"""
Instance bundle models for roundsim

A bundle is a pair of transducers with a restricting language and the
verdicts the generator expects for it.
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.errors import AutomatonInputError
from src.models.automata import Nfa, Transducer


class Provenance(str, Enum):
    """Origin of an expected verdict."""

    PUBLISHED = "published"  # stated for the published construction
    DERIVED = "derived"  # computed by an oracle or by exhaustive evaluation


class Relation(str, Enum):
    """Relation an expected verdict is about."""

    SIMULATES = "simulates"  # t1 simulated by t2
    EQUIVALENT = "equivalent"
    EXISTENTIAL = "existential"  # first k at which t1 is simulated by t2
    EXISTENTIAL_EQUIVALENT = "existential_equivalent"


class ExpectedVerdict(BaseModel):
    """A verdict the bundle is known to satisfy."""

    relation: Relation
    k: int | None = Field(default=None, ge=1)
    holds: bool
    provenance: Provenance
    note: str = ""


class InstanceBundle(BaseModel):
    """Two transducers over shared alphabets and a restricting language over the inputs."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    name: str
    t1: Transducer
    t2: Transducer
    lambda_: Nfa = Field(..., alias="lambda")
    expected: tuple[ExpectedVerdict, ...] = ()

    @model_validator(mode="after")
    def _check_alphabets(self) -> "InstanceBundle":
        if self.t1.input_alphabet != self.t2.input_alphabet:
            raise AutomatonInputError("bundle transducers have different input alphabets")
        if self.t1.output_alphabet != self.t2.output_alphabet:
            raise AutomatonInputError("bundle transducers have different output alphabets")
        if self.lambda_.alphabet != self.t1.input_alphabet:
            raise AutomatonInputError("restricting language is not over the input alphabet")
        return self

    def expected_for(self, relation: Relation) -> list[ExpectedVerdict]:
        return [e for e in self.expected if e.relation is relation]


class BundleManifest(BaseModel):
    """The ``manifest.json`` written next to a bundle's automata files."""

    name: str
    tool_version: str
    files: dict[str, str] = Field(default_factory=dict)  # role -> file name
    expected: list[ExpectedVerdict] = Field(default_factory=list)
