"""
Type profile model for roundsim
"""

from pydantic import BaseModel, ConfigDict, model_validator

from src.core.errors import AutomatonInputError
from src.models.type_matrix import TypeMatrix


class TypeProfile(BaseModel):
    """The set of types of all Parikh pairs of one round length."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: int
    dim: int
    matrices: frozenset[TypeMatrix]

    @model_validator(mode="after")
    def _check_dims(self) -> "TypeProfile":
        if any(m.dim != self.dim for m in self.matrices):
            raise AutomatonInputError(f"profile matrices must all have dimension {self.dim}")
        return self

    def canonical_bytes(self) -> bytes:
        """Sorted concatenation of the members' canonical bytes."""
        return b"".join(sorted(m.canonical_bytes() for m in self.matrices))

    def same_types(self, other: "TypeProfile") -> bool:
        """Set equality, ignoring the round length the profiles were computed for."""
        return self.dim == other.dim and self.matrices == other.matrices

    def __len__(self) -> int:
        return len(self.matrices)
