"""
Boolean transition matrices for roundsim.

A TypeMatrix is the reachability relation of a letter, word or Parikh pair
over the states of a host automaton. Rows are packed into Python ints:
bit j of ``rows[i]`` is set iff state j is reachable from state i.
"""

from collections.abc import Iterable, Iterator

import numpy as np


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class TypeMatrix:
    """
    Square Boolean matrix, an element of the transition monoid of an automaton.

    Instances are immutable and hashable; equality is entrywise.
    """

    __slots__ = ("dim", "rows", "_hash")

    def __init__(self, dim: int, rows: Iterable[int]):
        rows = tuple(rows)
        if len(rows) != dim:
            raise ValueError(f"expected {dim} rows, got {len(rows)}")
        limit = 1 << dim
        for row in rows:
            if row < 0 or row >= limit:
                raise ValueError(f"row {row:#x} does not fit a {dim}-state matrix")
        self.dim = dim
        self.rows = rows
        self._hash = hash((dim, rows))

    # =========================================================================
    # Constructors
    # =========================================================================

    @classmethod
    def identity(cls, dim: int) -> "TypeMatrix":
        return cls(dim, (1 << i for i in range(dim)))

    @classmethod
    def zero(cls, dim: int) -> "TypeMatrix":
        return cls(dim, (0,) * dim)

    @classmethod
    def from_array(cls, array: np.ndarray) -> "TypeMatrix":
        """Build a matrix from a square 0/1 numpy array."""
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValueError(f"expected a square array, got shape {array.shape}")
        dim = array.shape[0]
        rows = []
        for i in range(dim):
            row = 0
            for j in np.flatnonzero(array[i]):
                row |= 1 << int(j)
            rows.append(row)
        return cls(dim, rows)

    # =========================================================================
    # Algebra
    # =========================================================================

    def __matmul__(self, other: "TypeMatrix") -> "TypeMatrix":
        """Boolean product: row i of the result is the OR of other's rows selected by row i."""
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        out = []
        other_rows = other.rows
        for row in self.rows:
            acc = 0
            while row:
                low = row & -row
                acc |= other_rows[low.bit_length() - 1]
                row ^= low
            out.append(acc)
        return TypeMatrix(self.dim, out)

    def __or__(self, other: "TypeMatrix") -> "TypeMatrix":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return TypeMatrix(self.dim, (a | b for a, b in zip(self.rows, other.rows)))

    def post(self, states: int) -> int:
        """Image of a state set (bitmask) under the relation."""
        acc = 0
        rows = self.rows
        while states:
            low = states & -states
            acc |= rows[low.bit_length() - 1]
            states ^= low
        return acc

    def __getitem__(self, index: tuple[int, int]) -> bool:
        i, j = index
        return bool(self.rows[i] >> j & 1)

    # =========================================================================
    # Serialization
    # =========================================================================

    def to_array(self) -> np.ndarray:
        array = np.zeros((self.dim, self.dim), dtype=np.uint8)
        for i, row in enumerate(self.rows):
            for j in iter_bits(row):
                array[i, j] = 1
        return array

    def canonical_bytes(self) -> bytes:
        """Dimension header followed by the row-major bit-packed matrix."""
        header = self.dim.to_bytes(4, "big")
        return header + np.packbits(self.to_array(), axis=None).tobytes()

    def hex(self) -> str:
        return self.canonical_bytes().hex()

    # =========================================================================
    # Dunder plumbing
    # =========================================================================

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TypeMatrix):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ";".join(format(row, f"0{self.dim}b")[::-1] for row in self.rows)
        return f"TypeMatrix({self.dim}, [{body}])"
