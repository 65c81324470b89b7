"""
Exception hierarchy for roundsim.

Input problems derive from ValueError, resource limits from RuntimeError.
"""


class AutomatonInputError(ValueError):
    """Unknown symbol, alphabet mismatch or malformed automaton."""


class NotARoundWordError(AutomatonInputError):
    """A word whose length is not a multiple of the round length."""

    def __init__(self, length: int, k: int):
        self.length = length
        self.k = k
        super().__init__(f"word of length {length} is not a {k}-round word")


class ParseError(AutomatonInputError):
    """Error in one of the line-oriented text formats."""

    def __init__(self, message: str, line_number: int | None = None, source: str | None = None):
        self.line_number = line_number
        self.source = source
        location = ""
        if source:
            location += f"{source}:"
        if line_number is not None:
            location += f"{line_number}:"
        super().__init__(f"{location} {message}".strip() if location else message)


class QuotientCapExceeded(RuntimeError):
    """The Parikh-pair alphabet for a round length exceeds the configured cap."""

    def __init__(self, k: int, size: int, cap: int):
        self.k = k
        self.size = size
        self.cap = cap
        super().__init__(f"quotient alphabet at k={k} has {size} letters (cap {cap})")


class BudgetExceeded(RuntimeError):
    """A brute-force oracle ran past its enumeration budget."""

    def __init__(self, what: str, limit: int):
        self.what = what
        self.limit = limit
        super().__init__(f"{what} exceeded budget of {limit}")


class ReuseMismatchError(RuntimeError):
    """A reused or certified containment answer disagreed with a full recomputation."""
