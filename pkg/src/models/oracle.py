"""
Oracle budget and result models for roundsim
"""

from pydantic import BaseModel, Field, PositiveInt


class OracleBudget(BaseModel):
    """Bounds for brute-force enumeration; exceeding one raises BudgetExceeded."""

    max_rounds: PositiveInt = 2
    max_word_length: PositiveInt = 12
    max_enumerations: PositiveInt = 200_000


class OracleVerdict(BaseModel):
    """Definition-level simulation answer over the bounded fragment."""

    holds: bool
    k: int
    witness: list[str] | None = Field(default=None, description="Failing input word")
    inputs_checked: int = 0
    enumerations: int = 0
