"""
Report models for roundsim

Defines the machine-readable report printed by every CLI command.
"""

from datetime import datetime, timezone
from enum import Enum, IntEnum
from typing import Any

from pydantic import BaseModel, Field


class ExitCode(IntEnum):
    """Process exit codes shared by all commands."""

    HOLDS = 0  # property holds / k found
    REFUTED = 1  # refuted, or not found up to the bound
    USAGE = 2  # usage or input error


class ReportOutcome(str, Enum):
    """Overall outcome of a command."""

    HOLDS = "holds"
    REFUTED = "refuted"
    FOUND = "found"
    NOT_FOUND_UP_TO = "not_found_up_to"
    GENERATED = "generated"
    ERROR = "error"

    @property
    def exit_code(self) -> ExitCode:
        if self in (ReportOutcome.HOLDS, ReportOutcome.FOUND, ReportOutcome.GENERATED):
            return ExitCode.HOLDS
        if self is ReportOutcome.ERROR:
            return ExitCode.USAGE
        return ExitCode.REFUTED


class Report(BaseModel):
    """Result of one CLI invocation."""

    command: list[str] = Field(..., description="Echo of the command line")
    tool_version: str
    outcome: ReportOutcome
    verdicts: dict[str, Any] = Field(default_factory=dict)
    messages: list[str] = Field(default_factory=list)

    # Timing
    started_at: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))
    elapsed_seconds: float = 0.0

    @property
    def exit_code(self) -> ExitCode:
        return self.outcome.exit_code
