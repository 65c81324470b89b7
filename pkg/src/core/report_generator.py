"""
Report Generator for roundsim

Turns verdicts into the Report printed by the CLI:
- overall outcome and exit code
- serialized verdicts
- human-readable messages (counterexamples, the existential progress log)
"""

import logging
import time
from datetime import datetime, timedelta, timezone

from src.config.settings import Settings, get_settings
from src.models.instances import BundleManifest
from src.models.report import Report, ReportOutcome
from src.models.verdicts import (
    Counterexample,
    EquivalenceVerdict,
    ExistentialEquivalenceVerdict,
    ExistentialSymmetryVerdict,
    ExistentialVerdict,
    ProfileLogEntry,
    ProfileSource,
    SimulationVerdict,
    SymmetryVerdict,
)

logger = logging.getLogger(__name__)


def describe_counterexample(cex: Counterexample) -> str:
    x = " ".join(cex.x) or "ε"
    y = " ".join(cex.y) or "ε"
    return f"counterexample: x = {x}, y = {y} ({cex.rounds} rounds)"


def describe_log_entry(entry: ProfileLogEntry) -> str:
    """One progress line of the existential search."""
    if entry.source is ProfileSource.SKIPPED:
        return f"k={entry.k}: skipped, quotient alphabet of {entry.quotient_letters} letters"
    origin = f" from k={entry.reused_from}" if entry.reused_from is not None else ""
    verified = ", verified" if entry.reuse_verified else ""
    return (
        f"k={entry.k}: profile size {entry.profile_size}, {entry.source.value}{origin}{verified}, "
        f"answer {'holds' if entry.answer else 'fails'}, {entry.elapsed_ms:.1f} ms"
    )


class ReportGenerator:
    """
    Builds reports for every command.

    Each ``*_report`` method takes the echoed command line and the
    ``time.perf_counter()`` value taken when the command started.
    """

    def __init__(self, settings: Settings | None = None):
        self.settings = settings or get_settings()

    def _report(
        self,
        command: list[str],
        started: float,
        outcome: ReportOutcome,
        verdicts: dict,
        messages: list[str],
    ) -> Report:
        elapsed = time.perf_counter() - started
        report = Report(
            command=list(command),
            tool_version=self.settings.app_version,
            outcome=outcome,
            verdicts=verdicts,
            messages=messages,
            started_at=datetime.now(timezone.utc) - timedelta(seconds=elapsed),
            elapsed_seconds=elapsed,
        )
        logger.info(f"{' '.join(command[:1]) or 'command'}: {outcome.value}")
        return report

    def simulation_report(
        self, command: list[str], started: float, verdict: SimulationVerdict
    ) -> Report:
        messages = []
        if verdict.counterexample is not None:
            messages.append(describe_counterexample(verdict.counterexample))
        if verdict.stats.vacuous:
            messages.append("left-hand side accepts no non-empty round word")
        outcome = ReportOutcome.HOLDS if verdict.holds else ReportOutcome.REFUTED
        return self._report(
            command, started, outcome, {"simulation": verdict.model_dump(mode="json")}, messages
        )

    def equivalence_report(
        self, command: list[str], started: float, verdict: EquivalenceVerdict
    ) -> Report:
        messages = []
        for name, direction in (("forward", verdict.forward), ("backward", verdict.backward)):
            if direction.counterexample is not None:
                messages.append(f"{name} {describe_counterexample(direction.counterexample)}")
        outcome = ReportOutcome.HOLDS if verdict.equivalent else ReportOutcome.REFUTED
        return self._report(
            command,
            started,
            outcome,
            {
                "forward": verdict.forward.model_dump(mode="json"),
                "backward": verdict.backward.model_dump(mode="json"),
                "equivalent": verdict.equivalent,
            },
            messages,
        )

    def existential_report(
        self, command: list[str], started: float, verdict: ExistentialVerdict
    ) -> Report:
        messages = [describe_log_entry(entry) for entry in verdict.profile_log]
        if verdict.reuse_count:
            messages.append(
                f"{verdict.reuse_count} of {len(verdict.profile_log)} "
                "round lengths reused an earlier answer"
            )
        if verdict.found:
            messages.append(f"found k={verdict.k}; every multiple of {verdict.k} also holds")
            outcome = ReportOutcome.FOUND
        else:
            messages.append(f"no k up to {verdict.k_max}; this is a bounded answer")
            outcome = ReportOutcome.NOT_FOUND_UP_TO
        return self._report(
            command, started, outcome, {"existential": verdict.model_dump(mode="json")}, messages
        )

    def existential_equivalence_report(
        self, command: list[str], started: float, verdict: ExistentialEquivalenceVerdict
    ) -> Report:
        messages = [f"forward {describe_log_entry(e)}" for e in verdict.forward.profile_log]
        messages += [f"backward {describe_log_entry(e)}" for e in verdict.backward.profile_log]
        if verdict.note:
            messages.append(verdict.note)
        outcome = ReportOutcome.FOUND if verdict.equivalent else ReportOutcome.NOT_FOUND_UP_TO
        return self._report(
            command,
            started,
            outcome,
            {"existential_equivalence": verdict.model_dump(mode="json")},
            messages,
        )

    def symmetry_report(
        self, command: list[str], started: float, verdict: SymmetryVerdict
    ) -> Report:
        messages = []
        for check in verdict.checks:
            state = "holds" if check.verdict.holds else "fails"
            messages.append(f"permutation {check.permutation}: {state}")
            if check.verdict.counterexample is not None:
                messages.append(describe_counterexample(check.verdict.counterexample))
        outcome = ReportOutcome.HOLDS if verdict.symmetric else ReportOutcome.REFUTED
        return self._report(
            command, started, outcome, {"symmetry": verdict.model_dump(mode="json")}, messages
        )

    def existential_symmetry_report(
        self, command: list[str], started: float, verdict: ExistentialSymmetryVerdict
    ) -> Report:
        messages = []
        for name, search in verdict.per_generator.items():
            first = f"found k={search.k}" if search.found else f"none up to {search.k_max}"
            messages.append(f"permutation {name}: {first}")
        if verdict.candidate is not None:
            messages.append(f"common round length {verdict.candidate}")
        outcome = ReportOutcome.FOUND if verdict.found else ReportOutcome.NOT_FOUND_UP_TO
        return self._report(
            command,
            started,
            outcome,
            {"existential_symmetry": verdict.model_dump(mode="json")},
            messages,
        )

    def generation_report(
        self, command: list[str], started: float, manifest: BundleManifest, directory: str
    ) -> Report:
        messages = [f"wrote {manifest.name} to {directory}"]
        messages += [
            f"expected {e.relation.value} k={e.k} holds={e.holds} [{e.provenance.value}]"
            for e in manifest.expected
        ]
        return self._report(
            command,
            started,
            ReportOutcome.GENERATED,
            {"manifest": manifest.model_dump(mode="json"), "directory": directory},
            messages,
        )

    def error_report(self, command: list[str], started: float, error: Exception) -> Report:
        return self._report(
            command,
            started,
            ReportOutcome.ERROR,
            {"error": type(error).__name__},
            [str(error)],
        )
