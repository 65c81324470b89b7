"""
CLI dependencies

Manages the singleton instances the commands share.
"""

from src.config.settings import get_settings
from src.core.orchestrator import RoundCheckOrchestrator
from src.core.report_generator import ReportGenerator

# ============================================================================
# SINGLETON INSTANCES
# ============================================================================

_orchestrator: RoundCheckOrchestrator | None = None
_report_generator: ReportGenerator | None = None


def configure_orchestrator(
    *,
    antichain: bool | None = None,
    quotient_cap: int | None = None,
    verify_reuse: bool | None = None,
) -> RoundCheckOrchestrator:
    """Replace the orchestrator with one using per-invocation overrides."""
    global _orchestrator
    _orchestrator = RoundCheckOrchestrator(
        get_settings(),
        antichain=antichain,
        quotient_cap=quotient_cap,
        verify_reuse=verify_reuse,
    )
    return _orchestrator


def get_orchestrator() -> RoundCheckOrchestrator:
    global _orchestrator

    if _orchestrator is None:
        _orchestrator = RoundCheckOrchestrator(get_settings())

    return _orchestrator


def get_report_generator() -> ReportGenerator:
    global _report_generator

    if _report_generator is None:
        _report_generator = ReportGenerator(get_settings())

    return _report_generator


def reset() -> None:
    """Drop the singletons (tests change settings between invocations)."""
    global _orchestrator, _report_generator
    _orchestrator = None
    _report_generator = None
