"""unittest helpers for code built on the engine."""

from .assertions import AlgebraAssertionsMixin
from .cli_runner import CliRunnerMixin
from .report_scenarios import ReportScenarioMixin

__all__ = [
    "AlgebraAssertionsMixin",
    "CliRunnerMixin",
    "ReportScenarioMixin",
]
