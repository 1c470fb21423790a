"""Run one command under a budget and map its outcome to an exit code."""

import enum
import functools
import logging
import warnings
from collections.abc import Callable

import pydantic
from typing_extensions import Final, Literal, TypeAlias, final

from fixlab import budget, errors, models
from fixlab.cli.render import OutputFormat, render


logger = logging.getLogger(__name__)


Status: TypeAlias = Literal["verified", "failed", "inconclusive"]


class ExitCode(enum.IntEnum):
    """Process exit codes."""

    VERIFIED = 0
    FAILED = 1
    INCONCLUSIVE = 2
    INPUT_ERROR = 3


_EXIT_CODES: Final[dict[Status, ExitCode]] = {
    "verified": ExitCode.VERIFIED,
    "failed": ExitCode.FAILED,
    "inconclusive": ExitCode.INCONCLUSIVE,
}

_INPUT_ERRORS: Final = (
    errors.InputError,
    errors.InvalidSpec,
    errors.NotAMorphism,
    errors.NotNatural,
    errors.ObjectExpressionError,
    errors.TermSyntaxError,
    errors.ForeignElement,
    errors.MissingAssignment,
    errors.CompositionMismatch,
    ValueError,
)
"""Errors caused by the command's input rather than by a failed check."""


class RunConfig(models.BaseModel):
    """Everything a command needs besides its own arguments."""

    command: str = ""
    theorem: str | None = None
    """The result the command instantiates, named in its report."""
    inputs: list[str] = []
    enumeration_cap: models.PositiveInt | None = None
    fuel: models.PositiveInt | None = None
    width: models.PositiveInt | None = None
    output_format: OutputFormat = "text"
    probe_set: str = "all"
    """`all`, or a comma-separated list of object expressions."""

    def make_budget(self) -> budget.Budget:
        """Return the default budget with the configured overrides."""
        overrides = {
            "enumeration_cap": self.enumeration_cap,
            "fuel": self.fuel,
            "width": self.width,
        }
        return budget.Budget(
            **{k: v for k, v in overrides.items() if v is not None}
        )


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class Outcome:
    """What a command found, before rendering."""

    status: Status
    payload: pydantic.SkipValidation[dict[str, object]]


def _error_payload(error: Exception) -> dict[str, object]:
    return {"error": type(error).__name__, "message": str(error)}


def run(
    config: RunConfig, action: Callable[[], Outcome]
) -> tuple[ExitCode, str]:
    """Run `action` under the configured budget and render its outcome.

    Input errors exit with 3, exhausted budgets with 2, and any other
    package error (a failed hypothesis, a missing structure) with 1. Warnings
    are collected into the report instead of being printed.
    """
    report = functools.partial(
        render,
        config.command,
        fmt=config.output_format,
        theorem=config.theorem,
    )
    logger.debug("Running %r on %r", config.command, config.inputs)

    with (
        warnings.catch_warnings(record=True) as caught,
        config.make_budget(),
    ):
        warnings.simplefilter("always", errors.VacuityWarning)

        try:
            outcome = action()
        except _INPUT_ERRORS as e:
            return ExitCode.INPUT_ERROR, report(
                "input error", _error_payload(e)
            )
        except errors.SizeLimitExceeded as e:
            return ExitCode.INCONCLUSIVE, report(
                "inconclusive", _error_payload(e)
            )
        except errors.FixlabError as e:
            return ExitCode.FAILED, report("failed", _error_payload(e))

    payload = dict(outcome.payload)
    if caught:
        payload["warnings"] = sorted({str(w.message) for w in caught})

    return _EXIT_CODES[outcome.status], report(outcome.status, payload)
