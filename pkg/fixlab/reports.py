"""Reports produced by the axiom checkers."""

import logging

import pydantic
from typing_extensions import final

from fixlab import models
from fixlab.category import Morphism


logger = logging.getLogger(__name__)


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class Violation:
    """A single failed equation together with the morphisms that break it."""

    law: str
    witnesses: pydantic.SkipValidation[tuple[Morphism, ...]]
    detail: str = ""

    def to_dict(self) -> dict[str, object]:
        """Return a JSON-compatible rendering."""
        return {
            "law": self.law,
            "witnesses": [m.describe() for m in self.witnesses],
            "detail": self.detail,
        }


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class Report:
    """The outcome of an exhaustive check."""

    check: str
    checked: int
    violations: pydantic.SkipValidation[tuple[Violation, ...]] = ()

    @property
    def passed(self) -> bool:
        """Whether no equation failed."""
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def laws(self) -> set[str]:
        """Return the names of the violated laws."""
        return {violation.law for violation in self.violations}

    def to_dict(self) -> dict[str, object]:
        """Return a JSON-compatible rendering."""
        return {
            "check": self.check,
            "passed": self.passed,
            "checked": self.checked,
            "violations": [v.to_dict() for v in self.violations],
        }


class ReportBuilder:
    """Collects equation outcomes into a `Report`."""

    def __init__(self, check: str) -> None:
        self.check = check
        self.checked = 0
        self.violations: list[Violation] = []

    def record(
        self, law: str, holds: bool, *witnesses: Morphism, detail: str = ""
    ) -> bool:
        """Record one equation and return whether it held."""
        self.checked += 1

        if not holds:
            logger.debug("%s: %s fails at %r", self.check, law, witnesses)
            self.violations.append(Violation(law, witnesses, detail))

        return holds

    def build(self) -> Report:
        """Freeze the collected outcomes."""
        return Report(self.check, self.checked, tuple(self.violations))
