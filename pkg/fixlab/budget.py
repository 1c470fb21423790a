"""Resource limits for enumeration, reduction and search.

This module provides:
- `Budget`: The limits consulted by every enumerating operation.
- `get_current_budget()` and `set_budget()`: Functions to manage the
budget that is currently in effect.

A `Budget` can also be used as a context manager to change the limits
temporarily:

```
>>> from fixlab import Budget, get_current_budget
>>> with Budget(fuel=5):
...     get_current_budget().fuel
5
>>> get_current_budget().fuel
100

```
"""

import contextvars
from types import TracebackType

from typing_extensions import Final, final

from fixlab import constants, models


@final
@models.dataclass(frozen=True, kw_only=True, config=models.DATACLASS_CONFIG)
class Budget:
    """Limits for enumeration, reduction and breadth-first search."""

    enumeration_cap: models.PositiveInt = constants.DEFAULT_ENUMERATION_CAP
    """Largest number of functions `enumerate_functions` will produce."""

    fuel: models.PositiveInt = constants.DEFAULT_FUEL
    """Reduction steps per term (normalization and joinability depth)."""

    width: models.PositiveInt = constants.DEFAULT_WIDTH
    """Largest breadth-first frontier kept during joinability search."""

    term_size_cap: models.PositiveInt = constants.DEFAULT_TERM_SIZE_CAP
    """Terms larger than this (in nodes) are not reduced further."""

    def __enter__(self) -> None:
        object.__setattr__(self, "__original_budget", get_current_budget())
        set_budget(self)

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc_val: BaseException | None,
        exc_tb: TracebackType | None,
    ) -> None:
        del exc_type, exc_val, exc_tb

        original_budget: Budget = object.__getattribute__(
            self, "__original_budget"
        )
        set_budget(original_budget)


DEFAULT_BUDGET: Final = Budget()
"""The budget in effect unless `set_budget()` installs another one."""


_budget: Final = contextvars.ContextVar("budget", default=DEFAULT_BUDGET)


def get_current_budget() -> Budget:
    """Obtain a reference to the current budget."""
    return _budget.get()


def set_budget(budget: Budget, /) -> None:
    """Set the current budget."""
    _budget.set(budget)
