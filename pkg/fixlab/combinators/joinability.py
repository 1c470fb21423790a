"""Bounded joinability: do two terms reduce to a common term?

Equality of combinator terms is conversion, which is undecidable, so this
module only ever answers "joinable" with a witness or "not within budget".
A negative answer is never claimed.
"""

import logging

import pydantic
from typing_extensions import Literal, TypeAlias, final

from fixlab import budget, models
from fixlab.combinators.reduction import all_reducts
from fixlab.combinators.terms import App, Term, fresh_atom


logger = logging.getLogger(__name__)


Reason: TypeAlias = Literal["fuel", "width", "size", "exhausted"]


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class Joinable:
    """A common reduct with the reduction path from each side to it."""

    common: pydantic.SkipValidation[Term]
    left_path: pydantic.SkipValidation[tuple[Term, ...]]
    right_path: pydantic.SkipValidation[tuple[Term, ...]]

    @property
    def depth(self) -> int:
        """The number of breadth-first rounds needed to meet."""
        return max(len(self.left_path), len(self.right_path)) - 1

    def to_dict(self) -> dict[str, object]:
        """Return a JSON-compatible rendering."""
        return {
            "verdict": "joinable",
            "common": str(self.common),
            "depth": self.depth,
            "left_path": [str(t) for t in self.left_path],
            "right_path": [str(t) for t in self.right_path],
        }


@final
@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class NotWithinBudget:
    """The search stopped without finding a common reduct.

    This is inconclusive. `reason` names the limit that was hit; it is
    `exhausted` when both sides ran out of reducts without meeting.
    """

    reason: Reason
    explored: int
    """How many distinct terms were visited on both sides."""

    def to_dict(self) -> dict[str, object]:
        """Return a JSON-compatible rendering."""
        return {
            "verdict": "not_within_budget",
            "reason": self.reason,
            "explored": self.explored,
        }


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class Verified:
    """`f x` and `x (f x)` were shown joinable for a fresh atom `x`."""

    term: pydantic.SkipValidation[Term]
    atom: str
    witness: pydantic.SkipValidation[Joinable]

    def to_dict(self) -> dict[str, object]:
        """Return a JSON-compatible rendering."""
        return {
            "verdict": "verified",
            "term": str(self.term),
            "atom": self.atom,
            "witness": self.witness.to_dict(),
        }


class _Side:
    """One breadth-first search, remembering how each term was reached."""

    def __init__(self, start: Term) -> None:
        self.parents: dict[Term, Term | None] = {start: None}
        self.frontier: list[Term] = [start]
        self.truncated = False
        self.oversized = False

    def path_to(self, term: Term) -> tuple[Term, ...]:
        path: list[Term] = []
        node: Term | None = term

        while node is not None:
            path.append(node)
            node = self.parents[node]

        path.reverse()
        return tuple(path)

    def expand(
        self, other: "_Side", *, width: int, size_cap: int
    ) -> Term | None:
        """Advance one round; return a term the other side has seen."""
        frontier: list[Term] = []

        for term in self.frontier:
            if term.size > size_cap:
                self.oversized = True
                continue

            for reduct in all_reducts(term):
                result = reduct.result
                if result in self.parents:
                    continue
                if len(frontier) >= width:
                    self.truncated = True
                    break

                self.parents[result] = term
                frontier.append(result)
                if result in other.parents:
                    self.frontier = frontier
                    return result

        self.frontier = frontier
        return None


def joinable(
    first: Term,
    second: Term,
    *,
    fuel: int | None = None,
    width: int | None = None,
    size_cap: int | None = None,
) -> Joinable | NotWithinBudget:
    """Search all one-step reducts of both terms for a common reduct.

    Each side is explored breadth-first for at most `fuel` rounds. A round
    keeps at most `width` new terms, in leftmost-outermost order, and terms
    larger than `size_cap` nodes are not expanded. Limits default to the
    current budget.

    Examples:
        >>> from fixlab.combinators.parse import parse_term
        >>> result = joinable(parse_term("K x y"), parse_term("x"))
        >>> str(result.common), result.depth
        ('x', 1)

    """
    limits = budget.get_current_budget()
    fuel = limits.fuel if fuel is None else fuel
    width = limits.width if width is None else width
    size_cap = limits.term_size_cap if size_cap is None else size_cap

    left, right = _Side(first), _Side(second)
    if first == second:
        return Joinable(first, (first,), (second,))

    for depth in range(1, fuel + 1):
        for side, other in ((left, right), (right, left)):
            common = side.expand(other, width=width, size_cap=size_cap)
            if common is not None:
                logger.debug("Joined at depth %d", depth)
                return Joinable(
                    common, left.path_to(common), right.path_to(common)
                )

        if not left.frontier and not right.frontier:
            break

    explored = len(left.parents) + len(right.parents)
    if left.oversized or right.oversized:
        reason: Reason = "size"
    elif left.truncated or right.truncated:
        reason = "width"
    elif left.frontier or right.frontier:
        reason = "fuel"
    else:
        reason = "exhausted"

    logger.debug("No common reduct among %d terms: %s", explored, reason)
    return NotWithinBudget(reason, explored)


def check_fpc(
    term: Term,
    /,
    *,
    fuel: int | None = None,
    width: int | None = None,
) -> Verified | NotWithinBudget:
    """Check that `term` behaves as a fixed-point combinator.

    With `x` an atom not occurring in `term`, this checks that `term x` and
    `x (term x)` are joinable.

    Examples:
        >>> from fixlab.combinators.parse import parse_term
        >>> check_fpc(parse_term("K")).reason
        'exhausted'

    """
    x = fresh_atom(term)
    applied = App(term, x)
    result = joinable(applied, App(x, applied), fuel=fuel, width=width)

    if isinstance(result, NotWithinBudget):
        return result

    return Verified(term, x.name, result)
