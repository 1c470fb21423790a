"""One-step contraction and normalization of combinator terms.

The six contraction rules are

    S x y z -> x z (y z)      B x y z -> x (y z)      C x y z -> x z y
    K x y   -> x              W x y   -> x y y        I x     -> x

and a node is a redex exactly when its head is a constant applied to as
many arguments as its arity. Under-applied constants are normal.
"""

import logging
from collections.abc import Iterator

import pydantic
from typing_extensions import Literal, TypeAlias, final

from fixlab import budget, constants, models
from fixlab.combinators.terms import (
    App,
    Const,
    ConstantName,
    Position,
    Term,
    app,
    replace_at,
    spine,
    subterm_at,
)


logger = logging.getLogger(__name__)


Status: TypeAlias = Literal["normal_form", "fuel_exhausted", "size_limit"]


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class Step:
    """A single contraction and the term it produces."""

    position: Position
    rule: ConstantName
    result: pydantic.SkipValidation[Term]


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class NormalForm:
    """The term has no redex."""

    term: pydantic.SkipValidation[Term]


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class ReductionTrace:
    """The steps taken by `normalize` and why it stopped."""

    start: pydantic.SkipValidation[Term]
    steps: pydantic.SkipValidation[tuple[Step, ...]]
    status: Status

    @property
    def result(self) -> Term:
        """The last term reached."""
        return self.steps[-1].result if self.steps else self.start

    def to_dict(self) -> dict[str, object]:
        """Return a JSON-compatible rendering."""
        return {
            "start": str(self.start),
            "status": self.status,
            "result": str(self.result),
            "steps": [
                {
                    "position": step.position,
                    "rule": step.rule,
                    "result": str(step.result),
                }
                for step in self.steps
            ],
        }


def contract(term: Term, /) -> tuple[ConstantName, Term] | None:
    """Contract `term` itself if it is a redex.

    Examples:
        >>> from fixlab.combinators.parse import parse_term
        >>> rule, result = contract(parse_term("W x y"))
        >>> rule, str(result)
        ('W', 'x y y')
        >>> contract(parse_term("B x y")) is None
        True

    """
    head, args = spine(term)

    if (
        not isinstance(head, Const)
        or len(args) != constants.ARITIES[head.name]
    ):
        return None

    match head.name, args:
        case "S", [x, y, z]:
            result = app(x, z, App(y, z))
        case "K", [x, _]:
            result = x
        case "I", [x]:
            result = x
        case "B", [x, y, z]:
            result = App(x, App(y, z))
        case "C", [x, y, z]:
            result = app(x, z, y)
        case "W", [x, y]:
            result = app(x, y, y)
        case _:
            return None

    return head.name, result


def redexes(
    term: Term,
    /,
    strategy: constants.Strategy = "leftmost-outermost",
) -> Iterator[Position]:
    """Yield redex positions in the order a strategy prefers them.

    Leftmost-outermost visits a node before its function part, and that
    before its argument. Rightmost-innermost is the mirror image: argument,
    then function part, then the node itself.
    """
    outermost = strategy == "leftmost-outermost"
    stack: list[tuple[Position, Term, bool]] = [("", term, False)]

    while stack:
        position, node, expanded = stack.pop()

        if expanded or not isinstance(node, App):
            if contract(node) is not None:
                yield position
            continue

        if outermost:
            if contract(node) is not None:
                yield position
            stack.append((position + "R", node.right, False))
            stack.append((position + "L", node.left, False))
        else:
            stack.append((position, node, True))
            stack.append((position + "L", node.left, False))
            stack.append((position + "R", node.right, False))


def _step_at(term: Term, position: Position) -> Step:
    contracted = contract(subterm_at(term, position))
    if contracted is None:
        msg = f"No redex at position {position!r}"
        raise ValueError(msg)
    rule, result = contracted
    return Step(position, rule, replace_at(term, position, result))


def step(
    term: Term,
    /,
    strategy: constants.Strategy = "leftmost-outermost",
) -> Step | NormalForm:
    """Contract the redex the strategy prefers.

    Examples:
        >>> from fixlab.combinators.parse import parse_term
        >>> print(step(parse_term("B x y z")).result)
        x (y z)
        >>> step(parse_term("x"))
        NormalForm(term=Atom(name='x'))

    """
    for position in redexes(term, strategy):
        return _step_at(term, position)

    return NormalForm(term)


def all_reducts(term: Term, /) -> list[Step]:
    """Return every one-step reduct, in leftmost-outermost order."""
    return [_step_at(term, position) for position in redexes(term)]


def normalize(
    term: Term,
    /,
    fuel: int | None = None,
    *,
    strategy: constants.Strategy = "leftmost-outermost",
    size_cap: int | None = None,
) -> ReductionTrace:
    """Contract repeatedly until a normal form, or until fuel runs out.

    Terms larger than `size_cap` nodes are not reduced further. Both limits
    default to the current budget.

    Raises:
        ValueError: If `fuel` is negative.

    Examples:
        >>> from fixlab.combinators.parse import parse_term
        >>> trace = normalize(parse_term("I I I"), 10)
        >>> str(trace.result), trace.status, len(trace.steps)
        ('I', 'normal_form', 2)

    """
    limits = budget.get_current_budget()
    fuel = limits.fuel if fuel is None else fuel
    size_cap = limits.term_size_cap if size_cap is None else size_cap

    if fuel < 0:
        msg = f"Fuel must not be negative, got {fuel}"
        raise ValueError(msg)

    steps: list[Step] = []
    current = term
    status: Status = "fuel_exhausted"

    while True:
        if current.size > size_cap:
            status = "size_limit"
            break

        outcome = step(current, strategy)
        if isinstance(outcome, NormalForm):
            status = "normal_form"
            break
        if len(steps) == fuel:
            break

        steps.append(outcome)
        current = outcome.result

    logger.debug("Stopped after %d steps: %s", len(steps), status)
    return ReductionTrace(term, tuple(steps), status)
