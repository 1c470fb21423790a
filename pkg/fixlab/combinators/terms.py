"""Combinator terms: constants, atoms and application.

Application associates to the left, so `B x y z` is `((B x) y) z`. A
position names a subterm by the path from the root, one letter per step:
`L` for the function part of an application and `R` for its argument.
"""

import functools
from collections.abc import Iterator

import pydantic
from typing_extensions import Final, Literal, TypeAlias, final, override

from fixlab import models


ConstantName: TypeAlias = Literal["S", "K", "I", "B", "C", "W"]
Position: TypeAlias = str


@final
@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class Const:
    """One of the six combinator constants."""

    name: ConstantName

    @override
    def __str__(self) -> str:
        return self.name

    @property
    def size(self) -> int:
        return 1


@final
@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class Atom:
    """An uninterpreted variable; atoms never reduce."""

    name: models.Label

    @override
    def __str__(self) -> str:
        return self.name

    @property
    def size(self) -> int:
        return 1


@final
@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class App:
    """The application `left right`."""

    left: "Term"
    right: "Term"

    @override
    def __str__(self) -> str:
        right = str(self.right)
        if isinstance(self.right, App):
            right = f"({right})"

        return f"{self.left} {right}"

    @functools.cached_property
    def size(self) -> int:
        """Number of nodes, applications included."""
        return 1 + self.left.size + self.right.size

    @functools.cached_property
    def _hash(self) -> int:
        return hash((self.left, self.right))

    @override
    def __hash__(self) -> int:
        return self._hash


Term: TypeAlias = Const | Atom | App

pydantic.dataclasses.rebuild_dataclass(App)


S: Final = Const("S")
K: Final = Const("K")
I: Final = Const("I")
B: Final = Const("B")
C: Final = Const("C")
W: Final = Const("W")


def app(head: Term, *args: Term) -> Term:
    """Apply `head` to `args` from left to right.

    Examples:
        >>> print(app(B, Atom("x"), Atom("y"), Atom("z")))
        B x y z
        >>> print(app(Atom("x"), app(Atom("y"), Atom("z"))))
        x (y z)

    """
    return functools.reduce(App, args, head)


def spine(term: Term, /) -> tuple[Term, list[Term]]:
    """Split a term into its head and the arguments applied to it."""
    args: list[Term] = []

    while isinstance(term, App):
        args.append(term.right)
        term = term.left

    args.reverse()
    return term, args


def subterms(term: Term, /) -> Iterator[tuple[Position, Term]]:
    """Yield every subterm with its position, parents before children."""
    stack: list[tuple[Position, Term]] = [("", term)]

    while stack:
        position, node = stack.pop()
        yield position, node
        if isinstance(node, App):
            stack.append((position + "R", node.right))
            stack.append((position + "L", node.left))


def subterm_at(term: Term, position: Position) -> Term:
    """Return the subterm at `position`.

    Raises:
        ValueError: If the position leaves the term.

    """
    for direction in position:
        if not isinstance(term, App):
            msg = f"Position {position!r} is not in the term"
            raise ValueError(msg)
        term = term.left if direction == "L" else term.right

    return term


def replace_at(term: Term, position: Position, new: Term) -> Term:
    """Return `term` with the subterm at `position` replaced by `new`."""
    ancestors: list[App] = []

    for direction in position:
        if not isinstance(term, App):
            msg = f"Position {position!r} is not in the term"
            raise ValueError(msg)
        ancestors.append(term)
        term = term.left if direction == "L" else term.right

    for parent, direction in zip(
        reversed(ancestors), reversed(position), strict=True
    ):
        new = (
            App(new, parent.right)
            if direction == "L"
            else App(parent.left, new)
        )

    return new


def atoms(term: Term, /) -> frozenset[str]:
    """Return the names of the atoms occurring in a term."""
    return frozenset(
        node.name for _, node in subterms(term) if isinstance(node, Atom)
    )


def constants(term: Term, /) -> frozenset[ConstantName]:
    """Return the constants occurring in a term.

    Examples:
        >>> sorted(constants(app(S, K, K)))
        ['K', 'S']

    """
    return frozenset(
        node.name for _, node in subterms(term) if isinstance(node, Const)
    )


def fresh_atom(term: Term, /, base: str = "x") -> Atom:
    """Return an atom named `base`, primed until it does not occur in `term`.

    Examples:
        >>> fresh_atom(app(Atom("x"), Atom("x'")))
        Atom(name="x''")

    """
    used = atoms(term)
    name = base

    while name in used:
        name += "'"

    return Atom(name)
