"""Substructural bases, bracket abstraction and fixed-point combinators."""

from collections.abc import Set as AbstractSet

from typing_extensions import Final, Literal, TypeAlias, final

from fixlab import models
from fixlab.combinators.terms import (
    App,
    Atom,
    B,
    ConstantName,
    I,
    K,
    S,
    Term,
    W,
    app,
    atoms,
    constants,
)


Logic: TypeAlias = Literal[
    "ordered", "FL_c", "linear", "relevance", "unclassified"
]

# smallest first; the first basis containing the constants names the logic
_LOGICS: Final[tuple[tuple[frozenset[str], Logic], ...]] = (
    (frozenset("BI"), "ordered"),
    (frozenset("BW"), "FL_c"),
    (frozenset("BCI"), "linear"),
    (frozenset("BCWI"), "relevance"),
)


@final
@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class Basis:
    """The constants a term uses and the logic whose axioms they match."""

    constants: frozenset[ConstantName]
    logic: Logic

    def to_dict(self) -> dict[str, object]:
        """Return a JSON-compatible rendering."""
        return {"constants": sorted(self.constants), "logic": self.logic}


def classify(used: AbstractSet[str], /) -> Logic:
    """Name the smallest substructural basis containing `used`.

    Examples:
        >>> classify({"B", "W"}), classify({"C", "I"}), classify({"K"})
        ('FL_c', 'linear', 'unclassified')

    """
    for basis, logic in _LOGICS:
        if used <= basis:
            return logic

    return "unclassified"


def basis_of(term: Term, /) -> Basis:
    """Return the constants occurring in `term` and their logic.

    Examples:
        >>> basis_of(statman()).to_dict()
        {'constants': ['B', 'W'], 'logic': 'FL_c'}

    """
    used = constants(term)
    return Basis(used, classify(used))


def statman() -> Term:
    """Return the fixed-point combinator `B (W W) (B W (B B B))`.

    It uses only composition and duplication.
    """
    return app(B, App(W, W), app(B, W, app(B, B, B)))


def bracket_abstract(var: str, term: Term) -> Term:
    """Eliminate the atom `var` from `term` with `S`, `K` and `I`.

    The result `t` satisfies `t x ->* term` for the atom `x` named `var`.

    Examples:
        >>> from fixlab.combinators.parse import parse_term
        >>> print(bracket_abstract("x", parse_term("f (x x)")))
        S (K f) (S I I)

    """
    if term == Atom(var):
        return I
    if var not in atoms(term):
        return App(K, term)

    assert isinstance(term, App)
    return app(
        S, bracket_abstract(var, term.left), bracket_abstract(var, term.right)
    )


def ski_fixed_point() -> Term:
    """Return the `S K I` term abstracted from `λf.(λx.f (x x)) (λx.f (x x))`.

    Examples:
        >>> print(ski_fixed_point())
        S (S (S (K S) (S (K K) I)) (K (S I I))) (S (S (K S) (S (K K) I)) (K (S I I)))

    """  # noqa: E501
    f, x = Atom("f"), Atom("x")
    half = bracket_abstract("x", App(f, App(x, x)))
    return bracket_abstract("f", App(half, half))
