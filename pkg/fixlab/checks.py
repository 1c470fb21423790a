"""Exhaustive checkers for the magmoidal axioms.

Every checker ranges over the objects listed by the instance (or an explicit
subset) and enumerates their hom-sets, so the cost is governed by the
current `Budget`.
"""

import itertools
import logging
from collections.abc import Iterable, Sequence

from typing_extensions import Literal, TypeAlias, final

from fixlab import kernel, models
from fixlab.category import Magmoid, Morphism, Obj, t_points
from fixlab.reports import Report, ReportBuilder


logger = logging.getLogger(__name__)


@final
@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class LocalScope:
    """Naturality restricted to t-points of a single object."""

    obj: Obj


Scope: TypeAlias = Literal["all"] | LocalScope


def t_and(obj: Obj, /) -> LocalScope:
    """Scope for naturality of `δ` with respect to the t-points of `obj`."""
    return LocalScope(obj)


def all_morphisms(
    C: Magmoid, objects: Iterable[Obj] | None = None
) -> list[Morphism]:
    """Enumerate every morphism between the given (or listed) objects."""
    universe = C.objects if objects is None else tuple(objects)
    return [
        morphism
        for source, target in itertools.product(universe, repeat=2)
        for morphism in C.hom(source, target)
    ]


def composable_pairs(
    morphisms: Sequence[Morphism],
) -> list[tuple[Morphism, Morphism]]:
    """Return every `(g, f)` with `g∘f` defined."""
    return [
        (g, f)
        for f in morphisms
        for g in morphisms
        if g.source == f.target
    ]


def check_hom_closure(
    C: Magmoid, objects: Iterable[Obj] | None = None
) -> Report:
    """Check that identities, composites, products and diagonals are morphisms.

    The hom predicate is a decidable test per variant, so its closure under
    the category operations has to be verified rather than assumed.
    """
    universe = C.objects if objects is None else tuple(objects)
    builder = ReportBuilder("hom closure")
    morphisms = all_morphisms(C, universe)

    def accepted(morphism: Morphism) -> bool:
        return C.accepts(morphism.function, morphism.source, morphism.target)

    for obj in universe:
        identity = C.identity(obj)
        builder.record("identity", accepted(identity), identity)

        if C.has_diagonal(obj):
            delta = C.diagonal(obj)
            builder.record("diagonal", accepted(delta), delta)

    for g, f in composable_pairs(morphisms):
        builder.record("composite", accepted(C.compose(g, f)), g, f)

    for f, g in itertools.product(morphisms, repeat=2):
        builder.record("product", accepted(C.product_map(f, g)), f, g)

    return builder.build()


def check_bifunctoriality(
    C: Magmoid,
    objects: Iterable[Obj] | None = None,
    *,
    strategy: Literal["factored", "literal"] = "factored",
) -> Report:
    """Check that `#` is a functor of two variables.

    The `literal` strategy checks `id#id = id` and
    `(f∘f')#(g∘g') = (f#g)∘(f'#g')` over all composable quadruples. The
    `factored` strategy checks the equivalent conditions of functoriality
    in each variable separately plus the interchange law
    `f#g = (f#id)∘(id#g) = (id#g)∘(f#id)`, which keeps the number of
    equations quadratic instead of quartic.

    Raises:
        SizeLimitExceeded: If the number of equations exceeds the budget.

    """
    universe = C.objects if objects is None else tuple(objects)
    builder = ReportBuilder("bifunctoriality")
    morphisms = all_morphisms(C, universe)
    pairs = composable_pairs(morphisms)

    for x, y in itertools.product(universe, repeat=2):
        lhs = C.product_map(C.identity(x), C.identity(y))
        rhs = C.identity(C.product(x, y))
        builder.record("identity", lhs == rhs, lhs)

    match strategy:
        case "literal":
            kernel.check_size(len(pairs) ** 2)
            for (f, f1), (g, g1) in itertools.product(pairs, repeat=2):
                lhs = C.product_map(C.compose(f, f1), C.compose(g, g1))
                rhs = C.compose(C.product_map(f, g), C.product_map(f1, g1))
                builder.record("composition", lhs == rhs, f, f1, g, g1)
        case "factored":
            kernel.check_size(
                len(morphisms) ** 2 + 2 * len(pairs) * len(universe)
            )
            _check_interchange(C, morphisms, builder)
            _check_partial_functoriality(C, pairs, universe, builder)

    return builder.build()


def _check_interchange(
    C: Magmoid, morphisms: Sequence[Morphism], builder: ReportBuilder
) -> None:
    for f, g in itertools.product(morphisms, repeat=2):
        both = C.product_map(f, g)
        left_first = C.compose(
            C.product_map(f, C.identity(g.target)),
            C.product_map(C.identity(f.source), g),
        )
        right_first = C.compose(
            C.product_map(C.identity(f.target), g),
            C.product_map(f, C.identity(g.source)),
        )
        builder.record("interchange", both == left_first, f, g)
        builder.record("interchange", both == right_first, f, g)


def _check_partial_functoriality(
    C: Magmoid,
    pairs: Sequence[tuple[Morphism, Morphism]],
    universe: Sequence[Obj],
    builder: ReportBuilder,
) -> None:
    for (g, f), obj in itertools.product(pairs, universe):
        identity = C.identity(obj)

        lhs = C.product_map(C.compose(g, f), identity)
        rhs = C.compose(
            C.product_map(g, identity), C.product_map(f, identity)
        )
        builder.record("composition (first variable)", lhs == rhs, g, f)

        lhs = C.product_map(identity, C.compose(g, f))
        rhs = C.compose(
            C.product_map(identity, g), C.product_map(identity, f)
        )
        builder.record("composition (second variable)", lhs == rhs, g, f)


def naturality_square(C: Magmoid, f: Morphism) -> tuple[Morphism, Morphism]:
    """Return both sides of `(f#f)∘δ_X = δ_Y∘f`.

    Raises:
        MissingDiagonal: If `δ` is undefined on the source or target.

    """
    lhs = C.compose(C.product_map(f, f), C.diagonal(f.source))
    rhs = C.compose(C.diagonal(f.target), f)
    return lhs, rhs


def check_diagonal_naturality(C: Magmoid, scope: Scope = "all") -> Report:
    """Check naturality of the diagonals.

    With `scope="all"` every morphism between listed objects is checked.
    With `scope=t_and(A)` only the t-points of `A` are, which is the local
    form of naturality the theorems rely on.

    Raises:
        MissingDiagonal: If `δ` is undefined on an object in scope.

    """
    match scope:
        case "all":
            universe = C.objects
            morphisms = all_morphisms(C)
            builder = ReportBuilder("diagonal naturality")
        case LocalScope(obj=obj):
            universe = (C.t, obj)
            morphisms = t_points(C, obj)
            builder = ReportBuilder(f"diagonal naturality at t -> {obj}")

    for obj in universe:
        C.diagonal(obj)

    for f in morphisms:
        lhs, rhs = naturality_square(C, f)
        builder.record("naturality", lhs == rhs, f)

    return builder.build()


def find_cartesian_projections(
    C: Magmoid, obj: Obj
) -> tuple[Morphism, Morphism] | None:
    """Search `Hom(A#A, A)` for projections that split the diagonal.

    Returns the first pair `(p1, p2)` with `p1∘δ = id = p2∘δ` and both
    natural with respect to every endomorphism `h` of `A`, in the sense
    `p_i∘(h#h) = h∘p_i`. In a cartesian instance the product projections
    qualify; `None` certifies that the product on `A` is not cartesian.

    Raises:
        MissingDiagonal: If `δ` is undefined on `obj`.

    """
    delta = C.diagonal(obj)
    identity = C.identity(obj)
    square = C.product(obj, obj)
    endomorphisms = list(C.hom(obj, obj))

    candidates = [
        p
        for p in C.hom(square, obj)
        if C.compose(p, delta) == identity
        and all(
            C.compose(p, C.product_map(h, h)) == C.compose(h, p)
            for h in endomorphisms
        )
    ]

    for p1, p2 in itertools.product(candidates, repeat=2):
        if p1 != p2 or len(obj.carrier) < 2:  # noqa: PLR2004
            logger.debug("Projections found on %s", obj)
            return p1, p2

    return None
