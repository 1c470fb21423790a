"""Diagonal arguments and fixed-point theorems, constructively.

Every operation builds the morphism its proof constructs, checks the
hypotheses on the finite instance instead of trusting them, and verifies
the conclusion under strict equality. Reports also carry the brute-force
list of σ-fixed t-points, so a conclusion can be compared with the oracle.
"""

import itertools
import logging
import warnings

import more_itertools
import pydantic
from typing_extensions import Literal, TypeAlias, final

from fixlab import errors, kernel, models
from fixlab.category import (
    Magmoid,
    Morphism,
    Obj,
    fixed_t_points,
    is_t_free,
    t_points,
)
from fixlab.checks import all_morphisms, naturality_square
from fixlab.reports import Report, ReportBuilder
from fixlab.utils import iterutils


logger = logging.getLogger(__name__)


Construction: TypeAlias = Literal[
    "fixed_point", "fixed_point_section", "fixed_point_regular"
]


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class ConsumedFact:
    """An instance of naturality (or a similar law) a proof relies on."""

    name: str
    holds: bool

    def to_dict(self) -> dict[str, object]:
        """Return a JSON-compatible rendering."""
        return {"name": self.name, "holds": self.holds}


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class DiagonalWitness:
    """The point `b` chosen for `a`, and the two composites that differ."""

    a: pydantic.SkipValidation[Morphism]
    b: pydantic.SkipValidation[Morphism]
    diagonal: pydantic.SkipValidation[Morphism]
    """`f∘b`."""
    parametrised: pydantic.SkipValidation[Morphism]
    """`F∘(a#b)∘δ_t`."""

    @property
    def differs(self) -> bool:
        """Whether the two composites are different."""
        return self.diagonal != self.parametrised

    def to_dict(self) -> dict[str, object]:
        """Return a JSON-compatible rendering."""
        return {
            "a": self.a.describe(),
            "b": self.b.describe(),
            "f∘b": self.diagonal.describe(),
            "F∘(a#b)∘δ_t": self.parametrised.describe(),
            "differs": self.differs,
        }


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class DiagonalReport:
    """A morphism `f` missed by an incomplete parametrisation `F`."""

    f: pydantic.SkipValidation[Morphism]
    witnesses: pydantic.SkipValidation[tuple[DiagonalWitness, ...]]
    consumed: pydantic.SkipValidation[tuple[ConsumedFact, ...]] = ()
    vacuous: bool = False

    @property
    def verified(self) -> bool:
        """Whether every witnessed inequality holds."""
        return all(w.differs for w in self.witnesses)

    def to_dict(self) -> dict[str, object]:
        """Return a JSON-compatible rendering."""
        return {
            "f": self.f.describe(),
            "verified": self.verified,
            "vacuous": self.vacuous,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "consumed": [fact.to_dict() for fact in self.consumed],
        }


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class FixedPointReport:
    """A constructed t-point `c` and whether `σ∘c = c`."""

    construction: Construction
    c: pydantic.SkipValidation[Morphism]
    hypothesis_ok: bool
    conclusion_ok: bool
    a0: pydantic.SkipValidation[Morphism | None] = None
    lift: pydantic.SkipValidation[Morphism | None] = None
    """The lift `b_a` of `a` in the point-surjective variant."""
    oracle: pydantic.SkipValidation[tuple[Morphism, ...]] = ()
    """Every σ-fixed t-point, by brute force."""
    consumed: pydantic.SkipValidation[tuple[ConsumedFact, ...]] = ()

    @property
    def in_oracle(self) -> bool:
        """Whether `c` appears in the brute-force list of fixed points."""
        return self.c in self.oracle

    def to_dict(self) -> dict[str, object]:
        """Return a JSON-compatible rendering."""
        return {
            "construction": self.construction,
            "a0": None if self.a0 is None else self.a0.describe(),
            "lift": None if self.lift is None else self.lift.describe(),
            "c": self.c.describe(),
            "hypothesis_ok": self.hypothesis_ok,
            "conclusion_ok": self.conclusion_ok,
            "oracle": [x.describe() for x in self.oracle],
            "consumed": [fact.to_dict() for fact in self.consumed],
        }


@final
@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class NotFound:
    """No t-point passed the hypothesis."""

    candidates: int
    """How many t-points were tried."""

    @property
    def vacuous(self) -> bool:
        """Whether there was nothing to try."""
        return self.candidates == 0

    def to_dict(self) -> dict[str, object]:
        """Return a JSON-compatible rendering."""
        return {"found": False, "candidates": self.candidates}


def _require(f: Morphism, source: Obj, target: Obj, what: str) -> None:
    if (f.source, f.target) != (source, target):
        msg = f"{what} must be a morphism {source} -> {target}, got {f!r}"
        raise ValueError(msg)


def _require_t_free(C: Magmoid, sigma: Morphism) -> None:
    freeness = is_t_free(C, sigma)

    if not freeness:
        raise errors.NotTFree(freeness.witness)


def _naturality(C: Magmoid, f: Morphism, name: str) -> ConsumedFact:
    lhs, rhs = naturality_square(C, f)
    return ConsumedFact(f"δ natural with respect to {name}", lhs == rhs)


def _warn_vacuous(obj: Obj) -> None:
    warnings.warn(
        f"{obj.name!r} has no t-points; the theorem holds vacuously",
        errors.VacuityWarning,
        stacklevel=3,
    )


def diagonal_argument(
    C: Magmoid, A: Obj, Cobj: Obj, F: Morphism, sigma: Morphism
) -> DiagonalReport:
    """Build `f := σ∘F∘δ_A`, which no t-point of `A` parametrises via `F`.

    For every t-point `a` of `A` the witness is `b := a`, and
    `f∘a ≠ F∘(a#a)∘δ_t`.

    Raises:
        NotTFree: If `σ` fixes some t-point.
        MissingDiagonal: If `δ` is undefined on `t` or `A`.
        ValueError: If `F` or `σ` has the wrong type.

    """
    _require(F, C.product(A, A), Cobj, "F")
    _require(sigma, Cobj, Cobj, "σ")
    _require_t_free(C, sigma)

    delta_t = C.diagonal(C.t)
    f = C.compose(sigma, F, C.diagonal(A))

    witnesses: list[DiagonalWitness] = []
    consumed: list[ConsumedFact] = []
    for a in t_points(C, A):
        consumed.append(_naturality(C, a, f"the t-point {a.describe()}"))
        witnesses.append(
            DiagonalWitness(
                a,
                a,
                C.compose(f, a),
                C.compose(F, C.product_map(a, a), delta_t),
            )
        )

    if not witnesses:
        _warn_vacuous(A)

    report = DiagonalReport(
        f, tuple(witnesses), tuple(consumed), vacuous=not witnesses
    )
    logger.debug("Diagonal argument verified=%s", report.verified)
    return report


def diagonal_argument_section(
    C: Magmoid, p: Morphism, s: Morphism, F: Morphism, sigma: Morphism
) -> DiagonalReport:
    """The diagonal argument through a retraction `p: B -> A` with section `s`.

    Builds `f := σ∘F∘(p#id_B)∘δ_B: B -> C`; for every t-point `a` of
    `A` the witness is `b := s∘a`, with `f∘b ≠ F∘(a#b)∘δ_t`.

    Raises:
        NotASection: If `p∘s ≠ id_A`.
        NotTFree: If `σ` fixes some t-point.
        MissingDiagonal: If `δ` is undefined on `t` or `B`.

    """
    A, B = p.target, p.source
    _require(s, A, B, "s")
    _require(F, C.product(A, B), F.target, "F")
    _require(sigma, F.target, F.target, "σ")

    if C.compose(p, s) != C.identity(A):
        raise errors.NotASection(p.describe(), s.describe())

    _require_t_free(C, sigma)

    delta_t = C.diagonal(C.t)
    f = C.compose(
        sigma, F, C.product_map(p, C.identity(B)), C.diagonal(B)
    )

    consumed = [_naturality(C, s, "s")]
    witnesses: list[DiagonalWitness] = []
    for a in t_points(C, A):
        b = C.compose(s, a)
        consumed.append(_naturality(C, a, f"the t-point {a.describe()}"))
        witnesses.append(
            DiagonalWitness(
                a,
                b,
                C.compose(f, b),
                C.compose(F, C.product_map(a, b), delta_t),
            )
        )

    if not witnesses:
        _warn_vacuous(A)

    return DiagonalReport(
        f, tuple(witnesses), tuple(consumed), vacuous=not witnesses
    )


def fixed_point(
    C: Magmoid,
    A: Obj,
    Cobj: Obj,
    F: Morphism,
    sigma: Morphism,
    a0: Morphism,
    *,
    strict: bool = True,
) -> FixedPointReport:
    """Build the fixed point `c := F∘δ_A∘a₀` of `σ`.

    The hypothesis is `σ∘F∘δ_A∘a = F∘(a₀#a)∘δ_t` for every t-point
    `a` of `A`; when it holds, `σ∘c = c`.

    Args:
        C: The category.
        A: The parameter object.
        Cobj: The object whose endomorphism is `σ`.
        F: A morphism `A#A -> Cobj`.
        sigma: An endomorphism of `Cobj`.
        a0: A t-point of `A`.
        strict: Raise on a failing hypothesis instead of reporting it.

    Returns:
        The report.

    Raises:
        HypothesisFailed: If `strict` and the hypothesis fails; the
            violating `a` is the witness.

    """
    _require(F, C.product(A, A), Cobj, "F")
    _require(sigma, Cobj, Cobj, "σ")
    _require(a0, C.t, A, "a₀")

    delta_A = C.diagonal(A)
    delta_t = C.diagonal(C.t)
    hypothesis_ok = True

    for a in t_points(C, A):
        lhs = C.compose(sigma, F, delta_A, a)
        rhs = C.compose(F, C.product_map(a0, a), delta_t)
        if lhs != rhs:
            if strict:
                raise errors.HypothesisFailed(
                    "σ∘F∘δ_A∘a = F∘(a₀#a)∘δ_t", a
                )
            hypothesis_ok = False
            break

    c = C.compose(F, delta_A, a0)
    return FixedPointReport(
        "fixed_point",
        c,
        hypothesis_ok,
        C.compose(sigma, c) == c,
        a0=a0,
        oracle=tuple(fixed_t_points(C, sigma)),
        consumed=(_naturality(C, a0, "a₀"),),
    )


def fixed_point_search(
    C: Magmoid, A: Obj, Cobj: Obj, F: Morphism, sigma: Morphism
) -> FixedPointReport | NotFound:
    """Return the fixed point for the first `a₀` passing the hypothesis.

    t-points are tried in enumeration order.
    """
    points = t_points(C, A)

    for a0 in points:
        report = fixed_point(C, A, Cobj, F, sigma, a0, strict=False)
        if report.hypothesis_ok:
            logger.debug("Hypothesis holds at %r", a0)
            return report

    if not points:
        _warn_vacuous(A)

    return NotFound(len(points))


def fixed_point_section(
    C: Magmoid,
    p: Morphism,
    F: Morphism,
    sigma: Morphism,
    a: Morphism,
    *,
    strict: bool = True,
) -> FixedPointReport:
    """The fixed-point theorem through `p: B -> A`, surjective on t-points.

    With `b_a` the first lift of `a` along `p`, builds
    `c := F∘(p#id_B)∘δ_B∘b_a`. The hypothesis is
    `σ∘F∘(p#id)∘δ_B∘b = F∘(a#b)∘δ_t` for every t-point `b` of `B`, and
    the conclusion checked is `σ∘c = c`.

    Raises:
        NotPointSurjective: If some t-point of `A` has no lift.
        HypothesisFailed: If `strict` and the hypothesis fails.

    """
    A, B = p.target, p.source
    Cobj = F.target
    _require(F, C.product(A, B), Cobj, "F")
    _require(sigma, Cobj, Cobj, "σ")
    _require(a, C.t, A, "a")

    b_points = t_points(C, B)
    lifts: dict[Morphism, Morphism] = {}
    for b in b_points:
        lifts.setdefault(C.compose(p, b), b)

    for x in t_points(C, A):
        if x not in lifts:
            raise errors.NotPointSurjective(x)

    parametrise = C.compose(
        F, C.product_map(p, C.identity(B)), C.diagonal(B)
    )
    delta_t = C.diagonal(C.t)
    hypothesis_ok = True

    for b in b_points:
        lhs = C.compose(sigma, parametrise, b)
        rhs = C.compose(F, C.product_map(a, b), delta_t)
        if lhs != rhs:
            if strict:
                raise errors.HypothesisFailed(
                    "σ∘F∘(p#id)∘δ_B∘b = F∘(a#b)∘δ_t", b
                )
            hypothesis_ok = False
            break

    lift = lifts[a]
    c = C.compose(parametrise, lift)
    return FixedPointReport(
        "fixed_point_section",
        c,
        hypothesis_ok,
        C.compose(sigma, c) == c,
        a0=a,
        lift=lift,
        oracle=tuple(fixed_t_points(C, sigma)),
        consumed=(_naturality(C, lift, "b_a"),),
    )


def check_right_projection(C: Magmoid) -> Report:
    """Check `pr₂∘δ = id` and naturality of `pr₂` in both arguments.

    Raises:
        MissingProjection: If the instance has no right projections.
        SizeLimitExceeded: If there are too many pairs of morphisms.

    """
    builder = ReportBuilder("right projection")

    for obj in C.objects:
        if C.has_diagonal(obj):
            retraction = C.compose(
                C.right_projection(obj, obj), C.diagonal(obj)
            )
            builder.record(
                "pr₂∘δ = id", retraction == C.identity(obj), retraction
            )

    morphisms = all_morphisms(C)
    kernel.check_size(len(morphisms) ** 2)
    for f, g in itertools.product(morphisms, repeat=2):
        lhs = C.compose(
            C.right_projection(f.target, g.target), C.product_map(f, g)
        )
        rhs = C.compose(g, C.right_projection(f.source, g.source))
        builder.record("naturality", lhs == rhs, f, g)

    return builder.build()


def _terminal(C: Magmoid) -> Obj | None:
    listed = list(more_itertools.unique_everseen((C.t, *C.objects)))
    return more_itertools.first(
        (
            obj
            for obj in listed
            if all(more_itertools.ilen(C.hom(x, obj)) == 1 for x in listed)
        ),
        None,
    )


def _is_regular_epi_to_terminal(C: Magmoid, obj: Obj) -> bool:
    # in the concrete instances the regular epis are the surjections
    terminal = _terminal(C)
    if terminal is None:
        return False

    maps = list(C.hom(obj, terminal))
    return len(maps) == 1 and kernel.is_surjective(maps[0].function)


def fixed_point_regular(
    C: Magmoid,
    A: Obj,
    Cobj: Obj,
    F: Morphism,
    sigma: Morphism,
    t_prime: Obj,
    a0: Morphism,
) -> FixedPointReport:
    """The fixed-point theorem using only diagonals and right projections.

    Given `a₀: t' -> A` such that `F∘(a₀#id_A) = σ∘F∘δ_A∘pr₂` as
    morphisms `t'#A -> Cobj`, the morphism
    `c := σ∘F∘δ_A∘a₀: t' -> Cobj` satisfies `σ∘c = c`. No left
    projection is ever used.

    Raises:
        NotRegularEpi: If `t' -> 1` is not a regular epimorphism.
        MissingProjection: If the instance has no right projections.
        HypothesisFailed: If the rectangle fails; the witness is the first
            element of `t'#A` where the two sides differ.

    """
    _require(F, C.product(A, A), Cobj, "F")
    _require(sigma, Cobj, Cobj, "σ")
    _require(a0, t_prime, A, "a₀")

    if not _is_regular_epi_to_terminal(C, t_prime):
        raise errors.NotRegularEpi(t_prime.name)

    delta_A = C.diagonal(A)
    pr2 = C.right_projection(t_prime, A)

    lhs = C.compose(F, C.product_map(a0, C.identity(A)))
    rhs = C.compose(sigma, F, delta_A, pr2)
    mismatch = iterutils.first_mismatch(
        lhs.function.items(), rhs.function.items()
    )
    if mismatch is not None:
        raise errors.HypothesisFailed(
            "F∘(a₀#id_A) = σ∘F∘δ_A∘pr₂", mismatch
        )

    identity_t = C.identity(t_prime)
    delta_t = C.diagonal(t_prime)
    pr2_natural = C.compose(
        C.right_projection(t_prime, A), C.product_map(identity_t, a0)
    ) == C.compose(a0, C.right_projection(t_prime, t_prime))
    retraction = (
        C.compose(C.right_projection(t_prime, t_prime), delta_t) == identity_t
    )

    c = C.compose(sigma, F, delta_A, a0)
    return FixedPointReport(
        "fixed_point_regular",
        c,
        hypothesis_ok=True,
        conclusion_ok=C.compose(sigma, c) == c,
        a0=a0,
        consumed=(
            _naturality(C, a0, "a₀"),
            ConsumedFact("pr₂ natural with respect to a₀", pr2_natural),
            ConsumedFact("pr₂∘δ_t' = id", retraction),
        ),
    )
