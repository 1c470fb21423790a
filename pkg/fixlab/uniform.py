"""Internal homs, currying and the uniform fixed-point constructions.

An internal hom candidate `(E, ev)` for `Y^X` is certified by enumerating,
for each probe object `W`, both `Hom(W, E)` and `Hom(W#X, Y)` and checking
that `f ↦ ev∘(f#id_X)` is a bijection between them. Certification is only
as strong as the probe family; by default it is every listed object and
`t`.

Products are not associative, so every composite below is parenthesised
exactly as written in the docstrings, and domains are validated when the
composite is built.
"""

import logging
from collections.abc import Iterable

import bidict
import more_itertools
import pydantic
from typing_extensions import Final, Literal, Self, TypeAlias, final

from fixlab import errors, kernel, models
from fixlab.category import Magmoid, Morphism, Obj, t_points
from fixlab.instances.flat import FlatEndofunctor, check_idempotent_comonad
from fixlab.reports import Report, ReportBuilder
from fixlab.utils import iterutils


logger = logging.getLogger(__name__)


UniformVariant: TypeAlias = Literal["plain", "crisp_section", "crisp_index"]

_RECTANGLE: Final = "F∘(idx#id_B) = ev∘(id#F)∘(e#((p#id)∘δ_B))"


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class InternalHomWitness:
    """A candidate internal hom `Y^X` with its per-probe certificate."""

    base: pydantic.SkipValidation[Magmoid]
    source: pydantic.SkipValidation[Obj]
    """`X`."""
    target: pydantic.SkipValidation[Obj]
    """`Y`."""
    hom_object: pydantic.SkipValidation[Obj]
    ev: pydantic.SkipValidation[Morphism]
    certificate: pydantic.SkipValidation[
        dict[Obj, bidict.bidict[Morphism, Morphism]]
    ] = pydantic.Field(default_factory=dict)
    """For each probe `W`, the bijection `Hom(W, Y^X) -> Hom(W#X, Y)`."""

    @classmethod
    def uncertified(
        cls,
        C: Magmoid,
        source: Obj,
        target: Obj,
        hom_object: Obj,
        ev: Morphism,
    ) -> Self:
        """Wrap a candidate without checking it on any probe."""
        _check_ev(C, source, target, hom_object, ev)
        return cls(C, source, target, hom_object, ev)

    @property
    def probes(self) -> tuple[Obj, ...]:
        """The certified probe objects, in certification order."""
        return tuple(self.certificate)

    def to_dict(self) -> dict[str, object]:
        """Return a JSON-compatible rendering."""
        return {
            "source": self.source.name,
            "target": self.target.name,
            "hom_object": self.hom_object.name,
            "carrier": list(self.hom_object.carrier),
            "ev": self.ev.describe(),
            "probes": {
                probe.name: len(pairs)
                for probe, pairs in self.certificate.items()
            },
        }


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class UniformFixReport:
    """The index and fixed-point map built by a uniform construction."""

    variant: UniformVariant
    idx: pydantic.SkipValidation[Morphism]
    fix: pydantic.SkipValidation[Morphism]
    hypothesis_ok: bool
    conclusion_ok: bool
    """Whether `ev∘(e#fix)∘δ = fix`."""

    def to_dict(self) -> dict[str, object]:
        """Return a JSON-compatible rendering."""
        return {
            "variant": self.variant,
            "idx": self.idx.describe(),
            "fix": self.fix.describe(),
            "hypothesis_ok": self.hypothesis_ok,
            "conclusion_ok": self.conclusion_ok,
        }


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class SplitEpiFix:
    """The fixed-point map from a split epi onto `C^A`, with its squares."""

    fix: pydantic.SkipValidation[Morphism]
    idx: pydantic.SkipValidation[Morphism]
    report: pydantic.SkipValidation[Report]

    def to_dict(self) -> dict[str, object]:
        """Return a JSON-compatible rendering."""
        return {
            "fix": self.fix.describe(),
            "idx": self.idx.describe(),
            "report": self.report.to_dict(),
        }


def _check_ev(
    C: Magmoid, source: Obj, target: Obj, hom_object: Obj, ev: Morphism
) -> None:
    domain = C.product(hom_object, source)

    if (ev.source, ev.target) != (domain, target):
        msg = f"ev must be a morphism {domain} -> {target}, got {ev!r}"
        raise ValueError(msg)
    if not C.accepts(ev.function, domain, target):
        raise errors.NotAMorphism(
            ev.table(), source=domain.name, target=target.name
        )


def _default_probes(C: Magmoid) -> list[Obj]:
    return list(more_itertools.unique_everseen((*C.objects, C.t)))


def _certify(
    witness: InternalHomWitness, probe: Obj
) -> bidict.bidict[Morphism, Morphism]:
    C = witness.base
    pairs = bidict.bidict[Morphism, Morphism]()

    for f in C.hom(probe, witness.hom_object):
        g = uncurry(witness, f)
        if g in pairs.inverse:
            raise errors.NotRepresentable(
                probe.name, "two morphisms uncurry to", g
            )
        pairs[f] = g

    product = C.product(probe, witness.source)
    for g in C.hom(product, witness.target):
        if g not in pairs.inverse:
            raise errors.NotRepresentable(
                probe.name, "no morphism uncurries to", g
            )

    logger.debug("Certified %d pairs at probe %r", len(pairs), probe.name)
    return pairs


def check_internal_hom(
    C: Magmoid,
    source: Obj,
    target: Obj,
    candidate: tuple[Obj, Morphism],
    probes: Iterable[Obj] | None = None,
) -> InternalHomWitness:
    """Certify `(E, ev)` as the internal hom `target ^ source`.

    Args:
        C: The category.
        source: The exponent `X`.
        target: The base `Y`.
        candidate: The hom object `E` and the evaluation `ev: E#X -> Y`.
        probes: The objects `W` to certify at; every listed object and `t`
            by default.

    Returns:
        The certified witness.

    Raises:
        NotRepresentable: If some probe breaks the bijection; the probe and
            the colliding or missing morphism are reported.
        NotAMorphism: If `ev` is rejected by the hom predicate.
        SizeLimitExceeded: If a hom-set is too large to enumerate.

    """
    hom_object, ev = candidate
    witness = InternalHomWitness.uncertified(
        C, source, target, hom_object, ev
    )

    for probe in _default_probes(C) if probes is None else probes:
        witness.certificate[probe] = _certify(witness, probe)

    return witness


def canonical_hom(
    C: Magmoid,
    source: Obj,
    target: Obj,
    *,
    probes: Iterable[Obj] | None = None,
    certify: bool = True,
) -> InternalHomWitness:
    """Return the instance's own internal hom recipe, certified by default.

    Raises:
        MissingInternalHom: If the instance is not closed.
        NotRepresentable: If `certify` and the recipe fails on a probe.

    """
    candidate = C.internal_hom(source, target)

    if not certify:
        return InternalHomWitness.uncertified(C, source, target, *candidate)

    return check_internal_hom(C, source, target, candidate, probes)


def uncurry(hom: InternalHomWitness, f: Morphism) -> Morphism:
    """Return `ev∘(f#id_X): W#X -> Y` for `f: W -> Y^X`."""
    C = hom.base
    return C.compose(hom.ev, C.product_map(f, C.identity(hom.source)))


def curry(hom: InternalHomWitness, g: Morphism, W: Obj) -> Morphism:
    """Return the unique `f: W -> Y^X` with `ev∘(f#id_X) = g`.

    A certified probe answers from its table; any other `W` is searched by
    brute force over `Hom(W, Y^X)`.

    Raises:
        NoSolution: If no morphism curries to `g`.
        MultipleSolutions: If more than one does.

    """
    if W in hom.certificate:
        try:
            return hom.certificate[W].inverse[g]
        except KeyError:
            raise errors.NoSolution(g) from None

    solutions = [
        f for f in hom.base.hom(W, hom.hom_object) if uncurry(hom, f) == g
    ]

    match solutions:
        case []:
            raise errors.NoSolution(g)
        case [f]:
            return f
        case _:
            raise errors.MultipleSolutions(g, len(solutions))


def name_of(hom: InternalHomWitness, sigma: Morphism) -> Morphism:
    """Return the t-point of `Y^X` naming `σ: X -> Y`.

    This is `curry(σ∘pr₂)` with `pr₂: t#X -> X`. Instances without right
    projections fall back to the first t-point `n` with
    `ev∘(n#x)∘δ_t = σ∘x` for every t-point `x` of `X`.

    Raises:
        NoSolution: If no t-point names `σ`.
        MultipleSolutions: If several t-points name `σ` through `curry`.

    """
    C = hom.base

    try:
        pr2 = C.right_projection(C.t, hom.source)
    except errors.MissingProjection:
        pass
    else:
        return curry(hom, C.compose(sigma, pr2), C.t)

    delta_t = C.diagonal(C.t)
    points = t_points(C, hom.source)
    for n in t_points(C, hom.hom_object):
        if all(
            C.compose(hom.ev, C.product_map(n, x), delta_t)
            == C.compose(sigma, x)
            for x in points
        ):
            return n

    raise errors.NoSolution(sigma)


def _require_endo_hom(hom: InternalHomWitness, Cobj: Obj) -> None:
    if hom.source != Cobj or hom.target != Cobj:
        msg = (
            f"Expected the internal hom {Cobj.name}^{Cobj.name}, got "
            f"{hom.target.name}^{hom.source.name}"
        )
        raise ValueError(msg)


def _rectangle(
    C: Magmoid,
    flat: FlatEndofunctor,
    hom: InternalHomWitness,
    p: Morphism,
    F: Morphism,
    idx: Morphism,
) -> str | None:
    # F∘(idx#id_B) = ev∘(id_E#F)∘(e_E#((p#id_B)∘δ_B)) on ♭E#B
    B = p.source
    E = hom.hom_object
    identity_B = C.identity(B)

    lhs = C.compose(F, C.product_map(idx, identity_B))
    rhs = C.compose(
        hom.ev,
        C.product_map(C.identity(E), F),
        C.product_map(
            flat.counit(E),
            C.compose(C.product_map(p, identity_B), C.diagonal(B)),
        ),
    )
    return iterutils.first_mismatch(
        lhs.function.items(), rhs.function.items()
    )


def _fixed_point_square(
    C: Magmoid, flat: FlatEndofunctor, hom: InternalHomWitness, fix: Morphism
) -> bool:
    E = hom.hom_object
    flat_E = flat.object_map(E)
    lhs = C.compose(
        hom.ev,
        C.product_map(flat.counit(E), fix),
        C.diagonal(flat_E),
    )
    return lhs == fix


def _check_hypothesis(witness: str | None, *, strict: bool) -> bool:
    if witness is None:
        return True
    if strict:
        raise errors.HypothesisFailed(_RECTANGLE, witness)

    return False


def uniform_fix(
    C: Magmoid,
    flat: FlatEndofunctor,
    E_hom: InternalHomWitness,
    p: Morphism,
    s: Morphism,
    F: Morphism,
    idx: Morphism,
    *,
    strict: bool = True,
) -> UniformFixReport:
    """Build the uniform fixed-point map `fix := F∘(id_A#s)∘δ_A∘idx`.

    `E_hom` is the internal hom `C^C` of the target `C` of `F`, and `idx`
    is a morphism `♭(C^C) -> A`. The hypothesis is the rectangle
    `F∘(idx#id_B) = ev∘(id#F)∘(e#((p#id_B)∘δ_B))` on `♭(C^C)#B`; the
    conclusion is `ev∘(e#fix)∘δ = fix` on `♭(C^C)`.

    Raises:
        NotASection: If `p` is not surjective or `p∘s ≠ id_A`.
        HypothesisFailed: If `strict` and the rectangle fails; the witness
            is the first element where the two sides differ.

    """
    A, B = p.target, p.source
    Cobj = F.target
    _require_endo_hom(E_hom, Cobj)

    if (
        not kernel.is_surjective(p.function)
        or s.source != A
        or s.target != B
        or C.compose(p, s) != C.identity(A)
    ):
        raise errors.NotASection(p.describe(), s.describe())

    hypothesis_ok = _check_hypothesis(
        _rectangle(C, flat, E_hom, p, F, idx), strict=strict
    )

    fix = C.compose(
        F, C.product_map(C.identity(A), s), C.diagonal(A), idx
    )
    report = UniformFixReport(
        "plain",
        idx,
        fix,
        hypothesis_ok,
        _fixed_point_square(C, flat, E_hom, fix),
    )
    logger.debug("Uniform fixed point: %r", report)
    return report


def uniform_fix_crisp(
    C: Magmoid,
    flat: FlatEndofunctor,
    E_hom: InternalHomWitness,
    p: Morphism,
    s_crisp: Morphism,
    F: Morphism,
    idx: Morphism,
    *,
    variant: Literal["crisp_section", "crisp_index"],
    strict: bool = True,
) -> UniformFixReport:
    """Build the uniform fixed-point map from a crisp section `s♭`.

    The section has type `♭A -> B`. With `crisp_section`, `idx` is crisp
    (`♭(C^C) -> A`) and the fixed-point map is
    `F∘(e_A#s♭)∘δ_♭A∘♭(idx)∘m`. With `crisp_index`, `idx` is a plain
    morphism `C^C -> A` and the map is `F∘(e_A#s♭)∘δ_♭A∘♭(idx)`; the
    rectangle is then checked for the crisp index `idx∘e`.

    Raises:
        MissingComultiplication: If `crisp_section` is asked of a `♭`
            without comultiplication.
        HypothesisFailed: If the comonad laws fail, or `strict` and the
            rectangle fails.
        NotASection: If `p∘s♭ ≠ e_A`.

    """
    A = p.target
    Cobj = F.target
    E = E_hom.hom_object
    _require_endo_hom(E_hom, Cobj)

    if variant == "crisp_section":
        if not flat.has_comultiplication:
            raise errors.MissingComultiplication
        laws = check_idempotent_comonad(flat)
        if not laws:
            raise errors.HypothesisFailed(
                "idempotent comonad", laws.violations[0]
            )

    counit_A = flat.counit(A)
    if C.compose(p, s_crisp) != counit_A:
        raise errors.NotASection(p.describe(), s_crisp.describe())

    if variant == "crisp_section":
        crisp_idx = idx
        flat_idx = C.compose(
            flat.morphism_map(idx), flat.comultiplication(E)
        )
    else:
        crisp_idx = C.compose(idx, flat.counit(E))
        flat_idx = flat.morphism_map(idx)

    hypothesis_ok = _check_hypothesis(
        _rectangle(C, flat, E_hom, p, F, crisp_idx), strict=strict
    )

    flat_A = flat.object_map(A)
    fix = C.compose(
        F,
        C.product_map(counit_A, s_crisp),
        C.diagonal(flat_A),
        flat_idx,
    )
    return UniformFixReport(
        variant,
        crisp_idx,
        fix,
        hypothesis_ok,
        _fixed_point_square(C, flat, E_hom, fix),
    )


def fix_from_split_epi(
    C: Magmoid,
    A: Obj,
    Cobj: Obj,
    CA_hom: InternalHomWitness,
    CC_hom: InternalHomWitness,
    alpha: Morphism,
    ell: Morphism,
) -> SplitEpiFix:
    """Build the fixed-point map `C^C -> C` from a split epi `α: A -> C^A`.

    With `F := ev∘(α#id_A)` and `g := ev∘(id#F)∘(id#δ_A): C^C#A -> C`,
    the index is `idx := ℓ∘curry(g)` and the fixed-point map is
    `fix := F∘δ_A∘idx`. The report records the curry square, the square
    obtained by inserting `α∘ℓ = id`, the rectangle of the uniform
    construction with `B = A` and `p = s = id`, and the fixed-point square.

    Raises:
        NotASection: If `α∘ℓ ≠ id`.
        NotRepresentable: If `g` has no unique transpose.

    """
    CA = CA_hom.hom_object
    CC = CC_hom.hom_object
    if (CA_hom.source, CA_hom.target) != (A, Cobj):
        msg = f"Expected the internal hom {Cobj.name}^{A.name}"
        raise ValueError(msg)
    _require_endo_hom(CC_hom, Cobj)

    if (
        (alpha.source, alpha.target) != (A, CA)
        or (ell.source, ell.target) != (CA, A)
        or C.compose(alpha, ell) != C.identity(CA)
    ):
        raise errors.NotASection(alpha.describe(), ell.describe())

    identity_A = C.identity(A)
    identity_CC = C.identity(CC)
    delta_A = C.diagonal(A)

    F = C.compose(CA_hom.ev, C.product_map(alpha, identity_A))
    g = C.compose(
        CC_hom.ev,
        C.product_map(identity_CC, F),
        C.product_map(identity_CC, delta_A),
    )

    try:
        h = curry(CA_hom, g, CC)
    except errors.NoSolution:
        raise errors.NotRepresentable(
            CC.name, "no morphism curries to", g
        ) from None
    except errors.MultipleSolutions as e:
        raise errors.NotRepresentable(
            CC.name, f"{e.count} morphisms curry to", g
        ) from None

    idx = C.compose(ell, h)
    fix = C.compose(F, delta_A, idx)

    builder = ReportBuilder("fix from split epi")
    builder.record(
        "curry square",
        C.compose(CA_hom.ev, C.product_map(h, identity_A)) == g,
        h,
    )
    builder.record(
        "insertion square",
        C.compose(
            CA_hom.ev, C.product_map(C.compose(alpha, ell, h), identity_A)
        )
        == g,
        h,
    )
    builder.record(
        "rectangle",
        C.compose(F, C.product_map(idx, identity_A))
        == C.compose(
            CC_hom.ev,
            C.product_map(identity_CC, F),
            C.product_map(
                identity_CC,
                C.compose(C.product_map(identity_A, identity_A), delta_A),
            ),
        ),
        idx,
    )
    builder.record(
        "fixed-point square",
        C.compose(
            CC_hom.ev, C.product_map(identity_CC, fix), C.diagonal(CC)
        )
        == fix,
        fix,
    )

    return SplitEpiFix(fix, idx, builder.build())


def fix_reflexive(
    C: Magmoid,
    Cobj: Obj,
    CC_hom: InternalHomWitness,
    app: Morphism,
    lam: Morphism,
) -> Morphism:
    """Return the fixed-point map of a reflexive object.

    This is `fix_from_split_epi` with `A = C`, `α = app` and `ℓ = lam`.

    Raises:
        NotASection: If `app` is not surjective or `app∘lam ≠ id`.

    """
    if not kernel.is_surjective(app.function):
        raise errors.NotASection(app.describe(), lam.describe())

    return fix_from_split_epi(C, Cobj, Cobj, CC_hom, CC_hom, app, lam).fix
