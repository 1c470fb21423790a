"""Copointed endofunctors `♭` and the idempotent comonad laws.

A copointed endofunctor comes with a natural counit `e_X: ♭X -> X`.
Morphisms `♭X -> Y` are called crisp. With a natural comultiplication
`m_X: ♭X -> ♭♭X` satisfying

    (CA)  m_{♭X}∘m_X = ♭(m_X)∘m_X
    (CU)  e_{♭X}∘m_X = id = ♭(e_X)∘m_X

and `m` invertible, `♭` is an idempotent comonad.

Every concrete `♭` here other than the identity picks a subset of each
carrier (the support) that morphisms must preserve: `♭X` is the support
with the induced structure, `♭f` is the restriction, `e` is the inclusion
and `m` is the identity table onto `♭♭X`.
"""

import abc
import logging
from collections.abc import Iterable, Mapping

from typing_extensions import Literal, TypeAlias, override

from fixlab import errors, kernel
from fixlab.category import (
    CosemigroupObj,
    Magmoid,
    Morphism,
    Obj,
    PointedObj,
    SliceObj,
    flat_name,
)
from fixlab.checks import all_morphisms, composable_pairs
from fixlab.reports import Report, ReportBuilder


logger = logging.getLogger(__name__)


FlatVariant: TypeAlias = Literal["identity", "trivializing"]


class FlatEndofunctor(metaclass=abc.ABCMeta):
    """An endofunctor `♭` of a category together with its counit."""

    def __init__(self, category: Magmoid) -> None:
        self.category = category

    @abc.abstractmethod
    def object_map(self, obj: Obj, /) -> Obj:
        """Return `♭obj`."""

    @abc.abstractmethod
    def morphism_map(self, f: Morphism, /) -> Morphism:
        """Return `♭f`.

        Raises:
            InvalidSpec: If `♭` is undefined on `f`.

        """

    @abc.abstractmethod
    def counit(self, obj: Obj, /) -> Morphism:
        """Return `e_obj: ♭obj -> obj`."""

    @property
    def has_comultiplication(self) -> bool:
        """Whether `comultiplication` is available."""
        return False

    def comultiplication(self, obj: Obj, /) -> Morphism:
        """Return `m_obj: ♭obj -> ♭♭obj`.

        Raises:
            MissingComultiplication: If `♭` carries no comultiplication.

        """
        del obj
        raise errors.MissingComultiplication


class IdentityFlat(FlatEndofunctor):
    """`♭ = Id` with `e = id` and `m = id`."""

    @override
    def object_map(self, obj: Obj, /) -> Obj:
        return obj

    @override
    def morphism_map(self, f: Morphism, /) -> Morphism:
        return f

    @override
    def counit(self, obj: Obj, /) -> Morphism:
        return self.category.identity(obj)

    @property
    @override
    def has_comultiplication(self) -> bool:
        return True

    @override
    def comultiplication(self, obj: Obj, /) -> Morphism:
        return self.category.identity(obj)


def _restrict(obj: Obj, support: kernel.FiniteSet, name: str) -> Obj:
    carrier = kernel.FiniteSet.of(*support, name=name)

    match obj:
        case PointedObj(basepoint=basepoint):
            if basepoint not in carrier:
                msg = f"Support of {obj.name!r} misses the basepoint"
                raise errors.InvalidSpec(msg)
            return PointedObj(name, carrier, basepoint)
        case SliceObj(structure=structure):
            return SliceObj(
                name,
                carrier,
                kernel.make_function(
                    carrier, structure.cod, {x: structure(x) for x in carrier}
                ),
            )
        case CosemigroupObj(comul=comul):
            try:
                table = kernel.make_function(
                    carrier,
                    kernel.cartesian(carrier, carrier),
                    {x: comul(x) for x in carrier},
                )
            except errors.ForeignElement:
                msg = f"Support of {obj.name!r} is not a subcosemigroup"
                raise errors.InvalidSpec(msg) from None
            return CosemigroupObj(name, carrier, table)
        case _:
            return Obj(name, carrier)


class SubobjectFlat(FlatEndofunctor):
    """A `♭` that restricts every object to a chosen support."""

    @abc.abstractmethod
    def support(self, obj: Obj, /) -> kernel.FiniteSet:
        """Return the subset of the carrier that `♭obj` consists of."""

    @override
    def object_map(self, obj: Obj, /) -> Obj:
        support = self.support(obj)

        for x in support:
            if x not in obj.carrier:
                raise errors.ForeignElement(x, where=f"carrier of {obj}")

        return _restrict(obj, support, flat_name(obj))

    @override
    def morphism_map(self, f: Morphism, /) -> Morphism:
        source = self.object_map(f.source)
        target = self.object_map(f.target)
        mapping = {x: f(x) for x in source.carrier}

        if any(y not in target.carrier for y in mapping.values()):
            msg = f"♭ is undefined on {f!r}: it leaves the support"
            raise errors.InvalidSpec(msg)

        return Morphism(
            source,
            target,
            kernel.make_function(source.carrier, target.carrier, mapping),
        )

    def _inclusion(self, source: Obj, target: Obj) -> Morphism:
        return Morphism(
            source,
            target,
            kernel.make_function(
                source.carrier, target.carrier, {x: x for x in source.carrier}
            ),
        )

    @override
    def counit(self, obj: Obj, /) -> Morphism:
        return self._inclusion(self.object_map(obj), obj)

    @property
    @override
    def has_comultiplication(self) -> bool:
        return True

    @override
    def comultiplication(self, obj: Obj, /) -> Morphism:
        flat = self.object_map(obj)
        try:
            return self._inclusion(flat, self.object_map(flat))
        except errors.ForeignElement:
            msg = f"♭♭{obj.name} is smaller than ♭{obj.name}"
            raise errors.InvalidSpec(msg) from None


class TrivializingFlat(SubobjectFlat):
    """On pointed sets, `♭(X, x₀) = ({x₀}, x₀)`.

    Crisp maps `♭A -> B` are then exactly the points of `B`.
    """

    @override
    def support(self, obj: Obj, /) -> kernel.FiniteSet:
        if not isinstance(obj, PointedObj):
            msg = f"{obj.name!r} is not a pointed set"
            raise errors.InvalidSpec(msg)

        return kernel.FiniteSet.of(obj.basepoint)


class CustomFlat(SubobjectFlat):
    """A `♭` given by supports per object name, with replaceable tables.

    Objects without an entry (including every `♭X`) keep their whole
    carrier. Replacement tables override the counit or comultiplication on
    a single object, which is how broken structures are built for tests.
    """

    def __init__(
        self,
        category: Magmoid,
        supports: Mapping[str, Iterable[str]],
        *,
        counits: Mapping[str, Mapping[str, str]] | None = None,
        comultiplications: Mapping[str, Mapping[str, str]] | None = None,
    ) -> None:
        super().__init__(category)
        self.supports = {
            name: kernel.FiniteSet.of(*support)
            for name, support in supports.items()
        }
        self.counits = dict(counits or {})
        self.comultiplications = dict(comultiplications or {})

    @override
    def support(self, obj: Obj, /) -> kernel.FiniteSet:
        return self.supports.get(obj.name, obj.carrier)

    @override
    def counit(self, obj: Obj, /) -> Morphism:
        if obj.name not in self.counits:
            return super().counit(obj)

        source = self.object_map(obj)
        return Morphism(
            source,
            obj,
            kernel.make_function(
                source.carrier, obj.carrier, self.counits[obj.name]
            ),
        )

    @override
    def comultiplication(self, obj: Obj, /) -> Morphism:
        if obj.name not in self.comultiplications:
            return super().comultiplication(obj)

        source = self.object_map(obj)
        target = self.object_map(source)
        return Morphism(
            source,
            target,
            kernel.make_function(
                source.carrier,
                target.carrier,
                self.comultiplications[obj.name],
            ),
        )

    def replace_counit(
        self, obj: Obj, table: Mapping[str, str]
    ) -> "CustomFlat":
        """Return a copy whose counit at `obj` is given by `table`."""
        return CustomFlat(
            self.category,
            {name: s.elements for name, s in self.supports.items()},
            counits={**self.counits, obj.name: table},
            comultiplications=self.comultiplications,
        )

    def replace_comultiplication(
        self, obj: Obj, table: Mapping[str, str]
    ) -> "CustomFlat":
        """Return a copy whose comultiplication at `obj` is `table`."""
        return CustomFlat(
            self.category,
            {name: s.elements for name, s in self.supports.items()},
            counits=self.counits,
            comultiplications={**self.comultiplications, obj.name: table},
        )


def make_flat(
    C: Magmoid, variant: FlatVariant | Mapping[str, Iterable[str]]
) -> FlatEndofunctor:
    """Build a copointed endofunctor on `C`.

    Args:
        C: The category.
        variant: `"identity"`, `"trivializing"` (pointed sets only), or a
            mapping from object names to supports for a custom `♭`.

    Returns:
        The endofunctor.

    Raises:
        InvalidSpec: If the trivializing `♭` is requested on objects
            without basepoints, or a support is not a subset.

    """
    match variant:
        case "identity":
            return IdentityFlat(C)
        case "trivializing":
            for obj in (*C.objects, C.t):
                if not isinstance(obj, PointedObj):
                    msg = f"Trivializing ♭ needs pointed sets: {obj.name!r}"
                    raise errors.InvalidSpec(msg)
            return TrivializingFlat(C)
        case _:
            flat = CustomFlat(C, variant)
            for obj in (*C.objects, C.t):
                try:
                    flat.object_map(obj)
                except errors.ForeignElement as e:
                    raise errors.InvalidSpec(str(e)) from None
            return flat


def check_copointed(F: FlatEndofunctor) -> Report:
    """Check functoriality of `♭` and naturality of `e` over listed objects.

    Raises:
        SizeLimitExceeded: If the hom-sets are too large to enumerate.

    """
    C = F.category
    builder = ReportBuilder("copointed endofunctor")
    morphisms = all_morphisms(C)

    for obj in C.objects:
        flat = F.object_map(obj)
        lhs = F.morphism_map(C.identity(obj))
        builder.record("identity", lhs == C.identity(flat), lhs)

        e = F.counit(obj)
        builder.record("counit morphism", C.accepts(e.function, flat, obj), e)

    images: dict[Morphism, Morphism] = {}
    for f in morphisms:
        try:
            images[f] = F.morphism_map(f)
        except errors.InvalidSpec as e:
            builder.record("functoriality", False, f, detail=str(e))
            continue

        flat_f = images[f]
        builder.record(
            "functoriality",
            C.accepts(flat_f.function, flat_f.source, flat_f.target),
            f,
        )
        lhs = C.compose(f, F.counit(f.source))
        rhs = C.compose(F.counit(f.target), flat_f)
        builder.record("counit naturality", lhs == rhs, f)

    pairs = composable_pairs(morphisms)
    kernel.check_size(len(pairs))
    for g, f in pairs:
        if f in images and g in images:
            lhs = F.morphism_map(C.compose(g, f))
            rhs = C.compose(images[g], images[f])
            builder.record("composition", lhs == rhs, g, f)

    return builder.build()


def check_idempotent_comonad(F: FlatEndofunctor) -> Report:
    """Check (CA), (CU), invertibility and naturality of `m`.

    (CU) is checked in its unit form: both `e_{♭X}∘m_X` and
    `♭(e_X)∘m_X` must be the identity of `♭X`.

    Raises:
        MissingComultiplication: If `♭` carries no comultiplication.

    """
    if not F.has_comultiplication:
        raise errors.MissingComultiplication

    C = F.category
    builder = ReportBuilder("idempotent comonad")

    for obj in C.objects:
        m = F.comultiplication(obj)
        flat = F.object_map(obj)
        identity = C.identity(flat)

        lhs = C.compose(F.comultiplication(flat), m)
        rhs = C.compose(F.morphism_map(m), m)
        builder.record("CA", lhs == rhs, m)

        first = C.compose(F.counit(flat), m)
        second = C.compose(F.morphism_map(F.counit(obj)), m)
        builder.record("CU", first == identity, m, detail="e_{♭X}∘m_X")
        builder.record("CU", second == identity, m, detail="♭(e_X)∘m_X")

        invertible = kernel.is_injective(
            m.function
        ) and kernel.is_surjective(m.function)
        builder.record("invertible", invertible, m)

    for f in all_morphisms(C):
        try:
            flat_f = F.morphism_map(f)
        except errors.InvalidSpec:
            continue
        lhs = C.compose(F.morphism_map(flat_f), F.comultiplication(f.source))
        rhs = C.compose(F.comultiplication(f.target), flat_f)
        builder.record("comultiplication naturality", lhs == rhs, f)

    return builder.build()
