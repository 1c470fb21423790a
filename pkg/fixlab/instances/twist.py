"""Magmoidal products twisted by a pointed endofunctor.

Given a monoidal product `⊗` with diagonals and a pointed endofunctor
`(T, ι: Id ⇒ T)`, the left twist is `A ₜ# B := T(A) ⊗ B` and the right
twist is `A #ₜ B := A ⊗ T(B)`. Both have diagonals, obtained by composing
the old diagonal with `ι`. Over a cartesian base the left twist keeps the
right projection `T(A) ⊗ B -> B`.
"""

import abc
import itertools
import logging

from typing_extensions import override

from fixlab import constants, errors, kernel
from fixlab.category import (
    DelegatingMagmoid,
    Magmoid,
    Morphism,
    Obj,
    PointedObj,
    SliceObj,
    tabulate,
)
from fixlab.checks import all_morphisms, composable_pairs


logger = logging.getLogger(__name__)


class PointedEndofunctor(metaclass=abc.ABCMeta):
    """An endofunctor `T` together with a point `ι: Id ⇒ T`."""

    name: str = "T"

    @abc.abstractmethod
    def on_object(self, obj: Obj, /) -> Obj:
        """Return `T(obj)`."""

    @abc.abstractmethod
    def on_morphism(self, f: Morphism, /) -> Morphism:
        """Return `T(f)`."""

    @abc.abstractmethod
    def unit(self, obj: Obj, /) -> Morphism:
        """Return `ι_obj: obj -> T(obj)`."""

    def validate(self, C: Magmoid) -> None:
        """Check functoriality and naturality of `ι` over listed objects.

        Raises:
            InvalidSpec: If `T` does not preserve identities or composites,
                or produces a non-morphism.
            NotNatural: If `ι` fails naturality on some morphism.

        """
        morphisms = all_morphisms(C)

        for obj in C.objects:
            image = self.on_object(obj)
            if self.on_morphism(C.identity(obj)) != C.identity(image):
                msg = f"{self.name} does not preserve the identity of {obj}"
                raise errors.InvalidSpec(msg)

        for f in morphisms:
            tf = self.on_morphism(f)
            if not C.accepts(tf.function, tf.source, tf.target):
                msg = f"{self.name} sends {f!r} to a non-morphism"
                raise errors.InvalidSpec(msg)
            if C.compose(tf, self.unit(f.source)) != C.compose(
                self.unit(f.target), f
            ):
                raise errors.NotNatural(f"ι of {self.name}", f)

        for g, f in composable_pairs(morphisms):
            if self.on_morphism(C.compose(g, f)) != C.compose(
                self.on_morphism(g), self.on_morphism(f)
            ):
                msg = f"{self.name} does not preserve {g!r}∘{f!r}"
                raise errors.InvalidSpec(msg)


class IdentityEndofunctor(PointedEndofunctor):
    """The identity functor with `ι = id`."""

    name = "Id"

    @override
    def on_object(self, obj: Obj, /) -> Obj:
        return obj

    @override
    def on_morphism(self, f: Morphism, /) -> Morphism:
        return f

    @override
    def unit(self, obj: Obj, /) -> Morphism:
        return Magmoid.identity_on(obj)


def _fresh(carrier: kernel.FiniteSet) -> str:
    label = constants.BOTTOM
    while label in carrier:
        label += "'"
    return label


class BottomEndofunctor(PointedEndofunctor):
    """Adjoin a fresh point `⊥`: `T(X) = X ⊔ {⊥}` and `T(f) = f ⊔ id`.

    On plain finite sets `ι` is the inclusion. On pointed sets `⊥` becomes
    the new basepoint and `ι` must be basepoint-preserving and natural,
    which leaves only the map constant at `⊥`.
    """

    name = "T⊥"

    def _bottom(self, obj: Obj) -> str:
        return _fresh(obj.carrier)

    @override
    def on_object(self, obj: Obj, /) -> Obj:
        bottom = self._bottom(obj)
        carrier = kernel.FiniteSet.of(*obj.carrier, bottom)
        name = f"{self.name}({obj.name})"

        if isinstance(obj, PointedObj):
            return PointedObj(name, carrier, bottom)

        return Obj(name, carrier)

    @override
    def on_morphism(self, f: Morphism, /) -> Morphism:
        mapping = f.table()
        mapping[self._bottom(f.source)] = self._bottom(f.target)
        return tabulate(
            self.on_object(f.source), self.on_object(f.target), mapping
        )

    @override
    def unit(self, obj: Obj, /) -> Morphism:
        bottom = self._bottom(obj)

        if isinstance(obj, PointedObj):
            mapping = dict.fromkeys(obj.carrier, bottom)
        else:
            mapping = {x: x for x in obj.carrier}

        return tabulate(obj, self.on_object(obj), mapping)


class TimesPointEndofunctor(PointedEndofunctor):
    """`T(A) = A × K` with `ι(a) = (a, k₀)`, on plain finite sets."""

    def __init__(self, factor: kernel.FiniteSet, point: str) -> None:
        if point not in factor:
            msg = f"Point {point!r} is not in the factor"
            raise errors.InvalidSpec(msg)

        self.factor = factor
        self.point = point
        self.name = "T×K"

    @override
    def on_object(self, obj: Obj, /) -> Obj:
        return Obj(
            f"{self.name}({obj.name})",
            kernel.cartesian(obj.carrier, self.factor),
        )

    @override
    def on_morphism(self, f: Morphism, /) -> Morphism:
        return tabulate(
            self.on_object(f.source),
            self.on_object(f.target),
            {
                kernel.pair_label(a, k): kernel.pair_label(f(a), k)
                for a, k in itertools.product(f.source.carrier, self.factor)
            },
        )

    @override
    def unit(self, obj: Obj, /) -> Morphism:
        return tabulate(
            obj,
            self.on_object(obj),
            {a: kernel.pair_label(a, self.point) for a in obj.carrier},
        )


def _over(obj: Obj) -> SliceObj:
    if not isinstance(obj, SliceObj):
        msg = f"{obj.name!r} is not an object of a slice category"
        raise TypeError(msg)

    return obj


class TimesBaseEndofunctor(PointedEndofunctor):
    """`T(A -> X) = (A × X -> X)` by the second projection, on slices.

    `ι_A(a) = (a, α(a))`.
    """

    name = "T×X"

    def __init__(self, base: kernel.FiniteSet) -> None:
        self.base = base

    @override
    def on_object(self, obj: Obj, /) -> SliceObj:
        carrier = kernel.cartesian(obj.carrier, self.base)
        structure = {
            kernel.pair_label(a, x): x
            for a, x in itertools.product(obj.carrier, self.base)
        }
        return SliceObj(
            f"{self.name}({obj.name})",
            carrier,
            kernel.make_function(carrier, self.base, structure),
        )

    @override
    def on_morphism(self, f: Morphism, /) -> Morphism:
        return tabulate(
            self.on_object(f.source),
            self.on_object(f.target),
            {
                kernel.pair_label(a, x): kernel.pair_label(f(a), x)
                for a, x in itertools.product(f.source.carrier, self.base)
            },
        )

    @override
    def unit(self, obj: Obj, /) -> Morphism:
        structure = _over(obj).structure
        return tabulate(
            obj,
            self.on_object(obj),
            {a: kernel.pair_label(a, structure(a)) for a in obj.carrier},
        )


class TwistedMagmoid(DelegatingMagmoid):
    """A base magmoid with its product twisted by a pointed endofunctor."""

    def __init__(
        self,
        base: Magmoid,
        endofunctor: PointedEndofunctor,
        side: constants.Side,
    ) -> None:
        super().__init__(base)
        self.endofunctor = endofunctor
        self.side: constants.Side = side
        self.variant = f"{side}-twisted {base.variant}"

    @override
    def product(self, first: Obj, second: Obj) -> Obj:
        T = self.endofunctor
        if self.side == "left":
            return self.base.product(T.on_object(first), second)
        return self.base.product(first, T.on_object(second))

    @override
    def product_map(self, f: Morphism, g: Morphism) -> Morphism:
        T = self.endofunctor
        if self.side == "left":
            return self.base.product_map(T.on_morphism(f), g)
        return self.base.product_map(f, T.on_morphism(g))

    @override
    def diagonal(self, obj: Obj, /) -> Morphism:
        unit = self.endofunctor.unit(obj)
        identity = self.base.identity(obj)
        twist = (
            self.base.product_map(unit, identity)
            if self.side == "left"
            else self.base.product_map(identity, unit)
        )
        return self.base.compose(twist, self.base.diagonal(obj))

    @override
    def right_projection(self, first: Obj, second: Obj) -> Morphism:
        if self.side == "right":
            raise errors.MissingProjection(self.variant)

        return self.base.right_projection(
            self.endofunctor.on_object(first), second
        )

    @override
    def internal_hom(self, source: Obj, target: Obj) -> tuple[Obj, Morphism]:
        del source, target
        raise errors.MissingInternalHom(self.variant)


def twist_by_endofunctor(
    C: Magmoid, T: PointedEndofunctor, side: constants.Side
) -> Magmoid:
    """Twist the product of `C` by `T` on the given side.

    Raises:
        NotNatural: If `ι` is not natural on some listed morphism.
        InvalidSpec: If `T` is not a functor on the listed objects.

    """
    T.validate(C)
    logger.debug("Twisting %r by %s on the %s", C, T.name, side)
    return TwistedMagmoid(C, T, side)


def identity_endofunctor() -> PointedEndofunctor:
    """Return the identity functor pointed by identities."""
    return IdentityEndofunctor()


def bottom_endofunctor() -> PointedEndofunctor:
    """Return the functor adjoining a fresh `⊥` to every carrier."""
    return BottomEndofunctor()


def times_point_endofunctor(
    factor: kernel.FiniteSet, point: str
) -> PointedEndofunctor:
    """Return `A ↦ A × factor`, pointed by `point`."""
    return TimesPointEndofunctor(factor, point)


def times_base_endofunctor(base: kernel.FiniteSet) -> PointedEndofunctor:
    """Return `(A -> X) ↦ (A × X -> X)` over the slice base `X`."""
    return TimesBaseEndofunctor(base)
