"""Pointed magmoidal categories with diagonals.

A magmoidal category is a category with a product bifunctor `#` that obeys
no unit, associativity or projection laws. Together with a chosen object `t`
(the domain of generalised elements) and a partial family of diagonals
`δ_X: X -> X#X`, it is the setting of every theorem in this package.

All categories here are concrete: objects own a finite carrier and
morphisms are finite functions that pass the category's hom predicate.
"""

import abc
import logging
import warnings
from collections.abc import Collection, Iterable, Iterator, Mapping

import more_itertools
import pydantic
from typing_extensions import Self, final, override

from fixlab import constants, errors, kernel, models


logger = logging.getLogger(__name__)


@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class Obj:
    """An object of a concrete category: a name and a finite carrier."""

    name: str
    carrier: kernel.FiniteSet

    @override
    def __str__(self) -> str:
        return self.name


@final
@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class PointedObj(Obj):
    """A finite set with a distinguished basepoint."""

    basepoint: str

    @pydantic.model_validator(mode="after")
    def _check_basepoint(self) -> Self:
        if self.basepoint not in self.carrier:
            msg = f"Basepoint {self.basepoint!r} is not in {self.name!r}"
            raise ValueError(msg)

        return self


@final
@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class SliceObj(Obj):
    """An object of a slice category: a carrier with a map into the base."""

    structure: kernel.FiniteFunction

    @pydantic.model_validator(mode="after")
    def _check_structure(self) -> Self:
        if self.structure.dom != self.carrier:
            msg = f"Structure map of {self.name!r} has the wrong domain"
            raise ValueError(msg)

        return self


@final
@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class CosemigroupObj(Obj):
    """A finite set with a comultiplication `X -> X×X`."""

    comul: kernel.FiniteFunction


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class Morphism:
    """A finite function tagged with its source and target objects."""

    source: pydantic.SkipValidation[Obj]
    target: pydantic.SkipValidation[Obj]
    function: pydantic.SkipValidation[kernel.FiniteFunction]

    @pydantic.model_validator(mode="after")
    def _check_ends(self) -> Self:
        if self.function.dom != self.source.carrier:
            msg = f"Function domain does not match {self.source.name!r}"
            raise ValueError(msg)
        if self.function.cod != self.target.carrier:
            msg = f"Function codomain does not match {self.target.name!r}"
            raise ValueError(msg)

        return self

    def __call__(self, element: str, /) -> str:
        return self.function(element)

    def table(self) -> dict[str, str]:
        """Return the mapping table."""
        return self.function.as_dict()

    def describe(self) -> str:
        """Render the morphism as `X -> Y {x↦y, ...}`.

        Examples:
            >>> one = Obj("1", kernel.FiniteSet.of("*"))
            >>> Magmoid.identity_on(one).describe()
            '1 -> 1 {*↦*}'

        """
        table = ", ".join(f"{x}↦{y}" for x, y in self.function.items())
        return f"{self.source} -> {self.target} {{{table}}}"

    @override
    def __repr__(self) -> str:
        return f"Morphism({self.describe()})"


def _atomic(name: str) -> str:
    return name if name.isalnum() else f"({name})"


def product_name(first: Obj, second: Obj, /) -> str:
    """Name the product object, parenthesising compound factors.

    Examples:
        >>> a = Obj("A", kernel.FiniteSet.of("0"))
        >>> product_name(a, a)
        'A#A'
        >>> product_name(Obj("A#A", a.carrier), a)
        '(A#A)#A'

    """
    return f"{_atomic(first.name)}#{_atomic(second.name)}"


def power_name(source: Obj, target: Obj, /) -> str:
    """Name the internal hom `target^source`."""
    return f"{_atomic(target.name)}^{_atomic(source.name)}"


def flat_name(obj: Obj, /) -> str:
    """Name the object `♭obj`.

    Examples:
        >>> flat_name(Obj("A", kernel.FiniteSet.of("0")))
        '♭A'

    """
    return f"{constants.FLAT_PREFIX}{obj.name}"


def tabulate(
    source: Obj, target: Obj, mapping: Mapping[str, str]
) -> Morphism:
    """Build a morphism from a mapping that covers the source carrier."""
    images = tuple(mapping[x] for x in source.carrier)
    return Morphism(
        source,
        target,
        kernel.FiniteFunction(source.carrier, target.carrier, images),
    )


class Magmoid(metaclass=abc.ABCMeta):
    """A finite concrete pointed magmoidal category with diagonals.

    Subclasses implement the hom predicate, the product bifunctor and,
    where the example has them, diagonals, projections and internal homs.
    Objects that are not listed (products, internal homs, images of
    endofunctors) are built on demand; `objects` is the universe that the
    exhaustive checkers range over.
    """

    variant: str = "abstract"

    def __init__(self, *, objects: Iterable[Obj], t: Obj) -> None:
        self.objects = tuple(objects)
        self.t = t

    @override
    def __repr__(self) -> str:
        names = ", ".join(obj.name for obj in self.objects)
        return f"{type(self).__name__}(objects=[{names}], t={self.t.name})"

    # hom-sets

    @abc.abstractmethod
    def accepts(
        self, function: kernel.FiniteFunction, source: Obj, target: Obj
    ) -> bool:
        """Decide whether `function` is a morphism `source -> target`."""

    def hom(self, source: Obj, target: Obj) -> Iterator[Morphism]:
        """Enumerate the hom-set in the kernel's lexicographic order.

        Raises:
            SizeLimitExceeded: If there are too many candidate functions.

        """
        for function in kernel.enumerate_functions(
            source.carrier, target.carrier
        ):
            if self.accepts(function, source, target):
                yield Morphism(source, target, function)

    def morphism(
        self,
        source: Obj,
        target: Obj,
        table: Mapping[str, str] | Iterable[tuple[str, str]],
    ) -> Morphism:
        """Build a morphism from a mapping table.

        Raises:
            NotAMorphism: If the hom predicate rejects the table.

        """
        function = kernel.make_function(source.carrier, target.carrier, table)

        if not self.accepts(function, source, target):
            raise errors.NotAMorphism(
                function.as_dict(), source=source.name, target=target.name
            )

        return Morphism(source, target, function)

    @staticmethod
    def identity_on(obj: Obj, /) -> Morphism:
        """Return the identity morphism of an object."""
        return Morphism(obj, obj, kernel.identity(obj.carrier))

    def identity(self, obj: Obj, /) -> Morphism:
        """Return the identity morphism of an object."""
        return self.identity_on(obj)

    @staticmethod
    def compose(*morphisms: Morphism) -> Morphism:
        """Compose right to left: `compose(h, g, f)` is `h∘g∘f`.

        Raises:
            CompositionMismatch: If adjacent morphisms do not line up.

        """
        *rest, result = morphisms

        for g in reversed(rest):
            if g.source != result.target:
                raise errors.CompositionMismatch(g, result)

            result = Morphism(
                result.source,
                g.target,
                kernel.compose(g.function, result.function),
            )

        return result

    # magmoidal structure

    @abc.abstractmethod
    def product(self, first: Obj, second: Obj) -> Obj:
        """Return the object `first # second`."""

    @abc.abstractmethod
    def product_map(self, f: Morphism, g: Morphism) -> Morphism:
        """Return the morphism `f # g`."""

    def diagonal(self, obj: Obj, /) -> Morphism:
        """Return `δ_obj: obj -> obj # obj`.

        Raises:
            MissingDiagonal: If the diagonal is undefined on `obj`.

        """
        raise errors.MissingDiagonal(obj.name)

    def has_diagonal(self, obj: Obj, /) -> bool:
        """Check whether `δ_obj` is defined."""
        try:
            self.diagonal(obj)
        except errors.MissingDiagonal:
            return False

        return True

    def right_projection(self, first: Obj, second: Obj) -> Morphism:
        """Return `pr₂: first # second -> second`.

        Raises:
            MissingProjection: If the instance has no right projections.

        """
        del first, second
        raise errors.MissingProjection(self.variant)

    def internal_hom(self, source: Obj, target: Obj) -> tuple[Obj, Morphism]:
        """Return the canonical candidate `(target^source, ev)`.

        Raises:
            MissingInternalHom: If the instance is not closed.

        """
        del source, target
        raise errors.MissingInternalHom(self.variant)

    def find_object(self, name: str, /) -> Obj:
        """Look up a listed object (or `t`) by name.

        Raises:
            KeyError: If no such object is listed.

        """
        for obj in (*self.objects, self.t):
            if obj.name == name:
                return obj

        msg = f"Unknown object {name!r}"
        raise KeyError(msg)


class DelegatingMagmoid(Magmoid):
    """A magmoid that forwards everything to a base instance.

    Subclasses override single operations, which is how partial diagonals
    and deliberately corrupted instances are built.
    """

    def __init__(self, base: Magmoid) -> None:
        super().__init__(objects=base.objects, t=base.t)
        self.base = base
        self.variant = base.variant

    @override
    def accepts(
        self, function: kernel.FiniteFunction, source: Obj, target: Obj
    ) -> bool:
        return self.base.accepts(function, source, target)

    @override
    def hom(self, source: Obj, target: Obj) -> Iterator[Morphism]:
        return self.base.hom(source, target)

    @override
    def product(self, first: Obj, second: Obj) -> Obj:
        return self.base.product(first, second)

    @override
    def product_map(self, f: Morphism, g: Morphism) -> Morphism:
        return self.base.product_map(f, g)

    @override
    def diagonal(self, obj: Obj, /) -> Morphism:
        return self.base.diagonal(obj)

    @override
    def right_projection(self, first: Obj, second: Obj) -> Morphism:
        return self.base.right_projection(first, second)

    @override
    def internal_hom(self, source: Obj, target: Obj) -> tuple[Obj, Morphism]:
        return self.base.internal_hom(source, target)


@final
class RestrictedDiagonals(DelegatingMagmoid):
    """A magmoid whose diagonals are defined only on chosen objects."""

    def __init__(self, base: Magmoid, objects: Collection[Obj]) -> None:
        super().__init__(base)
        self.diagonal_objects = frozenset(objects)

    @override
    def diagonal(self, obj: Obj, /) -> Morphism:
        if obj not in self.diagonal_objects:
            raise errors.MissingDiagonal(obj.name)

        return self.base.diagonal(obj)


def restrict_diagonals(C: Magmoid, objects: Collection[Obj]) -> Magmoid:
    """Forget every diagonal except those on `objects`."""
    return RestrictedDiagonals(C, objects)


def t_points(C: Magmoid, obj: Obj) -> list[Morphism]:
    """Return all morphisms `t -> obj` in enumeration order.

    Raises:
        SizeLimitExceeded: If `Hom(t, obj)` is too large to enumerate.

    """
    return list(C.hom(C.t, obj))


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class TFreeness:
    """Outcome of `is_t_free`."""

    free: bool
    witness: pydantic.SkipValidation[Morphism | None] = None
    """A t-point fixed by the endomorphism, when there is one."""
    vacuous: bool = False
    """Whether the object has no t-points at all."""

    def __bool__(self) -> bool:
        return self.free


def _check_endomorphism(sigma: Morphism) -> None:
    if sigma.source != sigma.target:
        msg = f"{sigma!r} is not an endomorphism"
        raise ValueError(msg)


def is_t_free(C: Magmoid, sigma: Morphism) -> TFreeness:
    """Check that `sigma` moves every t-point.

    Raises:
        ValueError: If `sigma` is not an endomorphism.

    """
    _check_endomorphism(sigma)
    points = t_points(C, sigma.source)

    for point in points:
        if C.compose(sigma, point) == point:
            return TFreeness(free=False, witness=point)

    if not points:
        warnings.warn(
            f"{sigma.source.name!r} has no t-points; t-freeness is vacuous",
            errors.VacuityWarning,
            stacklevel=2,
        )

    return TFreeness(free=True, vacuous=not points)


def fixed_t_points(C: Magmoid, sigma: Morphism) -> list[Morphism]:
    """Return every t-point `c` with `σ∘c = c`, in enumeration order."""
    _check_endomorphism(sigma)
    return [
        point
        for point in t_points(C, sigma.source)
        if C.compose(sigma, point) == point
    ]


def point_equal(C: Magmoid, f: Morphism, g: Morphism) -> bool:
    """Check whether `f∘x = g∘x` for every t-point `x` of the source.

    Raises:
        ValueError: If `f` and `g` are not parallel.

    """
    if (f.source, f.target) != (g.source, g.target):
        msg = f"{f!r} and {g!r} are not parallel"
        raise ValueError(msg)

    return all(
        C.compose(f, point) == C.compose(g, point)
        for point in t_points(C, f.source)
    )


def check_t_not_initial(C: Magmoid, sigma: Morphism) -> bool:
    """Derived check: a t-free `σ` with a t-point forces t to be non-initial.

    Returns `True` when the implication holds on this instance, that is,
    when `σ` is not t-free, has no t-points, or some listed object (or the
    source of `σ`) receives two distinct morphisms from `t`.
    """
    freeness = is_t_free(C, sigma)

    if not freeness or freeness.vacuous:
        return True

    candidates = more_itertools.unique_everseen((*C.objects, sigma.source))
    return any(
        more_itertools.ilen(C.hom(C.t, obj)) >= 2  # noqa: PLR2004
        for obj in candidates
    )
