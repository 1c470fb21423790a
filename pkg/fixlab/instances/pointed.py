"""Pointed finite sets with smash-like products.

Two products are provided. The smash product collapses both the basepoint
row and the basepoint column of `X×Y`. The ⊥-twisted product collapses only
the basepoint row; it is the smash product of `X` with `Y` plus a fresh
basepoint, and it is closed.

Quotient classes are stored in canonical form: the collapsed class is
labelled `*` and every other class by its unique pair `(x,y)`.
"""

import abc
import itertools
from collections.abc import Iterable

from typing_extensions import override

from fixlab import constants, kernel
from fixlab.category import (
    Magmoid,
    Morphism,
    Obj,
    PointedObj,
    power_name,
    product_name,
    tabulate,
)


def pointed_set(name: str, basepoint: str, *others: str) -> PointedObj:
    """Create a pointed set from its basepoint and the remaining elements.

    Examples:
        >>> pointed_set("X", "*", "a").carrier.elements
        ('*', 'a')

    """
    carrier = kernel.FiniteSet.of(basepoint, *others, name=name)
    return PointedObj(name, carrier, basepoint)


def _pointed(obj: Obj) -> PointedObj:
    if not isinstance(obj, PointedObj):
        msg = f"{obj.name!r} is not a pointed set"
        raise TypeError(msg)

    return obj


class PointedSets(Magmoid):
    """Pointed finite sets and basepoint-preserving maps.

    Subclasses decide which pairs are collapsed into the basepoint class.
    """

    def __init__(
        self, *, objects: Iterable[PointedObj], t: PointedObj
    ) -> None:
        super().__init__(objects=objects, t=t)

    @abc.abstractmethod
    def collapses(
        self, first: PointedObj, second: PointedObj, x: str, y: str
    ) -> bool:
        """Decide whether `(x, y)` lies in the basepoint class."""

    def product_class(
        self, first: PointedObj, second: PointedObj, x: str, y: str
    ) -> str:
        """Return the canonical label of the class of `(x, y)`."""
        if self.collapses(first, second, x, y):
            return constants.BASEPOINT_CLASS

        return kernel.pair_label(x, y)

    @override
    def accepts(
        self, function: kernel.FiniteFunction, source: Obj, target: Obj
    ) -> bool:
        return (
            function.dom == source.carrier
            and function.cod == target.carrier
            and function(_pointed(source).basepoint)
            == _pointed(target).basepoint
        )

    @override
    def product(self, first: Obj, second: Obj) -> PointedObj:
        left, right = _pointed(first), _pointed(second)
        classes = {
            self.product_class(left, right, x, y)
            for x, y in itertools.product(left.carrier, right.carrier)
        }
        return PointedObj(
            product_name(left, right),
            kernel.FiniteSet.of(*classes),
            constants.BASEPOINT_CLASS,
        )

    @override
    def product_map(self, f: Morphism, g: Morphism) -> Morphism:
        sources = _pointed(f.source), _pointed(g.source)
        targets = _pointed(f.target), _pointed(g.target)
        mapping = {
            self.product_class(*sources, x, y): self.product_class(
                *targets, f(x), g(y)
            )
            for x, y in itertools.product(*(s.carrier for s in sources))
        }
        return tabulate(
            self.product(*sources), self.product(*targets), mapping
        )

    @override
    def diagonal(self, obj: Obj, /) -> Morphism:
        pointed = _pointed(obj)
        return tabulate(
            pointed,
            self.product(pointed, pointed),
            {
                x: self.product_class(pointed, pointed, x, x)
                for x in obj.carrier
            },
        )


class Smash(PointedSets):
    """Pointed sets with the smash product `X ∧ Y`."""

    variant = "smash"

    @override
    def collapses(
        self, first: PointedObj, second: PointedObj, x: str, y: str
    ) -> bool:
        return x == first.basepoint or y == second.basepoint


class PointedBottom(PointedSets):
    """Pointed sets with `(X×Y)/((x₀,y)~(x₀,y'))`.

    This is `X ∧ (Y + ⊥)`. It is closed: `(Y,y₀)^(Z,z₀)` is the set of
    all functions `Z -> Y`, pointed by the function constant at `y₀`.
    """

    variant = "pointed_bot"

    @override
    def collapses(
        self, first: PointedObj, second: PointedObj, x: str, y: str
    ) -> bool:
        del second, y
        return x == first.basepoint

    @override
    def internal_hom(self, source: Obj, target: Obj) -> tuple[Obj, Morphism]:
        exponent, base = _pointed(source), _pointed(target)
        tables = {
            kernel.table_label(phi): phi
            for phi in kernel.enumerate_functions(
                exponent.carrier, base.carrier
            )
        }
        constant = kernel.table_label(
            kernel.FiniteFunction(
                exponent.carrier,
                base.carrier,
                (base.basepoint,) * len(exponent.carrier),
            )
        )
        power = PointedObj(
            power_name(exponent, base), kernel.FiniteSet.of(*tables), constant
        )
        mapping = {
            self.product_class(power, exponent, label, z): phi(z)
            for label, phi in tables.items()
            for z in exponent.carrier
        }
        mapping[constants.BASEPOINT_CLASS] = base.basepoint
        return power, tabulate(self.product(power, exponent), base, mapping)
