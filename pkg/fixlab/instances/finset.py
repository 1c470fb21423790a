"""Finite sets with the cartesian product, and their injections.

Finite sets are the cartesian (and closed) baseline every other example is
compared against. Restricting to injections keeps the product and the
diagonals but destroys the projections.
"""

import itertools
from collections.abc import Iterator

from typing_extensions import override

from fixlab import errors, kernel
from fixlab.category import (
    Magmoid,
    Morphism,
    Obj,
    power_name,
    product_name,
    tabulate,
)


def finite_set(name: str, *elements: str) -> Obj:
    """Create a plain object with the given elements."""
    return Obj(name, kernel.FiniteSet.of(*elements, name=name))


def cartesian_map(f: Morphism, g: Morphism) -> dict[str, str]:
    """Tabulate `(x,y) ↦ (f x, g y)` over the product of the sources."""
    return {
        kernel.pair_label(x, y): kernel.pair_label(f(x), g(y))
        for x, y in itertools.product(f.source.carrier, g.source.carrier)
    }


class FinSet(Magmoid):
    """The category of finite sets and all functions.

    The product is cartesian, `δ_X(x) = (x,x)`, and both projections exist.
    The category is closed: `Y^X` is the set of all function tables.
    """

    variant = "finset"

    @override
    def accepts(
        self, function: kernel.FiniteFunction, source: Obj, target: Obj
    ) -> bool:
        return (
            function.dom == source.carrier and function.cod == target.carrier
        )

    @override
    def product(self, first: Obj, second: Obj) -> Obj:
        carrier = kernel.cartesian(first.carrier, second.carrier)
        return Obj(product_name(first, second), carrier)

    @override
    def product_map(self, f: Morphism, g: Morphism) -> Morphism:
        source = self.product(f.source, g.source)
        target = self.product(f.target, g.target)
        return tabulate(source, target, cartesian_map(f, g))

    @override
    def diagonal(self, obj: Obj, /) -> Morphism:
        return tabulate(
            obj,
            self.product(obj, obj),
            {x: kernel.pair_label(x, x) for x in obj.carrier},
        )

    @override
    def right_projection(self, first: Obj, second: Obj) -> Morphism:
        return tabulate(
            self.product(first, second),
            second,
            {
                kernel.pair_label(a, b): b
                for a, b in itertools.product(first.carrier, second.carrier)
            },
        )

    def left_projection(self, first: Obj, second: Obj) -> Morphism:
        """Return `pr₁: first # second -> first`."""
        return tabulate(
            self.product(first, second),
            first,
            {
                kernel.pair_label(a, b): a
                for a, b in itertools.product(first.carrier, second.carrier)
            },
        )

    @override
    def internal_hom(self, source: Obj, target: Obj) -> tuple[Obj, Morphism]:
        tables = {
            kernel.table_label(phi): phi
            for phi in kernel.enumerate_functions(
                source.carrier, target.carrier
            )
        }
        power = Obj(
            power_name(source, target), kernel.FiniteSet.of(*tables)
        )
        ev = tabulate(
            self.product(power, source),
            target,
            {
                kernel.pair_label(label, x): phi(x)
                for label, phi in tables.items()
                for x in source.carrier
            },
        )
        return power, ev


class FinInj(FinSet):
    """Finite sets and injections, with the cartesian product.

    The diagonals survive, but `A#A -> A` has no injection once `|A| ≥ 2`,
    so the projections are gone: a magmoidal but non-cartesian example.
    """

    variant = "fininj"

    @override
    def accepts(
        self, function: kernel.FiniteFunction, source: Obj, target: Obj
    ) -> bool:
        return super().accepts(
            function, source, target
        ) and kernel.is_injective(function)

    @override
    def hom(self, source: Obj, target: Obj) -> Iterator[Morphism]:
        size = len(target.carrier)
        count = 1
        for i in range(len(source.carrier)):
            count *= max(size - i, 0)
        kernel.check_size(count)

        # permutations of a sorted sequence come out in lexicographic order
        for images in itertools.permutations(
            target.carrier.elements, len(source.carrier)
        ):
            yield Morphism(
                source,
                target,
                kernel.FiniteFunction(source.carrier, target.carrier, images),
            )

    @override
    def right_projection(self, first: Obj, second: Obj) -> Morphism:
        del first, second
        raise errors.MissingProjection(self.variant)

    @override
    def left_projection(self, first: Obj, second: Obj) -> Morphism:
        del first, second
        raise errors.MissingProjection(self.variant)

    @override
    def internal_hom(self, source: Obj, target: Obj) -> tuple[Obj, Morphism]:
        del source, target
        raise errors.MissingInternalHom(self.variant)
