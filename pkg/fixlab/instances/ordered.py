"""Thin categories from ordered magmas.

A finite poset with a monotone binary operation `·` is a thin magmoidal
category: there is a (unique) morphism `a -> b` exactly when `a ≤ b`, and
`a # b := a·b`. Diagonals `a -> a·a` exist because `a ≤ a·a` is required.

Each element is represented by an object with the one-element carrier
`{a}`, so that the unique morphism is an ordinary finite function.
"""

import itertools
from collections.abc import Iterable, Iterator, Mapping

from typing_extensions import override

from fixlab import errors, kernel
from fixlab.category import Magmoid, Morphism, Obj


def _closure(
    elements: tuple[str, ...], order: Iterable[tuple[str, str]]
) -> frozenset[tuple[str, str]]:
    relation = {(a, a) for a in elements} | set(order)

    for a, b in relation:
        if a not in elements or b not in elements:
            msg = f"Order relates unknown elements {a!r} and {b!r}"
            raise errors.InvalidSpec(msg)

    # Warshall
    for k, i, j in itertools.product(elements, repeat=3):
        if (i, k) in relation and (k, j) in relation:
            relation.add((i, j))

    for a, b in relation:
        if a != b and (b, a) in relation:
            msg = f"Order is not antisymmetric on {a!r} and {b!r}"
            raise errors.InvalidSpec(msg)

    return frozenset(relation)


class OrderedMagma(Magmoid):
    """The thin category of a finite ordered magma.

    Raises:
        InvalidSpec: If the order is not a partial order, the operation is
            not total, not monotone, or some `a ≰ a·a`.

    """

    variant = "ordered_magma"

    def __init__(
        self,
        *,
        elements: Iterable[str],
        order: Iterable[tuple[str, str]],
        operation: Mapping[str, Mapping[str, str]],
        t: str,
    ) -> None:
        names = tuple(sorted(elements))
        self.leq = _closure(names, order)
        self.operation = {
            (a, b): operation.get(a, {}).get(b, "")
            for a in names
            for b in names
        }
        self._objects = {
            a: Obj(a, kernel.FiniteSet.of(a, name=a)) for a in names
        }

        if t not in self._objects:
            msg = f"Chosen object {t!r} is not an element"
            raise errors.InvalidSpec(msg)

        super().__init__(objects=self._objects.values(), t=self._objects[t])
        self._validate(names)

    def _validate(self, names: tuple[str, ...]) -> None:
        for (a, b), c in self.operation.items():
            if c not in self._objects:
                msg = f"Operation is undefined or foreign at ({a}, {b})"
                raise errors.InvalidSpec(msg)

        for a, a1, b, b1 in itertools.product(names, repeat=4):
            if (
                (a, a1) in self.leq
                and (b, b1) in self.leq
                and (self.operation[a, b], self.operation[a1, b1])
                not in self.leq
            ):
                msg = (
                    f"Operation is not monotone: {a} ≤ {a1} and {b} ≤ {b1}"
                )
                raise errors.InvalidSpec(msg)

        for a in names:
            if (a, self.operation[a, a]) not in self.leq:
                msg = f"Element {a!r} does not satisfy a ≤ a·a"
                raise errors.InvalidSpec(msg)

    def element(self, name: str, /) -> Obj:
        """Return the object of an element."""
        return self._objects[name]

    @override
    def accepts(
        self, function: kernel.FiniteFunction, source: Obj, target: Obj
    ) -> bool:
        return (
            function.dom == source.carrier
            and function.cod == target.carrier
            and (source.name, target.name) in self.leq
        )

    @override
    def hom(self, source: Obj, target: Obj) -> Iterator[Morphism]:
        if (source.name, target.name) in self.leq:
            yield self._arrow(source, target)

    def _arrow(self, source: Obj, target: Obj) -> Morphism:
        return Morphism(
            source,
            target,
            kernel.FiniteFunction(
                source.carrier, target.carrier, target.carrier.elements
            ),
        )

    @override
    def product(self, first: Obj, second: Obj) -> Obj:
        return self._objects[self.operation[first.name, second.name]]

    @override
    def product_map(self, f: Morphism, g: Morphism) -> Morphism:
        return self._arrow(
            self.product(f.source, g.source), self.product(f.target, g.target)
        )

    @override
    def diagonal(self, obj: Obj, /) -> Morphism:
        return self._arrow(obj, self.product(obj, obj))
