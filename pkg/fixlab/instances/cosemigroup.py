"""Cocommutative cosemigroups in finite sets.

A cosemigroup is a set `X` with a comultiplication `Δ: X -> X×X` that is
coassociative; it is cocommutative when `Δ` is invariant under swapping.
Maps of cosemigroups are the maps compatible with `Δ`, and `δ_X := Δ_X`
makes every object a comagma in a natural way.

In finite sets with the cartesian product these are exactly the sets with an
idempotent endomap `φ`, with `Δ(x) = (φ x, φ x)`.
"""

import itertools
from collections.abc import Mapping

from typing_extensions import override

from fixlab import errors, kernel
from fixlab.category import (
    CosemigroupObj,
    Morphism,
    Obj,
    product_name,
    tabulate,
)
from fixlab.instances.finset import FinSet


def _validate(
    name: str, comul: Mapping[str, tuple[str, str]]
) -> None:
    for x, (left, right) in comul.items():
        if left != right:
            msg = (
                f"Comultiplication of {name!r} is not cocommutative at {x!r}"
            )
            raise errors.InvalidSpec(msg)

        for label in (left, right):
            if label not in comul:
                msg = f"Comultiplication of {name!r} leaves the carrier"
                raise errors.InvalidSpec(msg)

        (l1, l2), (r1, r2) = comul[left], comul[right]
        if (l1, l2, right) != (left, r1, r2):
            msg = (
                f"Comultiplication of {name!r} is not coassociative at {x!r}"
            )
            raise errors.InvalidSpec(msg)


def cosemigroup(
    name: str, comul: Mapping[str, tuple[str, str]]
) -> CosemigroupObj:
    """Create a cosemigroup from its comultiplication table.

    Raises:
        InvalidSpec: If the table is not cocommutative or not coassociative.

    Examples:
        >>> x = cosemigroup("X", {"a": ("a", "a"), "b": ("a", "a")})
        >>> x.comul("b")
        '(a,a)'
        >>> cosemigroup("Y", {"a": ("b", "b"), "b": ("a", "a")})
        Traceback (most recent call last):
            ...
        fixlab.errors.InvalidSpec: Comultiplication of 'Y' is not coassociative at 'a'

    """  # noqa: E501
    _validate(name, comul)
    carrier = kernel.FiniteSet.of(*comul, name=name)
    table = {x: kernel.pair_label(*pair) for x, pair in comul.items()}
    return CosemigroupObj(
        name,
        carrier,
        kernel.make_function(
            carrier, kernel.cartesian(carrier, carrier), table
        ),
    )


def _comul(obj: Obj) -> kernel.FiniteFunction:
    if not isinstance(obj, CosemigroupObj):
        msg = f"{obj.name!r} is not a cosemigroup"
        raise TypeError(msg)

    return obj.comul


class Cosemigroups(FinSet):
    """Cocommutative cosemigroups and the maps compatible with `Δ`."""

    variant = "cosemigroup"

    @override
    def accepts(
        self, function: kernel.FiniteFunction, source: Obj, target: Obj
    ) -> bool:
        if not super().accepts(function, source, target):
            return False

        source_comul, target_comul = _comul(source), _comul(target)
        return all(
            target_comul(function(x))
            == kernel.pair_label(function(x1), function(x2))
            for x, (x1, x2) in zip(
                source.carrier, _split(source_comul), strict=True
            )
        )

    @override
    def product(self, first: Obj, second: Obj) -> CosemigroupObj:
        left, right = _comul(first), _comul(second)
        carrier = kernel.cartesian(first.carrier, second.carrier)
        left_pairs = dict(zip(first.carrier, _split(left), strict=True))
        right_pairs = dict(zip(second.carrier, _split(right), strict=True))
        table: dict[str, str] = {}
        for x, y in itertools.product(first.carrier, second.carrier):
            (x1, x2), (y1, y2) = left_pairs[x], right_pairs[y]
            table[kernel.pair_label(x, y)] = kernel.pair_label(
                kernel.pair_label(x1, y1), kernel.pair_label(x2, y2)
            )
        return CosemigroupObj(
            product_name(first, second),
            carrier,
            kernel.make_function(
                carrier, kernel.cartesian(carrier, carrier), table
            ),
        )

    @override
    def diagonal(self, obj: Obj, /) -> Morphism:
        return tabulate(obj, self.product(obj, obj), _comul(obj).as_dict())

    @override
    def internal_hom(self, source: Obj, target: Obj) -> tuple[Obj, Morphism]:
        del source, target
        raise errors.MissingInternalHom(self.variant)


def _split(comul: kernel.FiniteFunction) -> list[tuple[str, str]]:
    """Recover the pairs `Δ(x)` from their labels, in carrier order."""
    lookup = {
        kernel.pair_label(a, b): (a, b)
        for a, b in itertools.product(comul.dom, repeat=2)
    }
    return [lookup[image] for image in comul.images]
