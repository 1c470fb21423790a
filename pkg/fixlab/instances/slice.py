"""The slice category of finite sets over a base set `X`.

Objects are maps `α: A -> X` and morphisms are maps over `X`. Two products
are available: the fibre product, which is the categorical product, and
the twisted product `(A×B -> B -> X)`, which is closed with internal hom
`hom_X(B,C)×X -> X`.
"""

import itertools
from collections.abc import Iterable, Mapping

from typing_extensions import Literal, TypeAlias, override

from fixlab import kernel
from fixlab.category import (
    Magmoid,
    Morphism,
    Obj,
    SliceObj,
    power_name,
    product_name,
    tabulate,
)


SliceProduct: TypeAlias = Literal["fibre", "twisted"]


def slice_object(
    name: str, base: kernel.FiniteSet, structure: Mapping[str, str]
) -> SliceObj:
    """Create an object over `base` from its structure table."""
    carrier = kernel.FiniteSet.of(*structure, name=name)
    return SliceObj(
        name, carrier, kernel.make_function(carrier, base, structure)
    )


def _over(obj: Obj) -> SliceObj:
    if not isinstance(obj, SliceObj):
        msg = f"{obj.name!r} is not an object of a slice category"
        raise TypeError(msg)

    return obj


class SliceCategory(Magmoid):
    """Finite sets over a fixed base set."""

    variant = "slice"

    def __init__(
        self,
        *,
        base: kernel.FiniteSet,
        objects: Iterable[SliceObj],
        t: SliceObj,
        product: SliceProduct = "twisted",
    ) -> None:
        super().__init__(objects=objects, t=t)
        self.base = base
        self.product_kind: SliceProduct = product

    def _pairs(
        self, first: SliceObj, second: SliceObj
    ) -> list[tuple[str, str]]:
        pairs = itertools.product(first.carrier, second.carrier)

        if self.product_kind == "fibre":
            return [
                (a, b)
                for a, b in pairs
                if first.structure(a) == second.structure(b)
            ]

        return list(pairs)

    @override
    def accepts(
        self, function: kernel.FiniteFunction, source: Obj, target: Obj
    ) -> bool:
        return (
            function.dom == source.carrier
            and function.cod == target.carrier
            and kernel.compose(_over(target).structure, function)
            == _over(source).structure
        )

    @override
    def product(self, first: Obj, second: Obj) -> SliceObj:
        left, right = _over(first), _over(second)
        structure = {
            kernel.pair_label(a, b): right.structure(b)
            for a, b in self._pairs(left, right)
        }
        return slice_object(product_name(left, right), self.base, structure)

    @override
    def product_map(self, f: Morphism, g: Morphism) -> Morphism:
        mapping = {
            kernel.pair_label(a, b): kernel.pair_label(f(a), g(b))
            for a, b in self._pairs(_over(f.source), _over(g.source))
        }
        return tabulate(
            self.product(f.source, g.source),
            self.product(f.target, g.target),
            mapping,
        )

    @override
    def diagonal(self, obj: Obj, /) -> Morphism:
        return tabulate(
            obj,
            self.product(obj, obj),
            {a: kernel.pair_label(a, a) for a in obj.carrier},
        )

    @override
    def right_projection(self, first: Obj, second: Obj) -> Morphism:
        return tabulate(
            self.product(first, second),
            second,
            {
                kernel.pair_label(a, b): b
                for a, b in self._pairs(_over(first), _over(second))
            },
        )

    @override
    def internal_hom(self, source: Obj, target: Obj) -> tuple[Obj, Morphism]:
        """Return `hom_X(B,C)×X -> X` with evaluation `((h,x),b) ↦ h(b)`.

        Only the twisted product is closed this way.
        """
        if self.product_kind != "twisted":
            return super().internal_hom(source, target)

        homs = {
            kernel.table_label(h.function): h
            for h in self.hom(source, target)
        }
        structure = {
            kernel.pair_label(label, x): x
            for label in homs
            for x in self.base
        }
        power = slice_object(power_name(source, target), self.base, structure)
        ev = tabulate(
            self.product(power, source),
            target,
            {
                kernel.pair_label(kernel.pair_label(label, x), b): h(b)
                for label, h in homs.items()
                for x in self.base
                for b in source.carrier
            },
        )
        return power, ev
