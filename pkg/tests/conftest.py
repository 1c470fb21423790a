import pathlib
from collections.abc import Mapping

from typing_extensions import Final, override

import fixlab
from fixlab import kernel
from fixlab.category import DelegatingMagmoid, tabulate


THIS_DIR: Final = pathlib.Path(__file__).parent
SPECS_DIR: Final = THIS_DIR.parent / "specs"


def spec_path(name: str) -> str:
    """Return the path of a shipped instance file."""
    return str(SPECS_DIR / f"{name}.json")


def finset(*sizes: int, t: int = 1) -> fixlab.FinSet:
    """Build finite sets `{0..n-1}` named `n`, with `t` the given size."""
    objects = [_numbered(size) for size in sizes]
    chosen = _numbered(t)
    if chosen not in objects:
        objects.append(chosen)

    return fixlab.FinSet(objects=objects, t=chosen)


def fininj(*sizes: int, t: int = 1) -> fixlab.FinInj:
    """Like `finset`, but keeping only the injections."""
    C = finset(*sizes, t=t)
    return fixlab.FinInj(objects=C.objects, t=C.t)


def _numbered(size: int) -> fixlab.Obj:
    return fixlab.finite_set(str(size), *map(str, range(size)))


def pointed(name: str, size: int) -> fixlab.PointedObj:
    """Build the pointed set `{*, 1, ..., size-1}` with basepoint `*`."""
    return fixlab.instances.pointed.pointed_set(
        name, "*", *map(str, range(1, size))
    )


def smash(*sizes: int) -> fixlab.Smash:
    """Pointed sets of the given sizes with the smash product, `t = 1`."""
    objects = [pointed(str(size), size) for size in sizes]
    return fixlab.Smash(objects=objects, t=pointed("1", 1))


def pointed_bot(*sizes: int) -> fixlab.PointedBottom:
    """Pointed sets of the given sizes with the closed ⊥ product."""
    objects = [pointed(str(size), size) for size in sizes]
    return fixlab.PointedBottom(objects=objects, t=pointed("1", 1))


def obj(C: fixlab.Magmoid, name: str) -> fixlab.Obj:
    return C.find_object(name)


def morphism(
    C: fixlab.Magmoid,
    source: fixlab.Obj | str,
    target: fixlab.Obj | str,
    table: Mapping[str, str],
) -> fixlab.Morphism:
    """Build a checked morphism, looking objects up by name."""
    if isinstance(source, str):
        source = obj(C, source)
    if isinstance(target, str):
        target = obj(C, target)

    return C.morphism(source, target, table)


def point(
    C: fixlab.Magmoid, target: fixlab.Obj | str, x: str
) -> fixlab.Morphism:
    """The t-point constant at `x`."""
    if isinstance(target, str):
        target = obj(C, target)

    return C.morphism(C.t, target, dict.fromkeys(C.t.carrier, x))


def logical_or(C: fixlab.Magmoid) -> fixlab.Morphism:
    """`F: 2#2 -> 2` with `F(a, b) = a or b`."""
    two = obj(C, "2")
    return C.morphism(
        C.product(two, two),
        two,
        {
            kernel.pair_label(a, b): str(max(int(a), int(b)))
            for a in two.carrier
            for b in two.carrier
        },
    )


class CorruptedProduct(DelegatingMagmoid):
    """A magmoid whose `f # g` has one entry changed for a single `f`."""

    def __init__(
        self, base: fixlab.Magmoid, victim: fixlab.Morphism
    ) -> None:
        super().__init__(base)
        self.victim = victim

    @override
    def product_map(
        self, f: fixlab.Morphism, g: fixlab.Morphism
    ) -> fixlab.Morphism:
        result = self.base.product_map(f, g)
        if f != self.victim or len(result.target.carrier) < 2:
            return result

        table = result.table()
        first = next(iter(table))
        others = [y for y in result.target.carrier if y != table[first]]
        table[first] = others[0]
        return tabulate(result.source, result.target, table)


class CorruptedDiagonal(DelegatingMagmoid):
    """A magmoid whose diagonal on one object is rerouted."""

    def __init__(self, base: fixlab.Magmoid, victim: fixlab.Obj) -> None:
        super().__init__(base)
        self.victim = victim

    @override
    def diagonal(self, obj: fixlab.Obj, /) -> fixlab.Morphism:
        delta = self.base.diagonal(obj)
        if obj != self.victim:
            return delta

        table = delta.table()
        x, y = sorted(table)[:2]
        table[x], table[y] = table[y], table[x]
        return tabulate(delta.source, delta.target, table)
