"""The extensional quotient of a concrete magmoid.

Two parallel morphisms are identified when they agree on every t-point of
their source. The quotient keeps the objects and replaces every hom-set by
its congruence classes.
"""

import functools
import itertools
import logging

import more_itertools
import pydantic
from typing_extensions import final

from fixlab import models
from fixlab.category import Magmoid, Morphism, Obj, t_points
from fixlab.checks import find_cartesian_projections
from fixlab.reports import Report, ReportBuilder


logger = logging.getLogger(__name__)

_Signature = tuple[Morphism, ...]


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class MorphismClass:
    """A congruence class of parallel morphisms."""

    representative: pydantic.SkipValidation[Morphism]
    """The member with the lexicographically least mapping table."""
    members: pydantic.SkipValidation[tuple[Morphism, ...]]

    def __contains__(self, morphism: object) -> bool:
        return morphism in self.members


def _signature(C: Magmoid, f: Morphism, points: list[Morphism]) -> _Signature:
    return tuple(C.compose(f, x) for x in points)


class QuotientCategory:
    """The quotient `C_{=t}` of a magmoid by agreement on t-points.

    Classes are computed for every pair of listed objects. The projection
    onto the quotient is full and bijective on objects by construction.
    """

    def __init__(self, base: Magmoid) -> None:
        self.base = base
        self.t = base.t
        self.objects = tuple(
            more_itertools.unique_everseen((*base.objects, base.t))
        )
        self._points = {obj: t_points(base, obj) for obj in self.objects}
        self.classes: dict[tuple[Obj, Obj], tuple[MorphismClass, ...]] = {}
        self._class_of: dict[Morphism, MorphismClass] = {}

        for source, target in itertools.product(self.objects, repeat=2):
            self.classes[source, target] = self._partition(source, target)

    def _partition(
        self, source: Obj, target: Obj
    ) -> tuple[MorphismClass, ...]:
        groups: dict[_Signature, list[Morphism]] = {}
        points = self._points[source]

        for f in self.base.hom(source, target):
            groups.setdefault(_signature(self.base, f, points), []).append(f)

        classes = tuple(
            sorted(
                (
                    MorphismClass(
                        min(members, key=lambda m: m.function.images),
                        tuple(members),
                    )
                    for members in groups.values()
                ),
                key=lambda cls: cls.representative.function.images,
            )
        )

        for cls in classes:
            for member in cls.members:
                self._class_of[member] = cls

        logger.debug(
            "Hom(%s, %s) has %d classes", source, target, len(classes)
        )
        return classes

    def class_of(self, morphism: Morphism, /) -> MorphismClass:
        """Return the congruence class of a morphism between listed objects.

        Raises:
            KeyError: If the morphism does not lie between listed objects.

        """
        return self._class_of[morphism]

    def compose(self, g: MorphismClass, f: MorphismClass) -> MorphismClass:
        """Compose two classes through their representatives."""
        return self.class_of(
            self.base.compose(g.representative, f.representative)
        )

    def underlying(self, cls: MorphismClass) -> tuple[Morphism, ...]:
        """Apply `|−| = Hom(Qt, −)`: the action of a class on t-points."""
        f = cls.representative
        return _signature(self.base, f, self._points[f.source])

    def verify(self) -> Report:
        """Check that the quotient is a well-defined, concrete category.

        The following are verified on every listed object:
        - composition respects the congruence,
        - `|−|` is faithful,
        - `Hom(t, X)` is in bijection with `Hom(Qt, QX)`.
        """
        builder = ReportBuilder("concrete quotient")

        for x, y, z in itertools.product(self.objects, repeat=3):
            for f, g in itertools.product(
                self.base.hom(x, y), self.base.hom(y, z)
            ):
                composite = self.class_of(self.base.compose(g, f))
                via_classes = self.compose(
                    self.class_of(g), self.class_of(f)
                )
                builder.record(
                    "congruence", composite is via_classes, g, f
                )

        for classes in self.classes.values():
            for first, second in itertools.combinations(classes, 2):
                builder.record(
                    "faithfulness",
                    self.underlying(first) != self.underlying(second),
                    first.representative,
                    second.representative,
                )

        for obj in self.objects:
            builder.record(
                "points",
                len(self.classes[self.t, obj]) == len(self._points[obj]),
                self.base.identity(obj),
            )

        return builder.build()

    def verify_products(self) -> Report:
        """Check that `#` descends to classes.

        `[f]#[g]` must be well defined. When the base is cartesian, every
        `x # y` must also be a product on classes (law `pairing`).
        """
        builder = ReportBuilder("quotient product")

        for (x, y), (u, v) in itertools.product(self.classes, repeat=2):
            square_classes: dict[
                tuple[MorphismClass, MorphismClass], set[tuple[Morphism, ...]]
            ] = {}
            points = t_points(self.base, self.base.product(x, u))
            for f, g in itertools.product(
                self.base.hom(x, y), self.base.hom(u, v)
            ):
                key = (self.class_of(f), self.class_of(g))
                signature = _signature(
                    self.base, self.base.product_map(f, g), points
                )
                seen = square_classes.setdefault(key, set())
                seen.add(signature)
                builder.record("product", len(seen) == 1, f, g)

        if self.cartesian:
            for x, y in itertools.product(self.objects, repeat=2):
                square = self.base.product(x, y)
                builder.record(
                    "pairing",
                    self.pairing_projections(x, y) is not None,
                    self.base.identity(square),
                    detail=f"{x.name} # {y.name}",
                )

        return builder.build()

    @functools.cached_property
    def cartesian(self) -> bool:
        """Whether every listed object has projections splitting `δ`."""
        return all(
            self.base.has_diagonal(obj)
            and find_cartesian_projections(self.base, obj) is not None
            for obj in self.objects
        )

    def pairing_projections(
        self, first: Obj, second: Obj
    ) -> tuple[Morphism, Morphism] | None:
        """Find projections making `first # second` a product on classes.

        Returns the first pair `(p1, p2)` in enumeration order for which
        `[h] ↦ ([p1∘h], [p2∘h])` is a bijection from the classes of
        `Hom(Z, first # second)` onto pairs of classes, for every listed
        `Z`; `None` when no pair qualifies.
        """
        square = self.base.product(first, second)
        maps = {z: list(self.base.hom(z, square)) for z in self.objects}

        for p1, p2 in itertools.product(
            self.base.hom(square, first), self.base.hom(square, second)
        ):
            if all(
                self._pairs_bijectively(z, maps[z], (p1, p2))
                for z in self.objects
            ):
                return p1, p2

        return None

    def _pairs_bijectively(
        self,
        z: Obj,
        maps: list[Morphism],
        projections: tuple[Morphism, Morphism],
    ) -> bool:
        points = self._points[z]
        pairing = {
            _signature(self.base, h, points): tuple(
                _signature(self.base, self.base.compose(p, h), points)
                for p in projections
            )
            for h in maps
        }
        images = set(pairing.values())
        first, second = (p.target for p in projections)
        expected = len(self.classes[z, first]) * len(self.classes[z, second])

        return len(images) == len(pairing) == expected


def concrete_quotient(C: Magmoid) -> QuotientCategory:
    """Build the extensional quotient `C_{=t}`.

    Raises:
        SizeLimitExceeded: If a hom-set is too large to enumerate.

    """
    return QuotientCategory(C)
