"""Exact finite sets and total functions between them.

Every concrete category in the package is built on top of these two types.
Element labels are opaque strings kept in lexicographic order, so equality of
sets and functions is plain structural equality.
"""

import dataclasses
import functools
import itertools
import logging
from collections.abc import Iterable, Iterator, Mapping

import pydantic
from typing_extensions import Self, final

from fixlab import budget, constants, errors, models


logger = logging.getLogger(__name__)


@final
@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class FiniteSet:
    """A finite set of opaque string labels in canonical order.

    Examples:
        >>> FiniteSet.of("b", "a")
        FiniteSet(elements=('a', 'b'))
        >>> len(FiniteSet.of())
        0

    """

    elements: tuple[str, ...]
    name: str = dataclasses.field(default="", compare=False, repr=False)

    @pydantic.model_validator(mode="after")
    def _check_canonical(self) -> Self:
        if any(a >= b for a, b in itertools.pairwise(self.elements)):
            msg = f"Elements must be distinct and sorted: {self.elements!r}"
            raise ValueError(msg)

        return self

    @classmethod
    def of(cls, *elements: str, name: str = "") -> Self:
        """Create a set from labels in any order.

        Raises:
            ValueError: If a label is repeated.

        """
        if len(set(elements)) != len(elements):
            msg = f"Duplicate elements: {elements!r}"
            raise ValueError(msg)

        return cls(tuple(sorted(elements)), name=name)

    @functools.cached_property
    def index(self) -> Mapping[str, int]:
        """Position of every element in the canonical order."""
        return {element: i for i, element in enumerate(self.elements)}

    def __contains__(self, element: object) -> bool:
        return element in self.index

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@final
@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class FiniteFunction:
    """A total function between two finite sets.

    The images are stored in the canonical order of the domain.
    """

    dom: FiniteSet
    cod: FiniteSet
    images: tuple[str, ...]

    @pydantic.model_validator(mode="after")
    def _check_total(self) -> Self:
        if len(self.images) != len(self.dom):
            msg = (
                f"Expected {len(self.dom)} images, got {len(self.images)}"
            )
            raise ValueError(msg)

        for image in self.images:
            if image not in self.cod:
                raise ValueError(f"Image {image!r} is not in the codomain")

        return self

    def __call__(self, element: str, /) -> str:
        """Apply the function to a domain element."""
        try:
            return self.images[self.dom.index[element]]
        except KeyError:
            raise errors.ForeignElement(element, where="domain") from None

    def items(self) -> Iterator[tuple[str, str]]:
        """Iterate over the `(element, image)` pairs of the table."""
        return zip(self.dom.elements, self.images, strict=True)

    def as_dict(self) -> dict[str, str]:
        """Return the mapping table as a dictionary."""
        return dict(self.items())


def make_function(
    dom: FiniteSet,
    cod: FiniteSet,
    pairs: Iterable[tuple[str, str]] | Mapping[str, str],
) -> FiniteFunction:
    """Build a total function from `(element, image)` pairs.

    Args:
        dom: The domain.
        cod: The codomain.
        pairs: The mapping table, either as pairs or as a mapping.

    Returns:
        The function.

    Raises:
        MissingAssignment: If an element of `dom` has no image.
        ForeignElement: If an image is not in `cod` (or a source is not in
            `dom`).
        ValueError: If a source element is assigned more than once.

    Examples:
        >>> f = make_function(FiniteSet.of("0", "1"), FiniteSet.of("0", "1", "2"),
        ...                   [("0", "1"), ("1", "2")])
        >>> f("1")
        '2'
        >>> make_function(FiniteSet.of("0"), FiniteSet.of("0"), [])
        Traceback (most recent call last):
            ...
        fixlab.errors.MissingAssignment: No image assigned to domain element '0'

    """  # noqa: E501
    items = list(pairs.items() if isinstance(pairs, Mapping) else pairs)
    table = dict(items)
    if len(table) != len(items):
        sources = [source for source, _ in items]
        msg = f"Repeated source elements: {sources!r}"
        raise ValueError(msg)

    for source, image in table.items():
        if source not in dom:
            raise errors.ForeignElement(source, where="domain")
        if image not in cod:
            raise errors.ForeignElement(image)

    for element in dom:
        if element not in table:
            raise errors.MissingAssignment(element)

    return FiniteFunction(dom, cod, tuple(table[x] for x in dom))


def identity(carrier: FiniteSet, /) -> FiniteFunction:
    """Return the identity function on a set."""
    return FiniteFunction(carrier, carrier, carrier.elements)


def compose(g: FiniteFunction, f: FiniteFunction) -> FiniteFunction:
    """Return `g∘f`.

    Raises:
        CompositionMismatch: If the codomain of `f` is not the domain of `g`.

    """
    if f.cod != g.dom:
        raise errors.CompositionMismatch(g, f)

    index = g.dom.index
    return FiniteFunction(
        f.dom, g.cod, tuple(g.images[index[y]] for y in f.images)
    )


def equal(f: FiniteFunction, g: FiniteFunction) -> bool:
    """Check strict equality: same domain, codomain and table."""
    return f == g


def count_functions(dom: FiniteSet, cod: FiniteSet) -> int:
    """Return `|cod| ** |dom|`."""
    return len(cod) ** len(dom)


def check_size(size: int, /, *, cap: int | None = None) -> None:
    """Raise if an enumeration of `size` items would exceed the cap.

    Raises:
        SizeLimitExceeded: If `size` exceeds `cap` (by default, the
            enumeration cap of the current budget).

    """
    limit = cap
    if limit is None:
        limit = budget.get_current_budget().enumeration_cap

    if size > limit:
        raise errors.SizeLimitExceeded(size, limit)


def enumerate_functions(
    dom: FiniteSet, cod: FiniteSet, *, cap: int | None = None
) -> Iterator[FiniteFunction]:
    """Enumerate all total functions `dom -> cod`.

    The order is lexicographic in the mapping table. The size check happens
    eagerly, before the first function is produced.

    Raises:
        SizeLimitExceeded: If there are more than `cap` functions.

    Examples:
        >>> two = FiniteSet.of("0", "1")
        >>> len(list(enumerate_functions(two, two)))
        4
        >>> len(list(enumerate_functions(FiniteSet.of(), two)))
        1
        >>> list(enumerate_functions(two, FiniteSet.of()))
        []

    """
    size = count_functions(dom, cod)
    check_size(size, cap=cap)
    logger.debug("Enumerating %d functions %r -> %r", size, dom, cod)

    return (
        FiniteFunction(dom, cod, images)
        for images in itertools.product(cod.elements, repeat=len(dom))
    )


def is_injective(f: FiniteFunction, /) -> bool:
    """Check whether no two elements share an image."""
    return len(set(f.images)) == len(f.images)


def is_surjective(f: FiniteFunction, /) -> bool:
    """Check whether every codomain element is hit."""
    return set(f.images) == set(f.cod.elements)


def pair_label(first: str, second: str, /) -> str:
    """Render a pair of labels canonically.

    Examples:
        >>> pair_label("a", "b")
        '(a,b)'

    """
    return f"({first}{constants.PRODUCT_SEPARATOR}{second})"


def table_label(f: FiniteFunction, /) -> str:
    """Render a function table as a label, images in domain order.

    Examples:
        >>> two = FiniteSet.of("0", "1")
        >>> table_label(make_function(two, two, {"0": "1", "1": "1"}))
        '[1,1]'

    """
    return "[" + constants.PRODUCT_SEPARATOR.join(f.images) + "]"


def cartesian(first: FiniteSet, second: FiniteSet, /) -> FiniteSet:
    """Return the cartesian product with `(a,b)` labels."""
    return FiniteSet.of(
        *(pair_label(a, b) for a in first for b in second)
    )
