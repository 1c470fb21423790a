"""Constants used throughout the package."""

from typing_extensions import Final, Literal, TypeAlias


DEFAULT_ENUMERATION_CAP: Final = 10**6
"""Largest hom-set (or search space) enumerated before giving up."""

DEFAULT_FUEL: Final = 100
"""Default number of reduction steps per term."""

DEFAULT_WIDTH: Final = 10**4
"""Default cap on the breadth-first frontier during joinability search."""

DEFAULT_TERM_SIZE_CAP: Final = 10**5
"""Terms with more nodes than this are never expanded."""

PRODUCT_SEPARATOR: Final = ","
BASEPOINT_CLASS: Final = "*"
"""Label of the collapsed basepoint class in smash-like products."""

BOTTOM: Final = "⊥"
"""Label of the fresh point added by the bottom endofunctor."""

FLAT_PREFIX: Final = "♭"

RESERVED_OBJECT_NAMES: Final = frozenset({"flat"})
"""Keywords of the object-expression grammar; no object may use them."""

Variant: TypeAlias = Literal[
    "finset",
    "fininj",
    "smash",
    "pointed_bot",
    "slice",
    "cosemigroup",
    "ordered_magma",
]
"""The example categories that `build_category` knows how to construct."""

VARIANTS: Final[tuple[Variant, ...]] = (
    "finset",
    "fininj",
    "smash",
    "pointed_bot",
    "slice",
    "cosemigroup",
    "ordered_magma",
)

Side: TypeAlias = Literal["left", "right"]
Strategy: TypeAlias = Literal["leftmost-outermost", "rightmost-innermost"]

CONSTANTS: Final = frozenset("SKIBCW")
"""Combinator constants understood by the rewriting engine."""

ARITIES: Final = {"S": 3, "K": 2, "I": 1, "B": 3, "C": 3, "W": 2}
