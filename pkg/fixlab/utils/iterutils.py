"""Utilities for working with iterables."""

from collections.abc import Iterable

from typing_extensions import TypeVar


_K = TypeVar("_K")
_V = TypeVar("_V")


def first_mismatch(
    first: Iterable[tuple[_K, _V]], second: Iterable[tuple[_K, _V]], /
) -> _K | None:
    """Find the first key at which two tables of the same keys disagree.

    Args:
        first: Key-value pairs.
        second: Key-value pairs with the keys of `first`, in the same order.

    Returns:
        The first key whose values differ, or `None` if none does.

    Raises:
        ValueError: If the tables have different lengths.

    Examples:
        >>> first_mismatch([("a", 1), ("b", 2)], [("a", 1), ("b", 3)])
        'b'
        >>> first_mismatch([("a", 1)], [("a", 1)]) is None
        True

    """
    for (key, left), (_, right) in zip(first, second, strict=True):
        if left != right:
            return key

    return None
