"""Lark front end shared by the object-expression and term grammars."""

import functools
import pathlib

import lark
from typing_extensions import Final, LiteralString, TypeVar, cast, override


_LeafT = TypeVar("_LeafT")
_ReturnT = TypeVar("_ReturnT")


GRAMMARS_DIR: Final = pathlib.Path(__file__).parent / "grammars"


class GrammarMismatch(ValueError):
    """The text does not match the grammar.

    `position` is the 0-based offset of the first character that could not
    be consumed; it is `len(text)` when the input ended too early.
    """

    @override
    def __init__(self, grammar: str, text: str, position: int) -> None:
        self.grammar = grammar
        self.text = text
        self.position = position
        super().__init__(
            f"{text!r} does not match {grammar!r} at position {position}"
        )


@functools.cache
def _parser(grammar: LiteralString) -> lark.Lark:
    return lark.Lark.open(
        str(GRAMMARS_DIR / grammar),
        parser="lalr",
        maybe_placeholders=False,
        propagate_positions=False,
        cache=True,
    )


def _position(error: lark.LarkError, text: str) -> int:
    if isinstance(error, lark.UnexpectedToken) and error.token.type == "$END":
        return len(text)

    position = getattr(error, "pos_in_stream", None)
    if not isinstance(position, int) or position < 0:
        return len(text)

    return position


def parse(
    text: str,
    /,
    *,
    grammar: LiteralString,
    transformer: lark.Transformer[_LeafT, _ReturnT],
) -> _ReturnT:
    """Parse `text` with a grammar from the `grammars` directory.

    Raises:
        GrammarMismatch: If the text is not in the language of the grammar.

    """
    try:
        tree = _parser(grammar).parse(text)
    except lark.LarkError as e:
        raise GrammarMismatch(grammar, text, _position(e, text)) from e

    return transformer.transform(cast(lark.Tree[_LeafT], tree))
