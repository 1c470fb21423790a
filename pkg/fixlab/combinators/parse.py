"""Parse combinator terms from text."""

import lark
from typing_extensions import cast

from fixlab import errors, parsing
from fixlab.combinators.terms import App, Atom, Const, ConstantName, Term


@lark.v_args(inline=True)
class _Transformer(lark.Transformer[lark.Token, Term]):
    def constant(self, token: lark.Token) -> Const:
        return Const(cast(ConstantName, str(token)))

    def atom(self, token: lark.Token) -> Atom:
        return Atom(str(token))

    def app(self, left: Term, right: Term) -> App:
        return App(left, right)


def parse_term(text: str, /) -> Term:
    """Parse a combinator term.

    Application is juxtaposition and associates to the left; constants are
    the letters `S K I B C W` and atoms are lowercase identifiers.

    Raises:
        TermSyntaxError: If the text is not a term; `position` is the
            0-based offset of the offending character.

    Examples:
        >>> parse_term("B x y z")
        App(left=App(left=App(left=Const(name='B'), right=Atom(name='x')), right=Atom(name='y')), right=Atom(name='z'))
        >>> print(parse_term("B(WW)((BW)((BB)B))"))
        B (W W) (B W (B B B))
        >>> parse_term("(")
        Traceback (most recent call last):
            ...
        fixlab.errors.TermSyntaxError: Syntax error in term '(' at position 1

    """  # noqa: E501
    try:
        return parsing.parse(
            text, grammar="term.lark", transformer=_Transformer()
        )
    except parsing.GrammarMismatch as e:
        raise errors.TermSyntaxError(text, e.position) from None
