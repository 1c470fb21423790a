"""Object expressions such as `A # B`, `C ^ C` and `flat(C ^ C)`.

Instance files and the command line name objects that are not listed (
products, internal homs and their `♭` images) through this small language.
"""

import logging
from collections.abc import Mapping

import lark
from typing_extensions import TypeAlias, final

from fixlab import errors, models, parsing
from fixlab.category import Magmoid, Obj
from fixlab.instances.flat import FlatEndofunctor


logger = logging.getLogger(__name__)


@final
@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class Name:
    """A listed object, `t`, or a named internal hom."""

    name: str


@final
@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class Product:
    """The object `left # right`."""

    left: "ObjectExpr"
    right: "ObjectExpr"


@final
@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class Power:
    """The internal hom `base ^ exponent`, from `exponent` to `base`."""

    base: "ObjectExpr"
    exponent: "ObjectExpr"


@final
@models.dataclass(frozen=True, config=models.DATACLASS_CONFIG)
class Flat:
    """The object `♭operand`."""

    operand: "ObjectExpr"


ObjectExpr: TypeAlias = Name | Product | Power | Flat


@lark.v_args(inline=True)
class _Transformer(lark.Transformer[lark.Token, ObjectExpr]):
    def name(self, token: lark.Token) -> Name:
        return Name(str(token))

    def product(self, left: ObjectExpr, right: ObjectExpr) -> Product:
        return Product(left, right)

    def power(self, base: ObjectExpr, exponent: ObjectExpr) -> Power:
        return Power(base, exponent)

    def flat(self, operand: ObjectExpr) -> Flat:
        return Flat(operand)


def parse_object_expression(text: str, /) -> ObjectExpr:
    """Parse an object expression.

    Raises:
        ObjectExpressionError: If the text is not a valid expression.

    Examples:
        >>> parse_object_expression("A # (B ^ A)")
        Product(left=Name(name='A'), right=Power(base=Name(name='B'), exponent=Name(name='A')))
        >>> parse_object_expression("A # B # C")
        Traceback (most recent call last):
            ...
        fixlab.errors.ObjectExpressionError: Invalid object expression: 'A # B # C'

    """  # noqa: E501
    try:
        return parsing.parse(
            text, grammar="object.lark", transformer=_Transformer()
        )
    except parsing.GrammarMismatch:
        raise errors.ObjectExpressionError(text) from None


def evaluate(
    C: Magmoid,
    expr: ObjectExpr | str,
    *,
    flat: FlatEndofunctor | None = None,
    named: Mapping[str, Obj] | None = None,
) -> Obj:
    """Build the object an expression denotes.

    Names are looked up first in `named` (internal-hom candidates declared
    by an instance file), then among the listed objects and `t`.

    Raises:
        ObjectExpressionError: If `expr` is a string that does not parse.
        InvalidSpec: If a name is unknown or `flat(...)` is used without a
            `♭`.
        MissingInternalHom: If `^` is used on an instance that is not
            closed.

    """
    if isinstance(expr, str):
        expr = parse_object_expression(expr)

    extra = named or {}

    def build(node: ObjectExpr) -> Obj:
        match node:
            case Name(name=name):
                if name in extra:
                    return extra[name]
                try:
                    return C.find_object(name)
                except KeyError:
                    msg = f"Unknown object {name!r}"
                    raise errors.InvalidSpec(msg) from None
            case Product(left=left, right=right):
                return C.product(build(left), build(right))
            case Power(base=base, exponent=exponent):
                power, _ = C.internal_hom(build(exponent), build(base))
                return power
            case Flat(operand=operand):
                if flat is None:
                    msg = "Instance declares no ♭"
                    raise errors.InvalidSpec(msg)
                return flat.object_map(build(operand))

    return build(expr)
