"""Pydantic building blocks shared by the package."""

from collections.abc import Callable

import pydantic
from typing_extensions import (
    TYPE_CHECKING,
    Annotated,
    Final,
    TypeAlias,
    TypeVar,
    dataclass_transform,
    overload,
)


_ClsT = TypeVar("_ClsT", bound=type)


DATACLASS_CONFIG: Final = pydantic.ConfigDict(
    extra="forbid",
    strict=True,
    validate_default=True,
    validate_assignment=True,
    validate_return=True,
)

VALUE_CONFIG: Final = pydantic.ConfigDict(
    DATACLASS_CONFIG, arbitrary_types_allowed=True
)
"""Config for dataclasses that hold morphisms, objects and other values."""


# pyright infers the PydanticDataclass protocol instead of the decorated
# class, so the type-checking signature is spelled out by hand
if TYPE_CHECKING:

    @overload
    def dataclass(cls: _ClsT) -> _ClsT: ...

    @overload
    def dataclass(
        *,
        frozen: bool = False,
        kw_only: bool = False,
        config: pydantic.ConfigDict | None = None,
    ) -> Callable[[_ClsT], _ClsT]: ...

    @dataclass_transform(frozen_default=False, kw_only_default=False)
    def dataclass(  # noqa: D103
        cls: _ClsT | None = None,
        *,
        frozen: bool = False,
        kw_only: bool = False,
        config: pydantic.ConfigDict | None = None,
    ) -> _ClsT | Callable[[_ClsT], _ClsT]: ...

else:
    dataclass = pydantic.dataclasses.dataclass


PositiveInt: TypeAlias = Annotated[int, pydantic.Field(gt=0)]
"""Pydantic field for a strictly positive integer."""

Label: TypeAlias = Annotated[str, pydantic.Field(min_length=1)]
"""Pydantic field for an element or object label."""


class BaseModel(pydantic.BaseModel):
    """Base class for instance files and command configuration."""

    model_config = pydantic.ConfigDict(
        extra="forbid", strict=True, validate_default=True
    )
