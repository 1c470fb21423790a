"""Pydantic models for instance files.

An instance file is a JSON document describing one example category, the
chosen object `t`, and optionally a twist, a `♭`, named morphisms and
internal-hom candidates. See `docs/instance-files.md` for the schema.
"""

import pathlib

import pydantic
from typing_extensions import Literal, Self, TypeAlias

from fixlab import constants, errors, models
from fixlab.instances.slice import SliceProduct


EndofunctorName: TypeAlias = Literal[
    "identity", "bottom", "times-base", "times-point"
]


class ObjectSpec(models.BaseModel):
    """An object: its name, elements and variant-specific structure."""

    name: models.Label
    elements: list[str]
    basepoint: str | None = None
    structure: dict[str, str] | None = None
    comul: dict[str, tuple[str, str]] | None = None

    @pydantic.model_validator(mode="after")
    def _check_elements(self) -> Self:
        if self.name in constants.RESERVED_OBJECT_NAMES:
            msg = f"Object name {self.name!r} is reserved in expressions"
            raise ValueError(msg)
        if len(set(self.elements)) != len(self.elements):
            msg = f"Object {self.name!r} repeats an element"
            raise ValueError(msg)
        if self.basepoint is not None and self.basepoint not in self.elements:
            msg = f"Basepoint of {self.name!r} is not an element"
            raise ValueError(msg)

        return self


class Params(models.BaseModel):
    """Variant parameters; each variant reads the fields it needs."""

    base: list[str] | None = None
    product: SliceProduct = "twisted"
    elements: list[str] | None = None
    order: list[tuple[str, str]] = []
    operation: dict[str, dict[str, str]] | None = None


class TwistSpec(models.BaseModel):
    """The pointed endofunctor used to twist the product."""

    side: constants.Side
    endofunctor: EndofunctorName
    factor: list[str] | None = None
    point: str | None = None

    @pydantic.model_validator(mode="after")
    def _check_point(self) -> Self:
        if self.endofunctor == "times-point" and (
            self.factor is None or self.point is None
        ):
            msg = "The times-point endofunctor needs a factor and a point"
            raise ValueError(msg)

        return self


class FlatSpec(models.BaseModel):
    """The copointed endofunctor `♭`."""

    variant: Literal["identity", "trivializing", "custom"] = "identity"
    supports: dict[str, list[str]] = {}


class MorphismSpec(models.BaseModel):
    """A named morphism between two object expressions."""

    source: str
    target: str
    table: dict[str, str]


class HomSpec(models.BaseModel):
    """A candidate internal hom `target ^ source` given by tables."""

    source: str
    target: str
    object: ObjectSpec
    ev: dict[str, str]


class InstanceSpec(models.BaseModel):
    """A complete instance file."""

    variant: constants.Variant
    objects: list[ObjectSpec] = []
    t: models.Label
    params: Params = Params()
    twist: TwistSpec | None = None
    flat: FlatSpec | None = None
    morphisms: dict[str, MorphismSpec] = {}
    homs: dict[str, HomSpec] = {}

    @pydantic.model_validator(mode="after")
    def _check_variant(self) -> Self:
        names = [obj.name for obj in self.objects]
        if len(set(names)) != len(names):
            msg = "Object names must be unique"
            raise ValueError(msg)

        match self.variant:
            case "ordered_magma":
                params = self.params
                if params.elements is None or params.operation is None:
                    msg = "ordered_magma needs elements and an operation"
                    raise ValueError(msg)
                return self
            case "smash" | "pointed_bot":
                field = "basepoint"
            case "slice":
                if self.params.base is None:
                    msg = "slice needs params.base"
                    raise ValueError(msg)
                field = "structure"
            case "cosemigroup":
                field = "comul"
            case "finset" | "fininj":
                field = None

        if self.t not in names:
            msg = f"Chosen object {self.t!r} is not listed"
            raise ValueError(msg)

        if field is not None:
            for obj in self.objects:
                if getattr(obj, field) is None:
                    msg = f"{self.variant} object {obj.name!r} needs {field}"
                    raise ValueError(msg)

        return self


def load_spec(path: pathlib.Path | str, /) -> InstanceSpec:
    """Read and validate an instance file.

    Raises:
        InputError: If the file cannot be read or does not validate.

    """
    path = pathlib.Path(path)

    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise errors.InputError(str(path), e.strerror or str(e)) from None

    try:
        return InstanceSpec.model_validate_json(text)
    except pydantic.ValidationError as e:
        line = _error_line(text, e)
        reason = e.errors()[0]["msg"]
        raise errors.InputError(str(path), reason, line=line) from None


def _error_line(text: str, error: pydantic.ValidationError) -> int | None:
    first = error.errors()[0]

    # JSON syntax errors carry "line N column M" in the message
    if first["type"] == "json_invalid":
        words = str(first.get("ctx", {}).get("error", "")).split()
        if "line" in words:
            position = words.index("line") + 1
            if position < len(words) and words[position].isdigit():
                return int(words[position])

    return None
