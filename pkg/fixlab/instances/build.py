"""Build categories and their named data from instance specs."""

import logging
from collections.abc import Iterable

import pydantic
from typing_extensions import cast, final

from fixlab import errors, expressions, kernel, models
from fixlab.category import Magmoid, Morphism, Obj, PointedObj, SliceObj
from fixlab.instances import flat as flat_module
from fixlab.instances import twist as twist_module
from fixlab.instances.cosemigroup import Cosemigroups, cosemigroup
from fixlab.instances.finset import FinInj, FinSet, finite_set
from fixlab.instances.ordered import OrderedMagma
from fixlab.instances.pointed import PointedBottom, Smash
from fixlab.instances.slice import SliceCategory, slice_object
from fixlab.instances.spec import InstanceSpec, ObjectSpec, TwistSpec


logger = logging.getLogger(__name__)


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class HomCandidate:
    """A declared candidate `(target^source, ev)`."""

    source: pydantic.SkipValidation[Obj]
    target: pydantic.SkipValidation[Obj]
    obj: pydantic.SkipValidation[Obj]
    ev: pydantic.SkipValidation[Morphism]


@final
@models.dataclass(frozen=True, config=models.VALUE_CONFIG)
class Instance:
    """A built category together with the data its instance file names."""

    category: pydantic.SkipValidation[Magmoid]
    flat: pydantic.SkipValidation[flat_module.FlatEndofunctor | None] = None
    morphisms: pydantic.SkipValidation[dict[str, Morphism]] = (
        pydantic.Field(default_factory=dict)
    )
    homs: pydantic.SkipValidation[dict[str, HomCandidate]] = pydantic.Field(
        default_factory=dict
    )

    def named_objects(self) -> dict[str, Obj]:
        """Return the objects of the declared internal-hom candidates."""
        return {hom.obj.name: hom.obj for hom in self.homs.values()}

    def object(self, text: str, /) -> Obj:
        """Evaluate an object expression in this instance."""
        return expressions.evaluate(
            self.category, text, flat=self.flat, named=self.named_objects()
        )


def _check_covers(spec: ObjectSpec, keys: Iterable[str] | None) -> None:
    if keys is None or set(keys) != set(spec.elements):
        msg = f"Table of {spec.name!r} does not cover exactly its elements"
        raise errors.InvalidSpec(msg)


def make_object(
    spec: ObjectSpec, *, variant: str, base: kernel.FiniteSet | None = None
) -> Obj:
    """Build the object an `ObjectSpec` describes in the given variant.

    Raises:
        InvalidSpec: If the structure does not fit the variant.

    """
    try:
        match variant:
            case "smash" | "pointed_bot":
                if spec.basepoint is None:
                    msg = f"Object {spec.name!r} needs a basepoint"
                    raise errors.InvalidSpec(msg)
                carrier = kernel.FiniteSet.of(*spec.elements, name=spec.name)
                return PointedObj(spec.name, carrier, spec.basepoint)
            case "slice":
                if base is None:
                    msg = "Slice objects need a base set"
                    raise errors.InvalidSpec(msg)
                _check_covers(spec, spec.structure)
                return slice_object(spec.name, base, spec.structure or {})
            case "cosemigroup":
                _check_covers(spec, spec.comul)
                return cosemigroup(spec.name, spec.comul or {})
            case _:
                return finite_set(spec.name, *spec.elements)
    except (errors.ForeignElement, errors.MissingAssignment) as e:
        msg = f"Object {spec.name!r}: {e}"
        raise errors.InvalidSpec(msg) from None


def _endofunctor(
    spec: TwistSpec, base: kernel.FiniteSet | None
) -> twist_module.PointedEndofunctor:
    match spec.endofunctor:
        case "identity":
            return twist_module.identity_endofunctor()
        case "bottom":
            return twist_module.bottom_endofunctor()
        case "times-base":
            if base is None:
                msg = "The times-base endofunctor needs a slice base"
                raise errors.InvalidSpec(msg)
            return twist_module.times_base_endofunctor(base)
        case "times-point":
            factor = kernel.FiniteSet.of(*(spec.factor or []))
            return twist_module.times_point_endofunctor(
                factor, spec.point or ""
            )


def build_category(spec: InstanceSpec) -> Magmoid:
    """Construct the category an instance spec describes.

    Raises:
        InvalidSpec: If the spec is not valid for its variant (for example a
            comultiplication that is not coassociative, or an operation that
            is not monotone).
        NotNatural: If a requested twist has a non-natural point.

    """
    params = spec.params
    base = None if params.base is None else kernel.FiniteSet.of(*params.base)

    if spec.variant == "ordered_magma":
        category: Magmoid = OrderedMagma(
            elements=params.elements or [],
            order=params.order,
            operation=params.operation or {},
            t=spec.t,
        )
    else:
        objects = {
            obj.name: make_object(obj, variant=spec.variant, base=base)
            for obj in spec.objects
        }
        t = objects[spec.t]
        listed = list(objects.values())
        pointed = cast("list[PointedObj]", listed)

        match spec.variant:
            case "finset":
                category = FinSet(objects=listed, t=t)
            case "fininj":
                category = FinInj(objects=listed, t=t)
            case "smash":
                category = Smash(objects=pointed, t=cast(PointedObj, t))
            case "pointed_bot":
                category = PointedBottom(
                    objects=pointed, t=cast(PointedObj, t)
                )
            case "slice":
                category = SliceCategory(
                    base=base or kernel.FiniteSet.of(),
                    objects=cast("list[SliceObj]", listed),
                    t=cast(SliceObj, t),
                    product=params.product,
                )
            case "cosemigroup":
                category = Cosemigroups(objects=listed, t=t)

    logger.debug("Built %r", category)

    if spec.twist is not None:
        category = twist_module.twist_by_endofunctor(
            category, _endofunctor(spec.twist, base), spec.twist.side
        )

    return category


def build_instance(spec: InstanceSpec) -> Instance:
    """Construct the category and every named datum of an instance spec.

    Raises:
        InvalidSpec: If the category or a declared datum is invalid.
        NotAMorphism: If a named table is rejected by the hom predicate.
        ObjectExpressionError: If an object expression does not parse.

    """
    category = build_category(spec)
    base = (
        None
        if spec.params.base is None
        else kernel.FiniteSet.of(*spec.params.base)
    )

    flat = None
    if spec.flat is not None:
        flat = flat_module.make_flat(
            category,
            spec.flat.supports
            if spec.flat.variant == "custom"
            else spec.flat.variant,
        )

    homs: dict[str, HomCandidate] = {}
    for name, hom in spec.homs.items():
        source = expressions.evaluate(category, hom.source, flat=flat)
        target = expressions.evaluate(category, hom.target, flat=flat)
        obj = make_object(hom.object, variant=spec.variant, base=base)
        ev = category.morphism(
            category.product(obj, source), target, hom.ev
        )
        homs[name] = HomCandidate(source, target, obj, ev)

    instance = Instance(category, flat, {}, homs)

    for name, morphism in spec.morphisms.items():
        instance.morphisms[name] = category.morphism(
            instance.object(morphism.source),
            instance.object(morphism.target),
            morphism.table,
        )

    return instance
