import pathlib

import pytest
from typing_extensions import override

import fixlab
from fixlab import errors, kernel
from fixlab.category import Morphism, Obj
from fixlab.instances import flat as flat_module
from fixlab.instances import twist as twist_module
from fixlab.instances.build import Instance
from fixlab.instances.cosemigroup import cosemigroup
from fixlab.instances.slice import slice_object
from tests import conftest


def _carrier(obj: Obj) -> set[str]:
    return set(obj.carrier)


def _load(name: str) -> Instance:
    return fixlab.build_instance(fixlab.load_spec(conftest.spec_path(name)))


# pointed sets


def test_smash_product_collapses_row_and_column() -> None:
    C = _load("smash").category
    x, y = C.find_object("X"), C.find_object("Y")

    product = C.product(x, y)

    assert _carrier(product) == {"*", "(a,b)"}
    assert isinstance(product, fixlab.PointedObj)
    assert product.basepoint == "*"


def test_pointed_bottom_product_collapses_only_the_row() -> None:
    C = conftest.pointed_bot(2, 3)

    product = C.product(conftest.obj(C, "2"), conftest.obj(C, "3"))

    assert _carrier(product) == {"*", "(1,*)", "(1,1)", "(1,2)"}


def test_pointed_bottom_internal_hom() -> None:
    C = conftest.pointed_bot(2, 3)
    two, three = conftest.obj(C, "2"), conftest.obj(C, "3")

    power, ev = C.internal_hom(two, three)

    assert power.name == "3^2"
    assert len(power.carrier) == 9
    assert isinstance(power, fixlab.PointedObj)
    assert power.basepoint == "[*,*]"
    assert ev.source == C.product(power, two)
    assert ev.target == three
    assert ev("*") == "*"
    assert ev("([2,1],*)") == "2"
    assert ev("([2,1],1)") == "1"


def test_pointed_maps_preserve_basepoint() -> None:
    C = conftest.smash(2)

    with pytest.raises(errors.NotAMorphism):
        conftest.morphism(C, "2", "2", {"*": "1", "1": "1"})


def test_smash_has_no_internal_hom() -> None:
    C = conftest.smash(2)
    two = conftest.obj(C, "2")

    with pytest.raises(errors.MissingInternalHom, match="smash"):
        C.internal_hom(two, two)


# slices


def _slice(product: str) -> fixlab.SliceCategory:
    base = kernel.FiniteSet.of("x", "y")
    t = slice_object("T", base, {"tx": "x", "ty": "y"})
    a = slice_object("A", base, {"a": "x", "b": "y", "c": "y"})
    return fixlab.SliceCategory(
        base=base,
        objects=[t, a],
        t=t,
        product="fibre" if product == "fibre" else "twisted",
    )


@pytest.mark.parametrize(
    ("product", "size"),
    [
        pytest.param("fibre", 1 + 4, id="fibre"),
        pytest.param("twisted", 9, id="twisted"),
    ],
)
def test_slice_product_sizes(product: str, size: int) -> None:
    C = _slice(product)
    a = C.find_object("A")

    assert len(C.product(a, a).carrier) == size


def test_slice_twisted_product_lies_over_second_factor() -> None:
    C = _slice("twisted")
    t, a = C.find_object("T"), C.find_object("A")

    product = C.product(a, t)

    assert isinstance(product, fixlab.SliceObj)
    assert product.structure("(b,tx)") == "x"
    assert product.structure("(a,ty)") == "y"


def test_slice_hom_respects_structure() -> None:
    C = _slice("twisted")
    t, a = C.find_object("T"), C.find_object("A")

    assert [p.table() for p in C.hom(t, a)] == [
        {"tx": "a", "ty": "b"},
        {"tx": "a", "ty": "c"},
    ]


def test_slice_laws() -> None:
    C = _slice("twisted")

    assert fixlab.check_hom_closure(C)
    assert fixlab.check_bifunctoriality(C)
    assert fixlab.check_diagonal_naturality(C)
    assert fixlab.check_right_projection(C)


def test_slice_internal_hom_needs_twisted_product() -> None:
    C = _slice("fibre")
    a = C.find_object("A")

    with pytest.raises(errors.MissingInternalHom, match="slice"):
        C.internal_hom(a, a)


def test_slice_internal_hom() -> None:
    C = _slice("twisted")
    t, a = C.find_object("T"), C.find_object("A")

    power, ev = C.internal_hom(t, a)

    # two morphisms T -> A, each paired with a point of the base
    assert len(power.carrier) == 4
    assert ev("(([a,c],y),ty)") == "c"


# cosemigroups


@pytest.mark.parametrize(
    ("comul", "message"),
    [
        pytest.param(
            {"a": ("a", "b"), "b": ("b", "b")}, "cocommutative", id="swap"
        ),
        pytest.param(
            {"a": ("b", "b"), "b": ("a", "a")}, "coassociative", id="assoc"
        ),
        pytest.param({"a": ("z", "z")}, "leaves the carrier", id="foreign"),
    ],
)
def test_invalid_cosemigroup(
    comul: dict[str, tuple[str, str]], message: str
) -> None:
    with pytest.raises(errors.InvalidSpec, match=message):
        cosemigroup("X", comul)


def test_cosemigroup_maps() -> None:
    C = _load("cosemigroup").category
    x, y = C.find_object("X"), C.find_object("Y")

    assert [f.table() for f in C.hom(x, y)] == [
        {"a": "c", "b": "c"},
        {"a": "d", "b": "d"},
    ]
    assert [f.table() for f in C.hom(y, x)] == [{"c": "a", "d": "a"}]


def test_cosemigroup_diagonal_is_comultiplication() -> None:
    C = _load("cosemigroup").category
    x = C.find_object("X")

    assert C.diagonal(x).table() == {"a": "(a,a)", "b": "(a,a)"}


def test_cosemigroup_laws() -> None:
    C = _load("cosemigroup").category

    assert fixlab.check_hom_closure(C)
    assert fixlab.check_bifunctoriality(C)
    assert fixlab.check_diagonal_naturality(C)


# ordered magmas


def test_ordered_magma_is_thin() -> None:
    C = _load("ordered_magma").category
    assert isinstance(C, fixlab.OrderedMagma)
    zero, one, two = (C.element(name) for name in "012")

    assert len(list(C.hom(zero, two))) == 1
    assert list(C.hom(two, zero)) == []
    assert C.product(one, two) == two
    assert C.diagonal(one).target == one


def test_ordered_magma_laws() -> None:
    C = _load("ordered_magma").category

    assert fixlab.check_hom_closure(C)
    assert fixlab.check_bifunctoriality(C)
    assert fixlab.check_diagonal_naturality(C)


@pytest.mark.parametrize(
    ("order", "operation", "message"),
    [
        pytest.param(
            [("0", "1"), ("1", "0")],
            {"0": {"0": "0", "1": "1"}, "1": {"0": "1", "1": "1"}},
            "antisymmetric",
            id="cycle",
        ),
        pytest.param(
            [("0", "1")],
            {"0": {"0": "1", "1": "0"}, "1": {"0": "0", "1": "1"}},
            "not monotone",
            id="monotone",
        ),
        pytest.param(
            [("0", "1")],
            {"0": {"0": "0", "1": "0"}, "1": {"0": "0", "1": "0"}},
            "does not satisfy",
            id="diagonal",
        ),
        pytest.param(
            [("0", "1")],
            {"0": {"0": "0"}, "1": {"0": "1", "1": "1"}},
            "undefined",
            id="partial",
        ),
        pytest.param(
            [("0", "7")],
            {"0": {"0": "0", "1": "1"}, "1": {"0": "1", "1": "1"}},
            "unknown elements",
            id="foreign",
        ),
    ],
)
def test_invalid_ordered_magma(
    order: list[tuple[str, str]],
    operation: dict[str, dict[str, str]],
    message: str,
) -> None:
    with pytest.raises(errors.InvalidSpec, match=message):
        fixlab.OrderedMagma(
            elements=["0", "1"], order=order, operation=operation, t="0"
        )


# twists


def test_left_twist_by_bottom_keeps_right_projection() -> None:
    base = conftest.finset(2)
    C = fixlab.twist_by_endofunctor(
        base, twist_module.bottom_endofunctor(), "left"
    )
    two = conftest.obj(C, "2")

    assert _carrier(C.product(two, two)) == {
        "(0,0)",
        "(0,1)",
        "(1,0)",
        "(1,1)",
        "(⊥,0)",
        "(⊥,1)",
    }
    assert C.diagonal(two).table() == {"0": "(0,0)", "1": "(1,1)"}
    assert C.right_projection(two, two)("(⊥,1)") == "1"
    assert fixlab.check_right_projection(C)


def test_right_twist_has_no_right_projection() -> None:
    base = conftest.finset(2)
    C = fixlab.twist_by_endofunctor(
        base, twist_module.bottom_endofunctor(), "right"
    )
    two = conftest.obj(C, "2")

    with pytest.raises(
        errors.MissingProjection, match="right-twisted finset"
    ):
        C.right_projection(two, two)


@pytest.mark.parametrize("side", ["left", "right"])
def test_twisted_products_satisfy_laws(side: str) -> None:
    base = conftest.finset(2)
    C = fixlab.twist_by_endofunctor(
        base,
        twist_module.times_point_endofunctor(
            kernel.FiniteSet.of("k0", "k1"), "k0"
        ),
        "left" if side == "left" else "right",
    )

    assert len(C.product(C.t, conftest.obj(C, "2")).carrier) == 4
    assert fixlab.check_bifunctoriality(C)
    assert fixlab.check_diagonal_naturality(C)


def test_right_bottom_twist_of_smash_matches_pointed_bottom() -> None:
    smash = conftest.smash(2, 3)
    C = fixlab.twist_by_endofunctor(
        smash, twist_module.bottom_endofunctor(), "right"
    )
    bottom = conftest.pointed_bot(2, 3)

    for first in ("2", "3"):
        for second in ("2", "3"):
            twisted = C.product(
                conftest.obj(C, first), conftest.obj(C, second)
            )
            expected = bottom.product(
                conftest.obj(bottom, first), conftest.obj(bottom, second)
            )
            assert _carrier(twisted) == _carrier(expected)


def test_right_bottom_twist_of_smash_has_zero_diagonal() -> None:
    smash = conftest.smash(3)
    C = fixlab.twist_by_endofunctor(
        smash, twist_module.bottom_endofunctor(), "right"
    )

    delta = C.diagonal(conftest.obj(C, "3"))

    assert set(delta.table().values()) == {"*"}


def test_times_base_twist_of_slice() -> None:
    base = _slice("twisted")
    C = fixlab.twist_by_endofunctor(
        base, twist_module.times_base_endofunctor(base.base), "left"
    )
    t, a = C.find_object("T"), C.find_object("A")

    assert len(C.product(a, t).carrier) == 3 * 2 * 2
    assert fixlab.check_diagonal_naturality(C)
    assert fixlab.check_right_projection(C)


def test_times_point_needs_point_in_factor() -> None:
    with pytest.raises(errors.InvalidSpec, match="not in the factor"):
        twist_module.times_point_endofunctor(kernel.FiniteSet.of("k"), "z")


class _ConstantUnit(twist_module.IdentityEndofunctor):
    """The identity functor with a point that is not natural."""

    @override
    def unit(self, obj: Obj, /) -> Morphism:
        first = obj.carrier.elements[0]
        return Morphism(
            obj,
            obj,
            kernel.FiniteFunction(
                obj.carrier,
                obj.carrier,
                (first,) * len(obj.carrier),
            ),
        )


def test_twist_rejects_unnatural_point() -> None:
    with pytest.raises(errors.NotNatural, match="ι of Id"):
        fixlab.twist_by_endofunctor(
            conftest.finset(2), _ConstantUnit(), "left"
        )


# flat endofunctors


def test_identity_flat_is_an_idempotent_comonad() -> None:
    F = fixlab.make_flat(conftest.finset(2), "identity")

    assert flat_module.check_copointed(F)
    assert flat_module.check_idempotent_comonad(F)


def test_trivializing_flat() -> None:
    C = conftest.smash(2, 3)
    F = fixlab.make_flat(C, "trivializing")
    three = conftest.obj(C, "3")

    assert _carrier(F.object_map(three)) == {"*"}
    assert F.object_map(three).name == "♭3"
    assert flat_module.check_copointed(F)
    assert flat_module.check_idempotent_comonad(F)


def test_trivializing_flat_needs_pointed_sets() -> None:
    with pytest.raises(errors.InvalidSpec, match="needs pointed sets"):
        fixlab.make_flat(conftest.finset(2), "trivializing")


def test_custom_flat_support_must_be_a_subset() -> None:
    with pytest.raises(errors.InvalidSpec, match="'7'"):
        fixlab.make_flat(conftest.finset(2), {"2": ["0", "7"]})


def test_custom_flat_that_is_not_a_functor() -> None:
    F = fixlab.make_flat(conftest.finset(2), {"2": ["0"]})

    report = flat_module.check_copointed(F)

    assert not report
    assert report.laws() == {"functoriality"}
    assert flat_module.check_idempotent_comonad(F)


def test_broken_counit_fails_naturality_and_unit_law() -> None:
    C = conftest.finset(2)
    F = flat_module.CustomFlat(C, {})
    broken = F.replace_counit(conftest.obj(C, "2"), {"0": "1", "1": "0"})

    assert flat_module.check_copointed(F)
    assert "counit naturality" in flat_module.check_copointed(broken).laws()
    assert "CU" in flat_module.check_idempotent_comonad(broken).laws()


def test_broken_comultiplication_fails_comonad_laws() -> None:
    C = conftest.finset(2)
    F = flat_module.CustomFlat(C, {})
    broken = F.replace_comultiplication(
        conftest.obj(C, "2"), {"0": "1", "1": "0"}
    )

    report = flat_module.check_idempotent_comonad(broken)

    assert {"CA", "CU"} <= report.laws()
    assert "invertible" not in report.laws()


class _CounitOnly(flat_module.FlatEndofunctor):
    @override
    def object_map(self, obj: Obj, /) -> Obj:
        return obj

    @override
    def morphism_map(self, f: Morphism, /) -> Morphism:
        return f

    @override
    def counit(self, obj: Obj, /) -> Morphism:
        return self.category.identity(obj)


def test_copointed_without_comultiplication() -> None:
    F = _CounitOnly(conftest.finset(2))

    assert flat_module.check_copointed(F)

    with pytest.raises(errors.MissingComultiplication):
        flat_module.check_idempotent_comonad(F)


# instance files


@pytest.mark.parametrize(
    "path", sorted(conftest.SPECS_DIR.glob("*.json")), ids=lambda p: p.stem
)
def test_shipped_instances_build(path: pathlib.Path) -> None:
    spec = fixlab.load_spec(path)

    instance = fixlab.build_instance(spec)

    assert instance.category.t.name == spec.t
    assert set(instance.morphisms) == set(spec.morphisms)


def test_instance_object_expressions() -> None:
    instance = _load("uniform")
    C = instance.category

    assert instance.object("one # two") == C.product(
        C.find_object("one"), C.find_object("two")
    )
    assert len(instance.object("two ^ two").carrier) == 4
    assert instance.object("flat(two)") == C.find_object("two")


def test_named_morphisms() -> None:
    morphisms = _load("finset").morphisms

    assert morphisms["or"].source.name == "two#two"
    assert morphisms["swap"]("0") == "1"
    assert morphisms["always_true"].table() == {"p": "1", "q": "1"}


def test_fininj_instance_rejects_non_injection(
    tmp_path: pathlib.Path,
) -> None:
    path = tmp_path / "bad.json"
    path.write_text(
        '{"variant": "fininj", "t": "one",'
        ' "objects": [{"name": "one", "elements": ["*"]},'
        ' {"name": "two", "elements": ["0", "1"]}],'
        ' "morphisms": {"f": {"source": "two", "target": "two",'
        ' "table": {"0": "0", "1": "0"}}}}'
    )

    with pytest.raises(errors.NotAMorphism):
        fixlab.build_instance(fixlab.load_spec(path))


def test_instance_with_invalid_cosemigroup(tmp_path: pathlib.Path) -> None:
    path = tmp_path / "bad.json"
    path.write_text(
        '{"variant": "cosemigroup", "t": "X", "objects": [{"name": "X",'
        ' "elements": ["a", "b"],'
        ' "comul": {"a": ["b", "b"], "b": ["a", "a"]}}]}'
    )

    with pytest.raises(errors.InvalidSpec, match="coassociative"):
        fixlab.build_instance(fixlab.load_spec(path))


def test_load_spec_missing_file(tmp_path: pathlib.Path) -> None:
    with pytest.raises(errors.InputError, match="missing.json"):
        fixlab.load_spec(tmp_path / "missing.json")


def test_load_spec_reports_json_line(tmp_path: pathlib.Path) -> None:
    path = tmp_path / "broken.json"
    path.write_text('{\n  "variant": "finset",\n  "t": \n}')

    with pytest.raises(errors.InputError) as info:
        fixlab.load_spec(path)

    assert info.value.line is not None
    assert info.value.path == str(path)


@pytest.mark.parametrize(
    ("text", "message"),
    [
        pytest.param(
            '{"variant": "hyperbolic", "t": "one"}',
            "Input should be",
            id="variant",
        ),
        pytest.param(
            '{"variant": "smash", "t": "one",'
            ' "objects": [{"name": "one", "elements": ["*"]}]}',
            "needs basepoint",
            id="basepoint",
        ),
        pytest.param(
            '{"variant": "finset", "t": "two",'
            ' "objects": [{"name": "one", "elements": ["*"]}]}',
            "not listed",
            id="t",
        ),
        pytest.param(
            '{"variant": "finset", "t": "flat",'
            ' "objects": [{"name": "flat", "elements": ["*"]}]}',
            "reserved",
            id="reserved-name",
        ),
    ],
)
def test_load_spec_validation(
    tmp_path: pathlib.Path, text: str, message: str
) -> None:
    path = tmp_path / "spec.json"
    path.write_text(text)

    with pytest.raises(errors.InputError, match=message) as info:
        fixlab.load_spec(path)

    assert info.value.line is None


def test_expression_syntax() -> None:
    with pytest.raises(errors.ObjectExpressionError, match="A # B # C"):
        fixlab.parse_object_expression("A # B # C")


def test_expression_unknown_name() -> None:
    with pytest.raises(errors.InvalidSpec, match="Unknown object 'Z'"):
        fixlab.evaluate(conftest.finset(2), "Z # 2")


def test_expression_flat_needs_flat() -> None:
    with pytest.raises(errors.InvalidSpec, match="no ♭"):
        fixlab.evaluate(conftest.finset(2), "flat(2)")
