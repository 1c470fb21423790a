import itertools

import pydantic
import pytest

import fixlab
from fixlab import errors, kernel
from fixlab.category import check_t_not_initial, point_equal
from tests import conftest


def test_find_object() -> None:
    C = conftest.finset(2, 3)

    assert conftest.obj(C, "3").carrier == kernel.FiniteSet.of("0", "1", "2")
    assert C.find_object("1") == C.t

    with pytest.raises(KeyError, match="'7'"):
        C.find_object("7")


def test_morphism_rejects_mismatched_function() -> None:
    C = conftest.finset(2, 3)
    two, three = conftest.obj(C, "2"), conftest.obj(C, "3")

    with pytest.raises(pydantic.ValidationError, match="domain"):
        fixlab.Morphism(two, two, kernel.identity(three.carrier))


def test_morphism_rejected_by_hom_predicate() -> None:
    C = conftest.fininj(2)

    with pytest.raises(errors.NotAMorphism, match="2 -> 2"):
        conftest.morphism(C, "2", "2", {"0": "0", "1": "0"})


def test_describe() -> None:
    C = conftest.finset(2)
    swap = conftest.morphism(C, "2", "2", {"0": "1", "1": "0"})

    assert swap.describe() == "2 -> 2 {0↦1, 1↦0}"
    assert repr(swap) == "Morphism(2 -> 2 {0↦1, 1↦0})"


def test_compose_is_right_to_left() -> None:
    C = conftest.finset(2, 3)
    f = conftest.morphism(C, "2", "3", {"0": "2", "1": "1"})
    g = conftest.morphism(C, "3", "2", {"0": "0", "1": "0", "2": "1"})

    assert C.compose(g, f).table() == {"0": "1", "1": "0"}
    assert C.compose(f, C.identity(f.source)) == f


def test_compose_mismatch() -> None:
    C = conftest.finset(2, 3)
    f = C.identity(conftest.obj(C, "2"))
    g = C.identity(conftest.obj(C, "3"))

    with pytest.raises(errors.CompositionMismatch):
        C.compose(g, f)


def test_hom_order_is_lexicographic() -> None:
    C = conftest.finset(2)
    two = conftest.obj(C, "2")

    tables = [kernel.table_label(f.function) for f in C.hom(two, two)]

    assert tables == ["[0,0]", "[0,1]", "[1,0]", "[1,1]"]


def test_fininj_hom_matches_predicate() -> None:
    C = conftest.fininj(2, 3)
    two, three = conftest.obj(C, "2"), conftest.obj(C, "3")

    expected = [
        f
        for f in fixlab.FinSet(objects=C.objects, t=C.t).hom(two, three)
        if kernel.is_injective(f.function)
    ]

    assert list(C.hom(two, three)) == expected
    assert list(C.hom(three, two)) == []


def test_t_points() -> None:
    C = conftest.finset(2, 3)

    points = fixlab.t_points(C, conftest.obj(C, "3"))

    assert [p.table() for p in points] == [{"0": "0"}, {"0": "1"}, {"0": "2"}]


def test_smash_has_only_the_basepoint_as_t_point() -> None:
    C = conftest.smash(3)

    points = fixlab.t_points(C, conftest.obj(C, "3"))

    assert [p.table() for p in points] == [{"*": "*"}]


def test_is_t_free() -> None:
    C = conftest.finset(2)
    swap = conftest.morphism(C, "2", "2", {"0": "1", "1": "0"})
    flip_down = conftest.morphism(C, "2", "2", {"0": "0", "1": "0"})

    assert fixlab.is_t_free(C, swap)
    assert not fixlab.is_t_free(C, swap).vacuous

    result = fixlab.is_t_free(C, flip_down)
    assert not result
    assert result.witness == conftest.point(C, "2", "0")


def test_is_t_free_vacuous() -> None:
    C = conftest.finset(0)
    empty = conftest.obj(C, "0")

    with pytest.warns(errors.VacuityWarning, match="vacuous"):
        result = fixlab.is_t_free(C, C.identity(empty))

    assert result
    assert result.vacuous


def test_is_t_free_requires_endomorphism() -> None:
    C = conftest.finset(2, 3)
    f = conftest.morphism(C, "2", "3", {"0": "0", "1": "1"})

    with pytest.raises(ValueError, match="not an endomorphism"):
        fixlab.is_t_free(C, f)


def test_fixed_t_points() -> None:
    C = conftest.finset(3)
    sigma = conftest.morphism(C, "3", "3", {"0": "0", "1": "2", "2": "2"})

    fixed = fixlab.fixed_t_points(C, sigma)

    assert fixed == [
        conftest.point(C, "3", "0"),
        conftest.point(C, "3", "2"),
    ]


def test_point_equal() -> None:
    finset = conftest.finset(2)
    assert not point_equal(
        finset,
        finset.identity(conftest.obj(finset, "2")),
        conftest.morphism(finset, "2", "2", {"0": "0", "1": "0"}),
    )

    # smash has a single t-point, so every pair of parallel maps agrees
    smash = conftest.smash(2)
    assert point_equal(
        smash,
        smash.identity(conftest.obj(smash, "2")),
        conftest.morphism(smash, "2", "2", {"*": "*", "1": "*"}),
    )


def test_point_equal_requires_parallel_maps() -> None:
    C = conftest.finset(2, 3)

    with pytest.raises(ValueError, match="not parallel"):
        point_equal(
            C,
            C.identity(conftest.obj(C, "2")),
            C.identity(conftest.obj(C, "3")),
        )


@pytest.mark.parametrize(
    ("table", "expected"),
    [
        pytest.param({"0": "1", "1": "0"}, True, id="t-free"),
        pytest.param({"0": "0", "1": "1"}, True, id="not-t-free"),
    ],
)
def test_check_t_not_initial(
    table: dict[str, str], *, expected: bool
) -> None:
    C = conftest.finset(2)

    sigma = conftest.morphism(C, "2", "2", table)

    assert check_t_not_initial(C, sigma) is expected


def test_restrict_diagonals() -> None:
    C = conftest.finset(2, 3)
    two, three = conftest.obj(C, "2"), conftest.obj(C, "3")

    restricted = fixlab.restrict_diagonals(C, [two])

    assert restricted.has_diagonal(two)
    assert not restricted.has_diagonal(three)
    assert restricted.diagonal(two) == C.diagonal(two)

    with pytest.raises(errors.MissingDiagonal, match="'3'"):
        restricted.diagonal(three)


def test_default_instance_has_no_projection_or_hom() -> None:
    C = conftest.fininj(2)
    two = conftest.obj(C, "2")

    with pytest.raises(errors.MissingProjection, match="fininj"):
        C.right_projection(two, two)

    with pytest.raises(errors.MissingInternalHom, match="fininj"):
        C.internal_hom(two, two)


def test_quotient_of_finset_is_discrete() -> None:
    C = conftest.finset(2)
    two = conftest.obj(C, "2")

    quotient = fixlab.concrete_quotient(C)

    assert len(quotient.classes[two, two]) == 4
    assert all(len(cls.members) == 1 for cls in quotient.classes[two, two])
    assert quotient.verify()
    assert quotient.verify_products()


def test_quotient_of_finset_keeps_products() -> None:
    C = conftest.finset(2)
    two = conftest.obj(C, "2")
    quotient = fixlab.concrete_quotient(C)

    pair = quotient.pairing_projections(two, two)

    assert quotient.cartesian
    assert pair is not None
    p1, p2 = pair
    square = C.product(two, two)
    assert len({(p1.function(e), p2.function(e)) for e in square.carrier}) == 4
    assert all(
        quotient.pairing_projections(x, y) is not None
        for x, y in itertools.product(quotient.objects, repeat=2)
    )
    assert quotient.verify_products()


def test_quotient_of_smash_collapses_hom_sets() -> None:
    C = conftest.smash(2, 3)
    two, three = conftest.obj(C, "2"), conftest.obj(C, "3")

    quotient = fixlab.concrete_quotient(C)
    (cls,) = quotient.classes[two, three]

    assert len(cls.members) == len(list(C.hom(two, three)))
    assert cls.representative.table() == {"*": "*", "1": "*"}
    assert quotient.class_of(cls.members[-1]) is cls
    assert quotient.verify()
    assert quotient.verify_products()
    assert not quotient.cartesian


def test_quotient_of_fininj_skips_pairing() -> None:
    quotient = fixlab.concrete_quotient(conftest.fininj(2))

    assert not quotient.cartesian
    assert quotient.verify_products()


def test_quotient_underlying_is_action_on_points() -> None:
    C = conftest.finset(2)
    two = conftest.obj(C, "2")
    swap = conftest.morphism(C, two, two, {"0": "1", "1": "0"})

    quotient = fixlab.concrete_quotient(C)

    assert quotient.underlying(quotient.class_of(swap)) == (
        conftest.point(C, two, "1"),
        conftest.point(C, two, "0"),
    )
