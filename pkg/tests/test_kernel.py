import hypothesis
import hypothesis.strategies as st
import pydantic
import pytest
from typing_extensions import Final

import fixlab
from fixlab import errors, kernel


labels: Final = st.lists(
    st.text(alphabet="abcxyz01", min_size=1, max_size=3),
    unique=True,
    max_size=4,
)


def _set(*elements: str) -> kernel.FiniteSet:
    return kernel.FiniteSet.of(*elements)


@hypothesis.given(labels)
def test_finite_set_is_order_independent(elements: list[str]) -> None:
    assert _set(*elements) == _set(*reversed(elements))
    assert list(_set(*elements)) == sorted(elements)


def test_finite_set_rejects_duplicates() -> None:
    with pytest.raises(ValueError, match="Duplicate elements"):
        _set("a", "a")


def test_finite_set_rejects_unsorted_elements() -> None:
    with pytest.raises(pydantic.ValidationError):
        kernel.FiniteSet(("b", "a"))


def test_finite_set_name_does_not_affect_equality() -> None:
    assert kernel.FiniteSet.of("a", name="A") == _set("a")


def test_make_function_accepts_pairs_and_mappings() -> None:
    two = _set("0", "1")

    f = kernel.make_function(two, two, [("0", "1"), ("1", "0")])
    g = kernel.make_function(two, two, {"1": "0", "0": "1"})

    assert kernel.equal(f, g)
    assert f("0") == "1"
    assert f.as_dict() == {"0": "1", "1": "0"}


def test_make_function_missing_assignment() -> None:
    with pytest.raises(errors.MissingAssignment, match="'1'"):
        kernel.make_function(_set("0", "1"), _set("0"), {"0": "0"})


def test_make_function_rejects_repeated_source() -> None:
    pairs = [("0", "0"), ("0", "1"), ("1", "1")]

    with pytest.raises(ValueError, match="Repeated source"):
        kernel.make_function(_set("0", "1"), _set("0", "1"), pairs)


@pytest.mark.parametrize(
    ("table", "where"),
    [
        pytest.param({"0": "9"}, "codomain", id="image"),
        pytest.param({"0": "0", "7": "0"}, "domain", id="source"),
    ],
)
def test_make_function_foreign_element(
    table: dict[str, str], where: str
) -> None:
    with pytest.raises(errors.ForeignElement, match=where):
        kernel.make_function(_set("0"), _set("0"), table)


def test_apply_to_foreign_element() -> None:
    f = kernel.identity(_set("a"))

    with pytest.raises(errors.ForeignElement, match="domain"):
        f("b")


def test_compose() -> None:
    two = _set("0", "1")
    three = _set("0", "1", "2")
    f = kernel.make_function(two, three, {"0": "2", "1": "0"})
    g = kernel.make_function(three, two, {"0": "1", "1": "1", "2": "0"})

    assert kernel.compose(g, f).as_dict() == {"0": "0", "1": "1"}
    assert kernel.compose(f, kernel.identity(two)) == f
    assert kernel.compose(kernel.identity(three), f) == f


def test_compose_mismatch() -> None:
    f = kernel.identity(_set("0"))
    g = kernel.identity(_set("1"))

    with pytest.raises(errors.CompositionMismatch):
        kernel.compose(g, f)


@hypothesis.given(st.integers(0, 3), st.integers(0, 3))
def test_enumerate_functions_counts(dom_size: int, cod_size: int) -> None:
    dom = _set(*map(str, range(dom_size)))
    cod = _set(*map(str, range(cod_size)))

    functions = list(kernel.enumerate_functions(dom, cod))

    assert len(functions) == kernel.count_functions(dom, cod)
    assert len(set(functions)) == len(functions)


def test_enumerate_functions_is_lexicographic() -> None:
    two = _set("0", "1")

    tables = [
        kernel.table_label(f) for f in kernel.enumerate_functions(two, two)
    ]

    assert tables == ["[0,0]", "[0,1]", "[1,0]", "[1,1]"]


def test_enumerate_functions_cap_is_eager() -> None:
    three = _set("0", "1", "2")

    with pytest.raises(errors.SizeLimitExceeded, match="27 items"):
        kernel.enumerate_functions(three, three, cap=26)


def test_enumerate_functions_uses_current_budget() -> None:
    three = _set("0", "1", "2")

    with (
        fixlab.Budget(enumeration_cap=10),
        pytest.raises(errors.SizeLimitExceeded) as info,
    ):
        kernel.enumerate_functions(three, three)

    assert info.value.cap == 10
    assert info.value.size == 27


@pytest.mark.parametrize(
    ("table", "injective", "surjective"),
    [
        pytest.param({"0": "0", "1": "1"}, True, True, id="bijection"),
        pytest.param({"0": "1", "1": "1"}, False, False, id="constant"),
    ],
)
def test_injective_surjective(
    table: dict[str, str], *, injective: bool, surjective: bool
) -> None:
    two = _set("0", "1")
    f = kernel.make_function(two, two, table)

    assert kernel.is_injective(f) is injective
    assert kernel.is_surjective(f) is surjective


def test_cartesian_labels() -> None:
    product = kernel.cartesian(_set("a", "b"), _set("x"))

    assert list(product) == ["(a,x)", "(b,x)"]
    assert len(kernel.cartesian(_set(), _set("x"))) == 0
