import pytest

import fixlab
from fixlab import errors, kernel
from fixlab.instances.build import Instance
from fixlab.instances.flat import CustomFlat
from fixlab.uniform import InternalHomWitness
from tests import conftest


def _load(name: str) -> Instance:
    return fixlab.build_instance(fixlab.load_spec(conftest.spec_path(name)))


# internal homs


def test_canonical_hom_of_finset() -> None:
    C = conftest.finset(2)
    two = conftest.obj(C, "2")

    hom = fixlab.canonical_hom(C, two, two)

    assert hom.hom_object.name == "2^2"
    assert hom.probes == (two, C.t)
    assert hom.to_dict()["probes"] == {"2": 16, "1": 4}


def test_canonical_hom_without_certificate() -> None:
    C = conftest.finset(2)
    two = conftest.obj(C, "2")

    hom = fixlab.canonical_hom(C, two, two, certify=False)

    assert hom.probes == ()


def test_canonical_hom_with_explicit_probes() -> None:
    C = conftest.pointed_bot(2, 3)
    two, three = conftest.obj(C, "2"), conftest.obj(C, "3")

    hom = fixlab.canonical_hom(C, two, three, probes=[three])

    assert hom.probes == (three,)
    pairs = hom.certificate[three]
    assert len(pairs) == len(list(C.hom(three, hom.hom_object)))


def test_slice_internal_hom_is_certified() -> None:
    C = _load("slice").category
    t, a = C.find_object("T"), C.find_object("A")

    hom = fixlab.canonical_hom(C, t, a)

    assert set(hom.probes) == {t, a}


def test_canonical_hom_needs_closed_instance() -> None:
    C = conftest.fininj(2)
    two = conftest.obj(C, "2")

    with pytest.raises(errors.MissingInternalHom):
        fixlab.canonical_hom(C, two, two)


def test_declared_candidate_is_not_representing() -> None:
    instance = _load("pointed_bot")
    C = instance.category
    candidate = instance.homs["small"]

    with pytest.raises(errors.NotRepresentable, match="probe 'C'") as info:
        fixlab.check_internal_hom(
            C,
            candidate.source,
            candidate.target,
            (candidate.obj, candidate.ev),
        )

    assert info.value.probe == "C"


def test_candidate_with_redundant_elements_is_not_representing() -> None:
    C = conftest.finset(1, 2, 3)
    three, two = conftest.obj(C, "3"), conftest.obj(C, "2")
    ev = conftest.morphism(
        C,
        C.product(three, C.t),
        two,
        {"(0,0)": "0", "(1,0)": "1", "(2,0)": "1"},
    )

    with pytest.raises(errors.NotRepresentable, match="two morphisms"):
        fixlab.check_internal_hom(C, C.t, two, (three, ev), probes=[C.t])


def test_check_internal_hom_rejects_mistyped_ev() -> None:
    C = conftest.finset(2)
    two = conftest.obj(C, "2")

    with pytest.raises(ValueError, match="ev must be a morphism"):
        fixlab.check_internal_hom(C, two, two, (two, C.identity(two)))


# currying


def test_curry_uncurry() -> None:
    C = conftest.finset(2)
    two = conftest.obj(C, "2")
    hom = fixlab.canonical_hom(C, two, two)

    for W in (two, C.t):
        for f in C.hom(W, hom.hom_object):
            assert fixlab.curry(hom, fixlab.uncurry(hom, f), W) == f


def test_curry_by_search_on_uncertified_probe() -> None:
    C = conftest.finset(2)
    two = conftest.obj(C, "2")
    hom = fixlab.canonical_hom(C, two, two, probes=[C.t])
    f = next(iter(C.hom(two, hom.hom_object)))

    assert fixlab.curry(hom, fixlab.uncurry(hom, f), two) == f


def _redundant(
    C: fixlab.Magmoid, images: dict[str, str]
) -> InternalHomWitness:
    three, two = conftest.obj(C, "3"), conftest.obj(C, "2")
    ev = conftest.morphism(C, C.product(three, C.t), two, images)
    return InternalHomWitness.uncertified(C, C.t, two, three, ev)


def test_curry_multiple_solutions() -> None:
    C = conftest.finset(1, 2, 3)
    hom = _redundant(C, {"(0,0)": "0", "(1,0)": "1", "(2,0)": "1"})
    g = conftest.morphism(
        C, C.product(C.t, C.t), conftest.obj(C, "2"), {"(0,0)": "1"}
    )

    with pytest.raises(errors.MultipleSolutions) as info:
        fixlab.curry(hom, g, C.t)

    assert info.value.count == 2


def test_curry_no_solution() -> None:
    C = conftest.finset(1, 2, 3)
    hom = _redundant(C, {"(0,0)": "0", "(1,0)": "0", "(2,0)": "0"})
    g = conftest.morphism(
        C, C.product(C.t, C.t), conftest.obj(C, "2"), {"(0,0)": "1"}
    )

    with pytest.raises(errors.NoSolution):
        fixlab.curry(hom, g, C.t)


def test_name_of() -> None:
    C = conftest.finset(2)
    two = conftest.obj(C, "2")
    hom = fixlab.canonical_hom(C, two, two)
    swap = conftest.morphism(C, two, two, {"0": "1", "1": "0"})

    name = fixlab.name_of(hom, swap)

    assert name.table() == {"0": "[1,0]"}
    assert fixlab.uncurry(hom, name) == C.compose(
        swap, C.right_projection(C.t, two)
    )


def test_name_of_without_right_projection() -> None:
    C = conftest.pointed_bot(2)
    two = conftest.obj(C, "2")
    hom = fixlab.canonical_hom(C, two, two)

    name = fixlab.name_of(hom, C.identity(two))

    assert name.table() == {"*": "[*,*]"}


# uniform constructions


def _finset_uniform_data(
    C: fixlab.FinSet,
) -> tuple[InternalHomWitness, fixlab.Morphism, fixlab.Morphism]:
    two = conftest.obj(C, "2")
    hom = fixlab.canonical_hom(C, two, two)
    idx = conftest.morphism(
        C,
        hom.hom_object,
        two,
        {label: label[1] for label in hom.hom_object.carrier},
    )
    return hom, C.identity(two), idx


def test_uniform_fix_one_point() -> None:
    instance = _load("uniform")
    C = instance.category
    one = C.find_object("one")
    flat = instance.flat
    assert flat is not None

    report = fixlab.uniform_fix(
        C,
        flat,
        fixlab.canonical_hom(C, one, one),
        instance.morphisms["id"],
        instance.morphisms["id"],
        instance.morphisms["F"],
        instance.morphisms["idx"],
    )

    assert report.hypothesis_ok
    assert report.conclusion_ok
    assert report.fix.table() == {"[*]": "*"}
    assert report.to_dict()["variant"] == "plain"


def test_uniform_fix_fails_for_negation() -> None:
    C = conftest.finset(2)
    hom, identity, idx = _finset_uniform_data(C)
    flat = fixlab.make_flat(C, "identity")
    F = conftest.logical_or(C)

    with pytest.raises(errors.HypothesisFailed):
        fixlab.uniform_fix(C, flat, hom, identity, identity, F, idx)

    report = fixlab.uniform_fix(
        C, flat, hom, identity, identity, F, idx, strict=False
    )
    assert not report.hypothesis_ok
    assert not report.conclusion_ok


def test_uniform_fix_needs_split_retraction() -> None:
    C = conftest.finset(2)
    hom, identity, idx = _finset_uniform_data(C)
    flat = fixlab.make_flat(C, "identity")
    p = conftest.morphism(C, "2", "2", {"0": "0", "1": "0"})

    with pytest.raises(errors.NotASection):
        fixlab.uniform_fix(
            C, flat, hom, p, identity, conftest.logical_or(C), idx
        )


def test_uniform_fix_needs_endomorphism_hom() -> None:
    C = conftest.finset(1, 2)
    two = conftest.obj(C, "2")
    _, identity, idx = _finset_uniform_data(C)
    hom = fixlab.canonical_hom(C, C.t, two)

    with pytest.raises(ValueError, match="Expected the internal hom 2\\^2"):
        fixlab.uniform_fix(
            C,
            fixlab.make_flat(C, "identity"),
            hom,
            identity,
            identity,
            conftest.logical_or(C),
            idx,
        )


def _pointed_crisp_data(
    C: fixlab.PointedBottom,
) -> tuple[InternalHomWitness, fixlab.Morphism]:
    two = conftest.obj(C, "2")
    hom = fixlab.canonical_hom(C, two, two)
    F = conftest.morphism(
        C, C.product(two, two), two, {"*": "*", "(1,*)": "1", "(1,1)": "*"}
    )
    return hom, F


@pytest.mark.parametrize("variant", ["crisp_section", "crisp_index"])
def test_uniform_fix_crisp_with_trivializing_flat(variant: str) -> None:
    C = conftest.pointed_bot(2)
    two = conftest.obj(C, "2")
    flat = fixlab.make_flat(C, "trivializing")
    hom, F = _pointed_crisp_data(C)
    E = hom.hom_object
    s_crisp = flat.counit(two)

    if variant == "crisp_section":
        idx = conftest.morphism(C, flat.object_map(E), two, {"[*,*]": "*"})
        report = fixlab.uniform_fix_crisp(
            C,
            flat,
            hom,
            C.identity(two),
            s_crisp,
            F,
            idx,
            variant="crisp_section",
        )
    else:
        idx = conftest.morphism(
            C, E, two, {label: "*" for label in E.carrier}
        )
        report = fixlab.uniform_fix_crisp(
            C,
            flat,
            hom,
            C.identity(two),
            s_crisp,
            F,
            idx,
            variant="crisp_index",
        )

    assert report.variant == variant
    assert report.hypothesis_ok
    assert report.conclusion_ok
    assert report.fix.table() == {"[*,*]": "*"}


def test_uniform_fix_crisp_rejects_non_section() -> None:
    C = conftest.finset(2)
    hom, identity, idx = _finset_uniform_data(C)
    flat = fixlab.make_flat(C, "identity")
    s_crisp = conftest.morphism(C, "2", "2", {"0": "1", "1": "0"})

    with pytest.raises(errors.NotASection):
        fixlab.uniform_fix_crisp(
            C,
            flat,
            hom,
            identity,
            s_crisp,
            conftest.logical_or(C),
            idx,
            variant="crisp_section",
        )


def test_uniform_fix_crisp_rejects_broken_comonad() -> None:
    C = conftest.finset(2)
    hom, identity, idx = _finset_uniform_data(C)
    flat = CustomFlat(C, {}).replace_comultiplication(
        conftest.obj(C, "2"), {"0": "1", "1": "0"}
    )

    with pytest.raises(errors.HypothesisFailed, match="idempotent comonad"):
        fixlab.uniform_fix_crisp(
            C,
            flat,
            hom,
            identity,
            identity,
            conftest.logical_or(C),
            idx,
            variant="crisp_section",
        )


# split epis and reflexive objects


def test_fix_from_split_epi() -> None:
    instance = _load("uniform")
    C = instance.category
    one, two = C.find_object("one"), C.find_object("two")

    result = fixlab.fix_from_split_epi(
        C,
        two,
        one,
        fixlab.canonical_hom(C, two, one),
        fixlab.canonical_hom(C, one, one),
        instance.morphisms["alpha"],
        instance.morphisms["ell"],
    )

    assert result.report
    assert result.report.checked == 4
    assert result.fix.table() == {"[*]": "*"}
    assert result.idx.target == two
    assert result.to_dict()["report"] == result.report.to_dict()


def test_fix_from_split_epi_needs_section() -> None:
    instance = _load("uniform")
    C = instance.category
    one, two = C.find_object("one"), C.find_object("two")

    with pytest.raises(errors.NotASection):
        fixlab.fix_from_split_epi(
            C,
            two,
            one,
            fixlab.canonical_hom(C, two, one),
            fixlab.canonical_hom(C, one, one),
            instance.morphisms["alpha"],
            instance.morphisms["alpha"],
        )


def test_fix_reflexive() -> None:
    instance = _load("uniform")
    C = instance.category
    one = C.find_object("one")

    fix = fixlab.fix_reflexive(
        C,
        one,
        fixlab.canonical_hom(C, one, one),
        instance.morphisms["app"],
        instance.morphisms["lam"],
    )

    assert fix.table() == {"[*]": "*"}
    assert fix.target == one


def test_fixed_point_map_of_finset_cannot_exist() -> None:
    C = conftest.finset(2)
    two = conftest.obj(C, "2")
    hom = fixlab.canonical_hom(C, two, two)

    # no morphism 2 -> 2^2 is surjective, so nothing splits
    assert not any(
        kernel.is_surjective(alpha.function)
        for alpha in C.hom(two, hom.hom_object)
    )
