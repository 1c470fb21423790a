import pytest

import fixlab
from fixlab import errors
from tests import conftest


def test_small_hom_passes_point_probe() -> None:
    instance = fixlab.build_instance(
        fixlab.load_spec(conftest.spec_path("pointed_bot"))
    )
    C = instance.category
    small = instance.homs["small"]
    one = C.find_object("one")

    witness = fixlab.check_internal_hom(
        C, small.source, small.target, (small.obj, small.ev), probes=[one]
    )

    assert witness.probes == (one,)

    with pytest.raises(errors.NotRepresentable):
        fixlab.check_internal_hom(
            C, small.source, small.target, (small.obj, small.ev)
        )
