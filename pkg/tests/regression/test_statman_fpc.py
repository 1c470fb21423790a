import fixlab
from fixlab.combinators import joinability


def test_statman_fpc() -> None:
    term = fixlab.parse_term("B (W W) (B W (B B B))")

    result = fixlab.check_fpc(term)

    assert isinstance(result, joinability.Verified)
    assert fixlab.basis_of(term).logic == "FL_c"
    assert str(result.witness.left_path[0]) == "B (W W) (B W (B B B)) x"
    assert str(result.witness.right_path[0]) == (
        "x (B (W W) (B W (B B B)) x)"
    )
