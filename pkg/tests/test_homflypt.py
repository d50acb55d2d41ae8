from fractions import Fraction

from skeinring.diagram import mirror, parse_pd
from skeinring.homflypt import DELTA, format_laurent, homflypt_oracle
from skeinring.knotlib import load_builtin


def test_unknot_and_unlink():
    assert homflypt_oracle(load_builtin("unknot")) == {(0, 0): 1}
    assert homflypt_oracle(load_builtin("unlink2")) == DELTA


def test_right_trefoil_by_hand():
    # l P+ + l^-1 P- + m P0 = 0 applied twice from the unknot and unlink
    expected = {(-2, 0): Fraction(-2), (-4, 0): Fraction(-1), (-2, 2): Fraction(1)}
    assert homflypt_oracle(load_builtin("trefoil-r")) == expected


def test_mirror_inverts_l():
    for name in ("trefoil-r", "hopf+", "fig8"):
        d = load_builtin(name)
        flipped = {(-i, j): c for (i, j), c in homflypt_oracle(d).items()}
        assert homflypt_oracle(mirror(d)) == flipped


def test_kinks_are_trivial():
    assert homflypt_oracle(parse_pd("X[1,1,2,2]")) == {(0, 0): 1}
    assert homflypt_oracle(parse_pd("X[1,2,2,1]")) == {(0, 0): 1}


def test_format():
    assert format_laurent({}) == "0"
    assert "m" in format_laurent(DELTA)
