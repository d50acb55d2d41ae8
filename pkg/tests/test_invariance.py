import random

import pytest

from skeinring.invariance import Checker, minimize, run_suite
from skeinring.knotlib import load_builtin
from skeinring.profiles import get_profile


def test_homflypt_suite_passes():
    rep = run_suite(load_builtin("trefoil-r"), get_profile("homflypt"), "1", 10, random.Random(0))
    assert rep.ok and rep.trials == 10


def test_zero_trials():
    rep = run_suite(load_builtin("fig8"), get_profile("homflypt"), "1", 0, random.Random(0))
    assert rep.ok and rep.checks == 0


def test_negative_control_type2_kinks():
    # type-two f without the unknot relations changes under the first move
    P = get_profile("type2-d")
    checker = Checker(P, "2")
    rep = run_suite(load_builtin("unknot"), P, "2", 3, random.Random(0), kinds=("R1",), checker=checker)
    assert not rep.ok
    small = minimize(rep.violations[0], checker, ("R1",))
    assert small.check == "move" and "R1" in small.dump()


def test_unmodified_f_not_invariant_in_mutant_profile():
    # only the writhe-corrected value is an invariant there
    P = get_profile("mutant")
    rep = run_suite(load_builtin("trefoil-r"), P, "1", 6, random.Random(3), kinds=("R1",))
    assert not rep.ok
    assert run_suite(load_builtin("trefoil-r"), P, "1w", 6, random.Random(3), kinds=("R1",)).ok


def test_unknown_value_type():
    with pytest.raises(ValueError):
        Checker(get_profile("homflypt"), "3")
