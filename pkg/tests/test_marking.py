from skeinring.diagram import change_crossing
from skeinring.knotlib import load_builtin
from skeinring.marking import (
    Marking, all_markings, bad_count, canonical_marking, classify, first_bad, is_monotone, traverse,
)

import pytest
from skeinring.diagram import DiagramError


def test_traversal_visits_each_crossing_twice():
    d = load_builtin("fig8")
    events = traverse(d, canonical_marking(d))
    assert len(events) == 8
    for x in d.crossing_ids:
        assert sorted(k for v, k in events if v == x) == ["over", "under"]


def test_ascending_diagram_is_monotone_for_some_marking():
    d = load_builtin("ascending-unknot-3")
    assert any(is_monotone(d, m) for m in all_markings(d))


def test_changing_bad_crossings_reaches_monotone():
    d = load_builtin("trefoil-r")
    m = canonical_marking(d)
    steps = 0
    while (x := first_bad(d, m)) is not None:
        d = change_crossing(d, x)
        steps += 1
    assert is_monotone(d, m)
    assert steps == bad_count(load_builtin("trefoil-r"), m)


def test_classify_covers_all_crossings():
    d = load_builtin("hopf-")
    status = classify(d, canonical_marking(d))
    assert set(status) == set(d.crossing_ids)


def test_marking_count():
    d = load_builtin("hopf+")
    # two component orders times two arcs per component on each
    assert len(list(all_markings(d))) == 2 * 2 * 2


def test_bad_marking_rejected():
    d = load_builtin("hopf+")
    c = d.components[0]
    with pytest.raises(DiagramError):
        Marking((c[0], c[1])).check(d)
