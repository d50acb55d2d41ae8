import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinring.diagram import (
    DiagramError, canonical_code, canonical_form, change_crossing, disjoint_union, format_pd, mirror,
    parse_pd, relabel, reverse, site_class, unknot, writhe,
)
from skeinring.knotlib import builtin_names, load_builtin

WRITHES = {"unknot": 0, "unlink2": 0, "hopf+": 2, "hopf-": -2, "trefoil-r": 3, "trefoil-l": -3, "fig8": 0}


@pytest.mark.parametrize("name,w", sorted(WRITHES.items()))
def test_writhe_of_builtins(name, w):
    assert writhe(load_builtin(name)) == w


def test_one_crossing_kinks():
    assert writhe(parse_pd("X[1,2,2,1]")) == -1
    assert writhe(parse_pd("X[1,1,2,2]")) == 1


def test_components_and_sites():
    h = load_builtin("hopf+")
    assert h.n_components == 2
    assert all(site_class(h, x) == ("different", 1) for x in h.crossing_ids)
    t = load_builtin("trefoil-l")
    assert all(site_class(t, x) == ("same", -1) for x in t.crossing_ids)


def test_sign_annotation_fixes_orientation():
    # a two-component diagram is only oriented by its signs
    assert writhe(parse_pd("X[1,3,2,4]+ X[3,1,4,2]+")) == 2


@pytest.mark.parametrize("text,msg", [
    ("X[1,2,3]", "four"),
    ("X[1,1,1,2]", "occurs"),
    ("X[0,1,1,2]", "positive"),
    ("Y[1,2]", "malformed"),
    ("", "empty"),
])
def test_parse_errors(text, msg):
    with pytest.raises(DiagramError, match=msg):
        parse_pd(text)


@pytest.mark.parametrize("name", builtin_names())
def test_pd_round_trip(name):
    d = load_builtin(name)
    e = parse_pd(format_pd(d))
    assert canonical_code(e) == canonical_code(d)
    assert writhe(e) == writhe(d)


@given(st.sampled_from([n for n in builtin_names() if n not in ("unknot", "unlink2")]), st.randoms())
def test_canonical_code_ignores_labels(name, rnd):
    d = load_builtin(name)
    arcs = list(d.ends)
    shuffled = arcs[:]
    rnd.shuffle(shuffled)
    ids = [v.id for v in d.vertices]
    new_ids = ids[:]
    rnd.shuffle(new_ids)
    e = relabel(d, dict(zip(arcs, shuffled)), dict(zip(ids, new_ids)))
    assert canonical_code(e) == canonical_code(d)
    assert canonical_form(e) == canonical_form(d)


def test_canonical_code_separates_mirrors():
    assert canonical_code(load_builtin("trefoil-r")) != canonical_code(load_builtin("trefoil-l"))


def test_mirror_reverse_and_change():
    t = load_builtin("trefoil-r")
    assert writhe(mirror(t)) == -3
    assert writhe(reverse(t)) == 3
    assert writhe(change_crossing(t, t.crossing_ids[0])) == 1


def test_disjoint_union():
    d = disjoint_union(load_builtin("hopf+"), load_builtin("trefoil-r"))
    assert d.n_components == 3 and d.n_crossings == 5
    assert unknot(3).n_components == 3
