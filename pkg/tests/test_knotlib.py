import pytest

from skeinring.diagram import DiagramError
from skeinring.knotlib import BUILTINS, builtin_entry, builtin_names, load_builtin, parse_file, parse_text


@pytest.mark.parametrize("name", builtin_names())
def test_builtins_match_expected_counts(name):
    d = load_builtin(name)
    assert (d.n_crossings, d.n_components) == BUILTINS[name]
    assert builtin_entry(name).provenance


def test_alias_and_unknown():
    assert load_builtin("hopf−") == load_builtin("hopf-")
    with pytest.raises(KeyError):
        builtin_entry("nope")


def test_multi_diagram_document(tmp_path):
    text = "a:\nX[1,2,2,1]\n# comment\nb:\nX[1,1,2,2]\nO\n"
    entries = parse_text(text)
    assert [e.name for e in entries] == ["a", "b"]
    assert entries[1].components == 2
    f = tmp_path / "d.pd"
    f.write_text(text)
    assert [e.name for e in parse_file(f)] == ["a", "b"]


def test_headerless_and_empty():
    assert parse_text("X[1,2,2,1]")[0].name == "entry1"
    assert parse_text("") == []


def test_errors_name_entry_and_line():
    with pytest.raises(DiagramError, match=r"b: .*arc 1 occurs 3 times"):
        parse_text("a:\nX[1,2,2,1]\nb:\nX[1,1,1,2]\n")
    with pytest.raises(DiagramError, match=r"line 3"):
        parse_text("a:\nX[1,2,2,1]\nX[1,2\n")
