"""Built-in diagrams and multi-diagram PD files.

A PD file holds one diagram per block; blocks start with a ``name:`` header
line (a file without headers is a single unnamed diagram).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .diagram import Diagram, DiagramError, parse_pd

# name -> (expected crossings, expected components)
BUILTINS = {
    "unknot": (0, 1),
    "unlink2": (0, 2),
    "hopf+": (2, 2),
    "hopf-": (2, 2),
    "trefoil-r": (3, 1),
    "trefoil-l": (3, 1),
    "fig8": (4, 1),
    "conway-11n34": (11, 1),
    "kt-11n42": (11, 1),
    "ascending-unknot-3": (3, 1),
}

_ALIASES = {"hopf−": "hopf-"}


@dataclass(frozen=True)
class NamedDiagram:
    name: str
    pd_text: str
    crossings: int | None = None
    components: int | None = None
    provenance: str = ""

    def diagram(self) -> Diagram:
        d = parse_pd(self.pd_text)
        if self.crossings is not None and d.n_crossings != self.crossings:
            raise DiagramError(f"{self.name}: expected {self.crossings} crossings, found {d.n_crossings}")
        if self.components is not None and d.n_components != self.components:
            raise DiagramError(f"{self.name}: expected {self.components} components, found {d.n_components}")
        return d


def _provenance(text: str) -> str:
    lines = [ln[1:].strip() for ln in text.splitlines() if ln.startswith("#")]
    return " ".join(lines)


def builtin_entry(name: str) -> NamedDiagram:
    name = _ALIASES.get(name, name)
    if name not in BUILTINS:
        raise KeyError(f"unknown builtin {name!r}; choose from {sorted(BUILTINS)}")
    text = resources.files("skeinring").joinpath("data", f"{name}.pd").read_text()
    c, n = BUILTINS[name]
    return NamedDiagram(name, text, c, n, _provenance(text))


@lru_cache(maxsize=None)
def load_builtin(name: str) -> Diagram:
    return builtin_entry(name).diagram()


def builtin_names() -> list:
    return list(BUILTINS)


_HEADER = re.compile(r"^\s*([^\s#:][^#:]*):\s*$")


def parse_text(text: str) -> list:
    """Split a PD document into :class:`NamedDiagram` entries and validate
    each; errors name the entry and the file line."""
    blocks = []
    name, start, lines = None, 1, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        m = _HEADER.match(raw)
        if m:
            if name is not None or any(ln.split("#", 1)[0].strip() for ln in lines):
                blocks.append((name, start, lines))
            name, start, lines = m.group(1).strip(), lineno + 1, []
        else:
            lines.append(raw)
    if name is not None or any(ln.split("#", 1)[0].strip() for ln in lines):
        blocks.append((name, start, lines))
    out = []
    for k, (name, start, lines) in enumerate(blocks, 1):
        body = "\n".join(lines)
        label = name or f"entry{k}"
        try:
            d = parse_pd(body)
        except DiagramError as e:
            msg = str(e)
            m = re.match(r"line (\d+): (.*)", msg)
            if m:
                msg = f"line {start + int(m.group(1)) - 1}: {m.group(2)}"
            raise DiagramError(f"{label}: {msg}") from None
        out.append(NamedDiagram(label, body, d.n_crossings, d.n_components, _provenance(body)))
    return out


def parse_file(path) -> list:
    with open(path) as fh:
        return parse_text(fh.read())
