"""Marked diagrams: component order, base points and bad crossings.

A marking lists one base arc per arc-carrying component, in visiting order.
Traversal of a component starts at the tail of its base arc.  A crossing is
*bad* when the traversal first reaches it along the over-strand.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, DiagramError


@dataclass(frozen=True)
class Marking:
    base_arcs: tuple

    def check(self, d: Diagram) -> "Marking":
        comp = d.component_of
        seen = [comp.get(a) for a in self.base_arcs]
        if None in seen or sorted(seen) != list(range(len(d.components))):
            raise DiagramError("marking must give exactly one base arc per component")
        return self


def canonical_marking(d: Diagram) -> Marking:
    """Components ordered by minimal arc label, based at that arc."""
    return Marking(tuple(c[0] for c in d.components))


def traverse(d: Diagram, m: Marking) -> list:
    """Visit events ``(crossing id, 'over' | 'under')`` in traversal order."""
    m.check(d)
    by_id = d._by_id
    events = []
    for base in m.base_arcs:
        a = base
        while True:
            vid, i = d.ends[a]["head"]
            v = by_id[vid]
            if v.is_crossing:
                events.append((vid, "under" if v.is_under_port(i) else "over"))
            a = v.ports[v.partner(i)]
            if a == base:
                break
    return events


def classify(d: Diagram, m: Marking) -> dict:
    status = {}
    for vid, kind in traverse(d, m):
        if vid not in status:
            status[vid] = "bad" if kind == "over" else "good"
    return status


def first_bad(d: Diagram, m: Marking):
    seen = set()
    for vid, kind in traverse(d, m):
        if vid in seen:
            continue
        if kind == "over":
            return vid
        seen.add(vid)
    return None


def is_monotone(d: Diagram, m: Marking) -> bool:
    return first_bad(d, m) is None


def bad_count(d: Diagram, m: Marking) -> int:
    return sum(1 for s in classify(d, m).values() if s == "bad")


def all_markings(d: Diagram):
    """Every component order and base-arc choice (small diagrams only)."""
    from itertools import permutations, product

    comps = d.components
    for order in permutations(range(len(comps))):
        for bases in product(*(comps[k] for k in order)):
            yield Marking(tuple(bases))
