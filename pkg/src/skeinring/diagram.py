"""Oriented link diagrams built from planar-diagram (PD) codes.

A diagram is a set of 4-valent vertices whose ports list arc labels
counterclockwise.  Crossing vertices pair opposite ports (0-2 and 1-3) and
record which of the two axes carries the under-strand.  Smoothing a crossing
temporarily leaves a *joint*: a vertex whose ports are paired as two
non-crossing passages.  Joints keep the local geometry fixed so that the
states of different resolutions can be compared port by port; evaluation
code strips them again (:func:`strip_joints`).

Crossing-free closed loops carry no arcs in a PD code, so they are kept as
an explicit circle count.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterable


class DiagramError(ValueError):
    """Raised for malformed PD input or inconsistent diagram data."""


@dataclass(frozen=True)
class Vertex:
    """One site of a diagram.

    ``ports`` holds arc labels counterclockwise, ``incoming[i]`` says whether
    the arc at port ``i`` ends here.  For a crossing ``under`` is the axis
    (0 for ports 0/2, 1 for ports 1/3) of the under-strand and ``pairing`` is
    None.  For a joint ``pairing`` lists the two connected port pairs.
    """

    id: int
    ports: tuple
    incoming: tuple
    under: int = 0
    pairing: tuple | None = None

    @property
    def is_crossing(self) -> bool:
        return self.pairing is None

    def partner(self, i: int) -> int:
        """Port through which a strand entering at ``i`` leaves."""
        if self.pairing is None:
            return (i + 2) % 4
        for a, b in self.pairing:
            if i == a:
                return b
            if i == b:
                return a
        raise DiagramError(f"port {i} unpaired at vertex {self.id}")

    def is_under_port(self, i: int) -> bool:
        return self.pairing is None and i % 2 == self.under

    @property
    def sign(self) -> int:
        """Crossing sign: +1 when the over-strand enters right after the
        incoming under port (counterclockwise), i.e. over runs NW->SE in the
        frame with both incoming ends on the west side."""
        if self.pairing is not None:
            raise DiagramError(f"vertex {self.id} is not a crossing")
        u = self.under
        under_in = u if self.incoming[u] else u + 2
        # ccw after the incoming under port comes the over port that is
        # outgoing for a positive crossing
        nxt = (under_in + 1) % 4
        return 1 if not self.incoming[nxt] else -1

    def changed(self) -> "Vertex":
        """The same site with over and under exchanged."""
        return replace(self, under=1 - self.under)


@dataclass(frozen=True)
class Diagram:
    """Immutable oriented link diagram.

    Equality is exact (labels, ids, port order); use :func:`canonical_code`
    for equality up to relabeling.
    """

    vertices: tuple
    circles: int = 0

    # -- basic lookups ---------------------------------------------------
    @cached_property
    def _by_id(self) -> dict:
        return {v.id: v for v in self.vertices}

    def vertex(self, vid: int) -> Vertex:
        try:
            return self._by_id[vid]
        except KeyError:
            raise DiagramError(f"unknown crossing id {vid}") from None

    @cached_property
    def ends(self) -> dict:
        """arc label -> {'head': (vid, port), 'tail': (vid, port)}."""
        out: dict = {}
        for v in self.vertices:
            for i, a in enumerate(v.ports):
                key = "head" if v.incoming[i] else "tail"
                slot = out.setdefault(a, {})
                if key in slot:
                    raise DiagramError(f"arc {a} has two {key} ends")
                slot[key] = (v.id, i)
        for a, slot in out.items():
            if len(slot) != 2:
                raise DiagramError(f"arc {a} does not occur exactly twice with one head and one tail")
        return out

    @property
    def crossings(self) -> tuple:
        return tuple(v for v in self.vertices if v.is_crossing)

    @property
    def crossing_ids(self) -> tuple:
        return tuple(v.id for v in self.vertices if v.is_crossing)

    @property
    def arcs(self) -> tuple:
        return tuple(sorted(self.ends))

    def next_arc(self, a: int) -> int:
        """Arc following ``a`` along the orientation."""
        vid, i = self.ends[a]["head"]
        v = self._by_id[vid]
        return v.ports[v.partner(i)]

    @cached_property
    def components(self) -> tuple:
        """Oriented arc cycles, each starting at its minimal label, ordered by
        that label.  Crossing-free circles are not included (see ``circles``)."""
        seen = set()
        out = []
        for a in sorted(self.ends):
            if a in seen:
                continue
            cyc = [a]
            seen.add(a)
            b = self.next_arc(a)
            while b != a:
                if b in seen:
                    raise DiagramError("orientation is not coherent along a component")
                cyc.append(b)
                seen.add(b)
                b = self.next_arc(b)
            out.append(tuple(cyc))
        return tuple(out)

    @cached_property
    def component_of(self) -> dict:
        return {a: k for k, cyc in enumerate(self.components) for a in cyc}

    @property
    def n_components(self) -> int:
        return len(self.components) + self.circles

    @property
    def n_crossings(self) -> int:
        return sum(1 for v in self.vertices if v.is_crossing)

    def validate(self) -> "Diagram":
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise DiagramError("duplicate vertex ids")
        if self.circles < 0:
            raise DiagramError("negative circle count")
        for v in self.vertices:
            if len(v.ports) != 4 or len(v.incoming) != 4:
                raise DiagramError(f"vertex {v.id} must have four ports")
            if v.is_crossing:
                for i in (0, 1):
                    if v.incoming[i] == v.incoming[i + 2]:
                        raise DiagramError(f"strand through ports {i},{i + 2} of {v.id} is not oriented")
            else:
                for a, b in v.pairing:
                    if v.incoming[a] == v.incoming[b]:
                        raise DiagramError(f"joint {v.id} passage {a}-{b} is not oriented")
        self.ends  # noqa: B018 - raises on bad arc usage
        self.components  # noqa: B018
        return self


# -- PD parsing -------------------------------------------------------------

_TOKEN = re.compile(r"X\[([^\]]*)\]\s*([+-])?")


def _orient(quads: list, signs: list) -> list:
    """Decide which over port is incoming at each crossing.

    Returns a list with 1 or 3 per crossing (the incoming over slot).
    """
    n = len(quads)
    over_in: list = [None] * n
    where: dict = {}
    for k, q in enumerate(quads):
        for s, a in enumerate(q):
            where.setdefault(a, []).append((k, s))
    for a, occ in where.items():
        if len(occ) != 2:
            raise DiagramError(f"arc {a} occurs {len(occ)} times (expected 2)")

    def direction(k, s):
        # True if slot s of crossing k is incoming, None if unknown
        if s == 0:
            return True
        if s == 2:
            return False
        if over_in[k] is None:
            return None
        return s == over_in[k]

    def settle(k, value):
        if over_in[k] is None:
            over_in[k] = value
            return True
        if over_in[k] != value:
            raise DiagramError(f"inconsistent orientation at crossing {k + 1}")
        return False

    for k, sgn in enumerate(signs):
        if sgn is not None:
            settle(k, 3 if sgn > 0 else 1)

    def propagate():
        changed = True
        while changed:
            changed = False
            for a, ((k1, s1), (k2, s2)) in where.items():
                d1, d2 = direction(k1, s1), direction(k2, s2)
                if d1 is not None and d2 is not None:
                    if d1 == d2:
                        raise DiagramError(f"arc {a} has inconsistent orientation")
                    continue
                if d1 is None and d2 is None:
                    continue
                k, s, want = (k1, s1, not d2) if d1 is None else (k2, s2, not d1)
                changed |= settle(k, s if want else (s + 2) % 4)

    propagate()
    while None in over_in:
        k = over_in.index(None)
        b, d = quads[k][1], quads[k][3]
        comp = _unoriented_cycle(quads, where, b)
        lo, hi = min(comp), max(comp)
        if len(comp) > 2 and (b == d + 1 or (d == hi and b == lo)):
            settle(k, 3)
        elif len(comp) > 2 and (d == b + 1 or (b == hi and d == lo)):
            settle(k, 1)
        else:
            raise DiagramError(f"orientation underivable at crossing {k + 1}; add a +/- annotation")
        propagate()
    return over_in


def _unoriented_cycle(quads, where, start):
    seen = {start}
    todo = [start]
    while todo:
        a = todo.pop()
        for k, s in where[a]:
            b = quads[k][(s + 2) % 4]
            if b not in seen:
                seen.add(b)
                todo.append(b)
    return seen


def from_pd(quads: Iterable, circles: int = 0, signs: Iterable | None = None) -> Diagram:
    """Build a diagram from PD quadruples (slot 0 = incoming under arc)."""
    quads = [tuple(int(x) for x in q) for q in quads]
    for q in quads:
        if len(q) != 4:
            raise DiagramError(f"crossing {q} must list four arcs")
        if min(q) < 1:
            raise DiagramError("arc labels must be positive integers")
    signs = list(signs) if signs is not None else [None] * len(quads)
    over_in = _orient(quads, signs) if quads else []
    verts = []
    for k, (q, o) in enumerate(zip(quads, over_in)):
        inc = (True, o == 1, False, o == 3)
        verts.append(Vertex(k + 1, q, inc, 0))
    return Diagram(tuple(verts), circles).validate()


def parse_pd(text: str) -> Diagram:
    """Parse one PD document.

    Lines hold ``X[a,b,c,d]`` tokens, each optionally followed by ``+`` or
    ``-``; a line ``O`` adds a crossing-free circle; ``#`` starts a comment.
    """
    quads, signs, circles = [], [], 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.upper() == "O":
            circles += 1
            continue
        if line.upper().startswith("PD[") and line.endswith("]"):
            line = line[3:-1]
        pos = 0
        line = line.strip()
        while pos < len(line):
            m = _TOKEN.match(line, pos)
            if not m:
                raise DiagramError(f"line {lineno}: malformed token near {line[pos:pos + 12]!r}")
            fields = [f.strip() for f in m.group(1).split(",")]
            if len(fields) != 4 or not all(f.isdigit() for f in fields):
                raise DiagramError(f"line {lineno}: crossing must list four positive integers")
            quads.append(tuple(int(f) for f in fields))
            signs.append({"+": 1, "-": -1, None: None}[m.group(2)])
            pos = m.end()
            while pos < len(line) and line[pos] in " ,\t":
                pos += 1
    if not quads and circles == 0:
        raise DiagramError("empty PD document")
    return from_pd(quads, circles, signs)


def to_pd(d: Diagram) -> list:
    """PD quadruples with sign annotations for a joint-free diagram."""
    out = []
    for v in sorted(d.vertices, key=lambda v: v.id):
        if not v.is_crossing:
            raise DiagramError("cannot write a diagram with joints as PD")
        u = v.under if v.incoming[v.under] else v.under + 2
        q = tuple(v.ports[(u + k) % 4] for k in range(4))
        out.append((q, v.sign))
    return out


def format_pd(d: Diagram) -> str:
    lines = [f"X[{a},{b},{c},{e}] {'+' if s > 0 else '-'}" for (a, b, c, e), s in to_pd(d)]
    lines += ["O"] * d.circles
    return "\n".join(lines)


# -- queries ----------------------------------------------------------------

def components(d: Diagram) -> list:
    return [list(c) for c in d.components]


def site_class(d: Diagram, x: int) -> tuple:
    """('same' | 'different', +1 | -1) for the crossing with id ``x``."""
    v = d.vertex(x)
    if not v.is_crossing:
        raise DiagramError(f"vertex {x} is not a crossing")
    comp = d.component_of
    same = comp[v.ports[0]] == comp[v.ports[1]]
    return ("same" if same else "different", v.sign)


def writhe(d: Diagram) -> int:
    return sum(v.sign for v in d.crossings)


def crossing_count(d: Diagram) -> int:
    return d.n_crossings


def unknot(n: int = 1) -> Diagram:
    """The crossing-free ``n``-component unlink."""
    return Diagram((), n)


def relabel(d: Diagram, arc_map: dict, id_map: dict | None = None) -> Diagram:
    id_map = id_map or {}
    verts = tuple(
        replace(v, id=id_map.get(v.id, v.id), ports=tuple(arc_map[a] for a in v.ports))
        for v in d.vertices
    )
    return Diagram(verts, d.circles)


def disjoint_union(d1: Diagram, d2: Diagram) -> Diagram:
    shift_a = max(d1.ends, default=0)
    shift_v = max((v.id for v in d1.vertices), default=0)
    moved = relabel(d2, {a: a + shift_a for a in d2.ends}, {v.id: v.id + shift_v for v in d2.vertices})
    return Diagram(d1.vertices + moved.vertices, d1.circles + d2.circles)


def change_crossing(d: Diagram, x: int) -> Diagram:
    d.vertex(x)
    return Diagram(tuple(v.changed() if v.id == x else v for v in d.vertices), d.circles)


def mirror(d: Diagram) -> Diagram:
    """Mirror image obtained by changing every crossing."""
    return Diagram(tuple(v.changed() if v.is_crossing else v for v in d.vertices), d.circles)


def reverse(d: Diagram) -> Diagram:
    """Reverse the orientation of every component."""
    return Diagram(tuple(replace(v, incoming=tuple(not f for f in v.incoming)) for v in d.vertices), d.circles)


# -- joints -----------------------------------------------------------------

def strip_joints(d: Diagram) -> Diagram:
    """Remove joints, merging arcs, and renumber arcs consecutively along
    components.  Cycles passing only through joints become circles."""
    by_id = d._by_id
    cross = sorted(v.id for v in d.vertices if v.is_crossing)
    visited = set()  # (vid, port) outgoing crossing ports already used
    new_ports = {vid: [None] * 4 for vid in cross}
    label = 0

    def walk(vid, i):
        # leave crossing vid through outgoing port i; return arrival crossing port
        a = by_id[vid].ports[i]
        while True:
            hv, hp = d.ends[a]["head"]
            w = by_id[hv]
            if w.is_crossing:
                return hv, hp
            a = w.ports[w.partner(hp)]

    # traverse components so labels run consecutively
    starts = [(vid, i) for vid in cross for i in range(4) if not by_id[vid].incoming[i]]
    for start in starts:
        if start in visited:
            continue
        cur = start
        while cur not in visited:
            visited.add(cur)
            label += 1
            hv, hp = walk(*cur)
            new_ports[cur[0]][cur[1]] = label
            new_ports[hv][hp] = label
            cur = (hv, by_id[hv].partner(hp))
    # joint-only cycles
    circles = d.circles
    seen_arcs = set()
    for vid in cross:
        v = by_id[vid]
        for i in range(4):
            if v.incoming[i]:
                continue
            a = v.ports[i]
            while True:
                seen_arcs.add(a)
                hv, hp = d.ends[a]["head"]
                w = by_id[hv]
                if w.is_crossing:
                    break
                a = w.ports[w.partner(hp)]
    for a in sorted(d.ends):
        if a in seen_arcs:
            continue
        circles += 1
        b = a
        while b not in seen_arcs:
            seen_arcs.add(b)
            b = d.next_arc(b)
    verts = tuple(replace(by_id[vid], ports=tuple(new_ports[vid])) for vid in cross)
    return Diagram(verts, circles)


# -- canonical form ---------------------------------------------------------

def _piece_codes(d: Diagram):
    """Yield (code, arc_labels, vertex_order, rotations) for each start arc of
    each connected piece; callers minimise per piece."""
    by_id = d._by_id
    arcs = sorted(d.ends)
    piece_of = {}
    pieces = []
    for a in arcs:
        if a in piece_of:
            continue
        idx = len(pieces)
        stack, members = [a], []
        piece_of[a] = idx
        while stack:
            b = stack.pop()
            members.append(b)
            for end in d.ends[b].values():
                for c in by_id[end[0]].ports:
                    if c not in piece_of:
                        piece_of[c] = idx
                        stack.append(c)
        pieces.append(sorted(members))
    return pieces


def _code_from(d: Diagram, start: int):
    by_id = d._by_id
    labels = {start: 0}
    queue = deque([start])
    vorder, rot = [], {}
    while queue:
        a = queue.popleft()
        for key in ("head", "tail"):
            vid, i = d.ends[a][key]
            if vid in rot:
                continue
            rot[vid] = i
            vorder.append(vid)
            v = by_id[vid]
            for k in range(4):
                b = v.ports[(i + k) % 4]
                if b not in labels:
                    labels[b] = len(labels)
                    queue.append(b)
    code = []
    for vid in vorder:
        v, r = by_id[vid], rot[vid]
        ports = tuple(labels[v.ports[(r + k) % 4]] for k in range(4))
        inc = tuple(v.incoming[(r + k) % 4] for k in range(4))
        if v.is_crossing:
            kind = ("x", (v.under - r) % 2)
        else:
            kind = ("j", tuple(sorted(tuple(sorted(((p - r) % 4, (q - r) % 4))) for p, q in v.pairing)))
        code.append((ports, inc, kind))
    return tuple(code), labels, vorder, rot


def _canonical_parts(d: Diagram):
    parts = []
    for members in _piece_codes(d):
        best = None
        for a in members:
            res = _code_from(d, a)
            if best is None or res[0] < best[0]:
                best = res
        parts.append(best)
    parts.sort(key=lambda r: r[0])
    return parts


def canonical_code(d: Diagram) -> bytes:
    """Relabeling-invariant code of an oriented diagram."""
    parts = _canonical_parts(d)
    return repr((d.circles, tuple(p[0] for p in parts))).encode()


def canonical_form(d: Diagram) -> Diagram:
    """A representative with arcs and vertex ids renumbered canonically, so
    that isomorphic diagrams become equal objects."""
    by_id = d._by_id
    arc_map, verts = {}, []
    arc_base, vid_base = 0, 0
    for code, labels, vorder, rot in _canonical_parts(d):
        for a, k in labels.items():
            arc_map[a] = arc_base + k + 1
        for j, vid in enumerate(vorder):
            v, r = by_id[vid], rot[vid]
            ports = tuple(arc_map[v.ports[(r + k) % 4]] for k in range(4))
            inc = tuple(v.incoming[(r + k) % 4] for k in range(4))
            if v.is_crossing:
                nv = Vertex(vid_base + j + 1, ports, inc, (v.under - r) % 2)
            else:
                pairing = tuple(sorted(tuple(sorted(((p - r) % 4, (q - r) % 4))) for p, q in v.pairing))
                nv = Vertex(vid_base + j + 1, ports, inc, 0, pairing)
            verts.append(nv)
        arc_base += len(labels)
        vid_base += len(vorder)
    return Diagram(tuple(verts), d.circles)
