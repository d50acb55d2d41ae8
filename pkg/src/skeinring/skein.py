"""Local replacements at a crossing: crossing change and the eight smoothings.

Every crossing is read in its frame: rotate so that both incoming ends sit
on the west side (NW above SW).  Counterclockwise the ports are then
NW, SW, SE, NE.  A smoothing reconnects the four ends in pairs and may force
some strands to reverse; orientation is repaired cycle by cycle.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .diagram import Diagram, DiagramError, Vertex, change_crossing, site_class, strip_joints
from .marking import Marking, canonical_marking


class SmoothingKind(str, Enum):
    CC = "CC"
    E = "E"
    W = "W"
    HC = "HC"
    HT = "HT"
    VC = "VC"
    VT = "VT"
    S = "S"
    N = "N"

    def __str__(self):
        return self.value


K = SmoothingKind

# directed passages (from, to) in frame compass points
RECONNECT = {
    K.E: (("NW", "NE"), ("SW", "SE")),
    K.W: (("NE", "NW"), ("SE", "SW")),
    K.HC: (("NW", "NE"), ("SE", "SW")),
    K.HT: (("NE", "NW"), ("SW", "SE")),
    K.VC: (("SW", "NW"), ("NE", "SE")),
    K.VT: (("NW", "SW"), ("SE", "NE")),
    K.S: (("NW", "SW"), ("NE", "SE")),
    K.N: (("SW", "NW"), ("SE", "NE")),
}

SAME_KINDS = frozenset({K.CC, K.E, K.W, K.HC, K.HT, K.VC, K.VT})
DIFFERENT_KINDS = frozenset({K.CC, K.E, K.W, K.S, K.N})


class InadmissibleSmoothing(DiagramError):
    """The requested smoothing cannot be oriented coherently."""


@dataclass(frozen=True)
class SiteFrame:
    crossing: int
    ports: dict  # compass point -> port index
    sign: int


@dataclass(frozen=True)
class Smoothed:
    diagram: Diagram
    reversed_arcs: frozenset  # arcs of the parent whose direction flipped
    reversed_components: tuple  # parent component indices touched by reversal


def frame_site(d: Diagram, x: int) -> SiteFrame:
    v = d.vertex(x)
    if not v.is_crossing:
        raise DiagramError(f"vertex {x} is not a crossing")
    for u in range(4):
        if v.incoming[u] and v.incoming[(u + 1) % 4]:
            ports = {"NW": u, "SW": (u + 1) % 4, "SE": (u + 2) % 4, "NE": (u + 3) % 4}
            sign = 1 if not v.is_under_port(u) else -1
            return SiteFrame(x, ports, sign)
    raise DiagramError(f"incoming ends at {x} are not adjacent")


def admissible_kinds(cls: str) -> frozenset:
    if cls == "same":
        return SAME_KINDS
    if cls == "different":
        return DIFFERENT_KINDS
    raise ValueError(f"unknown site class {cls!r}")


def _walks(d: Diagram, verts: dict):
    """Unoriented closed walks through the vertex dict as lists of
    (leave (vid, port), arrive (vid, port)) steps."""
    other = {}
    for a, e in d.ends.items():
        other[e["head"]] = e["tail"]
        other[e["tail"]] = e["head"]
    visited = set()
    for vid in sorted(verts):
        for i in range(4):
            if (vid, i) in visited:
                continue
            start = (vid, i)
            cur = start
            steps = []
            while True:
                arr = other[cur]
                steps.append((cur, arr))
                visited.add(cur)
                visited.add(arr)
                nxt = (arr[0], verts[arr[0]].partner(arr[1]))
                if nxt == start:
                    break
                cur = nxt
            yield steps


def apply(d: Diagram, x: int, kind, keep_joint: bool = False) -> Smoothed:
    """Replace crossing ``x`` by ``kind``.

    With ``keep_joint`` the smoothed site stays as a joint vertex and all
    labels are kept; otherwise joints are stripped and arcs renumbered.
    """
    kind = SmoothingKind(kind)
    if kind is K.CC:
        return Smoothed(change_crossing(d, x), frozenset(), ())
    cls, _ = site_class(d, x)
    frame = frame_site(d, x)
    v = d.vertex(x)
    passages = tuple((frame.ports[a], frame.ports[b]) for a, b in RECONNECT[kind])
    verts = {u.id: u for u in d.vertices}
    # direction lives in the incoming flags, so store the pairing unordered
    pairing = tuple(sorted(tuple(sorted(pr)) for pr in passages))
    verts[x] = Vertex(v.id, v.ports, v.incoming, 0, pairing)
    new_in = {vid: list(u.incoming) for vid, u in verts.items()}
    flipped = set()
    for steps in _walks(d, verts):
        votes = set()
        for k, (leave, arrive) in enumerate(steps):
            nxt_leave = steps[(k + 1) % len(steps)][0]
            if arrive[0] == x:
                if (arrive[1], nxt_leave[1]) in passages:
                    votes.add(1)
                elif (nxt_leave[1], arrive[1]) in passages:
                    votes.add(-1)
        if len(votes) > 1:
            raise InadmissibleSmoothing(f"{kind} at a {cls}-component crossing cannot be oriented")
        (lv, lp), _ = steps[0]
        direction = votes.pop() if votes else (1 if not d.vertex(lv).incoming[lp] else -1)
        for (lv, lp), (av, ap) in steps:
            out_end, in_end = ((lv, lp), (av, ap)) if direction > 0 else ((av, ap), (lv, lp))
            new_in[out_end[0]][out_end[1]] = False
            new_in[in_end[0]][in_end[1]] = True
    for a, e in d.ends.items():
        hv, hp = e["head"]
        if not new_in[hv][hp]:
            flipped.add(a)
    out = Diagram(tuple(replace(verts[u.id], incoming=tuple(new_in[u.id])) for u in d.vertices), d.circles)
    comp = d.component_of
    touched = tuple(sorted({comp[a] for a in flipped}))
    if not keep_joint:
        out = strip_joints(out)
    return Smoothed(out, frozenset(flipped), touched)


def transfer_marking(parent: Diagram, m: Marking, child: Diagram, kind) -> Marking:
    if SmoothingKind(kind) is K.CC:
        return m
    return canonical_marking(child)
