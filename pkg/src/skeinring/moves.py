"""Reidemeister rewrites on planar diagrams.

Faces come from the rotation system: a half-edge ``(v, i)`` leaves crossing
``v`` through port ``i``; if its arc ends at ``(w, j)`` the face on the left
continues with ``(w, j - 1)``.  Moves are applied at explicit locations:

* R1 inserts a kink on an arc (or on a crossing-free circle),
* R2 pushes one boundary edge of a face across another,
* R3 slides a strand across the crossing opposite to it in a triangular face.

Only crossing diagrams (no joints) are handled.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .diagram import Diagram, DiagramError, Vertex


class MoveError(DiagramError):
    pass


def _check_crossings(d: Diagram):
    if any(not v.is_crossing for v in d.vertices):
        raise MoveError("moves need a diagram without joints")


def _other_end(d: Diagram) -> dict:
    out = {}
    for a, e in d.ends.items():
        out[e["head"]] = e["tail"]
        out[e["tail"]] = e["head"]
    return out


def faces(d: Diagram) -> list:
    """Face boundaries as lists of half-edges ``(vid, port)``."""
    _check_crossings(d)
    other = _other_end(d)
    seen = set()
    out = []
    for v in sorted(d.vertices, key=lambda u: u.id):
        for i in range(4):
            h = (v.id, i)
            if h in seen:
                continue
            cyc = []
            while h not in seen:
                seen.add(h)
                cyc.append(h)
                w, j = other[h]
                h = (w, (j - 1) % 4)
            out.append(cyc)
    return out


def _pieces(d: Diagram) -> list:
    """Vertex-id sets of the connected pieces."""
    other = _other_end(d)
    parent = {v.id: v.id for v in d.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (v, _), (w, _) in other.items():
        parent[find(v)] = find(w)
    groups: dict = {}
    for v in parent:
        groups.setdefault(find(v), set()).add(v)
    return list(groups.values())


def is_planar(d: Diagram) -> bool:
    """Euler check V - E + F = 2 on every connected piece."""
    fs = faces(d)
    for piece in _pieces(d):
        nv = len(piece)
        nf = sum(1 for f in fs if f[0][0] in piece)
        if nv - 2 * nv + nf != 2:
            return False
    return True


# -- mutable helpers ---------------------------------------------------------

class _Builder:
    def __init__(self, d: Diagram):
        self.verts = {v.id: [list(v.ports), list(v.incoming), v.under] for v in d.vertices}
        self.circles = d.circles
        self.next_arc = max(d.ends, default=0) + 1
        self.next_id = max((v.id for v in d.vertices), default=0) + 1

    def arc(self) -> int:
        a = self.next_arc
        self.next_arc += 1
        return a

    def vid(self) -> int:
        v = self.next_id
        self.next_id += 1
        return v

    def build(self) -> Diagram:
        verts = tuple(Vertex(vid, tuple(p), tuple(inc), u) for vid, (p, inc, u) in sorted(self.verts.items()))
        return Diagram(verts, self.circles).validate()


# -- R1 ---------------------------------------------------------------------

@dataclass(frozen=True)
class R1Site:
    arc: int | None  # None: kink on a crossing-free circle
    loop_side: int  # 0: loop on ports 1-2, 1: loop on ports 2-3
    under: int  # under axis of the new crossing


def r1_sites(d: Diagram) -> list:
    out = [R1Site(a, s, u) for a in sorted(d.ends) for s in (0, 1) for u in (0, 1)]
    if d.circles:
        out += [R1Site(None, s, u) for s in (0, 1) for u in (0, 1)]
    return out


def apply_r1(d: Diagram, site: R1Site) -> Diagram:
    """Insert a one-crossing kink.  The strand enters the new crossing at
    port 0, runs around the loop and leaves."""
    _check_crossings(d)
    b = _Builder(d)
    x = b.vid()
    loop = b.arc()
    if site.arc is None:
        if not d.circles:
            raise MoveError("no crossing-free circle")
        b.circles -= 1
        a_in = a_out = b.arc()
    else:
        a_in = site.arc
        a_out = b.arc()
        hv, hp = d.ends[site.arc]["head"]
        b.verts[hv][0][hp] = a_out
    if site.loop_side == 0:
        ports, inc = (a_in, loop, loop, a_out), (True, True, False, False)
    else:
        ports, inc = (a_in, a_out, loop, loop), (True, False, False, True)
    b.verts[x] = [list(ports), list(inc), site.under]
    return b.build()


def r1_removals(d: Diagram) -> list:
    """Crossings carrying a monogon loop on adjacent ports."""
    out = []
    for v in d.vertices:
        for i in range(4):
            if v.ports[i] == v.ports[(i + 1) % 4]:
                out.append(v.id)
                break
    return out


def remove_r1(d: Diagram, x: int) -> Diagram:
    _check_crossings(d)
    v = d.vertex(x)
    for i in range(4):
        if v.ports[i] == v.ports[(i + 1) % 4]:
            break
    else:
        raise MoveError(f"crossing {x} carries no kink loop")
    p, q = v.ports[(i + 2) % 4], v.ports[(i + 3) % 4]
    b = _Builder(d)
    del b.verts[x]
    if p == q:
        b.circles += 1
        return b.build()
    a_in, a_out = (p, q) if v.incoming[(i + 2) % 4] else (q, p)
    # the arc leaving the kink is absorbed into the arc entering it
    hv, hp = d.ends[a_out]["head"]
    b.verts[hv][0][hp] = a_in
    return b.build()


# -- R2 ---------------------------------------------------------------------

@dataclass(frozen=True)
class R2Site:
    h1: tuple  # half-edge (vid, port) pushed across
    h2: tuple  # half-edge it is pushed over or under
    over: bool  # strand of h1 passes over


def r2_sites(d: Diagram) -> list:
    out = []
    for f in faces(d):
        for h1 in f:
            for h2 in f:
                a1 = d.vertex(h1[0]).ports[h1[1]]
                a2 = d.vertex(h2[0]).ports[h2[1]]
                if a1 == a2:
                    continue
                out += [R2Site(h1, h2, True), R2Site(h1, h2, False)]
    return out


def apply_r2(d: Diagram, site: R2Site) -> Diagram:
    """Create two crossings X, Y where edge 1 crosses edge 2 inside their
    common face.  Along the face boundary edge 1 becomes v1-X-Y-w1 and
    edge 2 becomes v2-Y-X-w2."""
    _check_crossings(d)
    other = _other_end(d)
    (v1, p1), (v2, p2) = site.h1, site.h2
    w1, q1 = other[site.h1]
    w2, q2 = other[site.h2]
    a1 = d.vertex(v1).ports[p1]
    a2 = d.vertex(v2).ports[p2]
    if a1 == a2:
        raise MoveError("R2 needs two distinct edges")
    fwd1 = not d.vertex(v1).incoming[p1]  # arc runs v1 -> w1
    fwd2 = not d.vertex(v2).incoming[p2]
    b = _Builder(d)
    x, y = b.vid(), b.vid()
    e1a, m1, e1b = a1, b.arc(), b.arc()
    e2a, m2, e2b = a2, b.arc(), b.arc()
    b.verts[w1][0][q1] = e1b
    b.verts[w2][0][q2] = e2b
    # X: ccw (e1a, m2, m1, e2b); Y: ccw (e1b, e2a, m1, m2)
    inc_x = (fwd1, fwd2, not fwd1, not fwd2)
    inc_y = (not fwd1, fwd2, fwd1, not fwd2)
    under = 1 if site.over else 0
    b.verts[x] = [[e1a, m2, m1, e2b], list(inc_x), under]
    b.verts[y] = [[e1b, e2a, m1, m2], list(inc_y), under]
    return b.build()


# -- R3 ---------------------------------------------------------------------

def _triangle(d: Diagram, f: list):
    """(X, i), (Y, j), (Z, k) with arrival ports, or None if ``f`` is not a
    triangle on three distinct crossings with distinct edges."""
    if len(f) != 3:
        return None
    other = _other_end(d)
    arr = [other[h] for h in f]  # arrival at the next vertex
    ids = [h[0] for h in f]
    if len(set(ids)) != 3:
        return None
    labels = {d.vertex(v).ports[p] for v, p in f}
    if len(labels) != 3:
        return None
    # f[0] leaves X towards Y, so X's arrival is arr[2]
    (x, i), (y, j), (z, k) = arr[2], arr[0], arr[1]
    if (x, y, z) != tuple(ids):
        return None
    return (x, i), (y, j), (z, k)


def _over(v: Vertex, port: int) -> bool:
    return not v.is_under_port(port)


def r3_sites(d: Diagram) -> list:
    """Triangular faces whose three strands are over at 2, 1 and 0 of their
    crossings."""
    out = []
    for f in faces(d):
        t = _triangle(d, f)
        if t is None:
            continue
        (x, i), (y, j), (z, k) = t
        X, Y, Z = d.vertex(x), d.vertex(y), d.vertex(z)
        # strand XY passes X (port i-1) and Y (port j); ZX: X (i), Z (k-1); YZ: Y (j-1), Z (k)
        counts = sorted([
            _over(X, (i - 1) % 4) + _over(Y, j),
            _over(X, i) + _over(Z, (k - 1) % 4),
            _over(Y, (j - 1) % 4) + _over(Z, k),
        ])
        if counts == [0, 1, 2]:
            out.append(tuple(f))
    return out


def apply_r3(d: Diagram, face) -> Diagram:
    _check_crossings(d)
    t = _triangle(d, list(face))
    if t is None:
        raise MoveError("not a triangular face")
    (x, i), (y, j), (z, k) = t
    X, Y, Z = d.vertex(x), d.vertex(y), d.vertex(z)
    # boundary ports in ccw order around the triangle
    B = [(x, (i + 1) % 4), (x, (i + 2) % 4), (y, (j + 1) % 4), (y, (j + 2) % 4), (z, (k + 1) % 4), (z, (k + 2) % 4)]
    lab = [d.vertex(v).ports[p] for v, p in B]
    inc = [d.vertex(v).incoming[p] for v, p in B]
    xy = X.ports[(i - 1) % 4]
    yz = Y.ports[(j - 1) % 4]
    zx = Z.ports[(k - 1) % 4]
    # strands: XY joins B0-B3, ZX joins B1-B4, YZ joins B2-B5
    xy_from_b0 = inc[0]
    zx_from_b4 = inc[4]
    yz_from_b5 = inc[5]
    b = _Builder(d)
    for v in (x, y, z):
        del b.verts[v]
    # new X' (strands XY, ZX): ccw (zx, B3, B4, xy); XY runs B0 - Y' - X' - B3
    # new Y' (XY, YZ): ccw (xy, B5, B0, yz); new Z' (YZ, ZX): ccw (yz, B1, B2, zx)
    xp = [[zx, lab[3], lab[4], xy], [not zx_from_b4, inc[3], inc[4], xy_from_b0]]
    yp = [[xy, lab[5], lab[0], yz], [not xy_from_b0, inc[5], inc[0], not yz_from_b5]]
    zp = [[yz, lab[1], lab[2], zx], [yz_from_b5, inc[1], inc[2], zx_from_b4]]
    # each pair of strands keeps its over strand
    under_x = 0 if not _over(X, i) else 1  # ZX sits on axis 0 at X'
    under_y = 0 if not _over(Y, j) else 1  # XY on axis 0 at Y'
    under_z = 0 if not _over(Z, k) else 1  # YZ on axis 0 at Z'
    b.verts[x] = xp + [under_x]
    b.verts[y] = yp + [under_y]
    b.verts[z] = zp + [under_z]
    return b.build()


# -- random rewriting -------------------------------------------------------

MOVE_KINDS = ("R1", "R1-", "R2", "R3")


def random_move(d: Diagram, rng: random.Random, kinds=("R1", "R2", "R3")):
    """Apply one move of a randomly chosen available kind at a random site.
    Returns (diagram, description) or None if no requested move applies."""
    options = []
    for kind in kinds:
        if kind == "R1":
            sites = r1_sites(d)
        elif kind == "R1-":
            sites = r1_removals(d)
        elif kind == "R2":
            sites = r2_sites(d)
        elif kind == "R3":
            sites = r3_sites(d)
        else:
            raise ValueError(f"unknown move kind {kind!r}")
        if sites:
            options.append((kind, sites))
    if not options:
        return None
    kind, sites = rng.choice(options)
    site = rng.choice(sites)
    if kind == "R1":
        return apply_r1(d, site), f"R1 at {site}"
    if kind == "R1-":
        return remove_r1(d, site), f"R1 removal at crossing {site}"
    if kind == "R2":
        return apply_r2(d, site), f"R2 at {site}"
    return apply_r3(d, site), f"R3 at face {site}"
