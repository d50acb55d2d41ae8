"""Independent HOMFLYPT computation used as a cross-check.

Works directly on signed PD quadruples with its own smoothing code and the
classical descending-diagram recursion::

    l P(L+) + l^-1 P(L-) + m P(L0) = 0,   P(unknot) = 1,

a descending diagram with n components being worth ``delta^(n-1)`` with
``delta = -(l + l^-1) / m``.  Laurent polynomials are dicts mapping
``(l exponent, m exponent)`` to rationals.
"""
from __future__ import annotations

from fractions import Fraction

from .diagram import Diagram, to_pd


def _add(p, q, scale=1, shift=(0, 0)):
    out = dict(p)
    for (i, j), c in q.items():
        k = (i + shift[0], j + shift[1])
        out[k] = out.get(k, 0) + c * scale
        if not out[k]:
            del out[k]
    return out


def _mul(p, q):
    out: dict = {}
    for (i, j), c in p.items():
        for (k, l), e in q.items():
            key = (i + k, j + l)
            out[key] = out.get(key, 0) + c * e
    return {k: v for k, v in out.items() if v}


ONE = {(0, 0): Fraction(1)}
DELTA = {(1, -1): Fraction(-1), (-1, -1): Fraction(-1)}


def _delta_pow(n):
    out = ONE
    for _ in range(n):
        out = _mul(out, DELTA)
    return out


def _next_map(quads):
    """arc -> (crossing index, slot) of its head, and the outgoing slot."""
    nxt = {}
    for k, (q, s) in enumerate(quads):
        a, b, c, d = q
        nxt[a] = c
        if s > 0:
            nxt[d] = b
        else:
            nxt[b] = d
    return nxt


def _first_ascent(quads):
    """First crossing reached along its under-strand before its
    over-strand, traversing components from their minimal arcs."""
    nxt = _next_map(quads)
    under_in = {q[0]: k for k, (q, s) in enumerate(quads)}
    over_in = {(q[3] if s > 0 else q[1]): k for k, (q, s) in enumerate(quads)}
    seen_arcs, visited = set(), set()
    ncomp = 0
    for start in sorted(nxt):
        if start in seen_arcs:
            continue
        ncomp += 1
        a = start
        while a not in seen_arcs:
            seen_arcs.add(a)
            if a in under_in:
                k = under_in[a]
                if k not in visited:
                    return k, ncomp
            else:
                visited.add(over_in[a])
            a = nxt[a]
    return None, ncomp


def _switch(q, s):
    a, b, c, d = q
    return ((d, a, b, c), -s) if s > 0 else ((b, c, d, a), -s)


def _smooth(quads, k):
    (a, b, c, d), s = quads[k]
    pairs = [(a, b), (d, c)] if s > 0 else [(a, d), (b, c)]
    rest = [list(q) for i, (q, _) in enumerate(quads) if i != k]
    signs = [sg for i, (_, sg) in enumerate(quads) if i != k]
    circles = 0
    for idx, (x, y) in enumerate(pairs):
        if x == y:
            circles += 1
            continue
        for q in rest:
            for j in range(4):
                if q[j] == y:
                    q[j] = x
        pairs[idx + 1:] = [(x if u == y else u, x if v == y else v) for u, v in pairs[idx + 1:]]
    return [(tuple(q), sg) for q, sg in zip(rest, signs)], circles


def _homfly(quads, circles, memo):
    key = (tuple(quads), circles)
    if key in memo:
        return memo[key]
    k, ncomp = _first_ascent(quads) if quads else (None, 0)
    if k is None:
        val = _delta_pow(ncomp + circles - 1)
    else:
        q, s = quads[k]
        changed = list(quads)
        changed[k] = _switch(q, s)
        smoothed, extra = _smooth(quads, k)
        p_change = _homfly(changed, circles, memo)
        p_zero = _homfly(smoothed, circles + extra, memo)
        if s > 0:
            # P(L+) = -l^-2 P(L-) - l^-1 m P(L0)
            val = _add(_add({}, p_change, -1, (-2, 0)), p_zero, -1, (-1, 1))
        else:
            # P(L-) = -l^2 P(L+) - l m P(L0)
            val = _add(_add({}, p_change, -1, (2, 0)), p_zero, -1, (1, 1))
    memo[key] = val
    return val


def homflypt_oracle(d: Diagram) -> dict:
    """HOMFLYPT polynomial as ``{(l_exp, m_exp): Fraction}``."""
    quads = [(q, s) for q, s in to_pd(d)]
    if not quads and d.circles == 0:
        raise ValueError("empty diagram")
    return _homfly(quads, d.circles, {})


def format_laurent(p: dict) -> str:
    if not p:
        return "0"
    parts = []
    for (i, j), c in sorted(p.items(), key=lambda t: (-t[0][1], -t[0][0])):
        mono = "*".join(f"{v}^{e}" if e != 1 else v for v, e in (("l", i), ("m", j)) if e)
        parts.append(f"{c}*{mono}" if mono else str(c))
    return " + ".join(parts)


def ring_to_laurent(value, v_index: int = 1) -> dict:
    """Map a homflypt-profile value (polynomial in b, B, c1, C1 times v1)
    to ``(l, m)`` Laurent form via b = l^-2, c1 = m l^-1."""
    subst = {"b": (-2, 0), "B": (2, 0), "c1": (-1, 1), "C1": (1, -1)}
    out: dict = {}
    for (h, n), p in value.terms.items():
        if h is not None or n != v_index:
            raise ValueError("expected a multiple of v1")
        for mono, c in p.terms.items():
            i = j = 0
            for v, e in mono:
                if v not in subst:
                    raise ValueError(f"unexpected variable {v}")
                i += subst[v][0] * e
                j += subst[v][1] * e
            out[(i, j)] = out.get((i, j), 0) + c
    return {k: v for k, v in out.items() if v}
