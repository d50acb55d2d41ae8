"""Buchberger's algorithm over the rationals.

Polynomials are converted to exponent vectors over the order's variable
list; under lex the vectors compare exactly like the monomials.
"""
from __future__ import annotations

import heapq

from .poly import Poly


class MonomialOrder:
    """Lex or graded-reverse-lex order on a precedence list of variables."""

    def __init__(self, variables, kind: str = "lex"):
        if kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("repeated variable in order")
        self.kind = kind
        self.index = {v: i for i, v in enumerate(self.variables)}

    @classmethod
    def parse(cls, text: str, kind: str = "lex") -> "MonomialOrder":
        return cls([v.strip() for v in text.split(">") if v.strip()], kind)

    def extended(self, names) -> "MonomialOrder":
        extra = sorted(set(names) - set(self.variables))
        return self if not extra else MonomialOrder(self.variables + tuple(extra), self.kind)

    def vec(self, mono: tuple) -> tuple:
        out = [0] * len(self.variables)
        for v, e in mono:
            try:
                out[self.index[v]] = e
            except KeyError:
                raise ValueError(f"variable {v!r} not in monomial order") from None
        return tuple(out)

    def mono(self, vec: tuple) -> tuple:
        return tuple(sorted((self.variables[i], e) for i, e in enumerate(vec) if e))

    def vkey(self, vec: tuple):
        if self.kind == "lex":
            return vec
        return (sum(vec), tuple(-e for e in reversed(vec)))

    def key(self, mono: tuple):
        return self.vkey(self.vec(mono))

    def __repr__(self):
        return f"MonomialOrder({'>'.join(self.variables)!r}, {self.kind!r})"

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.variables, self.kind) == (other.variables, other.kind)

    def __hash__(self):
        return hash((self.variables, self.kind))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


class _Engine:
    def __init__(self, order: MonomialOrder):
        self.order = order
        self.key = order.vkey

    def to_vec(self, p: Poly) -> dict:
        return {self.order.vec(m): c for m, c in p.terms.items()}

    def to_poly(self, p: dict) -> Poly:
        return Poly({self.order.mono(v): c for v, c in p.items()})

    def lead(self, p: dict):
        return max(p, key=self.key)

    def monic(self, p: dict) -> dict:
        c = p[self.lead(p)]
        return {m: v / c for m, v in p.items()}

    def reduce(self, p: dict, basis: list, full: bool = True) -> dict:
        """Normal form of ``p`` against ``basis`` = [(lead, monic poly)]."""
        p = dict(p)
        rem: dict = {}
        key = self.key
        while p:
            m = max(p, key=key)
            c = p[m]
            for lm, g in basis:
                if _divides(lm, m):
                    q = _sub(m, lm)
                    for gm, gc in g.items():
                        t = _add(gm, q)
                        v = p.get(t, 0) - c * gc
                        if v:
                            p[t] = v
                        else:
                            p.pop(t, None)
                    break
            else:
                if not full:
                    rem.update(p)
                    return rem
                rem[m] = c
                del p[m]
        return rem

    def spoly(self, f, lf, g, lg) -> dict:
        l = _lcm(lf, lg)
        qf, qg = _sub(l, lf), _sub(l, lg)
        out: dict = {}
        for m, c in f.items():
            t = _add(m, qf)
            out[t] = out.get(t, 0) + c
        for m, c in g.items():
            t = _add(m, qg)
            v = out.get(t, 0) - c
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        return {m: c for m, c in out.items() if c}

    def buchberger(self, gens: list, max_degree=None) -> list:
        basis: list = []  # (lead, monic poly)
        pairs: set = set()  # pending pairs, also consulted by the chain criterion
        heap: list = []

        def add(h):
            h = self.monic(h)
            lh = self.lead(h)
            basis.append((lh, h))
            n = len(basis) - 1
            for k in range(n):
                l = _lcm(basis[k][0], lh)
                if max_degree is not None and sum(l) > max_degree:
                    continue
                pairs.add((k, n))
                heapq.heappush(heap, (sum(l), self.key(l), k, n))

        for g in gens:
            g = self.reduce(g, basis)
            if g:
                add(g)
        while heap:
            _, _, i, j = heapq.heappop(heap)
            pairs.discard((i, j))
            li, fi = basis[i]
            lj, fj = basis[j]
            l = _lcm(li, lj)
            if all(a == 0 or b == 0 for a, b in zip(li, lj)):
                continue  # coprime leading monomials
            if self._chain(i, j, l, basis, pairs):
                continue
            h = self.reduce(self.spoly(fi, li, fj, lj), basis)
            if h:
                add(h)
        return self.reduced(basis)

    @staticmethod
    def _chain(i, j, l, basis, pairs) -> bool:
        for k, (lk, _) in enumerate(basis):
            if k in (i, j) or not _divides(lk, l):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                return True
        return False

    def reduced(self, basis: list) -> list:
        lead_only = []
        for idx, (lm, g) in enumerate(basis):
            if any(_divides(lm2, lm) and (lm2 != lm or idx2 < idx)
                   for idx2, (lm2, _) in enumerate(basis) if idx2 != idx):
                continue
            lead_only.append((lm, g))
        out = []
        for idx, (lm, g) in enumerate(lead_only):
            others = [t for k, t in enumerate(lead_only) if k != idx]
            r = self.reduce(g, others)
            out.append((lm, self.monic(r)))
        out.sort(key=lambda t: self.key(t[0]), reverse=True)
        return out


class GroebnerBasis:
    """A reduced Gröbner basis together with its order.

    ``max_degree`` marks a degree-truncated basis: reductions are exact for
    homogeneous input of degree at most that bound.
    """

    def __init__(self, polys: list, order: MonomialOrder, max_degree=None, _raw=None):
        self.order = order
        self.polys = tuple(polys)
        self.max_degree = max_degree
        eng = _Engine(order)
        self._engine = eng
        self._raw = _raw if _raw is not None else [(eng.lead(eng.to_vec(p)), eng.to_vec(p)) for p in polys]

    @property
    def is_unit(self) -> bool:
        return any(p == Poly.const(1) for p in self.polys)

    def _for(self, names):
        """Engine and basis over the order extended by extra variables
        (appended lowest, which keeps the basis a Gröbner basis)."""
        order = self.order.extended(names)
        if order is self.order:
            return self._engine, self._raw
        cache = self.__dict__.setdefault("_ext", {})
        if order.variables not in cache:
            eng = _Engine(order)
            raw = [(eng.lead(eng.to_vec(p)), eng.to_vec(p)) for p in self.polys]
            cache[order.variables] = (eng, raw)
        return cache[order.variables]

    def reduce(self, p: Poly) -> Poly:
        eng, raw = self._for(p.variables())
        return eng.to_poly(eng.reduce(eng.to_vec(p), raw))

    def contains(self, p: Poly) -> bool:
        return self.reduce(p).is_zero()

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)


def buchberger(gens, order: MonomialOrder, max_degree=None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``."""
    gens = [Poly.coerce(g) for g in gens]
    names = set().union(*(g.variables() for g in gens)) if gens else set()
    order = order.extended(names)
    eng = _Engine(order)
    raw = eng.buchberger([eng.to_vec(g) for g in gens if g], max_degree)
    return GroebnerBasis([eng.to_poly(g) for _, g in raw], order, max_degree, raw)


def reduce(p: Poly, basis: GroebnerBasis, order: MonomialOrder | None = None) -> Poly:
    if order is not None and order != basis.order:
        basis = buchberger(list(basis.polys), order, basis.max_degree)
    return basis.reduce(Poly.coerce(p))


def same_ideal(g1, g2) -> bool:
    """Mutual reduction test for two Gröbner bases."""
    return all(g2.contains(p) for p in g1) and all(g1.contains(p) for p in g2)


def format_basis(basis: GroebnerBasis) -> str:
    return "\n".join(p.to_str(basis.order) for p in basis.polys)


def parse_ideal(text: str) -> list:
    """One polynomial per line; ``#`` comments and blank lines ignored."""
    from .poly import parse_poly

    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse_poly(line))
    return out


__all__ = ["MonomialOrder", "GroebnerBasis", "buchberger", "reduce", "same_ideal", "format_basis", "parse_ideal",
]
