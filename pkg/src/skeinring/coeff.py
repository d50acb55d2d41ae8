"""Coefficient algebra: skein symbols, words, ring elements and profiles.

Skein symbols are the coefficients of the two type-one skein equations::

    E+ + b E- + c1 E + c2 W + c3 HC + c4 HT + d1 VC + d2 VT = 0   (one component)
    E+ + b' E- + c1' E + c2' W + d1' S + d2' N = 0               (two components)

and their bars ``~x`` used at negative crossings.  A :class:`RingProfile`
maps every symbol to a commutative polynomial, names the relation ideal,
and says how the indexed families ``v_n`` (values of unlinks) and ``h(w)``
(writhe weights) are rewritten.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .groebner import GroebnerBasis, MonomialOrder, buchberger
from .poly import Poly, parse_poly

SAME_SYMBOLS = ("b", "c1", "c2", "c3", "c4", "d1", "d2")
DIFF_SYMBOLS = ("b'", "c1'", "c2'", "d1'", "d2'")
BASE_SYMBOLS = SAME_SYMBOLS + DIFF_SYMBOLS
ALL_SYMBOLS = BASE_SYMBOLS + tuple("~" + s for s in BASE_SYMBOLS)


def bar(symbol: str) -> str:
    return symbol[1:] if symbol.startswith("~") else "~" + symbol


class ProfileError(ValueError):
    """A profile cannot handle the requested element or operation."""


# -- words (free layer) -----------------------------------------------------

@dataclass(frozen=True, order=True)
class Word:
    """Noncommutative monomial with a rational scalar."""

    symbols: tuple
    scalar: Fraction = Fraction(1)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.symbols + other.symbols, self.scalar * other.scalar)

    def __neg__(self):
        return Word(self.symbols, -self.scalar)

    def __str__(self):
        body = "*".join(self.symbols) or "1"
        if self.scalar == 1:
            return body
        if self.scalar == -1:
            return "-" + body
        return f"{self.scalar}*{body}"


def conjugate(w: Word, positions=None) -> Word:
    """Bar every symbol (or only those at ``positions``)."""
    syms = tuple(bar(s) if positions is None or k in positions else s for k, s in enumerate(w.symbols))
    return Word(syms, w.scalar)


# -- ring elements ----------------------------------------------------------

class RingElem:
    """Finite sum of ``h(k) * p * v_n`` terms.

    Keys are ``(k, n)`` with ``k`` an integer or None (no h factor) and
    ``n >= 1`` the v index, or ``n == 0`` for a pure scalar.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: p for k, p in (terms or {}).items() if not p.is_zero()}

    @classmethod
    def v(cls, n: int, coeff=1, h=None) -> "RingElem":
        return cls({(h, n): Poly.coerce(coeff)})

    @classmethod
    def scalar(cls, p) -> "RingElem":
        return cls({(None, 0): Poly.coerce(p)})

    def __add__(self, other):
        out = dict(self.terms)
        for k, p in other.terms.items():
            out[k] = out[k] + p if k in out else p
        return RingElem(out)

    def __neg__(self):
        return RingElem({k: -p for k, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, p) -> "RingElem":
        p = Poly.coerce(p)
        return RingElem({k: q * p for k, q in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, RingElem):
            if set(other.terms) <= {(None, 0)}:
                return self.scale(other.terms.get((None, 0), Poly()))
            if set(self.terms) <= {(None, 0)}:
                return other.scale(self.terms.get((None, 0), Poly()))
            raise TypeError("product of two module elements is undefined")
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, RingElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def h_indices(self) -> set:
        return {k for k, _ in self.terms}

    def sorted_items(self, order=None):
        def key(item):
            (h, n), _ = item
            return (h is not None, h if h is not None else 0, n)
        return sorted(self.terms.items(), key=key)

    def to_text(self, order=None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (h, n), p in self.sorted_items():
            s = "" if h is None else f"h({h})*"
            s += f"({p.to_str(order)})"
            if n:
                s += f"*v{n}"
            parts.append(s)
        return " + ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"RingElem({self.to_text()!r})"

    def to_json(self) -> str:
        terms = []
        for (h, n), p in self.sorted_items():
            monos = [[[list(ve) for ve in m], str(c)] for m, c in p.sorted_terms()]
            terms.append({"h": h, "v": n, "poly": monos})
        return json.dumps({"terms": terms}, sort_keys=True)


_TERM = re.compile(r"\s*(?:h\((-?\d+)\)\*)?\(([^()]*)\)(?:\*v(\d+))?\s*")


def parse_ringelem(text: str) -> RingElem:
    text = text.strip()
    if text == "0":
        return RingElem()
    out = RingElem()
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse ring element near {text[pos:pos + 15]!r}")
        h = int(m.group(1)) if m.group(1) is not None else None
        n = int(m.group(3)) if m.group(3) else 0
        out = out + RingElem({(h, n): parse_poly(m.group(2))})
        pos = m.end()
        if text.startswith("+", pos):
            pos += 1
    return out


def ringelem_from_json(text: str) -> RingElem:
    data = json.loads(text)
    out = RingElem()
    for t in data["terms"]:
        p = Poly({tuple(sorted((v, e) for v, e in m)): Fraction(c) for m, c in t["poly"]})
        out = out + RingElem({(t["h"], t["v"]): p})
    return out


def shift_T(e: RingElem, steps: int) -> RingElem:
    """Replace every ``h(k)`` by ``h(k + steps)``."""
    if e.terms and all(h is None for h, _ in e.terms):
        raise ProfileError("element carries no h part")
    return RingElem({((h + steps) if h is not None else None, n): p for (h, n), p in e.terms.items()})


# -- profiles ---------------------------------------------------------------

@dataclass(frozen=True)
class HRecurrence:
    """``h(w) + b*h(w-2) + e*h(w-1) = 0`` with ``h(1) = x``, ``h(2) = y``."""

    e: Poly
    b: str = "b"
    binv: str = "B"
    x: str = "x"
    y: str = "y"


@dataclass(frozen=True)
class HPower:
    """``h(k) = a^k`` with ``A`` the inverse of ``a``."""

    a: str = "a"
    ainv: str = "A"


@dataclass(eq=False)
class RingProfile:
    """A commutative homomorphic image of the coefficient ring.

    ``images`` sends skein symbols to polynomials (absent symbols go to 0).
    ``v_rule`` is the ratio ``rho`` in ``v_{n+1} = rho * v_n`` or None when
    the v_n stay free.  ``max_degree`` truncates the Gröbner computation and
    is only valid for homogeneous relation ideals.
    """

    name: str
    family: str
    order: tuple
    images: dict
    relations: tuple = ()
    v_rule: Poly | None = None
    h_rule: object = None
    zeroed: tuple = ()
    inverted: dict = field(default_factory=dict)
    max_degree: int | None = None
    description: str = ""
    prune: bool = False
    crossing_cap: int | None = 7
    order_kind: str = "lex"

    def __post_init__(self):
        self.images = {s: Poly.coerce(p) for s, p in self.images.items()}
        self.relations = tuple(Poly.coerce(r) for r in self.relations)
        if self.v_rule is not None:
            self.v_rule = Poly.coerce(self.v_rule)
        unknown = set(self.images) - set(ALL_SYMBOLS)
        if unknown:
            raise ProfileError(f"unknown skein symbols {sorted(unknown)}")
        self._h_cache: dict = {}

    def image(self, symbol: str) -> Poly:
        return self.images.get(symbol, Poly())

    @cached_property
    def monomial_order(self) -> MonomialOrder:
        return MonomialOrder(self.order, self.order_kind)

    @cached_property
    def basis(self) -> GroebnerBasis:
        gens = list(self.relations) + [Poly.var(v) * Poly.var(inv) - 1 for v, inv in self.inverted.items()]
        if not gens:
            gens = [Poly()]
        return buchberger([g for g in gens if not g.is_zero()], self.monomial_order, self.max_degree)

    def reduce(self, p: Poly) -> Poly:
        if p.is_zero():
            return p
        return self.basis.reduce(p)

    def generators(self) -> set:
        names = set(self.order)
        for p in self.images.values():
            names |= p.variables()
        return names

    def h_value(self, k: int) -> Poly:
        if self.h_rule is None:
            raise ProfileError(f"profile {self.name} has no h rule")
        if k not in self._h_cache:
            self._h_cache[k] = self.reduce(_h_raw(self, k))
        return self._h_cache[k]


def _h_raw(P: RingProfile, k: int) -> Poly:
    rule = P.h_rule
    if isinstance(rule, HPower):
        return Poly.var(rule.a) ** k if k >= 0 else Poly.var(rule.ainv) ** (-k)
    if isinstance(rule, HRecurrence):
        x, y = Poly.var(rule.x), Poly.var(rule.y)
        b, B = Poly.var(rule.b), Poly.var(rule.binv)
        if k == 1:
            return x
        if k == 2:
            return y
        if k > 2:
            return -(b * P.h_value(k - 2)) - rule.e * P.h_value(k - 1)
        # h(k) from h(k+2) + b h(k) + e h(k+1) = 0
        return -(B * (P.h_value(k + 2) + rule.e * P.h_value(k + 1)))
    raise ProfileError(f"unsupported h rule {rule!r}")


def h_expand(k: int, P: RingProfile) -> RingElem:
    return RingElem.scalar(P.h_value(k))


def normal_form(e: RingElem, P: RingProfile) -> RingElem:
    """Reduce polynomial parts, rewrite v_n to v_1 and expand h when the
    profile allows it."""
    out: dict = {}
    rho_pow: dict = {}
    for (h, n), p in e.terms.items():
        if n >= 2 and P.v_rule is not None:
            if n not in rho_pow:
                rho_pow[n] = P.reduce(P.v_rule ** (n - 1))
            p = p * rho_pow[n]
            n = 1
        if h is not None and P.h_rule is not None:
            p = p * P.h_value(h)
            h = None
        key = (h, n)
        out[key] = out[key] + p if key in out else p
    return RingElem({k: P.reduce(p) for k, p in out.items()})


def _certified(s: Poly, P: RingProfile) -> bool:
    """``s`` is a unit times a product of x's and y's modulo d."""
    units = set(P.inverted) | set(P.inverted.values())
    s = P.reduce(s)
    if "d" in P.generators():
        s = s.subs({"d": 0})
    if len(s.terms) != 1:
        return False
    (m, c), = s.terms.items()
    return all(v in units or v in ("x", "y") for v, _ in m)


def fraction_eq(u1: RingElem, s1, u2: RingElem, s2, P: RingProfile, check: bool = True) -> bool:
    """Compare ``u1/s1`` with ``u2/s2`` by cross multiplication."""
    s1, s2 = Poly.coerce(s1), Poly.coerce(s2)
    if check:
        for s in (s1, s2):
            if not _certified(s, P):
                raise ProfileError(f"denominator {s} is not certified as a non-zero-divisor")
    return normal_form(u2.scale(s1) - u1.scale(s2), P).is_zero()


def symbol_poly(text: str) -> Poly:
    return parse_poly(text)
