"""Sparse commutative polynomials with exact rational coefficients.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable
name, so the empty tuple is the constant monomial.  Variable names may carry
primes and a leading ``~`` (bar symbols), e.g. ``b'`` or ``~c1'``.
"""
from __future__ import annotations

import re
from fractions import Fraction


def mono_mul(m1: tuple, m2: tuple) -> tuple:
    if not m1:
        return m2
    if not m2:
        return m1
    out = dict(m1)
    for v, e in m2:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items()))


def mono_degree(m: tuple) -> int:
    return sum(e for _, e in m)


class Poly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {m: Fraction(c) for m, c in terms.items() if c}
        self._hash = None

    # -- constructors ------------------------------------------------------
    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(): c}) if c else cls()

    @classmethod
    def coerce(cls, x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        if isinstance(x, str):
            return parse_poly(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Poly")

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = Poly.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        other = Poly.coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, str)):
            other = Poly.coerce(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({mono_degree(m) for m in self.terms}) <= 1

    def subs(self, mapping: dict) -> "Poly":
        """Substitute polynomials for variables (missing ones stay)."""
        out = Poly()
        cache: dict = {}
        for m, c in self.terms.items():
            t = Poly.const(c)
            rest = []
            for v, e in m:
                if v in mapping:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = Poly.coerce(mapping[v]) ** e
                    t = t * cache[key]
                else:
                    rest.append((v, e))
            if rest:
                t = t * Poly({tuple(rest): 1})
            out = out + t
        return out

    def rename(self, mapping: dict) -> "Poly":
        return Poly({tuple(sorted((mapping.get(v, v), e) for v, e in m)): c for m, c in self.terms.items()})

    # -- display -----------------------------------------------------------
    def sorted_terms(self, order=None):
        if order is None:
            return sorted(self.terms.items(), key=lambda t: (-mono_degree(t[0]), t[0]))
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def to_str(self, order=None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms(order):
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            coef = str(abs(c))
            if not mono:
                body = coef
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{coef}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sgn, body in parts[1:]:
            s += f" {sgn} {body}"
        return s

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({self.to_str()!r})"


# -- text syntax ------------------------------------------------------------

_TOK = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(~?[A-Za-z][A-Za-z0-9_]*'*)|(\*\*|[-+*^()]))")


def _tokens(text: str):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOK.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:pos + 10]!r}")
        num, name, op = m.groups()
        out.append(("num", Fraction(num)) if num else ("var", name) if name else ("op", "^" if op == "**" else op))
        pos = m.end()
    return out


def parse_poly(text: str) -> Poly:
    """Parse ``+ - * ^`` expressions with rational constants and names."""
    toks = _tokens(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        pos += 1
        return toks[pos - 1]

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        acc = term() * sign
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = power()
        while True:
            if peek() == ("op", "*"):
                take()
                acc = acc * power()
            elif peek()[0] in ("num", "var") or peek() == ("op", "("):
                acc = acc * power()
            else:
                return acc

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num" or val.denominator != 1:
                raise ValueError("exponent must be a non-negative integer")
            base = base ** int(val)
        return base

    def atom():
        kind, val = take() if pos < len(toks) else (None, None)
        if kind == "num":
            return Poly.const(val)
        if kind == "var":
            return Poly.var(val)
        if (kind, val) == ("op", "("):
            e = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return e
        if (kind, val) == ("op", "-"):
            return -power()
        raise ValueError(f"unexpected token {val!r}")

    if not toks:
        raise ValueError("empty polynomial")
    out = expr()
    if pos != len(toks):
        raise ValueError(f"trailing input in polynomial {text!r}")
    return out
