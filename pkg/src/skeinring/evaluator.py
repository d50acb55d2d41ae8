"""Recursive skein evaluation of the type-one and type-two invariants.

Type one resolves the first bad crossing of a marked diagram: the crossing
change keeps the marking (one bad crossing fewer), smoothings lose a
crossing and are re-marked canonically.  Monotone diagrams are trivial links
and evaluate to ``v_n`` (``h(w) v_n`` for the writhe-weighted variant).

Type two has no crossing-change term, so any crossing can be resolved; the
lowest vertex id is used.

Smoothing children are put in canonical form before recursing, so the
memo (keyed by exact diagram and marking) also catches isomorphic repeats
while staying a pure cache of a deterministic computation.
"""
from __future__ import annotations

from .coeff import ProfileError, RingElem, RingProfile, bar, normal_form, shift_T
from .diagram import Diagram, canonical_form, site_class, writhe
from .marking import Marking, bad_count, canonical_marking, first_bad
from .poly import Poly
from .skein import SmoothingKind as K
from .skein import apply

TYPE1_SAME = ((K.CC, "b"), (K.E, "c1"), (K.W, "c2"), (K.HC, "c3"), (K.HT, "c4"), (K.VC, "d1"), (K.VT, "d2"))
TYPE1_DIFF = ((K.CC, "b'"), (K.E, "c1'"), (K.W, "c2'"), (K.S, "d1'"), (K.N, "d2'"))
TYPE2_SAME = TYPE1_SAME[1:]
TYPE2_DIFF = TYPE1_DIFF[1:]

DEFAULT_CROSSING_CAP = 7


class EvaluationError(RuntimeError):
    pass


def _symbol(sym: str, sign: int) -> str:
    return sym if sign > 0 else bar(sym)


def skein_terms(d: Diagram, m: Marking | None, x: int, P: RingProfile, family: str = "type1") -> list:
    """Children of resolving crossing ``x``: (coefficient, child, marking, kind).

    Type one solves the equation for the crossing itself, so coefficients
    carry a minus sign; type two expresses the crossing directly.
    """
    cls, sign = site_class(d, x)
    if family == "type1":
        table, factor = (TYPE1_SAME if cls == "same" else TYPE1_DIFF), -1
    elif family == "type2":
        table, factor = (TYPE2_SAME if cls == "same" else TYPE2_DIFF), 1
    else:
        raise ValueError(f"unknown family {family!r}")
    out = []
    for kind, sym in table:
        coef = P.image(_symbol(sym, sign)) * factor
        child = apply(d, x, kind).diagram
        if kind is K.CC:
            cm = m
        else:
            child = canonical_form(child)
            cm = canonical_marking(child)
        out.append((coef, child, cm, kind))
    return out


class Evaluator:
    """Evaluates one invariant family in one profile, with a memo table.

    ``prune`` multiplies coefficients down the recursion and drops branches
    whose accumulated coefficient vanishes (useful when the ring has
    nilpotents); otherwise values are computed bottom-up and memoised.
    """

    def __init__(self, P: RingProfile, family: str = "type1", modified: bool = False,
                 prune: bool | None = None, memo: bool = True, crossing_cap: int | None = None,
                 check_index: bool = False):
        if family not in ("type1", "type2"):
            raise ValueError(f"unknown family {family!r}")
        if P.family != family:
            raise ProfileError(f"profile {P.name} is a {P.family} profile, not {family}")
        self.P = P
        self.family = family
        self.modified = modified
        self.prune = getattr(P, "prune", False) if prune is None else prune
        self.memo = {} if memo else None
        self.crossing_cap = crossing_cap
        self.check_index = check_index
        self.nodes = 0

    def _nf(self, e: RingElem) -> RingElem:
        if self.modified:
            # keep h formal until the final shift
            return _nf_keep_h(e, self.P)
        return normal_form(e, self.P)

    def _base(self, d: Diagram) -> RingElem:
        h = writhe(d) if self.modified else None
        return RingElem.v(d.n_components, 1, h)

    def _resolve_site(self, d: Diagram, m: Marking | None):
        if self.family == "type1":
            return first_bad(d, m)
        ids = d.crossing_ids
        return min(ids) if ids else None

    def _check(self, d, m, child, cm, kind):
        if kind is K.CC:
            assert child.n_crossings == d.n_crossings and bad_count(child, cm) == bad_count(d, m) - 1
        else:
            assert child.n_crossings == d.n_crossings - 1

    def _f(self, d: Diagram, m: Marking | None) -> RingElem:
        key = (d, m)
        if self.memo is not None and key in self.memo:
            return self.memo[key]
        self.nodes += 1
        x = self._resolve_site(d, m)
        if x is None:
            val = self._nf(self._base(d))
        else:
            val = RingElem()
            for coef, child, cm, kind in skein_terms(d, m, x, self.P, self.family):
                coef = self.P.reduce(coef)
                if coef.is_zero():
                    continue
                if self.check_index:
                    self._check(d, m, child, cm, kind)
                val = val + self._f(child, cm).scale(coef)
            val = self._nf(val)
        if self.memo is not None:
            self.memo[key] = val
        return val

    def _g(self, d: Diagram, m: Marking | None, s: Poly) -> RingElem:
        key = (d, m, s)
        if self.memo is not None and key in self.memo:
            return self.memo[key]
        self.nodes += 1
        x = self._resolve_site(d, m)
        if x is None:
            val = self._nf(self._base(d).scale(s))
        else:
            val = RingElem()
            for coef, child, cm, kind in skein_terms(d, m, x, self.P, self.family):
                s2 = self.P.reduce(s * coef)
                if s2.is_zero():
                    continue
                if self.check_index:
                    self._check(d, m, child, cm, kind)
                val = val + self._g(child, cm, s2)
            val = self._nf(val)
        if self.memo is not None:
            self.memo[key] = val
        return val

    def f(self, d: Diagram, marking: Marking | None = None) -> RingElem:
        cap = self.crossing_cap
        if cap is not None and d.n_crossings > cap:
            raise EvaluationError(f"{d.n_crossings} crossings exceed the cap of {cap} for profile {self.P.name}")
        if self.family == "type1":
            m = (marking or canonical_marking(d)).check(d)
        else:
            m = None
        if self.prune:
            return self._g(d, m, Poly.const(1))
        return self._f(d, m)

    def F(self, d: Diagram, marking: Marking | None = None) -> RingElem:
        if not self.modified:
            raise ProfileError("F is only defined for the writhe-weighted invariant")
        return normal_form(shift_T(self.f(d, marking), -writhe(d)), self.P)


def _nf_keep_h(e: RingElem, P: RingProfile) -> RingElem:
    out: dict = {}
    for (h, n), p in e.terms.items():
        part = normal_form(RingElem({(None, n): p}), P)
        for (_, n2), q in part.terms.items():
            key = (h, n2)
            out[key] = out[key] + q if key in out else q
    return RingElem(out)


_EVALUATORS: dict = {}


def evaluator_for(P: RingProfile, family: str, modified: bool = False) -> Evaluator:
    key = (id(P), family, modified)
    ev = _EVALUATORS.get(key)
    if ev is None or ev.P is not P:
        cap = getattr(P, "crossing_cap", DEFAULT_CROSSING_CAP)
        ev = Evaluator(P, family, modified, crossing_cap=cap)
        _EVALUATORS[key] = ev
    return ev


def eval_type1(d: Diagram, P: RingProfile, marking: Marking | None = None) -> RingElem:
    return evaluator_for(P, "type1").f(d, marking)


def eval_type1_modified(d: Diagram, P: RingProfile, marking: Marking | None = None) -> tuple:
    """(f, F): f with h(w) v_n at monotone leaves, F = T^(-w) f normalised."""
    ev = evaluator_for(P, "type1", modified=True)
    f = ev.f(d, marking)
    F = normal_form(shift_T(f, -writhe(d)), P)
    return normal_form(f, P), F


def eval_type2(d: Diagram, P: RingProfile) -> RingElem:
    return evaluator_for(P, "type2").f(d)


def check_g_window(g, P: RingProfile, max_c: int, max_mu: int, max_n: int | None = None) -> list:
    """Check the three weight equations on ``|w| <= c <= max_c``,
    ``1 <= mu <= max_mu``; returns the list of violations."""
    img = P.image
    csum = img("c1") + img("c2") + img("c3") + img("c4")
    dsum = img("d1") + img("d2")
    cbar = img("~c1") + img("~c2") + img("~c3") + img("~c4")
    dbar = img("~d1") + img("~d2")
    pbar = img("~c1'") + img("~c2'")
    qbar = img("~d1'") + img("~d2'")
    max_n = max_n or (max_c + max_mu + 1)
    bad = []

    def v(n, coef=1):
        return RingElem.v(n, coef)

    def G(w, c, mu):
        return RingElem.scalar(Poly.coerce(g(w, c, mu)))

    for c in range(0, max_c + 1):
        for w in range(-c, c + 1):
            if (c - w) % 2:
                continue
            for mu in range(1, max_mu + 1):
                for n in range(1, max_n + 1):
                    lhs = G(w + 1, c + 1, mu) * (v(n + 1, csum) + v(n, dsum))
                    if not normal_form(lhs - G(w, c, mu) * v(n), P).is_zero():
                        bad.append(("positive kink", w, c, mu, n))
                    lhs = G(w - 1, c + 1, mu) * (v(n + 1, cbar) + v(n, dbar))
                    if not normal_form(lhs - G(w, c, mu) * v(n), P).is_zero():
                        bad.append(("negative kink", w, c, mu, n))
                    if n >= 2:
                        inner = (v(n, csum) + v(n - 1, dsum)).scale(pbar) + (v(n, cbar) + v(n - 1, dbar)).scale(qbar)
                        lhs = G(w, c + 2, mu) * inner
                        if not normal_form(lhs - G(w, c, mu) * v(n), P).is_zero():
                            bad.append(("bigon", w, c, mu, n))
    return bad


def eval_type2_modified(d: Diagram, P: RingProfile, g) -> RingElem:
    """g(writhe, crossings, components) * f after checking the weight window."""
    bad = check_g_window(g, P, d.n_crossings + 2, d.n_components + 1)
    if bad:
        kind, w, c, mu, n = bad[0]
        raise ProfileError(f"weight function violates the {kind} equation at w={w}, c={c}, mu={mu}, n={n}")
    f = eval_type2(d, P)
    return normal_form(f.scale(Poly.coerce(g(writhe(d), d.n_crossings, d.n_components))), P)
