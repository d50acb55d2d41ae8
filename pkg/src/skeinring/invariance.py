"""Randomised invariance checks for the evaluators.

Each check compares two routes to the same value and reports a
:class:`Violation` when they disagree:

* resolution order: expanding the skein equation at an arbitrary crossing
  first gives the same value as the evaluator's own choice,
* markings: base points and component order do not matter (type one),
* moves: Reidemeister rewrites at random sites leave the value unchanged.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .coeff import RingElem, normal_form
from .diagram import Diagram, format_pd, writhe
from .evaluator import Evaluator, skein_terms
from .marking import Marking, canonical_marking
from .moves import random_move

VALUE_TYPES = ("1", "1w", "2", "2w")


@dataclass
class Violation:
    check: str
    detail: str
    diagram: Diagram
    other: Diagram | None = None

    def dump(self) -> str:
        lines = [f"[{self.check}] {self.detail}", "diagram:", format_pd(self.diagram)]
        if self.other is not None:
            lines += ["rewritten:", format_pd(self.other)]
        return "\n".join(lines)


@dataclass
class SuiteReport:
    trials: int = 0
    checks: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


class Checker:
    """Holds one evaluator per value type so memo tables are shared."""

    def __init__(self, P, value_type: str = "1", g=None):
        if value_type not in VALUE_TYPES:
            raise ValueError(f"unknown value type {value_type!r}")
        self.P = P
        self.value_type = value_type
        self.g = g
        family = "type1" if value_type.startswith("1") else "type2"
        self.ev = Evaluator(P, family, modified=(value_type == "1w"), crossing_cap=P.crossing_cap)

    def raw(self, d: Diagram, m: Marking | None = None) -> RingElem:
        """Skein value before any writhe correction (f)."""
        return self.ev.f(d, m)

    def value(self, d: Diagram, m: Marking | None = None) -> RingElem:
        """The quantity expected to be a link invariant."""
        if self.value_type == "1w":
            return self.ev.F(d, m)
        f = self.ev.f(d, m)
        if self.value_type == "2w":
            g = self.g or (lambda w, c, mu: 1)
            return normal_form(f.scale(g(writhe(d), d.n_crossings, d.n_components)), self.P)
        return f

    # -- individual checks --------------------------------------------------

    def resolution_order(self, d: Diagram, crossings=None) -> list:
        out = []
        m = canonical_marking(d) if self.ev.family == "type1" else None
        base = self.raw(d, m)
        for x in crossings if crossings is not None else d.crossing_ids:
            total = RingElem()
            for coef, child, cm, _ in skein_terms(d, m, x, self.P, self.ev.family):
                coef = self.P.reduce(coef)
                if not coef.is_zero():
                    total = total + self.raw(child, cm).scale(coef)
            if _differs(total, base, self.P):
                out.append(Violation("resolution-order", f"expanding crossing {x} first changes the value", d))
        return out

    def markings(self, d: Diagram, rng: random.Random, count: int = 3) -> list:
        if self.ev.family != "type1":
            return []
        out = []
        base = self.value(d)
        comps = d.components
        for _ in range(count):
            order = list(range(len(comps)))
            rng.shuffle(order)
            m = Marking(tuple(rng.choice(comps[k]) for k in order))
            if _differs(self.value(d, m), base, self.P):
                out.append(Violation("marking", f"marking {m.base_arcs} changes the value", d))
        return out

    def moves(self, d: Diagram, rng: random.Random, kinds, steps: int = 1, max_crossings: int | None = None) -> list:
        base = self.value(d)
        cur = d
        descs = []
        for _ in range(steps):
            r = random_move(cur, rng, kinds)
            if r is None:
                break
            nxt, desc = r
            if max_crossings is not None and nxt.n_crossings > max_crossings:
                break
            cur = nxt
            descs.append(desc)
        if cur is d:
            return []
        if _differs(self.value(cur), base, self.P):
            return [Violation("move", "; ".join(descs) + " changes the value", d, cur)]
        return []


def _differs(a: RingElem, b: RingElem, P) -> bool:
    return not normal_form(a - b, P).is_zero()


def default_moves(value_type: str) -> tuple:
    # type-two f is only claimed invariant under the third move
    return ("R3",) if value_type == "2" else ("R1", "R1-", "R2", "R3")


def run_suite(d: Diagram, P, value_type: str, trials: int, rng: random.Random,
              kinds=None, max_crossings: int = 7, g=None, checker: Checker | None = None) -> SuiteReport:
    """``trials`` rounds of resolution-order, marking and move checks."""
    checker = checker or Checker(P, value_type, g)
    kinds = kinds or default_moves(value_type)
    rep = SuiteReport()
    for _ in range(trials):
        rep.trials += 1
        xs = d.crossing_ids
        if xs:
            rep.checks += 1
            rep.violations += checker.resolution_order(d, [rng.choice(xs)])
        rep.checks += 1
        rep.violations += checker.markings(d, rng, 1)
        rep.checks += 1
        rep.violations += checker.moves(d, rng, kinds, steps=rng.randint(1, 2), max_crossings=max_crossings)
    return rep


def minimize(v: Violation, checker: Checker, kinds) -> Violation:
    """Shrink a move counterexample by retrying single moves from the same
    start diagram; keeps the first one-step pair that still fails."""
    if v.check != "move":
        return v
    rng = random.Random(0)
    for _ in range(50):
        found = checker.moves(v.diagram, rng, kinds, steps=1)
        if found:
            return found[0]
    return v
