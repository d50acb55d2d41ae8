"""The Conway / Kinoshita-Terasaka comparison.

Computes F for both knots in the two nilpotent-d profiles, compares them
with closed forms written as fractions of writhe weights, reduces the
inequality witness, and runs the HOMFLYPT control.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .coeff import RingElem, fraction_eq, normal_form
from .evaluator import Evaluator
from .homflypt import homflypt_oracle
from .knotlib import load_builtin
from .poly import Poly, parse_poly
from .profiles import get_profile

KNOTS = ("conway-11n34", "kt-11n42")

WITNESS = "2*b*d*y^3 - 2*d*x^2*y^2 - (b^2 - B^2)*x*y^2"

# a^3 b^2 F in the h(n) = a^n profile
POWER_FORMS = {"kt-11n42": "a - 2*b*d", "conway-11n34": "b*d - a*b^3"}


def closed_forms(P) -> dict:
    """name -> (numerator, denominator) for the closed forms of F.

    KT: h(-1) (b^-2/h(3) + d/h(2) - b^-1 d) v1
    C:  h(-1) (b d + 1/h(-1) - d b/h(4)) v1
    """
    h = P.h_value
    b, B, d = Poly.var("b"), Poly.var("B"), Poly.var("d")
    kt_num = h(-1) * (B * B * h(2) + d * h(3) - B * d * h(2) * h(3))
    c_num = h(-1) * (b * d * h(-1) * h(4) + h(4) - d * b * h(-1))
    return {
        "kt-11n42": (RingElem.v(1, kt_num), h(2) * h(3)),
        "conway-11n34": (RingElem.v(1, c_num), h(-1) * h(4)),
    }


@dataclass
class MutantReport:
    values: dict = field(default_factory=dict)  # (profile, knot) -> F
    closed_form_match: dict = field(default_factory=dict)  # knot -> bool
    power_form_match: dict = field(default_factory=dict)  # knot -> bool
    witness: Poly | None = None
    homflypt_equal: bool = False

    @property
    def separated(self) -> bool:
        """True when some profile gives different values on the pair."""
        profiles = {p for p, _ in self.values}
        return any(self.values[(p, KNOTS[0])] != self.values[(p, KNOTS[1])] for p in profiles)

    def lines(self) -> list:
        out = []
        for (p, k), v in sorted(self.values.items()):
            out.append(f"F[{p}]({k}) = {v}")
        for k, ok in sorted(self.closed_form_match.items()):
            out.append(f"closed form for {k}: {'match' if ok else 'MISMATCH'}")
        for k, ok in sorted(self.power_form_match.items()):
            out.append(f"a^3 b^2 F({k}) = {POWER_FORMS[k]}: {'match' if ok else 'MISMATCH'}")
        out.append(f"witness normal form: {self.witness}")
        out.append(f"homflypt control: {'equal' if self.homflypt_equal else 'DIFFERENT'}")
        out.append(f"separated: {'yes' if self.separated else 'no'}")
        return out


def compute_F(profile: str, knot: str) -> RingElem:
    P = get_profile(profile)
    ev = Evaluator(P, "type1", modified=True, crossing_cap=P.crossing_cap)
    return ev.F(load_builtin(knot))


def run() -> MutantReport:
    rep = MutantReport()
    full, weak = get_profile("mutant"), get_profile("mutant-a")
    for name in ("mutant", "mutant-a"):
        for k in KNOTS:
            rep.values[(name, k)] = compute_F(name, k)
    # the closed forms take F(unknot) = v1; ours is h(0) v1, so divide it out
    unit = compute_F("mutant", "unknot").terms[(None, 1)]
    for k, (num, den) in closed_forms(full).items():
        rep.closed_form_match[k] = fraction_eq(rep.values[("mutant", k)], unit, num, den, full)
    a3b2 = parse_poly("a^3*b^2")
    for k, form in POWER_FORMS.items():
        lhs = rep.values[("mutant-a", k)].scale(a3b2)
        diff = lhs - RingElem.v(1, parse_poly(form))
        rep.power_form_match[k] = normal_form(diff, weak).is_zero()
    rep.witness = full.reduce(parse_poly(WITNESS))
    rep.homflypt_equal = homflypt_oracle(load_builtin(KNOTS[0])) == homflypt_oracle(load_builtin(KNOTS[1]))
    return rep
