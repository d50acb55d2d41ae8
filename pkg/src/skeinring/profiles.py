"""Catalog of specialization profiles.

Each profile is a commutative image of the coefficient ring.  Bars become
``B*x`` (or ``B'*x'``) whenever ``b`` (or ``b'``) is inverted.
"""
from __future__ import annotations

from functools import lru_cache

from .coeff import HPower, HRecurrence, RingProfile
from .poly import Poly, parse_poly

P_ = parse_poly


def _barred(images: dict, binv: str | None = "B", binv_p: str | None = "B'") -> dict:
    """Add bar images x~ = B*x for unprimed and B'*x' for primed symbols."""
    out = dict(images)
    for s, p in images.items():
        if s.startswith("~"):
            continue
        if s in ("b", "b'"):
            inv = binv if s == "b" else binv_p
            out.setdefault("~" + s, Poly.var(inv))
            continue
        inv = binv_p if s.endswith("'") else binv
        out.setdefault("~" + s, Poly.var(inv) * p)
    return out


def homflypt() -> RingProfile:
    """b' = b, c1' = c1 and every other coefficient zero; the skein equation
    becomes E+ + b E- + c1 E = 0 and gives the HOMFLYPT polynomial under
    b = l^-2, c1 = m l^-1."""
    images = _barred({"b": P_("b"), "c1": P_("c1"), "b'": P_("b"), "c1'": P_("c1")}, "B", "B")
    return RingProfile(
        name="homflypt", family="type1", order=("b", "B", "c1", "C1"), images=images,
        inverted={"b": "B", "c1": "C1"}, v_rule=P_("-C1 - b*C1"),
        zeroed=("c2", "c3", "c4", "d1", "d2", "c2'", "d1'", "d2'"),
        description="HOMFLYPT image: v_{n+1} = -(1+b)/c1 v_n",
    )


def homflypt3() -> RingProfile:
    """Like homflypt but with independent c1 and c1'."""
    images = _barred({"b": P_("b"), "c1": P_("c1"), "b'": P_("b"), "c1'": P_("c1'")}, "B", "B")
    return RingProfile(
        name="homflypt3", family="type1", order=("b", "B", "c1", "C1", "c1'"), images=images,
        inverted={"b": "B", "c1": "C1"}, v_rule=P_("-C1 - b*C1"),
        zeroed=("c2", "c3", "c4", "d1", "d2", "c2'", "d1'", "d2'"),
        description="three-variable HOMFLYPT image with c1' free",
    )


def mutant() -> RingProfile:
    """Only b, b', c1' = c and d2 = d survive, with b'c = bc, cd = dd = 0,
    b^2 d = b'^2 d = d and the writhe weights h(w) + b h(w-2) + d h(w-1) = 0."""
    images = _barred({"b": P_("b"), "b'": P_("b'"), "c1'": P_("c"), "d2": P_("d")})
    return RingProfile(
        name="mutant", family="type1", order=("b'", "b", "B'", "B", "c", "d", "x", "y"), images=images,
        relations=(P_("b'*c - b*c"), P_("c*d"), P_("d*d"), P_("b^2*d - d"), P_("b'^2*d - d")),
        inverted={"b": "B", "b'": "B'"}, h_rule=HRecurrence(P_("d")),
        zeroed=("c1", "c2", "c3", "c4", "d1", "c2'", "d1'", "d2'"),
        description="three-term skein relations with nilpotent d",
    )


def mutant_a() -> RingProfile:
    """The mutant profile with h(n) = a^n, b' = b and c = d."""
    images = _barred({"b": P_("b"), "b'": P_("b"), "c1'": P_("d"), "d2": P_("d")}, "B", "B")
    return RingProfile(
        name="mutant-a", family="type1", order=("A", "a", "B", "b", "d"), images=images,
        relations=(P_("d*d"), P_("b^2*d - d"), P_("a^2 + b + d*a")),
        inverted={"b": "B", "a": "A"}, h_rule=HPower("a", "A"),
        zeroed=("c1", "c2", "c3", "c4", "d1", "c1'", "c2'", "d1'", "d2'"),
        description="h(n) = a^n with a^2 + b + d a = 0",
    )


def d_only() -> RingProfile:
    """b = b' = -1, only the d coefficients survive.  The unknot relation
    (1 + b + d1 + d2) v_n = 0 forces d2 = -d1."""
    images = {
        "b": P_("-1"), "~b": P_("-1"), "b'": P_("-1"), "~b'": P_("-1"),
        "d1": P_("d1"), "~d1": P_("-d1"), "d2": P_("-d1"), "~d2": P_("d1"),
        "d1'": P_("d1'"), "~d1'": P_("-d1'"), "d2'": P_("d2'"), "~d2'": P_("-d2'"),
    }
    return RingProfile(
        name="d-only", family="type1", order=("d1", "d1'", "d2'"), images=images,
        relations=(P_("d1*d1'"), P_("d1*d2'"), P_("d1'*d2'"), P_("d1'^2"), P_("d2'^2")),
        zeroed=("c1", "c2", "c3", "c4", "c1'", "c2'"),
        description="E+ - E- + d1 VC + d2 VT = 0 with d2 = -d1",
    )


def kauffman_like() -> RingProfile:
    """b = b' = 1, c2 = c3 = c4 = d2 = c2' = d2' = 0.  With c1 inverted the
    relations c1 d1 = c1 d1' = 0 kill d1 and d1'."""
    images = {"b": P_("1"), "c1": P_("c1"), "d1": P_("d1"), "b'": P_("1"), "c1'": P_("c1'"), "d1'": P_("d1'")}
    images.update({"~" + s: p for s, p in list(images.items())})
    return RingProfile(
        name="kauffman-like", family="type1", order=("c1", "C1", "c1'", "d1", "d1'"), images=images,
        relations=(P_("c1*d1"), P_("c1*d1'"), P_("c1'*d1"), P_("d1*d1"), P_("d1*d1'"), P_("d1'*d1'")),
        inverted={"c1": "C1"}, v_rule=P_("-2*C1 - d1*C1"),
        zeroed=("c2", "c3", "c4", "d2", "c2'", "d2'"),
        description="oriented analogue of the Kauffman two-variable polynomial",
    )


def b1() -> RingProfile:
    """b = b' = 1 (so bars are trivial), all other coefficients free subject
    to the derived two-crossing relations."""
    from .relations import commutative_relations

    base = {s: P_(s) for s in ("c1", "c2", "c3", "c4", "d1", "d2", "c1'", "c2'", "d1'", "d2'")}
    base["b"] = P_("1")
    base["b'"] = P_("1")
    images = dict(base)
    images.update({"~" + s: p for s, p in base.items()})
    rels = commutative_relations(images)
    return RingProfile(
        name="b1", family="type1",
        order=("S", "c1", "c2", "c3", "c4", "d1", "d2", "c1'", "c2'", "d1'", "d2'"), images=images,
        relations=tuple(rels) + (P_("S*(c1 + c2 + c3 + c4) - 1"),),
        v_rule=P_("-2*S - d1*S - d2*S"), order_kind="grevlex",
        description="b = b' = 1 with the derived relations; S inverts c1+c2+c3+c4",
    )


_T2_NAMES = ("c1", "c2", "c3", "c4", "d1", "d2", "c1'", "c2'", "d1'", "d2'")


def _t2_images(names) -> dict:
    images = {s: P_(s) for s in names}
    images.update({"~" + s: P_("~" + s) for s in names})
    return images


def type2_generic() -> RingProfile:
    """All twenty type-two generators, the derived two-crossing relations and
    the unknot relations: kinks of either sign are worth v_n and a bigon
    between two components gives v_{n+1} = (c1'~ + c2'~ + d1'~ + d2'~) v_n."""
    from .relations import commutative_relations

    images = _t2_images(_T2_NAMES)
    rho = P_("~c1' + ~c2' + ~d1' + ~d2'")
    kinks = (
        P_("c1 + c2 + c3 + c4") * rho + P_("d1 + d2 - 1"),
        P_("~c1 + ~c2 + ~c3 + ~c4") * rho + P_("~d1 + ~d2 - 1"),
    )
    order = _T2_NAMES + tuple("~" + s for s in _T2_NAMES)
    return RingProfile(
        name="type2", family="type2", order=order, images=images,
        relations=tuple(commutative_relations(images, family="type2")) + kinks,
        v_rule=rho, order_kind="grevlex", description="type-two ring with the unknot relations imposed",
    )


def type2_free() -> RingProfile:
    """Free commutative image of the type-two symbols (no relations).  Not an
    invariant; used to read off raw skein expansions."""
    images = _t2_images(_T2_NAMES)
    order = _T2_NAMES + tuple("~" + s for s in _T2_NAMES)
    return RingProfile(name="type2-free", family="type2", order=order, images=images,
                       order_kind="grevlex", description="no relations imposed")


def type2_d() -> RingProfile:
    """Type two with every c and c-bar zero, under the two-crossing
    relations only.  These make d1 + d2 nilpotent, so the unknot relations
    cannot be added without collapsing the ring: the value is invariant
    under the third Reidemeister move only."""
    from .relations import commutative_relations

    names = ("d1", "d2", "c1'", "c2'", "d1'", "d2'")
    images = _t2_images(names)
    rels = commutative_relations(images, family="type2")
    order = tuple(names) + tuple("~" + s for s in names)
    return RingProfile(
        name="type2-d", family="type2", order=order, images=images, relations=tuple(rels),
        order_kind="grevlex", zeroed=("c1", "c2", "c3", "c4"),
        description="type two with only d, d-bar and primed coefficients",
    )


_BUILDERS = {
    "homflypt": homflypt,
    "homflypt3": homflypt3,
    "d-only": d_only,
    "b1": b1,
    "kauffman-like": kauffman_like,
    "type2-d": type2_d,
    "type2": type2_generic,
    "mutant": mutant,
    "mutant-a": mutant_a,
}


@lru_cache(maxsize=None)
def get_profile(name: str) -> RingProfile:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown profile {name!r}; choose from {sorted(_BUILDERS)}") from None
    P = builder()
    if name in ("mutant", "mutant-a"):
        # nilpotent d: branches die quickly when coefficients are carried down
        P.prune = True
    if name in ("homflypt", "homflypt3", "kauffman-like", "d-only", "mutant", "mutant-a"):
        # few surviving coefficients keep the term count small
        P.crossing_cap = None
    return P


def preset_profiles() -> dict:
    return {name: get_profile(name) for name in _BUILDERS}


def profile_names() -> list:
    return list(_BUILDERS)
