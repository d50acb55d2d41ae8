"""Derivation of coefficient relations from two-crossing expansions.

Two crossings p and q are resolved in both orders with free (noncommuting)
coefficient words.  Resolved sites stay in place as joints, so two fully
resolved diagrams are the same term exactly when every vertex is in the same
local state; equating the word sums term by term yields the relations the
coefficients must satisfy for the invariant to be well defined.

Configurations are built as closures of two positive crossings: each of the
four outgoing ends is joined to one of the four incoming ends.  The 24
closures are sorted into the connection cases

* ``disjoint`` -- no component passes through both crossings,
* ``aA``       -- p and q each join two components, exactly one shared,
* ``aA-bB``    -- p and q join the same two components,
* ``abA``      -- p on one component which also passes q; q joins two,
* ``aAbB``     -- both on one component, visits interleaved (p q p q),
* ``aABb``     -- both on one component, visits nested (p p q q).

A closure may need extra crossings to be drawn in the plane; those would be
carried along unchanged by every resolution, so the relations only depend on
the closure pattern.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .coeff import RingProfile, bar
from .diagram import Diagram, Vertex, change_crossing, site_class
from .evaluator import TYPE1_DIFF, TYPE1_SAME, TYPE2_DIFF, TYPE2_SAME
from .poly import Poly
from .skein import apply

CASES = ("disjoint", "aA", "aA-bB", "abA", "aAbB", "aABb")
SIGN_PAIRS = ("++", "+-", "-+", "--")
CASE_NUMBERS = {"1": "aA", "2": "aA-bB", "3": "abA", "4": "aAbB", "5": "aABb", "0": "disjoint"}


@dataclass(frozen=True)
class CaseConfig:
    case: str
    signs: str = "++"

    def __post_init__(self):
        if self.case not in CASES:
            raise ValueError(f"unknown case {self.case!r}")
        if self.signs not in SIGN_PAIRS:
            raise ValueError(f"unknown sign pair {self.signs!r}")


@dataclass(frozen=True)
class Relation:
    """``sum(lhs) = sum(rhs)`` over words; stored cancelled and normalised."""

    lhs: tuple
    rhs: tuple

    @classmethod
    def from_sums(cls, left: Counter, right: Counter):
        diff = Counter(left)
        diff.subtract(right)
        diff = {w: c for w, c in diff.items() if c}
        if not diff:
            return None
        lhs = tuple(sorted((w, c) for w, c in diff.items() if c > 0))
        rhs = tuple(sorted((w, -c) for w, c in diff.items() if c < 0))
        a, b = sorted([lhs, rhs])
        return cls(a, b)

    def difference(self) -> dict:
        out = {w: c for w, c in self.lhs}
        for w, c in self.rhs:
            out[w] = out.get(w, 0) - c
        return out

    def words(self):
        return [w for w, _ in self.lhs] + [w for w, _ in self.rhs]

    def map_words(self, fn) -> "Relation | None":
        left, right = Counter(), Counter()
        for w, c in self.lhs:
            left[fn(w)] += c
        for w, c in self.rhs:
            right[fn(w)] += c
        return Relation.from_sums(left, right)

    def __str__(self):
        def side(items):
            if not items:
                return "0"
            return " + ".join(("" if c == 1 else f"{c}*") + "*".join(w) for w, c in items)
        return f"{side(self.lhs)} = {side(self.rhs)}"


# -- configurations ---------------------------------------------------------

# frame ports of a positive crossing: NW=0, SW=1, SE=2, NE=3, over NW->SE
_INCOMING = (True, True, False, False)
_OUT_ENDS = ((1, 2), (1, 3), (2, 2), (2, 3))
_IN_ENDS = ((1, 0), (1, 1), (2, 0), (2, 1))


def closure(perm) -> Diagram:
    """Two positive crossings (ids 1, 2) with outgoing end k joined to
    incoming end ``perm[k]``."""
    ports = {1: [0] * 4, 2: [0] * 4}
    for label, (out_end, k) in enumerate(zip(_OUT_ENDS, perm), 1):
        vid, port = out_end
        ports[vid][port] = label
        ivid, iport = _IN_ENDS[k]
        ports[ivid][iport] = label
    verts = tuple(Vertex(vid, tuple(ports[vid]), _INCOMING, 1) for vid in (1, 2))
    return Diagram(verts).validate()


def _visits(d: Diagram, comp_index: int):
    """Crossing ids in visiting order along one component."""
    cyc = d.components[comp_index]
    out = []
    for a in cyc:
        vid, _ = d.ends[a]["head"]
        out.append(vid)
    return out


def classify_pair(d: Diagram, p: int, q: int) -> str | None:
    """Connection case of crossings p, q, or None when p is a
    different-component crossing and q a same-component one (the
    configuration is then the ``abA`` case with the roles swapped)."""
    comp = d.component_of
    vp, vq = d.vertex(p), d.vertex(q)
    cp = {comp[vp.ports[0]], comp[vp.ports[1]]}
    cq = {comp[vq.ports[0]], comp[vq.ports[1]]}
    shared = cp & cq
    if not shared:
        return "disjoint"
    if len(cp) == 2 and len(cq) == 2:
        return "aA" if len(shared) == 1 else "aA-bB"
    if len(cp) == 1 and len(cq) == 2:
        return "abA"
    if len(cp) == 2 and len(cq) == 1:
        return None
    seq = [x for x in _visits(d, next(iter(cp))) if x in (p, q)]
    i = seq.index(p)
    seq = seq[i:] + seq[:i]
    return "aAbB" if seq == [p, q, p, q] else "aABb"


@lru_cache(maxsize=None)
def realizations(case: str) -> tuple:
    """All closures (as permutations) realising ``case`` with p=1, q=2."""
    out = []
    for perm in permutations(range(4)):
        d = closure(perm)
        if classify_pair(d, 1, 2) == case:
            out.append(perm)
    return tuple(out)


def build_case(cfg: CaseConfig, index: int = 0):
    """(diagram, p, q) for the case and sign pair; ``index`` picks among the
    realising closures."""
    perm = realizations(cfg.case)[index]
    d = closure(perm)
    if cfg.signs[0] == "-":
        d = change_crossing(d, 1)
    if cfg.signs[1] == "-":
        d = change_crossing(d, 2)
    return d, 1, 2


# -- expansion --------------------------------------------------------------

def _terms(d: Diagram, x: int, family: str):
    cls, sign = site_class(d, x)
    if family == "type1":
        table = TYPE1_SAME if cls == "same" else TYPE1_DIFF
        scalar = -1
    else:
        table = TYPE2_SAME if cls == "same" else TYPE2_DIFF
        scalar = 1
    for kind, sym in table:
        child = apply(d, x, kind, keep_joint=True).diagram
        yield (sym if sign > 0 else bar(sym)), scalar, child


def expand_pair(d: Diagram, first: int, second: int, family: str = "type1") -> dict:
    """FormalSum: fully resolved diagram -> Counter of words (first symbol
    from ``first``)."""
    if first == second:
        raise ValueError("expand_pair needs two distinct crossings")
    out: dict = {}
    for s1, k1, child in _terms(d, first, family):
        for s2, k2, grand in _terms(child, second, family):
            out.setdefault(grand, Counter())[(s1, s2)] += k1 * k2
    return out


class TermMatchError(RuntimeError):
    pass


def relations_of(d: Diagram, p: int, q: int, family: str = "type1", reorder: bool = True) -> set:
    """Nontrivial relations from f_pq(d) = f_qp(d)."""
    pq = expand_pair(d, p, q, family)
    qp = expand_pair(d, q, p, family)
    if set(pq) != set(qp):
        raise TermMatchError("resolution orders produced different terms")
    rels = set()
    for key, left in pq.items():
        right = Counter()
        for (s_q, s_p), c in qp[key].items():
            right[(s_p, s_q) if reorder else (s_q, s_p)] += c
        r = Relation.from_sums(left, right)
        if r is not None:
            rels.add(r)
    return rels


@lru_cache(maxsize=None)
def derive_case_relations(cfg: CaseConfig, family: str = "type1") -> frozenset:
    """Relations of the case over every realising closure.

    The disjoint case keeps the raw resolution order, so its equations are
    the commutators between p-symbols and q-symbols."""
    out = set()
    reorder = cfg.case != "disjoint"
    for idx in range(len(realizations(cfg.case))):
        d, p, q = build_case(cfg, idx)
        out |= relations_of(d, p, q, family, reorder)
    return frozenset(out)


def conjugation_closure(rels) -> frozenset:
    """Add the variants with the first and/or second symbol barred."""
    out = set()
    for r in rels:
        for pos in ((), (0,), (1,), (0, 1)):
            if not pos:
                out.add(r)
                continue
            m = r.map_words(lambda w, pos=pos: tuple(bar(s) if i in pos else s for i, s in enumerate(w)))
            if m is not None:
                out.add(m)
    return frozenset(out)


@lru_cache(maxsize=None)
def all_relations(family: str = "type1") -> frozenset:
    out = set()
    for case in CASES:
        for signs in SIGN_PAIRS:
            out |= derive_case_relations(CaseConfig(case, signs), family)
    return frozenset(out)


def type2_by_shortcut() -> frozenset:
    """Type-one relations with every word containing b, b' or their bars
    dropped."""
    kill = {"b", "b'", "~b", "~b'"}
    out = set()
    for r in all_relations("type1"):
        left = Counter({w: c for w, c in r.lhs if not kill & set(w)})
        right = Counter({w: c for w, c in r.rhs if not kill & set(w)})
        m = Relation.from_sums(left, right)
        if m is not None:
            out.add(m)
    return frozenset(out)


# -- commutative images -----------------------------------------------------

def relation_image(r: Relation, images: dict) -> Poly:
    out = Poly()
    for w, c in r.difference().items():
        t = Poly.const(c)
        for s in w:
            t = t * images.get(s, Poly())
            if t.is_zero():
                break
        out = out + t
    return out


def commutative_relations(images: dict, family: str = "type1") -> list:
    """Distinct nonzero images of all derived relations (sign-normalised)."""
    seen = {}
    for r in sorted(all_relations(family), key=str):
        p = relation_image(r, images)
        if p.is_zero():
            continue
        key = p if p.sorted_terms()[0][1] > 0 else -p
        seen.setdefault(key, key)
    return list(seen)


@dataclass
class VerifyReport:
    profile: str
    checked: int
    residuals: list  # (relation, residual polynomial)

    @property
    def ok(self) -> bool:
        return not self.residuals

    def __str__(self):
        lines = [f"profile {self.profile}: {self.checked} relations checked, {len(self.residuals)} nonzero residuals"]
        for r, p in self.residuals[:20]:
            lines.append(f"  {r}  ->  {p}")
        return "\n".join(lines)


def verify_profile(P: RingProfile, rels=None) -> VerifyReport:
    rels = all_relations(P.family) if rels is None else rels
    bad = []
    for r in sorted(rels, key=str):
        res = P.reduce(relation_image(r, P.images))
        if not res.is_zero():
            bad.append((r, res))
    return VerifyReport(P.name, len(rels), bad)


def check_R3(P: RingProfile, family: str | None = None, n_max: int = 4, w_range: int = 6, g=None) -> VerifyReport:
    """Check the unknot/kink relations the family needs."""
    from .coeff import RingElem, normal_form

    if family is None:
        family = "type1-modified" if (P.family == "type1" and P.h_rule is not None) else P.family
    img = P.image
    csum = img("c1") + img("c2") + img("c3") + img("c4")
    dsum = img("d1") + img("d2")
    cbar = img("~c1") + img("~c2") + img("~c3") + img("~c4")
    dbar = img("~d1") + img("~d2")
    bad = []
    checked = 0

    def v(n, coef=1, h=None):
        return RingElem.v(n, coef, h)

    def test(label, e):
        nonlocal checked
        checked += 1
        res = normal_form(e, P)
        if not res.is_zero():
            bad.append((label, res))

    if family == "type1":
        for n in range(1, n_max + 1):
            test(f"positive kink n={n}", v(n, 1 + img("b") + dsum) + v(n + 1, csum))
            test(f"negative kink n={n}", v(n, 1 + img("~b") + dbar) + v(n + 1, cbar))
    elif family == "type1-modified":
        for n in range(1, n_max + 1):
            for w in range(-w_range, w_range + 1):
                test(f"positive kink w={w} n={n}",
                     v(n, 1, w) + v(n, img("b"), w - 2) + v(n + 1, csum, w - 1) + v(n, dsum, w - 1))
                test(f"negative kink w={w} n={n}",
                     v(n, 1, w) + v(n, img("~b"), w + 2) + v(n + 1, cbar, w + 1) + v(n, dbar, w + 1))
    elif family == "type2":
        pbar = img("~c1'") + img("~c2'")
        qbar = img("~d1'") + img("~d2'")
        for n in range(1, n_max + 1):
            test(f"positive kink n={n}", v(n + 1, csum) + v(n, dsum) - v(n))
            test(f"negative kink n={n}", v(n + 1, cbar) + v(n, dbar) - v(n))
            test(f"bigon n={n}", v(n + 1) - v(n, pbar + qbar))
    elif family == "type2-modified":
        from .evaluator import check_g_window

        for item in check_g_window(g, P, 4, 3):
            bad.append((item, None))
        checked += 1
    else:
        raise ValueError(f"unknown family {family!r}")
    return VerifyReport(P.name, checked, bad)


def format_relations(rels) -> str:
    return "\n".join(sorted(str(r) for r in rels))


# -- relation text ---------------------------------------------------------

def parse_relation(text: str) -> Relation:
    """Parse ``c3c2 = c4c2`` style or ``c3*c2 + c1*c1 = ...`` equations.

    Words are products of two symbols; symbols are written like ``c3``,
    ``b'``, ``~d1`` and may be juxtaposed without ``*``."""
    import re

    sym = re.compile(r"~?(?:b|c[1-4]|d[12])'?")

    def side(s):
        out = Counter()
        for term in s.split("+"):
            term = "".join(term.replace("*", "").split())
            coef = 1
            m = re.match(r"^(\d+)", term)
            if m:
                coef = int(m.group(1))
                term = term[m.end():]
            syms = sym.findall(term)
            if "".join(syms) != term:
                raise ValueError(f"cannot read word {term!r}")
            out[tuple(syms)] += coef
        return out

    left, right = text.split("=")
    r = Relation.from_sums(side(left), side(right))
    if r is None:
        raise ValueError(f"trivial relation {text!r}")
    return r


def swap_convention(r: Relation) -> Relation | None:
    """Exchange HC/HT and VC/VT coefficients (c3 <-> c4, d1 <-> d2)."""
    table = {"c3": "c4", "c4": "c3", "d1": "d2", "d2": "d1"}

    def sw(s):
        barred = s.startswith("~")
        core = s[1:] if barred else s
        core = table.get(core, core)
        return ("~" if barred else "") + core

    return r.map_words(lambda w: tuple(sw(s) for s in w))

