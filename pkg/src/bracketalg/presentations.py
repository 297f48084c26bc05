"""Concrete presentations of the bracket algebras and their variants.

Each builder returns a :class:`Presentation` (generators, relation list and
a short comment per relation); :meth:`Presentation.algebra` turns it into a
:class:`~bracketalg.core.GradedQuotient`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .core import (
    AlgebraError,
    FreeElement,
    Gen,
    GradedQuotient,
    bar,
    dump_presentation,
    free_add,
    letter,
    pair,
    qparam,
    single,
)
from .linalg import ONE, to_q


@dataclass
class Presentation:
    name: str
    gens: List[Gen]
    relations: List[FreeElement] = field(default_factory=list)
    comments: List[str] = field(default_factory=list)
    weights: Dict[Gen, int] = field(default_factory=dict)

    def add(self, rel: FreeElement, comment: str = "") -> None:
        rel = {w: c for w, c in rel.items() if c}
        if not rel:
            return
        key = _normalized(rel)
        if key in self._seen():
            return
        self._seen_keys.add(key)
        self.relations.append(rel)
        self.comments.append(comment)

    def _seen(self):
        if not hasattr(self, "_seen_keys"):
            self._seen_keys = {_normalized(r) for r in self.relations}
        return self._seen_keys

    def algebra(self, max_degree: int = 6, build: bool = True) -> GradedQuotient:
        return GradedQuotient(self.gens, self.relations, max_degree=max_degree, weights=self.weights, name=self.name, build=build)

    def dump(self) -> str:
        return f"# {self.name}\n" + dump_presentation(self.gens, self.relations, self.comments)


def _normalized(rel: FreeElement):
    """Relation up to a nonzero scalar, as a hashable key."""
    lead = min(rel, key=lambda w: [(g.sort_key) for g in w])
    c = rel[lead]
    return frozenset((w, v / c) for w, v in rel.items())


def _term(*factors) -> FreeElement:
    """Product of signed generators ``(sign, Gen)`` or bare ``Gen``."""
    coeff = ONE
    word = []
    for f in factors:
        if isinstance(f, Gen):
            word.append(f)
        else:
            s, g = f
            coeff *= s
            word.append(g)
    return {tuple(word): coeff}


def _sum(*terms: FreeElement) -> FreeElement:
    out: FreeElement = {}
    for t in terms:
        out = free_add(out, t)
    return out


def _commutator(a, b) -> FreeElement:
    return free_add(_term(a, b), _term(b, a), -1)


# ---------------------------------------------------------------------------
# type A


def presentation_A(n: int, commute_disjoint: bool = True) -> Presentation:
    """Generators ``x_ij`` (i < j <= n): squares, three-term relations and,
    by default, commutation of generators with disjoint index pairs."""
    if n < 2:
        raise AlgebraError("type A needs n >= 2")
    gens = [pair(i, j)[1] for i, j in itertools.combinations(range(1, n + 1), 2)]
    p = Presentation(f"BE(A{n - 1})", gens)
    for g in gens:
        p.add(_term(g, g), "square")
    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        p.add(_sum(_term(pair(i, j), pair(j, k)), _term(pair(j, k), pair(k, i)), _term(pair(k, i), pair(i, j))), "three-term")
    if commute_disjoint:
        for (i, j), (k, l) in itertools.combinations(itertools.combinations(range(1, n + 1), 2), 2):
            if {i, j}.isdisjoint({k, l}):
                p.add(_commutator(pair(i, j), pair(k, l)), "disjoint pairs commute")
    return p


def quantum_presentation_A(n: int) -> Presentation:
    """``x_{i,i+1}^2 = q_i`` with central parameters ``q_i`` of weight 2."""
    base = presentation_A(n)
    qs = [qparam(i) for i in range(1, n)]
    p = Presentation(f"qBE(A{n - 1})", base.gens + qs, weights={q: 2 for q in qs})
    for r, c in zip(base.relations, base.comments):
        if c == "square":
            (w,) = r
            g = w[0]
            if g.j == g.i + 1:
                r = free_add(r, {(qparam(g.i),): ONE}, -1)
        p.add(r, c)
    for q in qs:
        for g in base.gens:
            p.add(_commutator(q, g), "parameter is central")
    for a, b in itertools.combinations(qs, 2):
        p.add(_commutator(a, b), "parameters commute")
    return p


def abelianize(p: Presentation) -> Presentation:
    """Add all commutators of generators."""
    out = Presentation(p.name + "^ab", list(p.gens), list(p.relations), list(p.comments), dict(p.weights))
    for a, b in itertools.combinations(p.gens, 2):
        out.add(_commutator(a, b), "commutative")
    return out


# ---------------------------------------------------------------------------
# type B


def _pb(i: int, j: int):
    """Signed plain pair [i,j]."""
    return pair(i, j)


def _bb(i: int, j: int):
    return (1, bar(i, j))


def _s(i: int):
    return (1, single(i))


def presentation_B(n: int, extra_commutation: bool = True, second_line: str = "orbit") -> Presentation:
    """Generators ``x_ij`` = [i,j], ``y_ij`` = barred [i,j], ``z_i`` = [i].

    ``second_line`` selects how the mixed three-term relation is
    instantiated: ``"orbit"`` (all ordered distinct triples) or ``"sorted"``
    (i < j < k only).  ``extra_commutation`` adds ``y_ij z_k = z_k y_ij``
    for k outside {i, j}.
    """
    if n < 2:
        raise AlgebraError("type B needs n >= 2")
    idx = range(1, n + 1)
    pairs = list(itertools.combinations(idx, 2))
    gens = [Gen("pair", i, j) for i, j in pairs] + [bar(i, j) for i, j in pairs] + [single(i) for i in idx]
    p = Presentation(f"BE(B{n})", gens)
    for g in gens:
        p.add(_term(g, g), "square")
    for (i, j), (k, l) in itertools.product(pairs, pairs):
        if {i, j}.isdisjoint({k, l}):
            p.add(_commutator(_pb(i, j), _pb(k, l)), "disjoint pairs commute")
            p.add(_commutator(_bb(i, j), _pb(k, l)), "disjoint pairs commute")
            p.add(_commutator(_bb(i, j), _bb(k, l)), "disjoint pairs commute")
    for i, j in itertools.combinations(idx, 2):
        p.add(_commutator(_s(i), _s(j)), "singles commute")
        p.add(_commutator(_pb(i, j), _bb(i, j)), "pair commutes with its bar")
    for (i, j), k in itertools.product(pairs, idx):
        if k not in (i, j):
            p.add(_commutator(_pb(i, j), _s(k)), "pair commutes with outside single")
            if extra_commutation:
                p.add(_commutator(_bb(i, j), _s(k)), "bar commutes with outside single")
    for i, j, k in itertools.permutations(idx, 3):
        p.add(_sum(_term(_pb(i, j), _pb(j, k)), _term(_pb(j, k), _pb(k, i)), _term(_pb(k, i), _pb(i, j))), "three-term")
        if second_line == "orbit" or i < j < k:
            p.add(_sum(_term(_bb(i, k), _pb(i, j)), _term(_pb(j, i), _bb(j, k)), _term(_bb(k, j), _bb(i, k))), "mixed three-term")
    for i, j in itertools.permutations(idx, 2):
        p.add(
            _sum(_term(_pb(i, j), _s(i)), _term(_s(j), _pb(j, i)), _term(_s(i), _bb(i, j)), _term(_bb(i, j), _s(j))),
            "four-term",
        )
    for i, j in pairs:
        a, b, s = _pb(i, j), _bb(i, j), _s(i)
        p.add(_sum(_term(a, s, b, s), _term(b, s, a, s), _term(s, a, s, b), _term(s, b, s, a)), "quartic")
        p.add(free_add(_term(a, s, b, _s(j)), _term(_s(j), b, s, a), -1), "quartic exchange")
    return p


def quantum_presentation_B(n: int, **kw) -> Presentation:
    base = presentation_B(n, **kw)
    qs = [qparam(i) for i in range(1, n + 1)]
    p = Presentation(f"qBE(B{n})", base.gens + qs, weights={q: 2 for q in qs})
    for r, c in zip(base.relations, base.comments):
        if c == "square":
            (w,) = r
            g = w[0]
            if g.kind == "pair" and g.j == g.i + 1:
                r = free_add(r, {(qparam(g.i),): ONE}, -1)
            elif g.kind == "single" and g.i == n:
                r = free_add(r, {(qparam(n),): ONE}, -1)
        p.add(r, c)
    for q in qs:
        for g in base.gens:
            p.add(_commutator(q, g), "parameter is central")
    for a, b in itertools.combinations(qs, 2):
        p.add(_commutator(a, b), "parameters commute")
    return p


def specialize_presentation(p: Presentation, killed: Sequence[Gen], name: str) -> Presentation:
    """Quotient by a set of generators, written on the surviving ones."""
    dead = set(killed)
    gens = [g for g in p.gens if g not in dead]
    out = Presentation(name, gens, weights={g: w for g, w in p.weights.items() if g not in dead})
    for r, c in zip(p.relations, p.comments):
        out.add({w: v for w, v in r.items() if not dead.intersection(w)}, c)
    return out


def presentation_D(n: int) -> Presentation:
    """Type D generators obtained from type B by setting every ``[i] = 0``."""
    b = presentation_B(n)
    return specialize_presentation(b, [single(i) for i in range(1, n + 1)], f"BE(D{n})")


# ---------------------------------------------------------------------------
# type G2

G2_LETTERS = "abcdef"


def _words(text: str) -> FreeElement:
    """``"ab + cd"`` over the G2 letters, all coefficients one."""
    out: FreeElement = {}
    for part in text.split("+"):
        out = free_add(out, {tuple(letter(ch) for ch in part.strip()): ONE})
    return out


_G2_RELATIONS = [
    ("ad", "da", "orthogonal roots commute"),
    ("be", "eb", "orthogonal roots commute"),
    ("cf", "fc", "orthogonal roots commute"),
    ("ae", "ec + ca", "quadratic"),
    ("ea", "ce + ac", "quadratic"),
    ("fb", "df + bd", "quadratic"),
    ("bf", "fd + db", "quadratic"),
    ("af", "ba + cb + dc + ed + fe", "quadratic"),
    ("fa", "ab + bc + cd + de + ef", "quadratic"),
    ("abac + acab + acbc", "baca + cbca + caba", "quartic"),
    ("dfef + dedf + efdf", "fded + fdfe + fefd", "quartic"),
    ("abde + bcde + bcef + ecdb", "cdbc + cdcd + decd + fdca", "quartic"),
    ("bdce + edcb + edba + fecb", "cbdc + dcdc + dced + acdf", "quartic"),
    ("abcdef", "fedcba", "Yang-Baxter"),
]


def presentation_G2() -> Presentation:
    p = Presentation("BE(G2)", [letter(c) for c in G2_LETTERS])
    for x in p.gens:
        p.add(_term(x, x), "square")
    for lhs, rhs, comment in _G2_RELATIONS:
        p.add(free_add(_words(lhs), _words(rhs), -1), comment)
    return p


PRESENTATIONS = {
    "A": presentation_A,
    "B": presentation_B,
    "D": presentation_D,
    "G2": lambda n=2: presentation_G2(),
}


def get_presentation(family: str, n: int = 2, quantum: bool = False) -> Presentation:
    family = family.upper()
    if quantum:
        if family == "A":
            return quantum_presentation_A(n)
        if family == "B":
            return quantum_presentation_B(n)
        raise AlgebraError(f"no quantum variant for {family}")
    if family not in PRESENTATIONS:
        raise AlgebraError(f"no bracket algebra for family {family}")
    return PRESENTATIONS[family](n)
