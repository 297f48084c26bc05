"""Free associative algebras and their graded quotients over exact rationals.

A :class:`GradedQuotient` is built degree by degree: the degree ``d`` piece
is spanned by ``basis[d - wt(g)] (x) g`` modulo the image of the relations,
so normal words are prefix-closed and every basis word ``b.g`` remembers
its parent.  Among words of one degree the canonical order is lexicographic
on generator positions; each relation row is pivoted on its smallest word,
so normal forms are written in the larger words.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from gmpy2 import mpq

from .linalg import ONE, ZERO, Echelon, Vector, axpy, to_fraction, to_q

log = logging.getLogger(__name__)

_KIND_RANK = {"pair": 0, "bar": 1, "single": 2, "letter": 3, "q": 4}
_PREFIX = {"pair": "x", "bar": "y", "single": "z", "q": "q"}


class AlgebraError(ValueError):
    """Raised on malformed presentations or mismatched contexts."""


@dataclass(frozen=True)
class Gen:
    """A generator id: plain pair ``[i,j]``, barred pair, single ``[i]``,
    a G2 letter, or a central quantum parameter ``q_i``.

    Pairs are stored with ``i < j``; use :func:`pair` to get the sign for
    ``[j,i] = -[i,j]``.
    """

    kind: str
    i: int = 0
    j: int = 0
    letter: str = ""

    def __post_init__(self):
        if self.kind not in _KIND_RANK:
            raise AlgebraError(f"unknown generator kind {self.kind!r}")
        if self.kind in ("pair", "bar") and not (0 < self.i < self.j):
            raise AlgebraError(f"pair indices must satisfy 0 < i < j, got {self.i},{self.j}")
        if self.kind == "letter" and self.letter not in "abcdef":
            raise AlgebraError(f"G2 letters are a..f, got {self.letter!r}")

    @property
    def sort_key(self):
        return (_KIND_RANK[self.kind], self.i, self.j, self.letter)

    @property
    def name(self) -> str:
        if self.kind in ("pair", "bar"):
            return f"{_PREFIX[self.kind]}{self.i}{self.j}"
        if self.kind in ("single", "q"):
            return f"{_PREFIX[self.kind]}{self.i}"
        return self.letter

    @property
    def label(self) -> str:
        """Bracket notation, e.g. ``[1,2]``, ``[1,2]~`` (barred), ``[3]``."""
        if self.kind == "pair":
            return f"[{self.i},{self.j}]"
        if self.kind == "bar":
            return f"[{self.i},{self.j}]~"
        if self.kind == "single":
            return f"[{self.i}]"
        return self.name

    def __repr__(self) -> str:
        return self.name


def pair(i: int, j: int) -> Tuple[int, Gen]:
    """Signed plain pair: ``pair(2, 1) == (-1, Gen('pair', 1, 2))``."""
    if i == j:
        raise AlgebraError("pair indices must differ")
    return (1, Gen("pair", i, j)) if i < j else (-1, Gen("pair", j, i))


def bar(i: int, j: int) -> Gen:
    if i == j:
        raise AlgebraError("pair indices must differ")
    return Gen("bar", min(i, j), max(i, j))


def single(i: int) -> Gen:
    return Gen("single", i)


def letter(c: str) -> Gen:
    return Gen("letter", letter=c)


def qparam(i: int) -> Gen:
    return Gen("q", i)


def parse_gen(token: str) -> Tuple[int, Gen]:
    """Parse ``x12``/``x21``/``y12``/``z3``/``q1``/``a`` into (sign, Gen)."""
    t = token.strip()
    if len(t) == 1 and t in "abcdef":
        return 1, letter(t)
    head, digits = t[0], t[1:]
    if not digits.isdigit():
        raise AlgebraError(f"bad generator token {token!r}")
    if head == "x" and len(digits) == 2:
        return pair(int(digits[0]), int(digits[1]))
    if head == "y" and len(digits) == 2:
        return 1, bar(int(digits[0]), int(digits[1]))
    if head == "z":
        return 1, single(int(digits))
    if head == "q":
        return 1, qparam(int(digits))
    raise AlgebraError(f"bad generator token {token!r}")


# ---------------------------------------------------------------------------
# free elements: dict word -> coefficient, words are tuples of Gen


Word = Tuple[Gen, ...]
FreeElement = Dict[Word, mpq]


def word_concat(u: Word, v: Word) -> Word:
    return tuple(u) + tuple(v)


def free(terms: Mapping[Word, object]) -> FreeElement:
    out: FreeElement = {}
    for w, c in terms.items():
        c = to_q(c)
        if c:
            s = out.get(tuple(w), ZERO) + c
            if s:
                out[tuple(w)] = s
            else:
                out.pop(tuple(w), None)
    return out


def free_mul(a: FreeElement, b: FreeElement) -> FreeElement:
    out: FreeElement = {}
    for u, cu in a.items():
        for v, cv in b.items():
            w = u + v
            s = out.get(w, ZERO) + cu * cv
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return out


def free_add(a: FreeElement, b: FreeElement, coeff=1) -> FreeElement:
    out = dict(a)
    c = to_q(coeff)
    for w, v in b.items():
        s = out.get(w, ZERO) + c * v
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return out


def free_gen(g: Gen, coeff=1) -> FreeElement:
    return {(g,): to_q(coeff)}


def free_one() -> FreeElement:
    return {(): ONE}


def free_product(factors: Iterable[FreeElement]) -> FreeElement:
    out = free_one()
    for f in factors:
        out = free_mul(out, f)
    return out


def format_free(e: FreeElement) -> str:
    if not e:
        return "0"
    parts = []
    for w in sorted(e, key=lambda w: (len(w), [g.sort_key for g in w])):
        c = e[w]
        mono = ".".join(g.name for g in w) if w else "1"
        parts.append(_signed_term(c, mono, first=not parts))
    return " ".join(parts)


def _signed_term(c, mono: str, first: bool) -> str:
    c = to_fraction(c)
    sign = "-" if c < 0 else "+"
    a = abs(c)
    body = mono if a == 1 and mono != "1" else (f"{a}" if mono == "1" else f"{a}*{mono}")
    if first:
        return ("-" if c < 0 else "") + body
    return f"{sign} {body}"


# ---------------------------------------------------------------------------


@dataclass
class DegreeStats:
    degree: int
    columns: int
    relation_vectors: int
    rank: int
    dim: int


class GradedQuotient:
    """Homogeneous quotient of a free algebra, built through ``max_degree``.

    ``weights`` gives the grading of each generator (default 1).  The
    ``basis``, ``parent`` and ``mult`` tables are filled degree by degree;
    ``mult[(deg, idx, g)]`` is the normal form of ``basis[deg][idx] * g``.
    """

    def __init__(
        self,
        gens: Sequence[Gen],
        relations: Sequence[FreeElement] = (),
        max_degree: int = 6,
        weights: Optional[Mapping[Gen, int]] = None,
        name: str = "",
        build: bool = True,
    ):
        self.gens: List[Gen] = sorted(set(gens), key=lambda g: g.sort_key)
        if len(self.gens) != len(gens):
            raise AlgebraError("duplicate generators")
        self.name = name
        self.pos: Dict[Gen, int] = {g: k for k, g in enumerate(self.gens)}
        self.weight: Dict[Gen, int] = {g: int((weights or {}).get(g, 1)) for g in self.gens}
        if any(w < 1 for w in self.weight.values()):
            raise AlgebraError("generator weights must be positive")
        self.max_degree = int(max_degree)
        self.relations: List[FreeElement] = []
        for r in relations:
            r = {w: c for w, c in r.items() if c}
            if not r:
                continue
            degs = {self.word_degree(w) for w in r}
            if len(degs) != 1:
                raise AlgebraError(f"inhomogeneous relation: {format_free(r)}")
            if 0 in degs:
                raise AlgebraError("relation of degree 0 kills the algebra")
            self.relations.append(r)
        self.basis: List[List[Word]] = [[()]]
        self.index: List[Dict[Word, int]] = [{(): 0}]
        self.parent: List[List[Optional[Tuple[int, int, Gen]]]] = [[None]]
        self.mult: Dict[Tuple[int, int, Gen], Vector] = {}
        self.stats: List[DegreeStats] = [DegreeStats(0, 1, 0, 0, 1)]
        self.complete = False
        self.built_degree = 0
        if build:
            self.build(self.max_degree)

    # -- construction -----------------------------------------------------
    def word_degree(self, w: Word) -> int:
        try:
            return sum(self.weight[g] for g in w)
        except KeyError as exc:
            raise AlgebraError(f"generator {exc.args[0]} not in this algebra") from None

    def build(self, upto: int) -> None:
        """Extend the tables through degree ``upto``, stopping early once the
        algebra is known to vanish from some degree on."""
        if self.complete:
            self.max_degree = max(self.max_degree, upto)
            return
        maxw = max(self.weight.values()) if self.gens else 1
        for d in range(self.built_degree + 1, upto + 1):
            self._build_degree(d)
            self.built_degree = d
            if d >= maxw and all(not self.basis[d - k] for k in range(maxw)):
                self.complete = True
                break
        self.max_degree = max(self.max_degree, upto)

    def _columns(self, d: int) -> List[Tuple[Word, int, int, Gen]]:
        cols = []
        for g in self.gens:
            e = d - self.weight[g]
            if e < 0:
                continue
            for idx, w in enumerate(self.basis[e]):
                cols.append((w + (g,), e, idx, g))
        cols.sort(key=lambda c: [self.pos[x] for x in c[0]])
        return cols

    def _build_degree(self, d: int) -> None:
        cols = self._columns(d)
        col_of = {(e, idx, g): k for k, (_, e, idx, g) in enumerate(cols)}
        ech = Echelon()
        nvec = 0
        for r in self.relations:
            k = self.word_degree(next(iter(r)))
            if k > d:
                continue
            for uidx in range(len(self.basis[d - k])):
                vec: Vector = {}
                for w, c in r.items():
                    head = self.mult_word({(d - k, uidx): ONE}, w[:-1])
                    g = w[-1]
                    for (e, idx), v in head.items():
                        axpy(vec, c, {col_of[(e, idx, g)]: v})
                if vec:
                    nvec += 1
                    ech.add(vec)
        ech.finalize()
        pivots = ech.rows
        basis, index, parent = [], {}, []
        newidx: Dict[int, int] = {}
        for k, (w, e, idx, g) in enumerate(cols):
            if k not in pivots:
                newidx[k] = len(basis)
                index[w] = len(basis)
                basis.append(w)
                parent.append((e, idx, g))
        for k, (w, e, idx, g) in enumerate(cols):
            if k in pivots:
                row = pivots[k]
                self.mult[(e, idx, g)] = {(d, newidx[c]): -v for c, v in row.items() if c != k}
            else:
                self.mult[(e, idx, g)] = {(d, newidx[k]): ONE}
        self.basis.append(basis)
        self.index.append(index)
        self.parent.append(parent)
        self.stats.append(DegreeStats(d, len(cols), nvec, ech.rank, len(basis)))
        log.debug("%s degree %d: %d columns, rank %d, dim %d", self.name, d, len(cols), ech.rank, len(basis))

    # -- reduction ----------------------------------------------------------
    def mult_gen(self, vec: Mapping[Tuple[int, int], mpq], g: Gen, trunc: Optional[List[bool]] = None):
        out: Dict[Tuple[int, int], mpq] = {}
        w = self.weight[g]
        for (deg, idx), c in vec.items():
            if deg + w > self.built_degree:
                if not self.complete and trunc is not None:
                    trunc[0] = True
                continue
            for key, v in self.mult[(deg, idx, g)].items():
                s = out.get(key, ZERO) + c * v
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return out

    def mult_word(self, vec, word: Word, trunc: Optional[List[bool]] = None):
        out = dict(vec)
        for g in word:
            if not out:
                break
            out = self.mult_gen(out, g, trunc)
        return out

    def reduce_free(self, e: FreeElement) -> "AlgebraElement":
        trunc = [False]
        out: Dict[Tuple[int, int], mpq] = {}
        for w, c in e.items():
            for key, v in self.mult_word({(0, 0): ONE}, w, trunc).items():
                s = out.get(key, ZERO) + to_q(c) * v
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return AlgebraElement(self, out, trunc[0])

    # -- queries --------------------------------------------------------------
    def dims(self) -> List[int]:
        return [len(b) for b in self.basis]

    def hilbert_coefficients(self, upto: Optional[int] = None) -> List[int]:
        upto = self.built_degree if upto is None else upto
        if upto > self.built_degree:
            if self.complete:
                return self.dims() + [0] * (upto - self.built_degree)
            self.build(upto)
        return self.dims()[: upto + 1]

    def word_of(self, deg: int, idx: int) -> Word:
        return self.basis[deg][idx]

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {(0, 0): ONE})

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def scalar(self, c) -> "AlgebraElement":
        c = to_q(c)
        return AlgebraElement(self, {(0, 0): c} if c else {})

    def gen(self, g: Gen, coeff=1) -> "AlgebraElement":
        return self.reduce_free({(g,): to_q(coeff)})

    def element(self, terms: Mapping[Word, object]) -> "AlgebraElement":
        return self.reduce_free(free(terms))

    def parse(self, text: str) -> "AlgebraElement":
        return self.reduce_free(parse_sum(text))

    # -- operators --------------------------------------------------------
    def endomorphism(self, images: Mapping[Gen, "AlgebraElement"]) -> Callable[["AlgebraElement"], "AlgebraElement"]:
        """Algebra map defined on generators; memoised on basis words.

        Only meaningful when the map preserves the relation ideal; see
        :meth:`preserves_ideal`.
        """
        memo: Dict[Tuple[int, int], AlgebraElement] = {(0, 0): self.one()}

        def on_basis(deg: int, idx: int) -> AlgebraElement:
            key = (deg, idx)
            if key not in memo:
                e, pidx, g = self.parent[deg][idx]
                memo[key] = on_basis(e, pidx) * images[g]
            return memo[key]

        def apply(x: AlgebraElement) -> AlgebraElement:
            out = AlgebraElement(self, {}, x.truncated)
            for (deg, idx), c in x.terms.items():
                out = out + on_basis(deg, idx) * c
            return out

        return apply

    def twisted_derivation(
        self,
        values: Mapping[Gen, object],
        twist: Callable[["AlgebraElement"], "AlgebraElement"],
    ) -> Callable[["AlgebraElement"], "AlgebraElement"]:
        """Linear map with ``D(xy) = D(x) y + s(x) D(y)``, ``D(g) = values[g]``."""
        memo: Dict[Tuple[int, int], AlgebraElement] = {(0, 0): self.zero()}
        vals = {g: to_q(values.get(g, 0)) for g in self.gens}

        def on_basis(deg: int, idx: int) -> AlgebraElement:
            key = (deg, idx)
            if key not in memo:
                e, pidx, g = self.parent[deg][idx]
                head = AlgebraElement(self, {(e, pidx): ONE})
                res = on_basis(e, pidx) * self.gen(g)
                if vals[g]:
                    res = res + twist(head) * vals[g]
                memo[key] = res
            return memo[key]

        def apply(x: AlgebraElement) -> AlgebraElement:
            out = AlgebraElement(self, {}, x.truncated)
            for (deg, idx), c in x.terms.items():
                if deg == 0:
                    continue
                out = out + on_basis(deg, idx) * c
            return out

        return apply

    def free_endomorphism_image(self, r: FreeElement, images: Mapping[Gen, "AlgebraElement"]) -> "AlgebraElement":
        out = self.zero()
        for w, c in r.items():
            t = self.one()
            for g in w:
                t = t * images[g]
            out = out + t * c
        return out

    def free_derivation_image(self, r: FreeElement, values, twist_images) -> "AlgebraElement":
        """Apply the twisted derivation to a free element word by word."""
        out = self.zero()
        for w, c in r.items():
            for m, g in enumerate(w):
                v = to_q(values.get(g, 0))
                if not v:
                    continue
                t = self.one()
                for x in w[:m]:
                    t = t * twist_images[x]
                t = t * v
                for x in w[m + 1 :]:
                    t = t * self.gen(x)
                out = out + t * c
        return out

    def preserves_ideal(self, images: Mapping[Gen, "AlgebraElement"]) -> bool:
        return all(self.free_endomorphism_image(r, images).is_zero() for r in self.relations)

    def _column_mismatches(self, on_basis, on_column, upto: Optional[int]) -> List[Tuple[int, int, Gen]]:
        """Columns ``b.g`` where ``on_column(b, g)`` differs from the map
        applied to the normal form of ``b.g``."""
        upto = self.built_degree if upto is None else min(upto, self.built_degree)
        bad = []
        for (deg, idx, g), nf in self.mult.items():
            if deg + self.weight[g] > upto:
                continue
            rhs = AlgebraElement(self, {})
            for (d2, i2), c in nf.items():
                rhs = rhs + on_basis(d2, i2) * c
            if on_column(deg, idx, g) != rhs:
                bad.append((deg, idx, g))
        return bad

    def endomorphism_mismatches(self, images: Mapping[Gen, "AlgebraElement"], upto: Optional[int] = None):
        """Check multiplicativity of the generator-defined map on every
        product ``basis word * generator`` through degree ``upto``.

        This works without a relation list (e.g. for Nichols algebras).
        """
        f = self.endomorphism(images)

        def on_basis(d, i):
            return f(AlgebraElement(self, {(d, i): ONE}))

        def on_column(d, i, g):
            return on_basis(d, i) * images[g]

        return self._column_mismatches(on_basis, on_column, upto)

    def derivation_mismatches(self, values, twist_images, upto: Optional[int] = None):
        """Columns violating ``D(b g) = D(b) g + s(b) D(g)`` for the map
        defined recursively on normal words."""
        twist = self.endomorphism(twist_images)
        D = self.twisted_derivation(values, twist)
        vals = {g: to_q(values.get(g, 0)) for g in self.gens}

        def on_basis(d, i):
            return D(AlgebraElement(self, {(d, i): ONE}))

        def on_column(d, i, g):
            b = AlgebraElement(self, {(d, i): ONE})
            out = D(b) * self.gen(g)
            if vals[g]:
                out = out + twist(b) * vals[g]
            return out

        return self._column_mismatches(on_basis, on_column, upto)

    def __repr__(self) -> str:
        return f"GradedQuotient({self.name or len(self.gens)}, built={self.built_degree}, dims={self.dims()})"


def parse_sum(text: str) -> FreeElement:
    """Parse a signed sum of ``.``-joined words, e.g. ``x12.x23 - 2*x13 + 1``."""
    from fractions import Fraction

    s = text.replace("-", " - ").replace("+", " + ").split()
    out: FreeElement = {}
    sign = 1
    expect_term = True
    for tok in s:
        if tok in "+-":
            sign = -sign if tok == "-" else sign
            continue
        coeff = Fraction(1)
        body = tok
        if "*" in tok:
            cstr, body = tok.split("*", 1)
            coeff = Fraction(cstr)
        elif tok[0].isdigit():
            coeff, body = Fraction(tok), ""
        w: List[Gen] = []
        if body and body != "1":
            for part in body.split("."):
                sg, g = parse_gen(part)
                coeff *= sg
                w.append(g)
        out = free_add(out, {tuple(w): to_q(coeff * sign)})
        sign = 1
    return out


class AlgebraElement:
    """Element of a :class:`GradedQuotient` in normal form.

    ``terms`` maps ``(degree, basis index)`` to a nonzero rational.  When
    an operation needed degrees beyond what the context has built, the
    discarded part is flagged by ``truncated``; equality is then only
    meaningful through ``ctx.built_degree``.
    """

    __slots__ = ("ctx", "terms", "truncated")

    def __init__(self, ctx: GradedQuotient, terms: Mapping[Tuple[int, int], mpq], truncated: bool = False):
        self.ctx = ctx
        self.terms = {k: v for k, v in terms.items() if v}
        self.truncated = bool(truncated)

    def _check(self, other: "AlgebraElement") -> None:
        if other.ctx is not self.ctx:
            raise AlgebraError("elements live in different algebras")

    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        return self.ctx.scalar(other)

    def __add__(self, other) -> "AlgebraElement":
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, ZERO) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return AlgebraElement(self.ctx, out, self.truncated or other.truncated)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.ctx, {k: -v for k, v in self.terms.items()}, self.truncated)

    def __sub__(self, other) -> "AlgebraElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "AlgebraElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            c = to_q(other)
            return AlgebraElement(self.ctx, {k: c * v for k, v in self.terms.items()} if c else {}, self.truncated)
        self._check(other)
        ctx = self.ctx
        trunc = [self.truncated or other.truncated]
        memo: Dict[Tuple[int, int], Dict] = {(0, 0): self.terms}

        def times_basis(deg: int, idx: int):
            key = (deg, idx)
            if key not in memo:
                e, pidx, g = ctx.parent[deg][idx]
                memo[key] = ctx.mult_gen(times_basis(e, pidx), g, trunc)
            return memo[key]

        out: Dict[Tuple[int, int], mpq] = {}
        for (deg, idx), c in sorted(other.terms.items()):
            for key, v in times_basis(deg, idx).items():
                s = out.get(key, ZERO) + c * v
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return AlgebraElement(ctx, out, trunc[0])

    def __rmul__(self, other) -> "AlgebraElement":
        return self * other

    def __truediv__(self, other) -> "AlgebraElement":
        return self * (ONE / to_q(other))

    def __pow__(self, k: int) -> "AlgebraElement":
        if k < 0:
            from .elements import unipotent_inverse

            return unipotent_inverse(self) ** (-k)
        out = self.ctx.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return other.ctx is self.ctx and self.terms == other.terms
        try:
            return self.terms == self.ctx.scalar(other).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def constant(self) -> mpq:
        return self.terms.get((0, 0), ZERO)

    def degree(self) -> int:
        return max((d for d, _ in self.terms), default=-1)

    def low_degree(self) -> int:
        return min((d for d, _ in self.terms), default=-1)

    def component(self, d: int) -> "AlgebraElement":
        return AlgebraElement(self.ctx, {k: v for k, v in self.terms.items() if k[0] == d}, self.truncated)

    def words(self) -> Dict[Word, mpq]:
        return {self.ctx.basis[d][i]: c for (d, i), c in self.terms.items()}

    def coefficient(self, word: Word):
        d = self.ctx.word_degree(word)
        idx = self.ctx.index[d].get(tuple(word)) if d < len(self.ctx.index) else None
        return to_fraction(self.terms.get((d, idx), ZERO)) if idx is not None else to_fraction(ZERO)

    def commutator(self, other: "AlgebraElement") -> "AlgebraElement":
        return self * other - other * self

    def to_text(self) -> str:
        return format_free(self.words())

    def __repr__(self) -> str:
        suffix = " (truncated)" if self.truncated else ""
        return f"<{self.to_text()}{suffix}>"

    __str__ = to_text


# ---------------------------------------------------------------------------
# presentation text format


def dump_presentation(gens: Sequence[Gen], relations: Sequence[FreeElement], comments: Sequence[str] = ()) -> str:
    lines = ["generators: " + ", ".join(g.name for g in gens)]
    for k, r in enumerate(relations):
        if k < len(comments) and comments[k]:
            lines.append(f"# {comments[k]}")
        lines.append(f"{format_free(r)} = 0")
    return "\n".join(lines) + "\n"


def load_presentation(text: str, weights: Optional[Mapping[Gen, int]] = None) -> Tuple[List[Gen], List[FreeElement]]:
    """Parse the plain-text presentation format; inhomogeneous lines raise."""
    gens: Optional[List[Gen]] = None
    rels: List[FreeElement] = []
    wt = dict(weights or {})
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("generators:"):
            gens = []
            for tok in line.split(":", 1)[1].split(","):
                sign, g = parse_gen(tok)
                if sign != 1:
                    raise AlgebraError(f"line {lineno}: generator {tok.strip()} is not canonical")
                gens.append(g)
            continue
        if gens is None:
            raise AlgebraError(f"line {lineno}: relation before generators header")
        if "=" in line:
            lhs, rhs = line.split("=", 1)
            r = free_add(parse_sum(lhs), parse_sum(rhs), -1)
        else:
            r = parse_sum(line)
        unknown = {g for w in r for g in w} - set(gens)
        if unknown:
            raise AlgebraError(f"line {lineno}: unknown generators {sorted(map(repr, unknown))}")
        degs = {sum(wt.get(g, 1) for g in w) for w in r}
        if len(degs) > 1:
            raise AlgebraError(f"line {lineno}: inhomogeneous relation")
        if r:
            rels.append(r)
    if gens is None:
        raise AlgebraError("missing generators header")
    return gens, rels
