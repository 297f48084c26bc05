"""Grothendieck calculus for type A.

Permutations are one-line tuples of 1-based values; ``u * v`` is the
composition ``u(v(k))`` so that ``w * s_i`` swaps positions i, i+1.
Commutative polynomials are :class:`~bracketalg.laurent.Laurent` objects
with non-negative exponents.

Two independent routes to the Grothendieck polynomials are provided:

* :func:`grothendieck_via_bruhat` solves ``G_w(G_1..G_n) . id = w`` in the
  Bruhat representation of ``BE(A_{n-1})``, with ``G_j = Theta_j - 1``;
* :func:`grothendieck_oracle` runs the isobaric recursion
  ``G_{w s_i} = pi_i G_w`` down from ``x^delta``, where
  ``pi_i f = d_i((1 + x_{i+1}) f)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .core import AlgebraElement, AlgebraError, GradedQuotient, pair
from .elements import dunkl_elements, elementary_symmetric, product, rsm_A, subalgebra_dimension
from .laurent import Laurent
from .linalg import Echelon, solve_square, to_fraction, to_q
from .presentations import abelianize, presentation_A

Perm = Tuple[int, ...]
GroupRingElement = Dict[Perm, Fraction]


# ---------------------------------------------------------------------------
# permutations


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose(u: Perm, v: Perm) -> Perm:
    """``(u v)(k) = u(v(k))``."""
    return tuple(u[v[k] - 1] for k in range(len(v)))


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for k, v in enumerate(w):
        out[v - 1] = k + 1
    return tuple(out)


def transposition(n: int, i: int, j: int) -> Perm:
    w = list(range(1, n + 1))
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


def simple(n: int, i: int) -> Perm:
    return transposition(n, i, i + 1)


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def length(w: Perm) -> int:
    return sum(1 for a, b in itertools.combinations(w, 2) if a > b)


def permutations(n: int) -> List[Perm]:
    """All of S_n, sorted by length and then lexicographically."""
    return sorted(itertools.permutations(range(1, n + 1)), key=lambda w: (length(w), w))


def reduced_word(w: Perm) -> List[int]:
    """Indices i_1..i_l with ``w = s_{i_1} ... s_{i_l}``."""
    word = []
    w = list(w)
    while True:
        for k in range(len(w) - 1):
            if w[k] > w[k + 1]:
                w[k], w[k + 1] = w[k + 1], w[k]
                word.append(k + 1)
                break
        else:
            return word[::-1]


def perm_name(w: Perm) -> str:
    """``id`` or a reduced word such as ``s2s1``."""
    word = reduced_word(w)
    return "id" if not word else "".join(f"s{i}" for i in word)


def parse_perm(text: str, n: int) -> Perm:
    """Accept one-line notation (``231`` or ``2,3,1``), ``id`` or an ``s``-word."""
    t = text.replace(" ", "")
    if t in ("id", "e", ""):
        return identity(n)
    if t.startswith("s"):
        w = identity(n)
        for part in t.split("s")[1:]:
            i = int(part)
            if not 1 <= i < n:
                raise AlgebraError(f"no simple transposition s{i} in S_{n}")
            w = compose(w, simple(n, i))
        return w
    digits = [int(x) for x in (t.split(",") if "," in t else t)]
    if sorted(digits) != list(range(1, n + 1)):
        raise AlgebraError(f"{text!r} is not a permutation of 1..{n}")
    return tuple(digits)


# ---------------------------------------------------------------------------
# polynomials


def staircase(n: int) -> List[Tuple[int, ...]]:
    """Exponent vectors ``alpha <= delta_n = (n-1, ..., 1, 0)``."""
    return sorted(itertools.product(*[range(n - i) for i in range(n)]), key=lambda a: (sum(a), a))


def variable(n: int, i: int) -> Laurent:
    return Laurent.var(n, i)


def swap_variables(f: Laurent, i: int) -> Laurent:
    n = f.n
    m = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    m[i - 1][i - 1] = m[i][i] = 0
    m[i - 1][i] = m[i][i - 1] = 1
    return f.transform(m)


def divided_difference(f: Laurent, i: int) -> Laurent:
    """``d_i f = (f - s_i f) / (x_i - x_{i+1})``."""
    return (f - swap_variables(f, i)).exact_div(variable(f.n, i) - variable(f.n, i + 1))


def isobaric(f: Laurent, i: int) -> Laurent:
    """``pi_i f = d_i((1 + x_{i+1}) f)``."""
    return divided_difference((1 + variable(f.n, i + 1)) * f, i)


def _top_down(n: int, top: Laurent, step) -> Dict[Perm, Laurent]:
    out = {longest(n): top}
    for w in sorted(permutations(n), key=length, reverse=True):
        if w in out:
            continue
        # find a descent-raising neighbour already computed: w = v s_i with l(v) > l(w)
        for i in range(1, n):
            v = compose(w, simple(n, i))
            if length(v) > length(w):
                out[w] = step(out[v], i)
                break
    return out


@lru_cache(maxsize=None)
def _oracle_table(n: int) -> Dict[Perm, Laurent]:
    top = Laurent.monomial([n - 1 - i for i in range(n)])
    return _top_down(n, top, isobaric)


@lru_cache(maxsize=None)
def _schubert_table(n: int) -> Dict[Perm, Laurent]:
    top = Laurent.monomial([n - 1 - i for i in range(n)])
    return _top_down(n, top, divided_difference)


def grothendieck_oracle(w: Perm) -> Laurent:
    """Grothendieck polynomial by the isobaric divided-difference recursion."""
    return _oracle_table(len(w))[tuple(w)]


def schubert_polynomial(w: Perm) -> Laurent:
    return _schubert_table(len(w))[tuple(w)]


def complete_homogeneous(n: int, d: int, last: int) -> Laurent:
    """``h_d(x_1, ..., x_last)`` in n variables."""
    out = Laurent(n)
    for combo in itertools.combinations_with_replacement(range(1, last + 1), d):
        m = [0] * n
        for v in combo:
            m[v - 1] += 1
        out = out + Laurent.monomial(m)
    return out


@lru_cache(maxsize=None)
def _coinvariant_basis(n: int) -> Tuple[Laurent, ...]:
    return tuple(complete_homogeneous(n, n - k + 1, k) for k in range(1, n + 1))


def coinvariant_reduce(f: Laurent) -> Laurent:
    """Normal form modulo ``(e_1, ..., e_n)``.

    Uses the Groebner basis ``h_{n-k+1}(x_1..x_k)`` for lex order with
    ``x_n > ... > x_1``; its leading terms are ``x_k^{n-k+1}``, so the
    result is supported on staircase monomials.
    """
    n = f.n
    gb = _coinvariant_basis(n)
    terms = dict(f.terms)
    while True:
        hit = None
        for m in sorted(terms, key=lambda m: m[::-1], reverse=True):
            k = next((k for k in range(n) if m[k] >= n - k), None)
            if k is not None:
                hit = (m, k)
                break
        if hit is None:
            return Laurent(n, terms)
        m, k = hit
        shift = list(m)
        shift[k] -= n - k
        sub = Laurent.monomial(shift, terms[m]) * gb[k]
        for mm, cc in sub.terms.items():
            s = terms.get(mm, 0) - cc
            if s:
                terms[mm] = s
            else:
                terms.pop(mm, None)


def expand_in_basis(f: Laurent, basis: Mapping[Perm, Laurent]) -> Dict[Perm, Fraction]:
    """Coefficients of ``f`` (already staircase-supported) in a basis of
    staircase polynomials indexed by permutations."""
    n = f.n
    monos = staircase(n)
    perms = list(basis)
    matrix = [[to_fraction(basis[w].terms.get(a, 0)) for w in perms] for a in monos]
    rhs = [to_fraction(f.terms.get(a, 0)) for a in monos]
    for m in f.terms:
        if m not in set(monos):
            raise AlgebraError(f"monomial {m} is outside the staircase")
    sol = solve_square(matrix, rhs)
    if sol is None:
        raise AlgebraError("basis expansion failed: matrix is singular")
    return {w: to_fraction(c) for w, c in zip(perms, sol) if c}


# ---------------------------------------------------------------------------
# Bruhat representation


@dataclass(frozen=True)
class BruhatConvention:
    """How ``x_ij`` acts on permutations.

    ``module``: ``"right"`` applies the letters of a word left to right,
    ``"left"`` right to left.  ``multiply``: ``"right"`` sends w to
    ``w t_ij`` (swap positions), ``"left"`` to ``t_ij w`` (swap values).
    """

    module: str = "right"
    multiply: str = "right"

    def __str__(self) -> str:
        return f"{self.module}-module, {'w t' if self.multiply == 'right' else 't w'}"


CONVENTIONS = [BruhatConvention(m, k) for m in ("right", "left") for k in ("right", "left")]


def bruhat_apply(i: int, j: int, w: Perm, conv: BruhatConvention = BruhatConvention()) -> GroupRingElement:
    """``x_ij`` on a permutation: the cover ``w t_ij`` if the length goes up
    by exactly one, else 0; ``x_ji = -x_ij``."""
    sign, g = pair(i, j)
    t = transposition(len(w), g.i, g.j)
    v = compose(w, t) if conv.multiply == "right" else compose(t, w)
    if length(v) == length(w) + 1:
        return {v: Fraction(sign)}
    return {}


def act(e, w, conv: BruhatConvention = BruhatConvention()) -> GroupRingElement:
    """Action of an algebra element (or free element) on a permutation or a
    group ring element."""
    start: GroupRingElement = {tuple(w): Fraction(1)} if isinstance(w, tuple) else dict(w)
    words = e.words() if isinstance(e, AlgebraElement) else e
    out: GroupRingElement = {}
    for word, c in words.items():
        letters = list(word) if conv.module == "right" else list(reversed(word))
        cur = start
        for g in letters:
            nxt: GroupRingElement = {}
            for v, a in cur.items():
                for u, b in bruhat_apply(g.i, g.j, v, conv).items():
                    nxt[u] = nxt.get(u, 0) + a * b
            cur = {u: a for u, a in nxt.items() if a}
            if not cur:
                break
        for v, a in cur.items():
            s = out.get(v, 0) + to_fraction(c) * a
            if s:
                out[v] = s
            else:
                out.pop(v, None)
    return out


def representation_failures(n: int, conv: BruhatConvention) -> List[Tuple[str, Perm]]:
    """Relations of ``BE(A_{n-1})`` that fail to annihilate some permutation."""
    p = presentation_A(n)
    bad = []
    for rel, comment in zip(p.relations, p.comments):
        for w in permutations(n):
            if act(rel, w, conv):
                bad.append((comment, w))
    return bad


# ---------------------------------------------------------------------------
# solving G_w(G) . id = w


class GrothendieckSolver:
    """Grothendieck polynomials of S_n from the Bruhat representation."""

    def __init__(self, n: int, conv: Optional[BruhatConvention] = None, ctx: Optional[GradedQuotient] = None):
        self.n = n
        self.ctx = ctx or presentation_A(n).algebra(max_degree=n * (n - 1) // 2 + 1)
        self.G = [t - 1 for t in rsm_A(self.ctx, n).elements]
        self._powers: Dict[Tuple[int, int], AlgebraElement] = {}
        self.conv = conv or select_convention(self.ctx)
        self.perms = permutations(n)
        self.monos = staircase(n)
        self._table: Optional[Dict[Perm, Laurent]] = None

    def power(self, j: int, k: int) -> AlgebraElement:
        key = (j, k)
        if key not in self._powers:
            self._powers[key] = self.ctx.one() if k == 0 else self.power(j, k - 1) * self.G[j]
        return self._powers[key]

    def evaluate(self, f: Laurent) -> AlgebraElement:
        """``f(G_1, ..., G_n)`` as an algebra element."""
        if any(x < 0 for m in f.terms for x in m):
            raise AlgebraError("negative exponents cannot be evaluated at G")
        return f.evaluate(self.G, self.ctx.one(), self.power)

    def matrix(self) -> List[List[Fraction]]:
        """Rows: permutations; columns: staircase monomials ``G^alpha . id``."""
        ident = identity(self.n)
        cols = []
        for a in self.monos:
            img = act(self.evaluate(Laurent.monomial(a)), ident, self.conv)
            cols.append([img.get(w, Fraction(0)) for w in self.perms])
        return [list(row) for row in zip(*cols)]

    def table(self) -> Dict[Perm, Laurent]:
        if self._table is None:
            m = self.matrix()
            out = {}
            for w in self.perms:
                rhs = [1 if v == w else 0 for v in self.perms]
                sol = solve_square(m, rhs)
                if sol is None:
                    raise AlgebraError(f"Bruhat system is singular under convention {self.conv}")
                out[w] = Laurent(self.n, {a: c for a, c in zip(self.monos, sol)})
            self._table = out
        return self._table

    def grothendieck(self, w: Perm) -> Laurent:
        return self.table()[tuple(w)]

    def group_ring_product(self, u: Perm, v: Perm) -> GroupRingElement:
        """``G_u(G) . v`` in the group ring."""
        return act(self.evaluate(self.grothendieck(u)), tuple(v), self.conv)


def select_convention(ctx: GradedQuotient, n: int = 3) -> BruhatConvention:
    """First convention that is a representation and reproduces the oracle
    Grothendieck polynomials of S_3; raises if none does."""
    small = ctx if len(ctx.gens) == n * (n - 1) // 2 else presentation_A(n).algebra(max_degree=n * (n - 1) // 2 + 1)
    for conv in CONVENTIONS:
        if representation_failures(n, conv):
            continue
        try:
            solver = GrothendieckSolver(n, conv, small)
            table = solver.table()
        except AlgebraError:
            continue
        if all(table[w] == grothendieck_oracle(w) for w in permutations(n)):
            return conv
    raise AlgebraError("no Bruhat convention reproduces the S_3 Grothendieck polynomials")


def grothendieck_via_bruhat(w: Perm, solver: Optional[GrothendieckSolver] = None) -> Laurent:
    solver = solver or GrothendieckSolver(len(w))
    return solver.grothendieck(w)


# ---------------------------------------------------------------------------
# structure constants


def structure_constants(u: Perm, v: Perm, solver: GrothendieckSolver) -> Dict[str, Dict[Perm, int]]:
    """``c_{u,v}^w`` computed twice: from ``G_u(G) . v`` and by expanding
    ``G_u G_v`` in the coinvariant quotient; raises if they disagree or are
    not integers."""
    algebra = solver.group_ring_product(u, v)
    table = {w: grothendieck_oracle(w) for w in permutations(len(u))}
    poly = coinvariant_reduce(grothendieck_oracle(u) * grothendieck_oracle(v))
    expansion = expand_in_basis(poly, table)
    for source in (algebra, expansion):
        for w, c in source.items():
            if c.denominator != 1:
                raise AlgebraError(f"non-integral structure constant {c} at {w}")
    if algebra != expansion:
        raise AlgebraError(f"structure constants disagree for u={u}, v={v}")
    return {"group_ring": {w: int(c) for w, c in algebra.items()}, "expansion": {w: int(c) for w, c in expansion.items()}}


# ---------------------------------------------------------------------------
# Pieri formulas


def pieri_sequences(n: int, k: int) -> List[List[Tuple[int, int]]]:
    """Sequences ``(a_1, b_1), ..., (a_r, b_r)`` with ``a`` weakly increasing
    in ``1..k``, each ``b_j`` in ``k+1..n``, and ``b`` strictly decreasing
    within a run of equal ``a``."""
    runs = []
    for a in range(1, k + 1):
        opts = []
        upper = list(range(n, k, -1))
        for r in range(len(upper) + 1):
            for bs in itertools.combinations(upper, r):
                opts.append([(a, b) for b in bs])
        runs.append(opts)
    return [sum(choice, []) for choice in itertools.product(*runs)]


def pieri_monomials(ctx: GradedQuotient, n: int, k: int) -> AlgebraElement:
    """Sum of the words ``x_{a_1 b_1} ... x_{a_r b_r}`` over :func:`pieri_sequences`."""
    out = ctx.zero()
    for seq in pieri_sequences(n, k):
        word, coeff = [], 1
        for a, b in seq:
            sign, g = pair(a, b)
            coeff *= sign
            word.append(g)
        out = out + ctx.element({tuple(word): coeff})
    return out


def postnikov_terms(n: int, m: int, k: int) -> List[List[Tuple[int, int]]]:
    """Sequences of k pairs ``(i, j)`` with ``i <= m < j``, distinct ``i``
    and ``j`` weakly increasing; each sequence is counted once, so pairs
    sharing a ``j`` occur in every relative order."""
    pairs = [(i, j) for i in range(1, m + 1) for j in range(m + 1, n + 1)]
    out = []
    for seq in itertools.permutations(pairs, k):
        if len({i for i, _ in seq}) < k:
            continue
        if all(seq[a][1] <= seq[a + 1][1] for a in range(k - 1)):
            out.append(list(seq))
    return out


def postnikov_pieri(ctx: GradedQuotient, n: int, m: int, k: int) -> AlgebraElement:
    out = ctx.zero()
    for seq in postnikov_terms(n, m, k):
        word, coeff = [], 1
        for i, j in seq:
            sign, g = pair(i, j)
            coeff *= sign
            word.append(g)
        out = out + ctx.element({tuple(word): coeff})
    return out


def postnikov_check(ctx: GradedQuotient, n: int) -> List[dict]:
    theta = dunkl_elements(ctx, "A", n).elements
    rows = []
    for m in range(1, n):
        for k in range(1, m + 1):
            ok = postnikov_pieri(ctx, n, m, k) == elementary_symmetric(k, theta[:m])
            rows.append({"m": m, "k": k, "ok": ok})
    return rows


# ---------------------------------------------------------------------------
# abelianization and injectivity


def mu_statistic(pairs: Sequence[Tuple[int, int]]) -> int:
    return sum(j - i for i, j in pairs)


def abelian_basis_words(n: int) -> List[List[Tuple[int, int]]]:
    """Monomials ``[i_1 j_1] ... [i_k j_k]`` with ``i_a < j_a`` and
    ``i_1 < ... < i_k``."""
    out = []
    for k in range(n):
        for iset in itertools.combinations(range(1, n), k):
            for js in itertools.product(*[range(i + 1, n + 1) for i in iset]):
                out.append(list(zip(iset, js)))
    return out


def transport(e: AlgebraElement, target: GradedQuotient) -> AlgebraElement:
    """Image under the quotient map to an algebra on the same generators."""
    return target.element(e.words())


def _rank(elements: Iterable[AlgebraElement]) -> int:
    ech = Echelon()
    for e in elements:
        key = {}
        for (d, i), c in e.terms.items():
            key[d * 10**6 + i] = c
        ech.add(key)
    return ech.rank


def abelian_report(n: int, ctx: Optional[GradedQuotient] = None) -> dict:
    """Dimension and Hilbert series of the abelianization, the basis of
    sorted monomials, and injectivity of low-degree theta- and Theta-polynomials."""
    top = n * (n - 1) // 2 + 1
    ctx = ctx or presentation_A(n).algebra(max_degree=top)
    ab = abelianize(presentation_A(n)).algebra(max_degree=top)
    hilb = ab.hilbert_coefficients()
    while len(hilb) > 1 and hilb[-1] == 0:
        hilb.pop()
    expected = [1]
    for k in range(1, n):
        expected = [a + k * b for a, b in zip(expected + [0], [0] + expected)]
    words = abelian_basis_words(n)
    basis_els = []
    for seq in words:
        word, coeff = [], 1
        for i, j in seq:
            word.append(pair(i, j)[1])
        basis_els.append(ab.element({tuple(word): coeff}))
    theta = dunkl_elements(ctx, "A", n).elements
    Theta = rsm_A(ctx, n).elements
    theta_rows, Theta_rows = [], []
    for d in range(n):
        monos = [a for a in itertools.product(range(d + 1), repeat=n) if sum(a) == d]
        els = [product([theta[j] ** a[j] for j in range(n)], ctx) for a in monos]
        theta_rows.append({"degree": d, "rank": _rank(els), "rank_image": _rank(transport(e, ab) for e in els)})
    monos = [a for a in itertools.product(range(n), repeat=n) if sum(a) <= n - 1]
    els = [product([Theta[j] ** a[j] for j in range(n)], ctx) for a in monos]
    Theta_rows.append({"degree": f"<= {n - 1}", "rank": _rank(els), "rank_image": _rank(transport(e, ab) for e in els)})
    return {
        "n": n,
        "dim": sum(hilb),
        "hilbert": hilb,
        "expected_hilbert": expected,
        "basis_size": len(words),
        "basis_rank": _rank(basis_els),
        "theta": theta_rows,
        "Theta": Theta_rows,
        "injective": all(r["rank"] == r["rank_image"] for r in theta_rows + Theta_rows),
    }


# ---------------------------------------------------------------------------
# Chern homomorphism


def _coinvariant_inverse(u: Laurent) -> Laurent:
    """Inverse of ``1 + nilpotent`` in the coinvariant algebra."""
    nu = u - 1
    out, term = Laurent.const(u.n), Laurent.const(u.n)
    for _ in range(u.n * (u.n - 1) // 2 + 1):
        term = coinvariant_reduce(-term * nu)
        if term.is_zero():
            break
        out = out + term
    return out


def chern_map(P: Laurent) -> Laurent:
    """``c`` of a polynomial in the Theta's, valued in the coinvariant algebra.

    ``c`` turns sums into products, and a monomial ``Theta^a`` (a line
    bundle class) goes to ``1 + sum_j a_j theta_j``; integer coefficients
    become powers.
    """
    n = P.n
    out = Laurent.const(n)
    for a, c in sorted(P.terms.items()):
        c = to_fraction(c)
        if c.denominator != 1:
            raise AlgebraError("Chern map needs integer coefficients")
        base = Laurent.const(n) + sum((Laurent.var(n, j + 1) * a[j] for j in range(n) if a[j]), Laurent(n))
        if base == 1:
            continue
        k = int(c)
        factor = base if k > 0 else _coinvariant_inverse(base)
        for _ in range(abs(k)):
            out = coinvariant_reduce(out * factor)
    return out


def chern_check(n: int = 3) -> List[dict]:
    """For each w != id: expand ``c(1 + G_w(G))`` in Schubert polynomials of
    the theta's and compare the lowest term with ``-(-1)^l (l-1)! S_w``."""
    schub = {w: schubert_polynomial(w) for w in permutations(n)}
    rows = []
    for w in permutations(n):
        G = grothendieck_oracle(w)
        # substitute x_j = Theta_j - 1
        P = 1 + G.evaluate([Laurent.var(n, j + 1) - 1 for j in range(n)], Laurent.const(n))
        img = chern_map(P)
        coeffs = expand_in_basis(img, schub)
        ell = length(w)
        row = {"w": w, "length": ell, "expansion": {perm_name(u): int(c) for u, c in coeffs.items()}}
        if ell == 0:
            row["ok"] = coeffs == {w: 1}
        else:
            expected = -((-1) ** ell) * math.factorial(ell - 1)
            lower = {u: c for u, c in coeffs.items() if u != identity(n) and length(u) <= ell and u != w}
            row["expected"] = expected
            row["ok"] = coeffs.get(identity(n)) == 1 and coeffs.get(w) == expected and not lower
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# the subalgebra generated by the G_j


def g_subalgebra_dimension(solver: GrothendieckSolver) -> int:
    """Dimension of the subalgebra generated by the ``G_j``."""
    return subalgebra_dimension(solver.G)
