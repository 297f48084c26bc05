"""Distinguished elements: Dunkl elements, multiplicative (RSM) Dunkl elements,
exponentials, and the unipotent calculus used to evaluate Laurent
polynomials at commuting families."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .core import AlgebraElement, AlgebraError, Gen, GradedQuotient, bar, letter, pair, qparam, single
from .laurent import Laurent
from .linalg import ONE, Echelon, to_fraction, to_q


# ---------------------------------------------------------------------------
# unipotent calculus


def _split_unipotent(e: AlgebraElement) -> Tuple[mpq, AlgebraElement]:
    c = e.constant()
    if not c:
        raise AlgebraError("element has zero constant term; it is not a unit")
    return c, e * (ONE / c) - 1


def _series(nu: AlgebraElement, coeffs) -> AlgebraElement:
    """``sum_k coeffs(k) nu^k`` until the powers vanish or pass the built degree."""
    ctx = nu.ctx
    out = ctx.one()
    power = ctx.one()
    k = 0
    while True:
        k += 1
        power = power * nu
        if power.is_zero() or k > ctx.built_degree:
            break
        out = out + power * coeffs(k)
    if not ctx.complete and not nu.is_zero():
        out.truncated = True
    out.truncated = out.truncated or nu.truncated
    return out


def unipotent_inverse(e: AlgebraElement) -> AlgebraElement:
    """Inverse of ``c (1 + nu)`` with ``nu`` of positive degree."""
    c, nu = _split_unipotent(e)
    return _series(nu, lambda k: (-1) ** k) * (ONE / c)


def fractional_power(e: AlgebraElement, r) -> AlgebraElement:
    """``e ** r`` for rational ``r`` by the binomial series; needs constant term 1."""
    r = Fraction(r)
    if e.constant() != 1:
        raise AlgebraError("fractional powers need constant term 1")
    _, nu = _split_unipotent(e)
    coeffs = {0: Fraction(1)}

    def binom(k):
        if k not in coeffs:
            coeffs[k] = binom(k - 1) * (r - k + 1) / k
        return to_q(coeffs[k])

    return _series(nu, binom)


def exponential(theta: AlgebraElement) -> AlgebraElement:
    """``exp(theta)`` for theta without constant term."""
    if theta.constant():
        raise AlgebraError("exponential needs an element without constant term")
    fact = [ONE]

    def coeff(k):
        while len(fact) <= k:
            fact.append(fact[-1] * len(fact))
        return ONE / fact[k]

    return _series(theta, coeff)


def product(factors: Sequence[AlgebraElement], ctx: Optional[GradedQuotient] = None) -> AlgebraElement:
    if not factors:
        if ctx is None:
            raise AlgebraError("empty product needs a context")
        return ctx.one()
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


# ---------------------------------------------------------------------------
# families


@dataclass
class ElementFamily:
    family: str
    n: int
    elements: List[AlgebraElement]
    params: Dict[str, Fraction] = field(default_factory=dict)
    kind: str = "rsm"
    _powers: Dict[Tuple[int, int], AlgebraElement] = field(default_factory=dict, repr=False)

    @property
    def ctx(self) -> GradedQuotient:
        return self.elements[0].ctx

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, k: int) -> AlgebraElement:
        return self.elements[k]

    def power(self, i: int, k: int) -> AlgebraElement:
        """``elements[i] ** k`` (negative k allowed), cached."""
        key = (i, k)
        if key not in self._powers:
            if k == 0:
                val = self.ctx.one()
            elif k == 1:
                val = self.elements[i]
            elif k == -1:
                val = unipotent_inverse(self.elements[i])
            else:
                step = 1 if k > 0 else -1
                val = self.power(i, k - step) * self.power(i, step)
            self._powers[key] = val
        return self._powers[key]

    def evaluate(self, f: Laurent) -> AlgebraElement:
        """Substitute the family for ``X_1, X_2, ...`` in a Laurent polynomial."""
        if f.n != len(self.elements):
            raise AlgebraError(f"Laurent polynomial has {f.n} variables, family has {len(self.elements)}")
        return f.evaluate(self.elements, self.ctx.one(), power=self.power)

    def commutators(self) -> List[Tuple[int, int, AlgebraElement]]:
        out = []
        for i, j in itertools.combinations(range(len(self.elements)), 2):
            out.append((i, j, self.elements[i].commutator(self.elements[j])))
        return out

    def to_record(self) -> dict:
        return {
            "family": self.family,
            "rank": self.n,
            "kind": self.kind,
            "params": {k: str(v) for k, v in self.params.items()},
            "elements": [e.to_text() for e in self.elements],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), indent=1)


def commuting_family_check(fam: ElementFamily) -> dict:
    """Pairwise commutators; reports the lowest degree of any failure."""
    failures = []
    for i, j, c in fam.commutators():
        if not c.is_zero():
            failures.append({"pair": [i + 1, j + 1], "first_degree": c.low_degree(), "commutator": c.to_text()})
    trunc = any(c.truncated for _, _, c in fam.commutators()) or not fam.ctx.complete
    return {"commuting": not failures, "failures": failures, "verified_through": fam.ctx.built_degree, "truncated": trunc}


def subalgebra_dimension(gens: Sequence[AlgebraElement]) -> int:
    """Dimension of the unital subalgebra generated by ``gens``: the span of
    1 closed under right multiplication by each generator."""
    ctx = gens[0].ctx
    ech = Echelon()

    def key(e):
        return {d * 10**6 + i: c for (d, i), c in e.terms.items()}

    frontier = [ctx.one()]
    ech.add(key(ctx.one()))
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                f = e * g
                if ech.add(key(f)):
                    nxt.append(f)
        frontier = nxt
    return ech.rank


def laurent_evaluate(f: Laurent, fam: ElementFamily) -> AlgebraElement:
    return fam.evaluate(f)


# -- generator helpers --------------------------------------------------------


def _h(ctx: GradedQuotient, signed: Tuple[int, Gen], t) -> AlgebraElement:
    sign, g = signed
    return ctx.one() + ctx.gen(g, sign * to_q(t))


def h_pair(ctx, i, j, t=1) -> AlgebraElement:
    """``1 + t [i,j]`` (``[j,i] = -[i,j]``)."""
    return _h(ctx, pair(i, j), t)


def g_pair(ctx, i, j, t=1) -> AlgebraElement:
    """``1 + t`` times the barred pair."""
    return _h(ctx, (1, bar(i, j)), t)


def h_single(ctx, i, t=1) -> AlgebraElement:
    return _h(ctx, (1, single(i)), t)


def h_letter(ctx, c: str, t=1) -> AlgebraElement:
    return _h(ctx, (1, letter(c)), t)


def _inv(e: AlgebraElement) -> AlgebraElement:
    return unipotent_inverse(e)


# -- Dunkl elements ------------------------------------------------------------


def dunkl_elements(ctx: GradedQuotient, family: str, n: int) -> ElementFamily:
    family = family.upper()
    els = []
    for j in range(1, n + 1):
        e = ctx.zero()
        for i in range(1, n + 1):
            if i == j:
                continue
            sign, g = pair(j, i)
            e = e + ctx.gen(g, sign)
            if family in ("B", "C", "D"):
                e = e + ctx.gen(bar(i, j))
        if family == "B":
            e = e + ctx.gen(single(j), 2)
        els.append(e)
    return ElementFamily(family, n, els, kind="dunkl")


# -- RSM elements ---------------------------------------------------------------


def rsm_A(ctx: GradedQuotient, n: int, z=1) -> ElementFamily:
    """``Theta_j = h_{j-1,j}^{-1} ... h_{1j}^{-1} h_{jn} ... h_{j,j+1}``."""
    els = []
    for j in range(1, n + 1):
        factors = [_inv(h_pair(ctx, i, j, z)) for i in range(j - 1, 0, -1)]
        factors += [h_pair(ctx, j, k, z) for k in range(n, j, -1)]
        els.append(product(factors, ctx))
    return ElementFamily("A", n, els, {"z": Fraction(z)})


def rsm_A_local(ctx: GradedQuotient, n: int, z=1) -> ElementFamily:
    """Variant with ``h_{ji} = 1 + z x_{ji}`` in place of ``h_{ij}^{-1}``.

    Agrees with :func:`rsm_A` when every ``x_ij`` squares to zero; differs in
    quantum deformations.
    """
    els = []
    for j in range(1, n + 1):
        factors = [h_pair(ctx, j, i, z) for i in range(j - 1, 0, -1)]
        factors += [h_pair(ctx, j, k, z) for k in range(n, j, -1)]
        els.append(product(factors, ctx))
    return ElementFamily("A", n, els, {"z": Fraction(z)}, kind="rsm-local")


def rsm_A_closed_form(ctx: GradedQuotient, n: int, j: int, z=1) -> AlgebraElement:
    """Expansion as a signed sum over decreasing index sequences below and above j."""
    z = to_q(z)
    out = ctx.zero()
    below = list(range(j - 1, 0, -1))
    above = list(range(n, j, -1))
    for s in range(len(below) + 1):
        for bs in itertools.combinations(below, s):
            for r in range(len(above) + 1):
                for as_ in itertools.combinations(above, r):
                    word, coeff = [], to_q((-1) ** s) * z ** (r + s)
                    for b in bs:
                        sg, g = pair(b, j)
                        coeff *= sg
                        word.append(g)
                    for a in as_:
                        sg, g = pair(j, a)
                        coeff *= sg
                        word.append(g)
                    out = out + ctx.element({tuple(word): coeff})
    return out


def rsm_B(ctx: GradedQuotient, n: int, x=1, y=1) -> ElementFamily:
    """``Theta_j(x, y)`` as the printed product: inverse plain pairs below j,
    ``h_j``, all barred pairs through j, ``h_j``, plain pairs above j."""
    els = []
    for j in range(1, n + 1):
        factors = [_inv(h_pair(ctx, i, j, x)) for i in range(j - 1, 0, -1)]
        factors.append(h_single(ctx, j, y))
        factors += [g_pair(ctx, i, j, x) for i in range(1, n + 1) if i != j]
        factors.append(h_single(ctx, j, y))
        factors += [h_pair(ctx, j, k, x) for k in range(n, j, -1)]
        els.append(product(factors, ctx))
    return ElementFamily("B", n, els, {"x": Fraction(x), "y": Fraction(y)})


def rsm_C(ctx: GradedQuotient, n: int, x=1, y=1) -> ElementFamily:
    """Type C elements: the type B product with ``y`` halved."""
    fam = rsm_B(ctx, n, x, Fraction(y) / 2)
    fam.family = "C"
    fam.params = {"x": Fraction(x), "y": Fraction(y)}
    return fam


def rsm_D(ctx: GradedQuotient, n: int, x=1) -> ElementFamily:
    """Type D elements: the type B product without the single factors."""
    els = []
    for j in range(1, n + 1):
        factors = [_inv(h_pair(ctx, i, j, x)) for i in range(j - 1, 0, -1)]
        factors += [g_pair(ctx, i, j, x) for i in range(1, n + 1) if i != j]
        factors += [h_pair(ctx, j, k, x) for k in range(n, j, -1)]
        els.append(product(factors, ctx))
    return ElementFamily("D", n, els, {"x": Fraction(x)})


def rsm_G2(ctx: GradedQuotient) -> ElementFamily:
    h = {c: h_letter(ctx, c) for c in "abcdef"}
    t1 = product([h[c] for c in "dbcdef"])
    t2 = _inv(h["f"]) * product([h[c] for c in "bdcba"])
    return ElementFamily("G2", 2, [t1, t2])


def rsm_elements(ctx: GradedQuotient, family: str, n: int = 2, **params) -> ElementFamily:
    family = family.upper()
    if family == "A":
        return rsm_A(ctx, n, **params)
    if family == "B":
        return rsm_B(ctx, n, **params)
    if family == "C":
        return rsm_C(ctx, n, **params)
    if family == "D":
        return rsm_D(ctx, n, **params)
    if family == "G2":
        return rsm_G2(ctx)
    raise AlgebraError(f"unknown family {family}")


def exp_dunkl(ctx: GradedQuotient, family: str, n: int) -> ElementFamily:
    fam = dunkl_elements(ctx, family, n)
    return ElementFamily(family.upper(), n, [exponential(t) for t in fam.elements], kind="exp")


def truncated_G(fam: ElementFamily) -> List[AlgebraElement]:
    return [t - 1 for t in fam.elements]


def elementary_symmetric(k: int, items: Sequence[AlgebraElement]) -> AlgebraElement:
    """``e_k`` of commuting elements; ``e_0 = 1``."""
    ctx = items[0].ctx
    if k == 0:
        return ctx.one()
    out = ctx.zero()
    for combo in itertools.combinations(items, k):
        out = out + product(list(combo))
    return out


# ---------------------------------------------------------------------------
# cross-context substitution


def specialize(e: AlgebraElement, target: GradedQuotient, killed_kinds: Sequence[str]) -> AlgebraElement:
    """Map an element generator-wise into ``target``, sending generators of
    the given kinds to zero and every other generator to itself."""
    out: Dict = {}
    for w, c in e.words().items():
        if any(g.kind in killed_kinds for g in w):
            continue
        out[w] = out.get(w, 0) + c
    res = target.reduce_free({w: v for w, v in out.items() if v})
    res.truncated = res.truncated or e.truncated
    return res


def specialize_elements(target_kind: str, e: AlgebraElement, target: GradedQuotient) -> AlgebraElement:
    """``A``: drop barred pairs and singles; ``D``: drop singles; ``C``: identity."""
    kinds = {"A": ("bar", "single"), "D": ("single",), "C": ()}[target_kind.upper()]
    return specialize(e, target, kinds)


# ---------------------------------------------------------------------------
# factor blocks of the type B elements and their commutation identities


def theta_blocks(ctx: GradedQuotient, n: int, i: int, j: int, x=1) -> Dict[str, AlgebraElement]:
    """Blocks of ``Theta_j = A_j h_j B_j h_j C_j`` for a pair ``i < j``.

    ``A_k`` is the product of inverse plain pairs below k, ``B_k`` the
    product of barred pairs through k, ``C_k`` the plain pairs above k
    (descending).  Primed blocks omit the factor that involves the other
    index of the pair.
    """
    if not 1 <= i < j <= n:
        raise AlgebraError("blocks need 1 <= i < j <= n")

    def A(k, skip=None):
        return product([_inv(h_pair(ctx, a, k, x)) for a in range(k - 1, 0, -1) if a != skip], ctx)

    def B(k, skip=None):
        return product([g_pair(ctx, a, k, x) for a in range(1, n + 1) if a not in (k, skip)], ctx)

    def C(k, skip=None):
        return product([h_pair(ctx, k, a, x) for a in range(n, k, -1) if a != skip], ctx)

    return {
        "A_i": A(i), "B_i": B(i), "C_i": C(i),
        "A_j": A(j), "B_j": B(j), "C_j": C(j),
        "A'_j": A(j, i), "B'_i": B(i, j), "B'_j": B(j, i), "C'_i": C(i, j),
    }


def commutation_identities(ctx: GradedQuotient, n: int, i: int, j: int, x=1, y=1) -> List[Tuple[str, AlgebraElement, AlgebraElement]]:
    """The block identities used to show ``Theta_i Theta_j Theta_i^{-1} = Theta_j``,
    as ``(name, lhs, rhs)`` triples."""
    b = theta_blocks(ctx, n, i, j, x)
    hi, hj = h_single(ctx, i, y), h_single(ctx, j, y)
    hij, gij = h_pair(ctx, i, j, x), g_pair(ctx, i, j, x)
    inv = _inv
    A_i, B_i, C_i, A_j, B_j, C_j = (b[k] for k in ("A_i", "B_i", "C_i", "A_j", "B_j", "C_j"))
    Ap_j, Bp_i, Bp_j, Cp_i = b["A'_j"], b["B'_i"], b["B'_j"], b["C'_i"]
    rows = [
        ("C_i A_j = A'_j C'_i", C_i * A_j, Ap_j * Cp_i),
        ("C_j C_i^-1 = C'_i^-1 h_ij^-1 C_j", C_j * inv(C_i), inv(Cp_i) * inv(hij) * C_j),
        ("C'_i B_j = B'_j g_ij C'_i", Cp_i * B_j, Bp_j * gij * Cp_i),
        ("B_i A'_j = A'_j g_ij B'_i", B_i * Ap_j, Ap_j * gij * Bp_i),
        ("C_j B_i^-1 = g_ij^-1 B'_i^-1 C_j", C_j * inv(B_i), inv(gij) * inv(Bp_i) * C_j),
        ("B'_j h_ij^-1 B'_i^-1 = B'_i^-1 h_ij^-1 B'_j", Bp_j * inv(hij) * inv(Bp_i), inv(Bp_i) * inv(hij) * Bp_j),
        ("A_i A'_j h_ij^-1 = A_j A_i", A_i * Ap_j * inv(hij), A_j * A_i),
        ("g_ij B'_j A_i^-1 = A_i^-1 B_j", gij * Bp_j * inv(A_i), inv(A_i) * B_j),
    ]
    for name, u, other, v in [
        ("h_i", hi, "B'_j", Bp_j), ("h_j", hj, "B'_i", Bp_i), ("h_j", hj, "A_i", A_i), ("h_i", hi, "C_j", C_j),
        ("h_i", hi, "A'_j", Ap_j), ("h_j", hj, "C'_i", Cp_i), ("A_i", A_i, "C_j", C_j),
    ]:
        rows.append((f"[{name}, {other}] = 0", u * v, v * u))
    return rows


def printed_commutation_identities(ctx: GradedQuotient, n: int, i: int, j: int, x=1, y=1) -> List[Tuple[str, AlgebraElement, AlgebraElement]]:
    """Variants of three block identities that differ from
    :func:`commutation_identities` by an inverse or a prime.  They fail:
    for instance the unprimed ``B_j`` contains ``g_ij``, which does not
    commute with ``h_i``."""
    b = theta_blocks(ctx, n, i, j, x)
    hi, hj = h_single(ctx, i, y), h_single(ctx, j, y)
    hij = h_pair(ctx, i, j, x)
    return [
        ("C_j C_i^-1 = C'_i^-1 h_ij C_j", b["C_j"] * _inv(b["C_i"]), _inv(b["C'_i"]) * hij * b["C_j"]),
        ("B'_j h_ij^-1 B'_i^-1 = B'_i h_ij^-1 B'_j^-1", b["B'_j"] * _inv(hij) * _inv(b["B'_i"]), b["B'_i"] * _inv(hij) * _inv(b["B'_j"])),
        ("[h_i, B_j] = 0", hi * b["B_j"], b["B_j"] * hi),
        ("[h_j, B_i] = 0", hj * b["B_i"], b["B_i"] * hj),
    ]


# ---------------------------------------------------------------------------
# relation lists for the images of the group-like generators


def yb_group_relations_B(ctx: GradedQuotient, n: int, x=1, y=1) -> List[Tuple[str, AlgebraElement, AlgebraElement]]:
    """Defining relations of the type B Yang-Baxter group, evaluated at
    ``h_ij = 1 + x[i,j]``, ``g_ij = 1 + x[i,j]bar``, ``h_i = 1 + y[i]``."""
    h = lambda a, b: h_pair(ctx, a, b, x)  # noqa: E731
    g = lambda a, b: g_pair(ctx, a, b, x)  # noqa: E731
    s = lambda a: h_single(ctx, a, y)  # noqa: E731
    rows = []
    idx = range(1, n + 1)
    for i, j in itertools.permutations(idx, 2):
        rows.append((f"g{i}{j} = g{j}{i}", g(i, j), g(j, i)))
        rows.append((f"h{i}{j} h{j}{i} = 1", h(i, j) * h(j, i), ctx.one()))
    for i, j, k, l in itertools.permutations(idx, 4):
        rows.append((f"h{i}{j} h{k}{l} commute", h(i, j) * h(k, l), h(k, l) * h(i, j)))
        rows.append((f"g{i}{j} g{k}{l} commute", g(i, j) * g(k, l), g(k, l) * g(i, j)))
    for i, j, k in itertools.permutations(idx, 3):
        rows.append((f"h{k} h{i}{j} commute", s(k) * h(i, j), h(i, j) * s(k)))
        rows.append((f"h{k} g{i}{j} commute", s(k) * g(i, j), g(i, j) * s(k)))
    for i, j in itertools.combinations(idx, 2):
        rows.append((f"h{i} h{j} commute", s(i) * s(j), s(j) * s(i)))
        rows.append((f"h{i}{j} g{i}{j} commute", h(i, j) * g(i, j), g(i, j) * h(i, j)))
        rows.append(
            (f"h{i}{j} h{i} g{i}{j} h{j} = h{j} g{i}{j} h{i} h{i}{j}", h(i, j) * s(i) * g(i, j) * s(j), s(j) * g(i, j) * s(i) * h(i, j))
        )
    for i, j, k in itertools.combinations(idx, 3):
        rows.append((f"h{i}{j} h{i}{k} h{j}{k} reversed", h(i, j) * h(i, k) * h(j, k), h(j, k) * h(i, k) * h(i, j)))
        rows.append((f"h{i}{j} g{i}{k} g{j}{k} reversed", h(i, j) * g(i, k) * g(j, k), g(j, k) * g(i, k) * h(i, j)))
        rows.append((f"h{i}{k} g{i}{j} g{j}{k} reversed", h(i, k) * g(i, j) * g(j, k), g(j, k) * g(i, j) * h(i, k)))
        rows.append((f"h{j}{k} g{i}{j} g{i}{k} reversed", h(j, k) * g(i, j) * g(i, k), g(i, k) * g(i, j) * h(j, k)))
    return rows


def yb_algebra_relations_A(ctx: GradedQuotient, n: int, x, y) -> List[Tuple[str, AlgebraElement, AlgebraElement]]:
    """Relations of the type A Yang-Baxter algebra for ``h_ij(t) = 1 + t x_ij``
    at two parameters ``x`` and ``y``."""
    x, y = to_q(x), to_q(y)
    h = lambda a, b, t: h_pair(ctx, a, b, t)  # noqa: E731
    rows = []
    idx = range(1, n + 1)
    for i, j in itertools.permutations(idx, 2):
        rows.append((f"h{i}{j}(x) h{j}{i}(x) = 1", h(i, j, x) * h(j, i, x), ctx.one()))
        rows.append((f"h{i}{j}(x) h{i}{j}(y) = h{i}{j}(x+y)", h(i, j, x) * h(i, j, y), h(i, j, x + y)))
    for i, j, k, l in itertools.permutations(idx, 4):
        rows.append((f"h{i}{j}(x) h{k}{l}(y) commute", h(i, j, x) * h(k, l, y), h(k, l, y) * h(i, j, x)))
    for i, j, k in itertools.combinations(idx, 3):
        rows.append(
            (
                f"three-term ({i}{j}{k}) first",
                h(i, j, x) * h(j, k, y) + h(i, k, x + y),
                h(j, k, y) * h(i, k, x) + h(i, k, y) * h(i, j, x),
            )
        )
        rows.append(
            (
                f"three-term ({i}{j}{k}) second",
                h(j, k, y) * h(i, j, x) + h(i, k, x + y),
                h(i, k, x) * h(j, k, y) + h(i, j, x) * h(i, k, y),
            )
        )
        mid = h(i, j, x) - h(i, k, y)
        rows.append((f"quartic ({i}{j}{k})", h(i, k, x) * mid * h(i, j, y), h(i, j, y) * mid * h(i, k, x)))
    return rows


def qybe_relations(ctx: GradedQuotient, n: int, z=1) -> List[Tuple[str, AlgebraElement, AlgebraElement]]:
    h = lambda a, b: h_pair(ctx, a, b, z)  # noqa: E731
    return [
        (f"h{a}{b} h{a}{c} h{b}{c} reversed", h(a, b) * h(a, c) * h(b, c), h(b, c) * h(a, c) * h(a, b))
        for a, b, c in itertools.combinations(range(1, n + 1), 3)
    ]


def yb_group_relations_G2(ctx: GradedQuotient) -> List[Tuple[str, AlgebraElement, AlgebraElement]]:
    h = {c: h_letter(ctx, c) for c in "abcdef"}
    word = lambda s: product([h[c] for c in s])  # noqa: E731
    return [
        ("ha hd commute", word("ad"), word("da")),
        ("hb he commute", word("be"), word("eb")),
        ("hc hf commute", word("cf"), word("fc")),
        ("hb hd hf reversed", word("bdf"), word("fdb")),
        ("ha hb hc hd he hf reversed", word("abcdef"), word("fedcba")),
    ]


def product_formulas_B(ctx: GradedQuotient, n: int, x=1, y=1) -> List[Tuple[str, AlgebraElement, AlgebraElement]]:
    """Closed forms of the partial products ``Theta_1 ... Theta_k``."""
    fam = rsm_B(ctx, n, x, y)
    h = lambda a, b: h_pair(ctx, a, b, x)  # noqa: E731
    g = lambda a, b: g_pair(ctx, a, b, x)  # noqa: E731
    s = lambda a: h_single(ctx, a, y)  # noqa: E731
    rows = []
    for k in range(1, n + 1):
        lhs = product(fam.elements[:k])
        factors = []
        for j in range(1, k + 1):
            factors.append(s(j))
            factors += [g(j, t) for t in range(j + 1, n + 1)]
            factors += [g(t, j) for t in range(1, j)]
            factors.append(s(j))
        for j in range(1, k + 1):
            factors += [h(j, t) for t in range(n, k, -1)]
        rows.append((f"Theta_1..Theta_{k} block form", lhs, product(factors, ctx)))
    square = []
    for k in range(1, n + 1):
        square += [g(j, k) for j in range(1, k)]
        square.append(s(k))
    half = product(square, ctx)
    rows.append(("Theta_1..Theta_n = square", product(fam.elements), half * half))
    return rows
