"""Weyl group actions on algebras, twisted derivations, the operators
``Q_i = h_i^{-1} Delta_i`` and their comparison with divided differences."""

from __future__ import annotations

import random
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .core import AlgebraElement, AlgebraError, Gen, GradedQuotient, bar, letter, pair, single
from .elements import ElementFamily, unipotent_inverse
from .laurent import Laurent, laurent_monomials, simple_act, tau
from .linalg import ONE, to_q
from .roots import RootSystem, WeylElement

Map = Callable[[AlgebraElement], AlgebraElement]


def weyl_images(ctx: GradedQuotient, w: WeylElement) -> Dict[Gen, AlgebraElement]:
    """Generator images ``g -> +-w(g)``; central parameters are fixed."""
    out = {}
    for g in ctx.gens:
        if g.kind == "q":
            out[g] = ctx.gen(g)
        else:
            sign, h = w.apply_gen(g)
            out[g] = ctx.gen(h, sign)
    return out


def weyl_action(ctx: GradedQuotient, w: WeylElement) -> Map:
    return ctx.endomorphism(weyl_images(ctx, w))


def reflection_images(ctx: GradedQuotient, system: RootSystem, g: Gen) -> Dict[Gen, AlgebraElement]:
    return weyl_images(ctx, system.reflection(system.root_of(g)))


def braided_derivation(ctx: GradedQuotient, system: RootSystem, g: Gen, scale=1) -> Map:
    """``Delta_g``: value ``scale`` on ``g``, zero on other generators,
    ``Delta(xy) = Delta(x) y + s_g(x) Delta(y)``."""
    twist = ctx.endomorphism(reflection_images(ctx, system, g))
    return ctx.twisted_derivation({g: scale}, twist)


def derivation_descends(ctx: GradedQuotient, system: RootSystem, g: Gen, upto: Optional[int] = None) -> bool:
    """Whether ``Delta_g`` is well defined on the quotient.

    With a relation list, the twist must preserve the ideal and every
    relation must map to zero; otherwise every product ``basis * generator``
    is checked directly.
    """
    imgs = reflection_images(ctx, system, g)
    if ctx.relations:
        if not ctx.preserves_ideal(imgs):
            return False
        return all(ctx.free_derivation_image(r, {g: 1}, imgs).is_zero() for r in ctx.relations)
    return not ctx.derivation_mismatches({g: 1}, imgs, upto)


def simple_generator(system: RootSystem, i: int) -> Gen:
    """Generator attached to the i-th simple root."""
    sign, g = system.gen_of(system.simple[i - 1])
    return g


class QOperator:
    """``Q_i = h^{-1} o Delta`` for the i-th simple root, with ``h = 1 + t [alpha_i]``.

    ``t`` matches the parameter of the corresponding factor in the RSM
    elements (``y`` for the short root of type B, ``y/2`` for type C).
    Delta is normalised on the multiplicative generator, ``Delta(h) = 1``,
    so its value on ``[alpha_i]`` is ``1/t``.
    """

    def __init__(self, ctx: GradedQuotient, system: RootSystem, i: int, t=1):
        self.ctx = ctx
        self.system = system
        self.i = i
        self.gen = simple_generator(system, i)
        t = to_q(t)
        self.delta = braided_derivation(ctx, system, self.gen, ONE / t)
        self.h_inv = unipotent_inverse(ctx.one() + ctx.gen(self.gen, t))
        # Delta lowers degree, so on a truncated algebra the image of a
        # truncated element is only exact one degree lower
        self.valid_through = None if ctx.complete else ctx.built_degree - 1

    def __call__(self, e: AlgebraElement) -> AlgebraElement:
        return self.h_inv * self.delta(e)

    def agree(self, a: AlgebraElement, b: AlgebraElement) -> bool:
        """Equality of two images, up to the degree where they are exact."""
        return agree_through(a, b, self.valid_through)


def agree_through(a: AlgebraElement, b: AlgebraElement, upto: Optional[int]) -> bool:
    """``a == b`` in all degrees ``<= upto`` (all degrees when ``upto`` is None)."""
    diff = a - b
    if upto is None:
        return diff.is_zero()
    return all(d > upto for d, _ in diff.terms)


def q_operators(ctx: GradedQuotient, system: RootSystem, short_param=1) -> List[QOperator]:
    ops = []
    for i in range(1, system.rank + 1):
        t = 1
        if system.family in ("B", "C") and i == system.n:
            t = short_param
        ops.append(QOperator(ctx, system, i, t))
    return ops


def lemma_table(
    ctx: GradedQuotient,
    system: RootSystem,
    fam: ElementFamily,
    ops: Sequence[QOperator],
    tau_system: Optional[RootSystem] = None,
) -> List[dict]:
    """``Q_i(Theta_j)`` against the expected case table.

    Expected: ``Theta_{i+1}`` if j = i, ``-Theta_{i+1}`` if j = i+1 (i < n),
    ``1 + Theta_n^{-1}`` for ``Q_n(Theta_n)``, and 0 otherwise; the
    expectation is ``tau_i(X_j)`` evaluated at the family.  ``tau_system``
    selects the divided differences when it differs from ``system``.
    """
    tau_system = tau_system or system
    rows = []
    n = len(fam)
    for op in ops:
        for j in range(1, n + 1):
            got = op(fam[j - 1])
            expected = fam.evaluate(tau(tau_system, op.i, Laurent.var(n, j)))
            rows.append({"i": op.i, "j": j, "ok": op.agree(got, expected), "value": got.to_text()})
    return rows


def conjugation_check(ctx: GradedQuotient, system: RootSystem, fam: ElementFamily, ops: Sequence[QOperator]) -> List[dict]:
    """``h^{-1} s_i(Theta_j) h`` against ``(s_i X_j)(Theta)``."""
    rows = []
    n = len(fam)
    for op in ops:
        s = weyl_action(ctx, system.simple_reflection(op.i))
        h = unipotent_inverse(op.h_inv)
        for j in range(1, n + 1):
            got = op.h_inv * s(fam[j - 1]) * h
            expected = fam.evaluate(simple_act(system, op.i, Laurent.var(n, j)))
            rows.append({"i": op.i, "j": j, "ok": got == expected})
    return rows


def sample_monomials(nvars: int, count: int, seed: int, max_degree: int = 3) -> List[Laurent]:
    pool = laurent_monomials(nvars, max_degree)
    rng = random.Random(seed)
    if count >= len(pool):
        return pool
    return rng.sample(pool, count)


def intertwining_check(
    system: RootSystem,
    fam: ElementFamily,
    ops: Sequence[QOperator],
    sample: Sequence[Laurent],
    tau_system: Optional[RootSystem] = None,
) -> List[dict]:
    """``Q_i(F(Theta)) == (tau_i F)(Theta)`` for each sampled F and each i."""
    tau_system = tau_system or system
    rows = []
    for F in sample:
        value = fam.evaluate(F)
        for op in ops:
            lhs = op(value)
            rhs = fam.evaluate(tau(tau_system, op.i, F))
            rows.append({"F": F.to_text(), "i": op.i, "ok": op.agree(lhs, rhs)})
    return rows


def leibniz_check(
    system: RootSystem,
    fam: ElementFamily,
    ops: Sequence[QOperator],
    pairs: Sequence[Tuple[Laurent, Laurent]],
) -> List[dict]:
    """``Q_i(F G) == Q_i(F) G + (s_i F)(Theta) Q_i(G)`` at the family."""
    rows = []
    for F, G in pairs:
        f, g = fam.evaluate(F), fam.evaluate(G)
        for op in ops:
            lhs = op(f * g)
            rhs = op(f) * g + fam.evaluate(simple_act(system, op.i, F)) * op(g)
            rows.append({"F": F.to_text(), "G": G.to_text(), "i": op.i, "ok": op.agree(lhs, rhs)})
    return rows


def tau_relations_check(system: RootSystem, max_degree: int = 3, square_sign: int = 1) -> List[dict]:
    """Quadratic and braid relations of the tau operators on monomials.

    The quadratic relation tested is ``tau_i^2 = square_sign * tau_i``.  Since
    ``tau_i = pi_i - 1`` for the idempotent isobaric operator ``pi_i``, it is
    ``square_sign = -1`` that holds.
    """
    n = 2 if system.family == "G2" else system.n
    r = system.rank
    mons = laurent_monomials(n, max_degree)

    def word(ws):
        def apply(f):
            for i in reversed(ws):
                f = tau(system, i, f)
            return f

        return apply

    rels: List[Tuple[str, Callable, Callable]] = []
    for i in range(1, r + 1):
        one = word([i])
        rhs = one if square_sign == 1 else (lambda f, one=one: -one(f))
        rels.append((f"tau{i}^2 = {'' if square_sign == 1 else '-'}tau{i}", word([i, i]), rhs))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            m = _coxeter(system, i, j)
            left = [i if k % 2 == 0 else j for k in range(m)]
            right = [j if k % 2 == 0 else i for k in range(m)]
            rels.append((f"braid({i},{j}) length {m}", word(left), word(right)))
    out = []
    for name, lhs, rhs in rels:
        bad = [f.to_text() for f in mons if lhs(f) != rhs(f)]
        out.append({"relation": name, "ok": not bad, "failures": bad[:5]})
    return out


def _coxeter(system: RootSystem, i: int, j: int) -> int:
    """Order of ``s_i s_j``."""
    w = system.simple_reflection(i) * system.simple_reflection(j)
    u, m = w, 1
    while not u.is_identity():
        u = u * w
        m += 1
    return m
