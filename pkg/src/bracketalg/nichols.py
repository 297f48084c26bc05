"""Nichols algebras of the Yetter-Drinfeld modules attached to root systems.

The module ``V`` has basis ``[alpha]`` over the positive roots, with the
convention ``[-alpha] = -[alpha]`` and braiding
``psi([alpha] (x) [beta]) = [s_alpha beta] (x) [alpha]``.

Two independent constructions are provided:

* :class:`NicholsAlgebra` builds the quotient degree by degree as
  ``B_n = (B_{n-1} (x) V) / K_n`` where ``K_n`` is the joint kernel of the
  right braided derivations
  ``d_alpha(u x) = delta_alpha(x) u + d_alpha(u) s_alpha(x)``;
* :func:`symmetrizer_dims` ranks the braided symmetrizer on ``V^{(x)n}``,
  either summing ``psi_w`` over all permutations or via the factorisation
  ``sigma_n = (1 + psi_{n-1} + psi_{n-2} psi_{n-1} + ...) (sigma_{n-1} (x) 1)``.
"""

from __future__ import annotations

import itertools
import json
import logging
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from gmpy2 import mpq

from .core import AlgebraElement, AlgebraError, DegreeStats, Gen, GradedQuotient
from .linalg import ONE, ZERO, ColumnBasis, Echelon, Vector, axpy, to_fraction
from .roots import RootSystem, WeylElement

log = logging.getLogger(__name__)


class YDModule:
    """The braided vector space ``V`` of a root system."""

    def __init__(self, system: RootSystem):
        self.system = system
        self.gens: List[Gen] = system.generators()
        self.pos = {g: k for k, g in enumerate(self.gens)}
        self.roots = [system.root_of(g) for g in self.gens]
        # reflect[a][b] = (sign, c) with s_{alpha_a}(alpha_b) = sign * alpha_c
        self.reflect: List[List[Tuple[int, int]]] = []
        for ra in self.roots:
            row = []
            for rb in self.roots:
                sign, g = system.gen_of(system.reflect(ra, rb))
                row.append((sign, self.pos[g]))
            self.reflect.append(row)

    @property
    def dim(self) -> int:
        return len(self.gens)

    def braiding_apply(self, a: int, b: int) -> Tuple[int, int, int]:
        """``psi([a] (x) [b]) = sign * [c] (x) [a]``; returns (sign, c, a)."""
        sign, c = self.reflect[a][b]
        return sign, c, a


Tensor = Dict[Tuple[int, ...], mpq]


def braiding_checks(module: YDModule) -> Dict[str, int]:
    """Failure counts of the braid relation on ``V^{(x)3}`` and of the
    Yetter-Drinfeld compatibility ``psi (w x (x) w y) = (w (x) w) psi``
    for every simple reflection ``w``."""
    m = module.dim
    braid = equivariance = 0
    for word in itertools.product(range(m), repeat=3):
        t = {word: ONE}
        lhs = apply_psi(module, 0, apply_psi(module, 1, apply_psi(module, 0, t)))
        rhs = apply_psi(module, 1, apply_psi(module, 0, apply_psi(module, 1, t)))
        braid += lhs != rhs
    system = module.system
    reflections = [system.simple_reflection(i) for i in range(1, system.rank + 1)]
    for a, b in itertools.product(range(m), repeat=2):
        t = {(a, b): ONE}
        for w in reflections:
            moved = _act(module, w, t)
            equivariance += apply_psi(module, 0, moved) != _act(module, w, apply_psi(module, 0, t))
    return {"braid": braid, "equivariance": equivariance}


def _act(module: YDModule, w: WeylElement, t: Mapping[Tuple[int, ...], mpq]) -> Tensor:
    out: Tensor = {}
    for word, c in t.items():
        sign = 1
        nw = []
        for x in word:
            s, g = w.apply_gen(module.gens[x])
            sign *= s
            nw.append(module.pos[g])
        _add_into(out, {tuple(nw): c * sign})
    return out


def apply_psi(module: YDModule, k: int, t: Mapping[Tuple[int, ...], mpq]) -> Tensor:
    """``psi`` acting on tensor positions ``k, k+1`` (0-based)."""
    out: Tensor = {}
    for w, c in t.items():
        sign, x, y = module.braiding_apply(w[k], w[k + 1])
        nw = w[:k] + (x, y) + w[k + 2 :]
        s = out.get(nw, ZERO) + sign * c
        if s:
            out[nw] = s
        else:
            out.pop(nw, None)
    return out


def _add_into(target: Tensor, t: Mapping, coeff=ONE) -> None:
    for w, c in t.items():
        s = target.get(w, ZERO) + coeff * c
        if s:
            target[w] = s
        else:
            target.pop(w, None)


def _perm_word(perm: Sequence[int]) -> List[int]:
    """Reduced word (adjacent transpositions, 0-based) of a permutation."""
    p = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for k in range(len(p) - 1):
            if p[k] > p[k + 1]:
                p[k], p[k + 1] = p[k + 1], p[k]
                word.append(k)
                changed = True
    return word


def symmetrizer_naive(module: YDModule, word: Tuple[int, ...]) -> Tensor:
    """``sigma_n(word) = sum_w psi_w(word)`` over all permutations."""
    n = len(word)
    out: Tensor = {}
    for perm in itertools.permutations(range(n)):
        t: Tensor = {word: ONE}
        for k in reversed(_perm_word(perm)):
            t = apply_psi(module, k, t)
        _add_into(out, t)
    return out


def _shuffle_factor(module: YDModule, t: Tensor, n: int) -> Tensor:
    """``(1 + psi_{n-1} + psi_{n-2} psi_{n-1} + ...)`` on length-n tensors."""
    out: Tensor = dict(t)
    cur = t
    for k in range(n - 2, -1, -1):
        cur = apply_psi(module, k, cur)
        _add_into(out, cur)
    return out


def _encode(word: Tuple[int, ...], base: int) -> int:
    v = 0
    for x in word:
        v = v * base + x
    return v


def symmetrizer_dims(system: RootSystem, max_degree: int, method: str = "factorized") -> List[int]:
    """Ranks of the braided symmetrizers, i.e. the Nichols Hilbert series.

    ``method="naive"`` sums over all permutations on every basis tensor and
    is only practical for small degrees; ``"factorized"`` propagates a basis
    of ``Im sigma_{n-1}``.
    """
    module = YDModule(system)
    m = module.dim
    dims = [1]
    if method == "naive":
        for n in range(1, max_degree + 1):
            ech = Echelon()
            for word in itertools.product(range(m), repeat=n):
                img = symmetrizer_naive(module, word)
                ech.add({_encode(w, m): c for w, c in img.items()})
            dims.append(ech.rank)
        return dims
    if method != "factorized":
        raise AlgebraError(f"unknown method {method}")
    images: List[Tensor] = [{(): ONE}]
    for n in range(1, max_degree + 1):
        ech = Echelon()
        new: List[Tensor] = []
        for t in images:
            for x in range(m):
                ext = {w + (x,): c for w, c in t.items()}
                img = _shuffle_factor(module, ext, n)
                if ech.add({_encode(w, m): c for w, c in img.items()}):
                    new.append(img)
        dims.append(len(new))
        images = new
        if not new:
            break
    dims += [0] * (max_degree + 1 - len(dims))
    return dims


class NicholsAlgebra(GradedQuotient):
    """Nichols algebra of a root system, exact through ``max_degree``.

    Elements are ordinary :class:`AlgebraElement` objects; ``deriv`` stores
    the right braided derivatives of every basis word.
    """

    def __init__(self, system: RootSystem, max_degree: int = 6, build: bool = True):
        self.system = system
        self.module = YDModule(system)
        self.deriv: List[List[Dict[int, Vector]]] = [[{}]]
        name = f"B({system.family}{'' if system.family == 'G2' else system.n})"
        super().__init__(self.module.gens, [], max_degree=max_degree, name=name, build=build)

    def _build_degree(self, d: int) -> None:
        cols = self._columns(d)
        mod = self.module
        e = d - 1
        width = len(self.basis[e]) if e >= 0 else 0
        cb = ColumnBasis()
        images: Dict[int, Vector] = {}
        for k in range(len(cols) - 1, -1, -1):
            _, e_, idx, g = cols[k]
            gpos = self.pos[g]
            img: Vector = {}
            img[gpos * width + idx] = ONE
            if e > 0:
                for a, dv in self.deriv[e][idx].items():
                    sign, c = mod.reflect[a][gpos]
                    prod = self.mult_gen({(e - 1, t): v for t, v in dv.items()}, self.gens[c])
                    for (_, t), v in prod.items():
                        key = a * width + t
                        s = img.get(key, ZERO) + sign * v
                        if s:
                            img[key] = s
                        else:
                            img.pop(key, None)
            if cb.offer(k, img):
                images[k] = img
        accepted = sorted(cb.basis)
        newidx = {k: n for n, k in enumerate(accepted)}
        basis, index, parent, deriv = [], {}, [], []
        for k in accepted:
            w, e_, idx, g = cols[k]
            index[w] = len(basis)
            basis.append(w)
            parent.append((e_, idx, g))
            split: Dict[int, Vector] = {}
            for key, v in images[k].items():
                a, t = divmod(key, width)
                split.setdefault(a, {})[t] = v
            deriv.append(split)
        for k, (w, e_, idx, g) in enumerate(cols):
            if k in newidx:
                self.mult[(e_, idx, g)] = {(d, newidx[k]): ONE}
            else:
                self.mult[(e_, idx, g)] = {(d, newidx[j]): v for j, v in cb.dependencies[k].items()}
        self.basis.append(basis)
        self.index.append(index)
        self.parent.append(parent)
        self.deriv.append(deriv)
        self.stats.append(DegreeStats(d, len(cols), 0, len(cols) - len(basis), len(basis)))
        log.debug("%s degree %d: %d columns, dim %d", self.name, d, len(cols), len(basis))

    # -- derivations ---------------------------------------------------------
    def derivation(self, g: Gen) -> "callable":
        """Right braided derivation ``d_g`` as a map on elements."""
        a = self.pos[g]

        def apply(x: AlgebraElement) -> AlgebraElement:
            out: Dict[Tuple[int, int], mpq] = {}
            for (deg, idx), c in x.terms.items():
                if deg == 0:
                    continue
                for t, v in self.deriv[deg][idx].get(a, {}).items():
                    s = out.get((deg - 1, t), ZERO) + c * v
                    if s:
                        out[(deg - 1, t)] = s
                    else:
                        out.pop((deg - 1, t), None)
            return AlgebraElement(self, out, x.truncated)

        return apply

    def derivation_kernel_rank(self, d: int) -> int:
        """Dimension of the joint kernel of all derivations on degree ``d``."""
        width = len(self.basis[d - 1])
        ech = Echelon()
        for split in self.deriv[d]:
            ech.add({a * width + t: v for a, vec in split.items() for t, v in vec.items()})
        return len(self.basis[d]) - ech.rank

    def to_record(self) -> dict:
        return {
            "system": f"{self.system.family}{'' if self.system.family == 'G2' else self.system.n}",
            "generators": [g.name for g in self.gens],
            "built_degree": self.built_degree,
            "complete": self.complete,
            "dims": self.dims(),
            "basis": [[".".join(x.name for x in w) for w in ws] for ws in self.basis],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), indent=1)


def weyl_endomorphism(ctx: GradedQuotient, system: RootSystem, w: WeylElement):
    """Action of a Weyl group element on generators, extended multiplicatively."""
    images = {}
    for g in ctx.gens:
        if g.kind == "q":
            images[g] = ctx.gen(g)
            continue
        sign, h = w.apply_gen(g)
        images[g] = ctx.gen(h, sign)
    return images, ctx.endomorphism(images)
