"""Root systems A, B, C, D, G2 and their Weyl groups.

Classical roots live in Z^n (``e_i - e_j``, ``e_i + e_j``, ``e_i`` or
``2 e_i``); G2 roots are integer pairs in the basis of the simple roots
``a`` (short) and ``f`` (long).  A Weyl group element is stored as an
integer matrix acting on root coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .core import AlgebraError, Gen, bar, letter, pair, single

Vec = Tuple[int, ...]
Mat = Tuple[Tuple[int, ...], ...]

G2_ROOTS: Dict[str, Vec] = {
    "a": (1, 0),
    "b": (3, 1),
    "c": (2, 1),
    "d": (3, 2),
    "e": (1, 1),
    "f": (0, 1),
}
_G2_FORM = ((2, -3), (-3, 6))
# action of s_a, s_f on Laurent exponents (X1, X2)
_G2_LAURENT = {"a": ((1, 1), (0, -1)), "f": ((0, 1), (1, 0))}


def _matmul(a: Mat, b: Mat) -> Mat:
    n, m, k = len(a), len(b), len(b[0])
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(m)) for j in range(k)) for i in range(n))


def _matvec(a: Mat, v: Vec) -> Vec:
    return tuple(sum(a[i][t] * v[t] for t in range(len(v))) for i in range(len(a)))


def _identity(n: int) -> Mat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


class RootSystem:
    """A finite root system with a fixed choice of positive and simple roots."""

    def __init__(self, family: str, n: int = 2):
        family = family.upper()
        if family == "G2":
            n = 2
        if family not in ("A", "B", "C", "D", "G2"):
            raise AlgebraError(f"unknown family {family}")
        if family == "A" and n < 2 or family in ("B", "C") and n < 2 or family == "D" and n < 3:
            raise AlgebraError(f"rank too small for {family}: n={n}")
        self.family = family
        self.n = n
        self.positive: List[Vec] = self._positive_roots()
        self.simple: List[Vec] = self._simple_roots()
        self._pos_set = set(self.positive)

    @property
    def rank(self) -> int:
        return self.n - 1 if self.family == "A" else self.n

    def __repr__(self) -> str:
        return f"RootSystem({self.family}{'' if self.family == 'G2' else self.n})"

    def _e(self, i: int, c: int = 1) -> List[int]:
        v = [0] * self.n
        v[i - 1] = c
        return v

    def _positive_roots(self) -> List[Vec]:
        if self.family == "G2":
            return list(G2_ROOTS.values())
        out = []
        n = self.n
        for i, j in itertools.combinations(range(1, n + 1), 2):
            v = self._e(i)
            v[j - 1] = -1
            out.append(tuple(v))
        if self.family in ("B", "C", "D"):
            for i, j in itertools.combinations(range(1, n + 1), 2):
                v = self._e(i)
                v[j - 1] = 1
                out.append(tuple(v))
        if self.family == "B":
            out += [tuple(self._e(i)) for i in range(1, n + 1)]
        if self.family == "C":
            out += [tuple(self._e(i, 2)) for i in range(1, n + 1)]
        return out

    def _simple_roots(self) -> List[Vec]:
        if self.family == "G2":
            return [G2_ROOTS["a"], G2_ROOTS["f"]]
        n = self.n
        out = []
        for i in range(1, n):
            v = self._e(i)
            v[i] = -1
            out.append(tuple(v))
        if self.family == "B":
            out.append(tuple(self._e(n)))
        elif self.family == "C":
            out.append(tuple(self._e(n, 2)))
        elif self.family == "D":
            v = self._e(n - 1)
            v[n - 1] = 1
            out.append(tuple(v))
        return out

    # -- geometry ---------------------------------------------------------
    def form(self, u: Vec, v: Vec) -> int:
        if self.family == "G2":
            return sum(u[i] * _G2_FORM[i][j] * v[j] for i in range(2) for j in range(2))
        return sum(x * y for x, y in zip(u, v))

    def is_root(self, v: Vec) -> bool:
        v = tuple(v)
        return v in self._pos_set or tuple(-x for x in v) in self._pos_set

    def signed_positive(self, v: Vec) -> Tuple[int, Vec]:
        """Write a root as ``sign * positive root``."""
        v = tuple(v)
        if v in self._pos_set:
            return 1, v
        neg = tuple(-x for x in v)
        if neg in self._pos_set:
            return -1, neg
        raise AlgebraError(f"{v} is not a root of {self}")

    def reflect(self, alpha: Vec, beta: Vec) -> Vec:
        if not self.is_root(alpha) or not self.is_root(beta):
            raise AlgebraError("reflect_root expects roots")
        num = 2 * self.form(beta, alpha)
        den = self.form(alpha, alpha)
        if num % den:
            raise AlgebraError("non-integral reflection")
        c = num // den
        return tuple(b - c * a for a, b in zip(alpha, beta))

    def reflection_matrix(self, alpha: Vec) -> Mat:
        dim = len(alpha)
        cols = []
        for k in range(dim):
            e = tuple(int(t == k) for t in range(dim))
            den = self.form(alpha, alpha)
            c = 2 * self.form(e, alpha)
            cols.append(tuple(e[t] * den - c * alpha[t] for t in range(dim)))
        # columns are den * s(e_k); divide exactly
        den = self.form(alpha, alpha)
        return tuple(tuple(cols[k][t] // den if cols[k][t] % den == 0 else _bad() for k in range(dim)) for t in range(dim))

    # -- generators of the associated algebras ------------------------------
    def root_of(self, g: Gen) -> Vec:
        if self.family == "G2":
            if g.kind != "letter":
                raise AlgebraError(f"{g} is not a G2 generator")
            return G2_ROOTS[g.letter]
        if g.kind == "pair":
            v = self._e(g.i)
            v[g.j - 1] = -1
        elif g.kind == "bar" and self.family != "A":
            v = self._e(g.i)
            v[g.j - 1] = 1
        elif g.kind == "single" and self.family in ("B", "C"):
            v = self._e(g.i, 2 if self.family == "C" else 1)
        else:
            raise AlgebraError(f"{g} does not belong to family {self.family}")
        if max(g.i, g.j) > self.n:
            raise AlgebraError(f"{g} out of range for n={self.n}")
        return tuple(v)

    def gen_of(self, v: Vec) -> Tuple[int, Gen]:
        """Signed generator ``[v]`` with the convention ``[-v] = -[v]``."""
        sign, p = self.signed_positive(v)
        if self.family == "G2":
            for k, r in G2_ROOTS.items():
                if r == p:
                    return sign, letter(k)
        nz = [(k + 1, c) for k, c in enumerate(p) if c]
        if len(nz) == 1:
            return sign, single(nz[0][0])
        (i, ci), (j, cj) = nz
        if cj == -1:
            return sign, Gen("pair", i, j)
        return sign, bar(i, j)

    def generators(self) -> List[Gen]:
        return sorted((self.gen_of(r)[1] for r in self.positive), key=lambda g: g.sort_key)

    # -- Weyl group ---------------------------------------------------------
    def simple_reflection(self, k: int) -> "WeylElement":
        """k-th simple reflection, 1-based (G2: 1 = s_a, 2 = s_f)."""
        return WeylElement(self, self.reflection_matrix(self.simple[k - 1]), word=(k,))

    def reflection(self, alpha: Vec) -> "WeylElement":
        return WeylElement(self, self.reflection_matrix(alpha))

    def identity(self) -> "WeylElement":
        dim = 2 if self.family == "G2" else self.n
        return WeylElement(self, _identity(dim), word=())

    def elements(self) -> List["WeylElement"]:
        """All group elements by breadth-first search over simple reflections."""
        gens = [self.simple_reflection(k) for k in range(1, self.rank + 1)]
        start = self.identity()
        seen = {start.matrix: start}
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for s in gens:
                    u = w * s
                    if u.matrix not in seen:
                        seen[u.matrix] = u
                        nxt.append(u)
            frontier = nxt
        return list(seen.values())

    def longest(self) -> "WeylElement":
        return max(self.elements(), key=lambda w: w.length)

    def parse(self, text: str) -> "WeylElement":
        """One-line (signed) notation ``"2 -1 3"`` or a G2 word ``"afaf"``."""
        text = text.strip()
        if self.family == "G2":
            w = self.identity()
            for ch in text:
                if ch not in "af":
                    raise AlgebraError(f"bad G2 word {text!r}")
                w = w * self.simple_reflection(1 if ch == "a" else 2)
            return w
        vals = [int(t) for t in text.replace(",", " ").split()]
        return WeylElement.from_signed_permutation(self, vals)


def _bad():
    raise AlgebraError("reflection matrix is not integral")


@dataclass(frozen=True)
class _Key:
    matrix: Mat


class WeylElement:
    """Weyl group element acting on roots, generators and Laurent exponents."""

    __slots__ = ("system", "matrix", "word")

    def __init__(self, system: RootSystem, matrix: Mat, word: Optional[Tuple[int, ...]] = None):
        self.system = system
        self.matrix = tuple(tuple(r) for r in matrix)
        self.word = word

    @classmethod
    def from_signed_permutation(cls, system: RootSystem, vals: Sequence[int]) -> "WeylElement":
        n = system.n
        if sorted(abs(v) for v in vals) != list(range(1, n + 1)):
            raise AlgebraError(f"not a signed permutation of 1..{n}: {vals}")
        if system.family == "A" and any(v < 0 for v in vals):
            raise AlgebraError("type A permutations carry no signs")
        if system.family == "D" and sum(v < 0 for v in vals) % 2:
            raise AlgebraError("type D needs an even number of sign changes")
        # e_i -> sign * e_|w(i)|
        m = [[0] * n for _ in range(n)]
        for i, v in enumerate(vals):
            m[abs(v) - 1][i] = 1 if v > 0 else -1
        return cls(system, tuple(tuple(r) for r in m))

    def one_line(self) -> List[int]:
        n = self.system.n
        out = []
        for i in range(n):
            col = [self.matrix[r][i] for r in range(n)]
            (r,) = [k for k in range(n) if col[k]]
            out.append((r + 1) * col[r])
        return out

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.system.family != self.system.family or other.system.n != self.system.n:
            raise AlgebraError("Weyl elements of different groups")
        word = self.word + other.word if self.word is not None and other.word is not None else None
        return WeylElement(self.system, _matmul(self.matrix, other.matrix), word)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def inverse(self) -> "WeylElement":
        for u in self.system.elements():
            if (u * self).is_identity():
                return u
        raise AlgebraError("no inverse")  # pragma: no cover

    def is_identity(self) -> bool:
        return self.matrix == _identity(len(self.matrix))

    def apply_root(self, v: Vec) -> Vec:
        return _matvec(self.matrix, v)

    @property
    def length(self) -> int:
        return sum(1 for r in self.system.positive if self.system.signed_positive(self.apply_root(r))[0] < 0)

    def reduced_word(self) -> Tuple[int, ...]:
        """A reduced word in the simple reflections (1-based indices)."""
        w, out = self, []
        sys = self.system
        while not w.is_identity():
            for k, a in enumerate(sys.simple, 1):
                if sys.signed_positive(w.apply_root(a))[0] < 0:
                    w = w * sys.simple_reflection(k)
                    out.append(k)
                    break
        return tuple(reversed(out))

    def apply_gen(self, g: Gen) -> Tuple[int, Gen]:
        sys = self.system
        return sys.gen_of(self.apply_root(sys.root_of(g)))

    def laurent_matrix(self) -> Mat:
        sys = self.system
        if sys.family != "G2":
            return self.matrix
        m = _identity(2)
        for k in self.reduced_word():
            m = _matmul(m, _G2_LAURENT["a" if k == 1 else "f"])
        return m

    def __repr__(self) -> str:
        if self.system.family == "G2":
            return "W(" + ("".join("af"[k - 1] for k in self.reduced_word()) or "id") + ")"
        return "W(" + " ".join(map(str, self.one_line())) + ")"


def reflect_root(system: RootSystem, alpha: Vec, beta: Vec) -> Tuple[int, Vec]:
    """``s_alpha(beta)`` as ``(sign, positive root)``."""
    return system.signed_positive(system.reflect(alpha, beta))


def weyl_apply_generator(w: WeylElement, g: Gen) -> Tuple[int, Gen]:
    return w.apply_gen(g)


def weyl_compose(w1: WeylElement, w2: WeylElement) -> WeylElement:
    return w1 * w2


def weyl_length(w: WeylElement) -> int:
    return w.length
