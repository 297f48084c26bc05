"""Laurent polynomials over Q, Weyl group actions and isobaric divided differences."""

from __future__ import annotations

import itertools
import re
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from gmpy2 import mpq

from .core import AlgebraError
from .linalg import ONE, ZERO, to_fraction, to_q
from .roots import RootSystem, WeylElement, _G2_LAURENT

Exp = Tuple[int, ...]


class DivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


class Laurent:
    """Sparse Laurent polynomial in ``X_1..X_n`` with rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Mapping[Exp, object]] = None):
        self.n = n
        self.terms: Dict[Exp, mpq] = {}
        for m, c in (terms or {}).items():
            if len(m) != n:
                raise AlgebraError(f"exponent {m} has wrong length for {n} variables")
            c = to_q(c)
            if c:
                s = self.terms.get(tuple(m), ZERO) + c
                if s:
                    self.terms[tuple(m)] = s
                else:
                    self.terms.pop(tuple(m))

    # -- constructors ----------------------------------------------------
    @classmethod
    def const(cls, n: int, c=1) -> "Laurent":
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, n: int, i: int, power: int = 1) -> "Laurent":
        """``X_i ** power`` (1-based ``i``)."""
        m = [0] * n
        m[i - 1] = power
        return cls(n, {tuple(m): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "Laurent":
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def parse(cls, text: str, n: int) -> "Laurent":
        """Parse sums of terms like ``2*X1^2*X2^-1 - X3 + 1/2``."""
        out = cls(n)
        s = re.sub(r"\^\s*-", "^~", text.replace(" ", ""))
        s = s.replace("-", "+-").replace("^~", "^-")
        for part in s.split("+"):
            if not part:
                continue
            sign = -1 if part.startswith("-") else 1
            part = part.lstrip("-")
            coeff = to_q(sign)
            m = [0] * n
            for f in part.split("*"):
                mt = re.fullmatch(r"X(\d+)(?:\^(-?\d+))?", f)
                if mt:
                    i = int(mt.group(1))
                    if not 1 <= i <= n:
                        raise AlgebraError(f"variable X{i} out of range")
                    m[i - 1] += int(mt.group(2) or 1)
                else:
                    coeff *= to_q(f)
            out = out + cls(n, {tuple(m): coeff})
        return out

    # -- arithmetic --------------------------------------------------------
    def _same(self, other: "Laurent") -> None:
        if other.n != self.n:
            raise AlgebraError("Laurent polynomials in different numbers of variables")

    def _coerce(self, other) -> "Laurent":
        if isinstance(other, Laurent):
            self._same(other)
            return other
        return Laurent.const(self.n, other)

    def __add__(self, other) -> "Laurent":
        other = self._coerce(other)
        out = Laurent(self.n)
        out.terms = dict(self.terms)
        for m, c in other.terms.items():
            s = out.terms.get(m, ZERO) + c
            if s:
                out.terms[m] = s
            else:
                out.terms.pop(m, None)
        return out

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        out = Laurent(self.n)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other) -> "Laurent":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Laurent":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Laurent":
        other = self._coerce(other)
        out: Dict[Exp, mpq] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, ZERO) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        res = Laurent(self.n)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Laurent":
        if k < 0:
            if len(self.terms) != 1:
                raise DivisionError("only monomials are invertible")
            ((m, c),) = self.terms.items()
            return Laurent(self.n, {tuple(-x * -k for x in m): (ONE / c) ** (-k)})
        out = Laurent.const(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Laurent):
            return self.n == other.n and self.terms == other.terms
        try:
            return self.terms == Laurent.const(self.n, other).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Sequence[int]):
        return to_fraction(self.terms.get(tuple(exps), ZERO))

    def max_abs_degree(self) -> int:
        return max((sum(abs(x) for x in m) for m in self.terms), default=0)

    # -- Weyl action and division ------------------------------------------
    def transform(self, matrix: Sequence[Sequence[int]]) -> "Laurent":
        """Exponent vectors mapped by ``m -> matrix m``."""
        out = Laurent(self.n)
        for m, c in self.terms.items():
            nm = tuple(sum(matrix[i][t] * m[t] for t in range(self.n)) for i in range(self.n))
            out.terms[nm] = out.terms.get(nm, ZERO) + c
        out.terms = {m: c for m, c in out.terms.items() if c}
        return out

    def substitute_inverse(self, idx: Sequence[int]) -> "Laurent":
        out = Laurent(self.n)
        out.terms = {tuple(-x if k + 1 in idx else x for k, x in enumerate(m)): c for m, c in self.terms.items()}
        return out

    def exact_div(self, d: "Laurent") -> "Laurent":
        """Quotient ``self / d``; raises :class:`DivisionError` on a remainder."""
        self._same(d)
        if d.is_zero():
            raise DivisionError("division by zero")
        if self.is_zero():
            return Laurent(self.n)
        n = self.n
        dshift = [-min(m[i] for m in d.terms) for i in range(n)]
        fshift = [-min(m[i] for m in self.terms) for i in range(n)]
        D = {tuple(a + b for a, b in zip(m, dshift)): c for m, c in d.terms.items()}
        F = {tuple(a + b for a, b in zip(m, fshift)): c for m, c in self.terms.items()}
        lead = max(D)
        lc = D[lead]
        Q: Dict[Exp, mpq] = {}
        while F:
            top = max(F)
            diff = tuple(a - b for a, b in zip(top, lead))
            if any(x < 0 for x in diff):
                raise DivisionError("division leaves a remainder")
            q = F[top] / lc
            Q[diff] = Q.get(diff, ZERO) + q
            for m, c in D.items():
                k = tuple(a + b for a, b in zip(m, diff))
                s = F.get(k, ZERO) - q * c
                if s:
                    F[k] = s
                else:
                    F.pop(k, None)
        shift = [b - a for a, b in zip(fshift, dshift)]
        out = Laurent(n)
        out.terms = {tuple(a + b for a, b in zip(m, shift)): c for m, c in Q.items() if c}
        return out

    def evaluate(self, values: Sequence, one, power: Optional[Callable] = None):
        """Substitute commuting ``values`` (any ring with ``one``) for the X_i.

        ``power(i, k)`` may supply cached powers, including negative ones.
        """
        if power is None:

            def power(i, k):
                return values[i] ** k

        out = None
        for m, c in sorted(self.terms.items()):
            t = one * to_fraction(c)
            for i, k in enumerate(m):
                if k:
                    t = t * power(i, k)
            out = t if out is None else out + t
        return one * 0 if out is None else out

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (sum(abs(x) for x in m), m)):
            c = to_fraction(self.terms[m])
            mono = "*".join(f"X{i + 1}" + (f"^{k}" if k != 1 else "") for i, k in enumerate(m) if k)
            a = abs(c)
            body = mono if a == 1 and mono else (str(a) if not mono else f"{a}*{mono}")
            sign = "-" if c < 0 else "+"
            parts.append((("-" if c < 0 else "") + body) if not parts else f"{sign} {body}")
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"Laurent({self.to_text()})"


def elementary(k: int, items: Sequence) -> object:
    """``e_k`` of a list of commuting ring elements (k >= 1)."""
    out = None
    for combo in itertools.combinations(items, k):
        t = combo[0]
        for x in combo[1:]:
            t = t * x
        out = t if out is None else out + t
    return out


# ---------------------------------------------------------------------------
# Weyl action on Laurent polynomials

def laurent_nvars(system: RootSystem) -> int:
    return 2 if system.family == "G2" else system.n


def weyl_act(w: WeylElement, f: Laurent) -> Laurent:
    return f.transform(w.laurent_matrix())


def simple_act(system: RootSystem, i: int, f: Laurent) -> Laurent:
    return weyl_act(system.simple_reflection(i), f)


def tau(system: RootSystem, i: int, f: Laurent) -> Laurent:
    """Isobaric divided difference attached to the i-th simple reflection.

    Type A, i < n:     X_{i+1} (f - s_i f) / (X_i - X_{i+1})
    B, C, D, i < n:    same formula
    B, i = n:          (f - s_n f) / (X_n - 1)
    C, i = n:          (f - s_n f) / (X_n^2 - 1)
    D, i = n:          (f - s_n f) / (X_{n-1} X_n - 1)
    G2 (1 = a, 2 = f): X_1 (F - s_a F) / (X_2^2 - X_1), X_2 (F - s_f F) / (X_1 - X_2)
    """
    n = f.n
    fam = system.family
    if not 1 <= i <= system.rank:
        raise AlgebraError(f"no simple reflection {i} in {system}")
    diff = f - simple_act(system, i, f)
    if fam == "G2":
        X1, X2 = Laurent.var(2, 1), Laurent.var(2, 2)
        if i == 1:
            return (X1 * diff).exact_div(X2 * X2 - X1)
        return (X2 * diff).exact_div(X1 - X2)
    if i < system.n:
        Xi, Xj = Laurent.var(n, i), Laurent.var(n, i + 1)
        return (Xj * diff).exact_div(Xi - Xj)
    Xn = Laurent.var(n, n)
    if fam == "B":
        return diff.exact_div(Xn - 1)
    if fam == "C":
        return diff.exact_div(Xn * Xn - 1)
    if fam == "D":
        return diff.exact_div(Laurent.var(n, n - 1) * Xn - 1)
    raise AlgebraError(f"no reflection {i} in {system}")  # pragma: no cover


def phi_g2() -> Tuple[Laurent, Laurent]:
    """The two fundamental W(G2)-invariant Laurent polynomials."""
    p1 = Laurent(2, {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1, (1, -1): 1, (-1, 1): 1})
    p2 = Laurent(2, {(1, 1): 1, (-1, -1): 1, (2, -1): 1, (-1, 2): 1, (-2, 1): 1, (1, -2): 1})
    return p1, p2


def is_invariant(system: RootSystem, f: Laurent) -> bool:
    return all(simple_act(system, i, f) == f for i in range(1, system.rank + 1))


def laurent_monomials(nvars: int, max_degree: int) -> List[Laurent]:
    """All monomials with total absolute degree at most ``max_degree``."""
    out = []
    rng = range(-max_degree, max_degree + 1)
    for m in itertools.product(rng, repeat=nvars):
        if sum(abs(x) for x in m) <= max_degree:
            out.append(Laurent.monomial(m))
    return out
