"""Sparse exact linear algebra over the rationals.

Vectors are plain dicts ``{column: coefficient}`` with integer column keys
and :class:`gmpy2.mpq` coefficients; zero coefficients are never stored.
Column order is the integer order of the keys.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from gmpy2 import mpq

Vector = Dict[int, "mpq"]

ZERO = mpq(0)
ONE = mpq(1)


def to_q(value) -> mpq:
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to mpq."""
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


def to_fraction(value) -> Fraction:
    q = mpq(value)
    return Fraction(int(q.numerator), int(q.denominator))


def axpy(target: Vector, coeff, vec: Mapping[int, mpq]) -> None:
    """In place ``target += coeff * vec``."""
    if not coeff:
        return
    for k, v in vec.items():
        s = target.get(k, ZERO) + coeff * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)


def scaled(vec: Mapping[int, mpq], coeff) -> Vector:
    if not coeff:
        return {}
    return {k: coeff * v for k, v in vec.items()}


class Echelon:
    """Incremental row echelon form; the pivot of a row is its smallest column.

    Rows are kept normalised (pivot coefficient 1).  ``reduce`` eliminates
    every pivot column from a vector, so after ``finalize`` each stored row
    contains exactly one pivot column.
    """

    def __init__(self) -> None:
        self.rows: Dict[int, Vector] = {}
        self._final = False

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping[int, mpq]) -> Vector:
        out = dict(vec)
        rows = self.rows
        heap = [k for k in out if k in rows]
        heapq.heapify(heap)
        while heap:
            col = heapq.heappop(heap)
            c = out.get(col)
            if c is None:
                continue
            row = rows[col]
            for k, v in row.items():
                s = out.get(k, ZERO) - c * v
                if s:
                    if k not in out and k in rows and k != col:
                        heapq.heappush(heap, k)
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def add(self, vec: Mapping[int, mpq]) -> bool:
        """Insert ``vec``; return True when it raised the rank."""
        red = self.reduce(vec)
        if not red:
            return False
        piv = min(red)
        inv = ONE / red[piv]
        row = {k: v * inv for k, v in red.items()}
        self.rows[piv] = row
        self._final = False
        return True

    def finalize(self) -> None:
        """Back-substitute so every row is free of the other pivots."""
        if self._final:
            return
        for piv in sorted(self.rows, reverse=True):
            row = self.rows[piv]
            others = [k for k in row if k != piv and k in self.rows]
            if others:
                head = {piv: row[piv]}
                tail = {k: v for k, v in row.items() if k != piv}
                tail = self.reduce(tail)
                head.update(tail)
                self.rows[piv] = head
        self._final = True

    def pivots(self) -> List[int]:
        return sorted(self.rows)


def rank(vectors: Iterable[Mapping[int, mpq]]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


class ColumnBasis:
    """Greedy basis selection among a stream of images.

    Feed ``(label, image)`` pairs; an image independent of those already
    accepted becomes a basis element, otherwise the dependency is recorded
    as a combination of accepted labels.  Used for quotients defined as
    images of linear maps (the Nichols construction).
    """

    def __init__(self) -> None:
        self._rows: Dict[int, Tuple[Vector, Vector]] = {}
        self.basis: List[int] = []
        self.dependencies: Dict[int, Vector] = {}

    def offer(self, label: int, image: Mapping[int, mpq]) -> bool:
        vec = dict(image)
        combo: Vector = {}
        rows = self._rows
        heap = [k for k in vec if k in rows]
        heapq.heapify(heap)
        while heap:
            col = heapq.heappop(heap)
            c = vec.get(col)
            if c is None:
                continue
            row, rcombo = rows[col]
            for k, v in row.items():
                s = vec.get(k, ZERO) - c * v
                if s:
                    if k not in vec and k in rows:
                        heapq.heappush(heap, k)
                    vec[k] = s
                else:
                    vec.pop(k, None)
            axpy(combo, -c, rcombo)
        if not vec:
            # image == sum(-combo) ; label is dependent
            self.dependencies[label] = {k: -v for k, v in combo.items()}
            return False
        piv = min(vec)
        inv = ONE / vec[piv]
        row = {k: v * inv for k, v in vec.items()}
        rcombo = {k: v * inv for k, v in combo.items()}
        rcombo[label] = rcombo.get(label, ZERO) + inv
        rows[piv] = (row, rcombo)
        self.basis.append(label)
        return True


def solve_square(matrix: List[List], rhs: List) -> Optional[List[mpq]]:
    """Solve a dense square system exactly; None when singular."""
    n = len(matrix)
    a = [[to_q(x) for x in row] + [to_q(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = ONE / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n] for row in a]


def iter_sorted(vec: Mapping[int, mpq]) -> Iterator[Tuple[int, mpq]]:
    for k in sorted(vec):
        yield k, vec[k]
