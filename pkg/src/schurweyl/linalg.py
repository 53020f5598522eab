"""Exact linear algebra over the rationals.

Vectors are sparse: ``dict[int, Fraction | int]`` mapping coordinate to a
nonzero value.  Elimination is fraction-free: each stored row is a primitive
integer vector (denominators cleared, content divided out), and reduction
cross-multiplies instead of dividing.  The pivot of a row is its first
nonzero coordinate, which makes every result independent of anything but
the input order.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Vector = Mapping[int, "Fraction | int"]


def _primitive(vec: Mapping[int, Fraction | int]) -> dict[int, int]:
    """Scale to a primitive integer vector with positive leading entry."""
    items = [(k, Fraction(v)) for k, v in vec.items() if v != 0]
    if not items:
        return {}
    den = lcm(*(v.denominator for _, v in items))
    return _primitive_int({k: v.numerator * (den // v.denominator) for k, v in items})


def _primitive_int(ints: dict[int, int]) -> dict[int, int]:
    if not ints:
        return ints
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    lead = ints[min(ints)]
    if lead < 0:
        g = -g
    return {k: v // g for k, v in ints.items()}


class EchelonBasis:
    """Incrementally built row-echelon basis of a span.

    >>> basis = EchelonBasis()
    >>> basis.add({0: 1, 1: 2}), basis.add({0: 2, 1: 4}), basis.add({1: 1})
    (True, False, True)
    >>> basis.rank
    2
    """

    def __init__(self) -> None:
        self._rows: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Vector) -> dict[int, int]:
        """Primitive integer multiple of ``vec`` modulo the span; ``{}`` if inside it."""
        v = _primitive(vec)
        rows = self._rows
        while v:
            p = min(v)
            row = rows.get(p)
            if row is None:
                return v
            a, b = row[p], v[p]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * x for k, x in v.items()}
            for k, x in row.items():
                y = new.get(k, 0) - b * x
                if y:
                    new[k] = y
                else:
                    new.pop(k, None)
            v = _primitive_int(new)
        return v

    def add(self, vec: Vector) -> bool:
        """Add ``vec`` if it is independent of the current span; report whether it was."""
        v = self.reduce(vec)
        if not v:
            return False
        self._rows[min(v)] = v
        return True

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)

    def pivots(self) -> list[int]:
        return sorted(self._rows)


def rank(vectors: Iterable[Vector]) -> int:
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return basis.rank


def independent_subset(vectors: Sequence[Vector]) -> list[int]:
    """Indices of the greedy maximal independent subsequence, scanning in order."""
    basis = EchelonBasis()
    return [i for i, v in enumerate(vectors) if basis.add(v)]


def dense_to_sparse(row: Sequence[Fraction | int]) -> dict[int, Fraction | int]:
    return {j: x for j, x in enumerate(row) if x != 0}


def matrix_rank(matrix: Sequence[Sequence[Fraction | int]]) -> int:
    return rank(dense_to_sparse(r) for r in matrix)


def inverse(matrix: Sequence[Sequence[Fraction | int]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over the rationals.  Raises ``ZeroDivisionError`` if singular."""
    n = len(matrix)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def matmul(a: Sequence[Sequence[Fraction | int]], b: Sequence[Sequence[Fraction | int]]) -> list[list[Fraction]]:
    bt = list(zip(*b))
    return [[sum((Fraction(x) * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
