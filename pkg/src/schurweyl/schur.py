"""Commuting actions on tensor powers, Young projectors and Schur functors.

Conventions
-----------
A basis word of ``(Q^N)^{⊗n}`` is a tuple of letters; publicly letters are
1..N, internally 0..N-1.  Word ``(i1..in)`` has index ``Σ (i_k - 1)·N^(n-k)``
(first factor most significant), so words in lexicographic order are indices
in increasing order.

A permutation ``σ`` moves tensor factor ``k`` to slot ``σ(k)``.  With the
right-factor-first composition of :mod:`schurweyl.permutations` this makes
``σ ↦ P(σ)`` a homomorphism, and the operator of the Young symmetrizer
``p_S·p_A`` is ``P(p_S)·P(p_A)``: antisymmetrize columns, then symmetrize rows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Iterator, Mapping, Sequence

from . import linalg
from .diagrams import YoungDiagram, enumerate_partitions
from .errors import BasisSolveFailure, DegreeMismatch, SizeTooLarge
from .group_algebra import AlgebraElement
from .permutations import Permutation, enumerate_group, sign
from .tableaux import canonical_tableau, count_standard

MAX_RANK_SIZE = 4096
MAX_COMMUTANT_SIZE = 64

Matrix = Sequence[Sequence["Fraction | int"]]


def word_index(word: Sequence[int], N: int) -> int:
    """Index of a 1-based word."""
    idx = 0
    for letter in word:
        idx = idx * N + (letter - 1)
    return idx


def index_word(idx: int, N: int, n: int) -> tuple[int, ...]:
    """1-based word of an index."""
    letters = []
    for _ in range(n):
        idx, r = divmod(idx, N)
        letters.append(r + 1)
    return tuple(reversed(letters))


def _words(N: int, n: int) -> Iterator[tuple[int, ...]]:
    # 0-based letters, index order
    return itertools.product(range(N), repeat=n)


def _index0(word: Sequence[int], N: int) -> int:
    idx = 0
    for letter in word:
        idx = idx * N + letter
    return idx


@dataclass(frozen=True, eq=False)
class TensorOperator:
    """A square rational matrix of side ``N**n`` acting on the n-th tensor power.

    Stored sparsely as ``rows[i][j]``; absent entries are zero.
    """

    N: int
    n: int
    rows: Mapping[int, Mapping[int, Fraction]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        side = self.N**self.n
        clean: dict[int, dict[int, Fraction]] = {}
        for i, row in self.rows.items():
            r = {j: Fraction(x) for j, x in row.items() if x != 0}
            for j in r:
                if not (0 <= i < side and 0 <= j < side):
                    raise ValueError(f"entry ({i}, {j}) outside a {side}x{side} matrix")
            if r:
                clean[i] = r
        object.__setattr__(self, "rows", clean)

    @classmethod
    def from_dense(cls, N: int, n: int, matrix: Matrix) -> TensorOperator:
        side = N**n
        if len(matrix) != side or any(len(r) != side for r in matrix):
            raise ValueError(f"matrix must be {side}x{side}")
        return cls(N, n, {i: linalg.dense_to_sparse(r) for i, r in enumerate(matrix)})

    @classmethod
    def identity(cls, N: int, n: int) -> TensorOperator:
        return cls(N, n, {i: {i: Fraction(1)} for i in range(N**n)})

    @property
    def side(self) -> int:
        return self.N**self.n

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows.get(i, {}).get(j, Fraction(0))

    def to_dense(self) -> list[list[Fraction]]:
        side = self.side
        out = [[Fraction(0)] * side for _ in range(side)]
        for i, row in self.rows.items():
            for j, x in row.items():
                out[i][j] = x
        return out

    def columns(self) -> dict[int, dict[int, Fraction]]:
        cols: dict[int, dict[int, Fraction]] = {}
        for i, row in self.rows.items():
            for j, x in row.items():
                cols.setdefault(j, {})[i] = x
        return cols

    def apply(self, vec: Mapping[int, Fraction | int]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, row in self.rows.items():
            s = sum((x * vec[j] for j, x in row.items() if j in vec), Fraction(0))
            if s:
                out[i] = s
        return out

    def rank(self) -> int:
        return linalg.rank(self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def _check(self, other: TensorOperator) -> None:
        if (self.N, self.n) != (other.N, other.n):
            raise DegreeMismatch(
                f"operators act on different spaces: (N={self.N}, n={self.n}) vs (N={other.N}, n={other.n})"
            )

    def __matmul__(self, other: TensorOperator) -> TensorOperator:
        self._check(other)
        out: dict[int, dict[int, Fraction]] = {}
        for i, row in self.rows.items():
            acc: dict[int, Fraction] = {}
            for k, x in row.items():
                for j, y in other.rows.get(k, {}).items():
                    acc[j] = acc.get(j, 0) + x * y
            out[i] = acc
        return TensorOperator(self.N, self.n, out)

    def __add__(self, other: TensorOperator) -> TensorOperator:
        self._check(other)
        out = {i: dict(r) for i, r in self.rows.items()}
        for i, row in other.rows.items():
            acc = out.setdefault(i, {})
            for j, x in row.items():
                acc[j] = acc.get(j, 0) + x
        return TensorOperator(self.N, self.n, out)

    def __sub__(self, other: TensorOperator) -> TensorOperator:
        return self + other.scale(-1)

    def scale(self, c: Fraction | int) -> TensorOperator:
        return TensorOperator(self.N, self.n, {i: {j: c * x for j, x in r.items()} for i, r in self.rows.items()})

    def commutes_with(self, other: TensorOperator) -> bool:
        return self @ other == other @ self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return (self.N, self.n) == (other.N, other.n) and self.rows == other.rows

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class SubspaceBasis:
    """Linearly independent sparse vectors in ``(Q^N)^{⊗n}``."""

    N: int
    n: int
    vectors: tuple[Mapping[int, Fraction], ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def dense(self) -> list[list[Fraction]]:
        side = self.N**self.n
        return [[v.get(i, Fraction(0)) for i in range(side)] for v in self.vectors]


def _check_square(A: Matrix) -> int:
    N = len(A)
    if N == 0 or any(len(r) != N for r in A):
        raise ValueError("expected a nonempty square matrix")
    return N


def _check_size(N: int, n: int, cap: int) -> None:
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if N**n > cap:
        raise SizeTooLarge(f"N^n = {N}^{n} = {N**n} exceeds cap {cap}")


# -- the two actions -------------------------------------------------------


def permutation_operator(sigma: Permutation, N: int) -> TensorOperator:
    """Permutation matrix moving tensor factor ``k`` to slot ``sigma(k)``."""
    n = sigma.degree
    targets = [sigma(k) - 1 for k in range(1, n + 1)]
    rows: dict[int, dict[int, Fraction]] = {}
    for j, w in enumerate(_words(N, n)):
        out = [0] * n
        for k, letter in enumerate(w):
            out[targets[k]] = letter
        rows[_index0(out, N)] = {j: Fraction(1)}
    return TensorOperator(N, n, rows)


def monoid_operator(A: Matrix, n: int) -> TensorOperator:
    """The Kronecker power ``A^{⊗n}``."""
    N = _check_square(A)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    entries = {(i, j): Fraction(A[i][j]) for i in range(N) for j in range(N) if A[i][j] != 0}
    rows: dict[int, dict[int, Fraction]] = {0: {0: Fraction(1)}}
    for _ in range(n):
        nxt: dict[int, dict[int, Fraction]] = {}
        for i, row in rows.items():
            for j, x in row.items():
                for (a, b), y in entries.items():
                    nxt.setdefault(i * N + a, {})[j * N + b] = x * y
        rows = nxt
    return TensorOperator(N, n, rows)


def algebra_operator(a: AlgebraElement, N: int) -> TensorOperator:
    """``Σ coeff·P(σ)`` over the terms of ``a``."""
    n = a.degree
    rows: dict[int, dict[int, Fraction]] = {}
    words = list(_words(N, n))
    for sigma, c in a.terms.items():
        targets = [sigma(k) - 1 for k in range(1, n + 1)]
        for j, w in enumerate(words):
            out = [0] * n
            for k, letter in enumerate(w):
                out[targets[k]] = letter
            row = rows.setdefault(_index0(out, N), {})
            row[j] = row.get(j, 0) + c
    return TensorOperator(N, n, rows)


def tensor_power_apply(A: Matrix, n: int, vec: Mapping[int, Fraction | int]) -> dict[int, Fraction]:
    """``A^{⊗n}·vec`` one tensor factor at a time, without forming the Kronecker power."""
    N = _check_square(A)
    cur = {i: Fraction(x) for i, x in vec.items() if x != 0}
    for k in range(n):
        stride = N ** (n - 1 - k)
        nxt: dict[int, Fraction] = {}
        for idx, x in cur.items():
            letter = (idx // stride) % N
            base = idx - letter * stride
            for i in range(N):
                a = A[i][letter]
                if a:
                    t = base + i * stride
                    nxt[t] = nxt.get(t, 0) + a * x
        cur = {i: x for i, x in nxt.items() if x}
    return cur


# -- Young projector at word level -----------------------------------------


class _YoungProjector:
    """Columns of the operator of the Young symmetrizer, computed word by word.

    ``P(p_A)`` sends a word to the signed average of its column rearrangements
    (zero if some column repeats a letter).  ``P(p_S)`` sends a word to the
    uniform average over its orbit under row rearrangements.  Orbit averages
    have disjoint supports, so a projector column is faithfully encoded by
    its coefficients on orbits; ranks are computed in that smaller space.
    """

    def __init__(self, shape: YoungDiagram, N: int):
        self.shape = shape
        self.N = N
        self.n = shape.box_count
        t = canonical_tableau(shape)
        self.row_slots = [tuple(x - 1 for x in r) for r in t.rows]
        self.col_slots = [tuple(x - 1 for x in c) for c in t.columns()]
        self.col_weight = Fraction(1, prod(factorial(len(c)) for c in self.col_slots))
        self._signed: dict[int, list[tuple[tuple[int, ...], int]]] = {}
        self._orbit_ids: dict[tuple, int] = {}

    def vanishes(self) -> bool:
        return self.shape.row_count > self.N

    def _signed_perms(self, r: int) -> list[tuple[tuple[int, ...], int]]:
        if r not in self._signed:
            self._signed[r] = [
                (p, sign(Permutation(tuple(i + 1 for i in p)))) for p in itertools.permutations(range(r))
            ]
        return self._signed[r]

    def antisymmetrize(self, word: Sequence[int]) -> dict[tuple[int, ...], Fraction]:
        for slots in self.col_slots:
            if len({word[s] for s in slots}) < len(slots):
                return {}
        choices = []
        for slots in self.col_slots:
            letters = [word[s] for s in slots]
            opts = []
            for perm, sg in self._signed_perms(len(slots)):
                # letter at slots[i] moves to slots[perm[i]]
                opts.append(([(slots[perm[i]], letters[i]) for i in range(len(slots))], sg))
            choices.append(opts)
        out: dict[tuple[int, ...], Fraction] = {}
        for combo in itertools.product(*choices):
            w = list(word)
            sg = 1
            for placements, s in combo:
                sg *= s
                for slot, letter in placements:
                    w[slot] = letter
            key = tuple(w)
            out[key] = out.get(key, 0) + sg * self.col_weight
        return {k: v for k, v in out.items() if v}

    def orbit_key(self, word: Sequence[int]) -> tuple:
        return tuple(tuple(sorted(word[s] for s in slots)) for slots in self.row_slots)

    def orbit_id(self, key: tuple) -> int:
        return self._orbit_ids.setdefault(key, len(self._orbit_ids))

    def orbit_column(self, word: Sequence[int]) -> dict[int, Fraction]:
        """Projector column of ``word`` in orbit-average coordinates."""
        out: dict[int, Fraction] = {}
        for w, c in self.antisymmetrize(word).items():
            o = self.orbit_id(self.orbit_key(w))
            out[o] = out.get(o, 0) + c
        return {k: v for k, v in out.items() if v}

    def full_column(self, word: Sequence[int]) -> dict[int, Fraction]:
        """Projector column of ``word`` in tensor-word coordinates."""
        by_orbit: dict[tuple, Fraction] = {}
        for w, c in self.antisymmetrize(word).items():
            key = self.orbit_key(w)
            by_orbit[key] = by_orbit.get(key, 0) + c
        out: dict[int, Fraction] = {}
        for key, c in by_orbit.items():
            if not c:
                continue
            members = self._orbit_members(key)
            share = c / len(members)
            for idx in members:
                out[idx] = share
        return out

    def _orbit_members(self, key: tuple) -> list[int]:
        per_row = [list(_distinct_permutations(letters)) for letters in key]
        members = []
        for combo in itertools.product(*per_row):
            w = [0] * self.n
            for slots, letters in zip(self.row_slots, combo):
                for s, letter in zip(slots, letters):
                    w[s] = letter
            members.append(_index0(w, self.N))
        return members

    def column_strict_words(self) -> Iterator[list[int]]:
        """One representative per nonzero column class: letters increase down each column."""
        for combo in itertools.product(*(itertools.combinations(range(self.N), len(c)) for c in self.col_slots)):
            w = [0] * self.n
            for slots, letters in zip(self.col_slots, combo):
                for s, letter in zip(slots, letters):
                    w[s] = letter
            yield w


def _distinct_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct orderings of a sorted multiset, in lexicographic order."""
    items = sorted(items)
    n = len(items)
    if n == 0:
        yield ()
        return
    seq = list(items)
    while True:
        yield tuple(seq)
        i = n - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1 :] = reversed(seq[i + 1 :])


def schur_dimension(shape: YoungDiagram, N: int, max_size: int = MAX_RANK_SIZE) -> int:
    """Dimension of the image of the Young projector of ``shape`` on ``(Q^N)^{⊗n}``."""
    _check_size(N, shape.box_count, max_size)
    proj = _YoungProjector(shape, N)
    if proj.vanishes():
        return 0
    return linalg.rank(proj.orbit_column(w) for w in proj.column_strict_words())


def schur_subspace_basis(shape: YoungDiagram, N: int, max_size: int = MAX_RANK_SIZE) -> SubspaceBasis:
    """Basis of the image: the first independent projector columns in word order."""
    n = shape.box_count
    dim = schur_dimension(shape, N, max_size)
    proj = _YoungProjector(shape, N)
    basis = linalg.EchelonBasis()
    vectors = []
    if dim:
        for w in _words(N, n):
            if basis.add(proj.orbit_column(w)):
                vectors.append(proj.full_column(w))
                if len(vectors) == dim:
                    break
    return SubspaceBasis(N, n, tuple(vectors))


def _coordinate_solver(basis: SubspaceBasis):
    """Return a function expressing a vector in ``basis``; it raises if the vector is outside the span."""
    d = basis.dimension
    rows_seen = linalg.EchelonBasis()
    chosen: list[int] = []
    support = sorted({i for v in basis.vectors for i in v})
    for i in support:
        if rows_seen.add({j: v[i] for j, v in enumerate(basis.vectors) if i in v}):
            chosen.append(i)
            if len(chosen) == d:
                break
    square = [[v.get(i, Fraction(0)) for v in basis.vectors] for i in chosen]
    inv = linalg.inverse(square)

    def solve(x: Mapping[int, Fraction]) -> list[Fraction]:
        rhs = [x.get(i, Fraction(0)) for i in chosen]
        coords = [sum((a * b for a, b in zip(row, rhs)), Fraction(0)) for row in inv]
        recon: dict[int, Fraction] = {}
        for c, v in zip(coords, basis.vectors):
            if c:
                for i, y in v.items():
                    recon[i] = recon.get(i, 0) + c * y
        if {i: y for i, y in recon.items() if y} != {i: y for i, y in x.items() if y}:
            raise BasisSolveFailure("image vector lies outside the Schur subspace")
        return coords

    return solve


def apply_schur_functor(shape: YoungDiagram, A: Matrix, max_size: int = MAX_RANK_SIZE) -> list[list[Fraction]]:
    """Matrix of ``A^{⊗n}`` restricted to the image of the Young projector.

    Column ``i`` holds the coordinates of ``A^{⊗n} b_i`` in the basis
    ``b`` returned by :func:`schur_subspace_basis`.
    """
    N = _check_square(A)
    n = shape.box_count
    basis = schur_subspace_basis(shape, N, max_size)
    d = basis.dimension
    if d == 0:
        return []
    solve = _coordinate_solver(basis)
    cols = [solve(tensor_power_apply(A, n, b)) for b in basis.vectors]
    return [[cols[i][j] for i in range(d)] for j in range(d)]


# -- Schur-Weyl checks -------------------------------------------------------


@dataclass(frozen=True)
class SchurWeylEntry:
    shape: YoungDiagram
    sn_dimension: int
    schur_dimension: int


@dataclass(frozen=True)
class SchurWeylReport:
    N: int
    n: int
    entries: tuple[SchurWeylEntry, ...]

    @property
    def total(self) -> int:
        return sum(e.sn_dimension * e.schur_dimension for e in self.entries)

    @property
    def balanced(self) -> bool:
        """Whether Σ f^Y · dim L_Y equals N^n."""
        return self.total == self.N**self.n

    @property
    def vanishing_ok(self) -> bool:
        """Whether dim L_Y is zero exactly for the shapes with more than N rows."""
        return all((e.schur_dimension == 0) == (e.shape.row_count > self.N) for e in self.entries)

    @property
    def holds(self) -> bool:
        return self.balanced and self.vanishing_ok


def schur_weyl_check(N: int, n: int, max_size: int = MAX_RANK_SIZE) -> SchurWeylReport:
    _check_size(N, n, max_size)
    entries = tuple(
        SchurWeylEntry(y, count_standard(y), schur_dimension(y, N, max_size)) for y in enumerate_partitions(n)
    )
    return SchurWeylReport(N, n, entries)


def _lie_generator(N: int, n: int, i: int, j: int) -> dict[int, dict[int, int]]:
    """Columns of the derivation action of the matrix unit E_ij: replace one letter j by i."""
    cols: dict[int, dict[int, int]] = {}
    for b, w in enumerate(_words(N, n)):
        col: dict[int, int] = {}
        for k, letter in enumerate(w):
            if letter == j:
                a = _index0(w[:k] + (i,) + w[k + 1 :], N)
                col[a] = col.get(a, 0) + 1
        if col:
            cols[b] = col
    return cols


def commutant_dimension(N: int, n: int, max_size: int = MAX_COMMUTANT_SIZE) -> int:
    """Dimension of the operators on ``(Q^N)^{⊗n}`` commuting with every ``A^{⊗n}``.

    The commutant of the connected group GL(N) equals the commutant of its
    Lie algebra, acting by derivations.  The diagonal units force weight-space
    block structure, so unknowns are only the entries inside weight blocks;
    the off-diagonal units E_ij then give the remaining linear equations.
    """
    _check_size(N, n, max_size)
    words = list(_words(N, n))
    weights = [tuple(w.count(a) for a in range(N)) for w in words]
    by_weight: dict[tuple, list[int]] = {}
    for idx, wt in enumerate(weights):
        by_weight.setdefault(wt, []).append(idx)
    unknown: dict[tuple[int, int], int] = {}
    for block in by_weight.values():
        for a in block:
            for c in block:
                unknown[(a, c)] = len(unknown)

    equations = linalg.EchelonBasis()
    for i in range(N):
        for j in range(N):
            if i == j:
                continue
            gcols = _lie_generator(N, n, i, j)
            grows: dict[int, dict[int, int]] = {}
            for b, col in gcols.items():
                for a, x in col.items():
                    grows.setdefault(a, {})[b] = x
            # (X G - G X)[a, b] = Σ_c X[a,c] G[c,b] - Σ_c G[a,c] X[c,b]
            for b, col in gcols.items():
                target = weights[next(iter(col))]
                for a in by_weight.get(target, ()):
                    eq: dict[int, int] = {}
                    for c, g in col.items():
                        u = unknown[(a, c)]
                        eq[u] = eq.get(u, 0) + g
                    for c, g in grows.get(a, {}).items():
                        u = unknown[(c, b)]
                        eq[u] = eq.get(u, 0) - g
                    equations.add(eq)
    return len(unknown) - equations.rank


def permutation_span_dimension(N: int, n: int, max_size: int = MAX_COMMUTANT_SIZE) -> int:
    """Dimension of the span of the ``n!`` permutation operators."""
    _check_size(N, n, max_size)
    side = N**n
    vectors = []
    for sigma in enumerate_group(n):
        op = permutation_operator(sigma, N)
        vectors.append({i * side + j: x for i, row in op.rows.items() for j, x in row.items()})
    return linalg.rank(vectors)


def bounded_square_sum(N: int, n: int) -> int:
    """Σ (f^Y)² over the shapes with n boxes and at most N rows."""
    return sum(count_standard(y) ** 2 for y in enumerate_partitions(n) if y.row_count <= N)
