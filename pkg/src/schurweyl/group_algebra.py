"""The rational group algebra Q[S_n] and Young symmetrizers.

Elements are finitely supported maps from permutations to ``Fraction``.
Products follow the composition convention of :mod:`schurweyl.permutations`
(right factor acts first), so ``multiply(p_S, p_A)`` applies the column
antisymmetrizer before the row symmetrizer.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from . import linalg
from .diagrams import YoungDiagram, enumerate_partitions
from .errors import DegreeMismatch, NotQuasiIdempotent, ZeroElement
from .permutations import (
    MAX_ENUMERATION_DEGREE,
    Permutation,
    compose,
    enumerate_group,
    format_cycles,
    parse_permutation,
    sign,
)
from .tableaux import Tableau, canonical_tableau

__all__ = [
    "AlgebraElement",
    "canonical_tableau",
    "row_group",
    "column_group",
    "row_symmetrizer",
    "column_antisymmetrizer",
    "young_symmetrizer",
    "multiply",
    "quasi_idempotent_constant",
    "left_ideal_dimension",
    "regular_block_dimensions",
    "format_element",
    "parse_element",
]


@dataclass(frozen=True)
class AlgebraElement:
    degree: int
    terms: Mapping[Permutation, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for g, c in self.terms.items():
            if g.degree != self.degree:
                raise DegreeMismatch(f"term {g} has degree {g.degree}, expected {self.degree}")
            c = Fraction(c)
            if c:
                clean[g] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def basis(cls, g: Permutation) -> AlgebraElement:
        """The basis element δ_g."""
        return cls(g.degree, {g: Fraction(1)})

    @classmethod
    def one(cls, degree: int) -> AlgebraElement:
        return cls.basis(Permutation.identity(degree))

    def coefficient(self, g: Permutation) -> Fraction:
        return self.terms.get(g, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, c: Fraction | int) -> AlgebraElement:
        return AlgebraElement(self.degree, {g: c * x for g, x in self.terms.items()})

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        _check_degrees(self, other)
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, 0) + c
        return AlgebraElement(self.degree, out)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + other.scale(-1)

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return multiply(self, other)

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.terms.items())))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __str__(self) -> str:
        return format_element(self)


def _check_degrees(a: AlgebraElement, b: AlgebraElement) -> None:
    if a.degree != b.degree:
        raise DegreeMismatch(f"degrees differ: {a.degree} and {b.degree}")


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _check_degrees(a, b)
    out: dict[Permutation, Fraction] = {}
    for g, x in a.terms.items():
        for h, y in b.terms.items():
            gh = compose(g, h)
            out[gh] = out.get(gh, 0) + x * y
    return AlgebraElement(a.degree, out)


def _setwise_stabilizer(blocks: Iterable[tuple[int, ...]], n: int) -> list[Permutation]:
    """All permutations of 1..n that map each block onto itself."""
    blocks = [b for b in blocks if len(b) > 1]
    perms = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        images = list(range(1, n + 1))
        for block, image in zip(blocks, choice):
            for x, y in zip(block, image):
                images[x - 1] = y
        perms.append(Permutation(tuple(images)))
    return perms


def row_group(t: Tableau) -> list[Permutation]:
    return _setwise_stabilizer(t.rows, t.n)


def column_group(t: Tableau) -> list[Permutation]:
    return _setwise_stabilizer(t.columns(), t.n)


def row_symmetrizer(t: Tableau) -> AlgebraElement:
    """Average of the row group: idempotent."""
    group = row_group(t)
    w = Fraction(1, len(group))
    return AlgebraElement(t.n, {g: w for g in group})


def column_antisymmetrizer(t: Tableau) -> AlgebraElement:
    """Signed average of the column group: idempotent."""
    group = column_group(t)
    w = Fraction(1, len(group))
    return AlgebraElement(t.n, {g: sign(g) * w for g in group})


def young_symmetrizer(shape: YoungDiagram) -> AlgebraElement:
    """``row_symmetrizer · column_antisymmetrizer`` on the canonical tableau.

    Both factors are normalized, so the result is only quasi-idempotent:
    for (2,1) it squares to 3/4 of itself.
    """
    t = canonical_tableau(shape)
    return multiply(row_symmetrizer(t), column_antisymmetrizer(t))


def quasi_idempotent_constant(e: AlgebraElement) -> Fraction:
    """The rational ``c`` with ``e·e = c·e``."""
    if e.is_zero():
        raise ZeroElement("the zero element has no quasi-idempotency constant")
    square = multiply(e, e)
    g, x = next(iter(e.terms.items()))
    c = square.coefficient(g) / x
    if square != e.scale(c):
        raise NotQuasiIdempotent("e*e is not a scalar multiple of e")
    return c


def left_ideal_dimension(e: AlgebraElement, max_degree: int = MAX_ENUMERATION_DEGREE) -> int:
    """Dimension of Q[S_n]·e, the rank of right multiplication by ``e``."""
    group = enumerate_group(e.degree, max_degree)
    index = {g: i for i, g in enumerate(group)}
    basis = linalg.EchelonBasis()
    for g in group:
        vec = {index[compose(g, h)]: c for h, c in e.terms.items()}
        basis.add(vec)
    return basis.rank


def format_element(a: AlgebraElement) -> str:
    """Text form such as ``1/2*() - 1/2*(1 3)``; terms ordered by one-line notation."""
    if a.is_zero():
        return "0"
    parts = []
    for g in sorted(a.terms, key=lambda p: p.images):
        c = a.terms[g]
        body = f"{abs(c)}*{format_cycles(g, include_fixed=False)}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


_TERM_RE = re.compile(r"\s*([+-]?)\s*([0-9]+(?:/[0-9]+)?)\s*\*\s*((?:\([^()]*\))+)\s*")


def parse_element(text: str, degree: int | None = None) -> AlgebraElement:
    """Parse the text form produced by :func:`format_element`.

    The degree defaults to the largest point mentioned.  Raises ``ValueError``
    on syntax errors.
    """
    text = text.strip()
    if text == "0":
        return AlgebraElement(degree or 0, {})
    pos = 0
    raw = []
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or (raw and not m.group(1)):
            raise ValueError(f"malformed algebra element near {text[pos:]!r}")
        sgn = -1 if m.group(1) == "-" else 1
        raw.append((sgn * Fraction(m.group(2)), m.group(3)))
        pos = m.end()
    if not raw:
        raise ValueError("empty algebra element")
    perms = [(c, parse_permutation(cyc)) for c, cyc in raw]
    n = degree if degree is not None else max(g.degree for _, g in perms)
    out: dict[Permutation, Fraction] = {}
    for c, g in perms:
        g = parse_permutation(format_cycles(g), n)
        out[g] = out.get(g, 0) + c
    return AlgebraElement(n, out)


def regular_block_dimensions(n: int) -> dict[YoungDiagram, int]:
    """Left-ideal dimension of every Young symmetrizer of degree ``n``."""
    return {y: left_ideal_dimension(young_symmetrizer(y)) for y in enumerate_partitions(n)}
