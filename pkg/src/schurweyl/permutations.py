"""Permutations of {1..n}.

Composition convention, used by every other module: ``compose(g, h)`` is
``g∘h``, i.e. ``(g∘h)(x) = g(h(x))``; the right factor acts first.
Points are 1-based everywhere in the public interface.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagrams import YoungDiagram
from .errors import DegreeMismatch, DegreeTooLarge, InvalidPermutation

MAX_ENUMERATION_DEGREE = 8


@dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation: ``images[i]`` is the image of ``i + 1``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidPermutation(
                f"not a bijection of {{1..{len(images)}}}: {list(images)}"
            )
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int | None = None) -> Permutation:
        cycles = [tuple(c) for c in cycles]
        points = [p for c in cycles for p in c]
        if len(points) != len(set(points)):
            raise InvalidPermutation(f"cycles are not disjoint: {cycles}")
        if any(p < 1 for p in points):
            raise InvalidPermutation(f"points must be >= 1: {cycles}")
        top = max(points, default=0)
        if degree is None:
            degree = top
        elif top > degree:
            raise InvalidPermutation(f"point {top} exceeds degree {degree}")
        images = list(range(1, degree + 1))
        for c in cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, y in enumerate(self.images, start=1):
            inv[y - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(y == i for i, y in enumerate(self.images, start=1))

    def __str__(self) -> str:
        return format_cycles(self)


def compose(g: Permutation, h: Permutation) -> Permutation:
    if g.degree != h.degree:
        raise DegreeMismatch(f"degrees differ: {g.degree} and {h.degree}")
    gi = g.images
    return Permutation(tuple(gi[y - 1] for y in h.images))


def cycle_decomposition(g: Permutation) -> list[tuple[int, ...]]:
    """Cycles of ``g``, fixed points included as 1-cycles.

    Each cycle starts at its smallest point; cycles are sorted by decreasing
    length, ties broken by that smallest point.

    >>> cycle_decomposition(Permutation((2, 4, 3, 1, 6, 5, 7)))
    [(1, 2, 4), (5, 6), (3,), (7,)]
    """
    seen = set()
    cycles = []
    for start in range(1, g.degree + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        x = g(start)
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = g(x)
        cycles.append(tuple(cycle))
    cycles.sort(key=lambda c: (-len(c), c[0]))
    return cycles


def sign(g: Permutation) -> int:
    # parity = n - number of cycles
    return -1 if (g.degree - len(cycle_decomposition(g))) % 2 else 1


def cycle_type(g: Permutation) -> YoungDiagram:
    return YoungDiagram(tuple(len(c) for c in cycle_decomposition(g)))


def conjugate_perm(g: Permutation, h: Permutation) -> Permutation:
    """Return ``h∘g∘h⁻¹``."""
    return compose(compose(h, g), h.inverse())


def enumerate_group(n: int, max_degree: int = MAX_ENUMERATION_DEGREE) -> list[Permutation]:
    """All of S_n, lexicographic in one-line notation."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > max_degree:
        raise DegreeTooLarge(f"degree {n} exceeds enumeration cap {max_degree}")
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def format_cycles(g: Permutation, include_fixed: bool = True) -> str:
    """Cycle notation such as ``(1 2 4)(5 6)(3)(7)``.

    With ``include_fixed=False`` the 1-cycles are dropped and the identity
    prints as ``()``.
    """
    cycles = cycle_decomposition(g)
    if not include_fixed:
        cycles = [c for c in cycles if len(c) > 1]
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def format_one_line(g: Permutation) -> str:
    return " ".join(map(str, g.images))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """Parse cycle notation ``(1 2 4)(5 6)`` or one-line notation ``2 4 3 1``.

    Cycle points may be separated by spaces or commas.  For cycle notation the
    degree defaults to the largest point mentioned.  Raises ``ValueError`` on
    syntax errors and :class:`InvalidPermutation` on non-bijections.
    """
    text = text.strip()
    if text.startswith("("):
        if _CYCLE_RE.sub("", text).strip():
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(text):
            parts = body.replace(",", " ").split()
            if parts:
                cycles.append(tuple(int(p) for p in parts))
        return Permutation.from_cycles(cycles, degree)
    parts = text.replace(",", " ").split()
    g = Permutation(tuple(int(p) for p in parts))
    if degree is not None and degree != g.degree:
        raise DegreeMismatch(f"one-line notation has degree {g.degree}, expected {degree}")
    return g
