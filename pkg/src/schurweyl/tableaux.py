"""Young tableaux: fillings of a diagram with 1..n, and standard tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, Sequence

from .diagrams import YoungDiagram, conjugate
from .errors import InvalidTableau, TooManyBoxes

MAX_STANDARD_BOXES = 12


@dataclass(frozen=True)
class Tableau:
    """A diagram whose boxes hold the numbers 1..n, each exactly once."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        # shape validation happens here too
        YoungDiagram(tuple(len(r) for r in rows))
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise InvalidTableau(f"entries must be exactly 1..{len(entries)}: {rows}")

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        width = len(self.rows[0]) if self.rows else 0
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(width)]

    def reading_word(self) -> tuple[int, ...]:
        """Entries in row-major order."""
        return tuple(x for r in self.rows for x in r)

    def __str__(self) -> str:
        return format_tableau(self)


def canonical_tableau(shape: YoungDiagram) -> Tableau:
    """Row-major filling: the first row gets 1..n1, the next n1+1..n1+n2, and so on."""
    rows = []
    start = 1
    for r in shape.rows:
        rows.append(tuple(range(start, start + r)))
        start += r
    return Tableau(tuple(rows))


def is_standard(t: Tableau) -> bool:
    for r in t.rows:
        if any(a >= b for a, b in zip(r, r[1:])):
            return False
    for c in t.columns():
        if any(a >= b for a, b in zip(c, c[1:])):
            return False
    return True


def _check_cap(shape: YoungDiagram, max_boxes: int) -> None:
    if shape.box_count > max_boxes:
        raise TooManyBoxes(f"{shape.box_count} boxes exceeds cap {max_boxes}")


def _standard_fillings(shape: YoungDiagram) -> Iterator[list[list[int]]]:
    # place 1..n one at a time into a box whose left and upper neighbours are filled
    n = shape.box_count
    filled = [0] * shape.row_count
    grid: list[list[int]] = [[] for _ in shape.rows]

    def place(k: int) -> Iterator[list[list[int]]]:
        if k > n:
            yield [row[:] for row in grid]
            return
        for i in range(shape.row_count):
            j = filled[i]
            if j < shape.rows[i] and (i == 0 or filled[i - 1] > j):
                filled[i] += 1
                grid[i].append(k)
                yield from place(k + 1)
                grid[i].pop()
                filled[i] -= 1

    yield from place(1)


def enumerate_standard(shape: YoungDiagram, max_boxes: int = MAX_STANDARD_BOXES) -> list[Tableau]:
    """All standard tableaux of ``shape``, lexicographic on the row-major reading word."""
    _check_cap(shape, max_boxes)
    tableaux = [Tableau(tuple(map(tuple, g))) for g in _standard_fillings(shape)]
    tableaux.sort(key=Tableau.reading_word)
    return tableaux


def count_standard(shape: YoungDiagram, max_boxes: int = MAX_STANDARD_BOXES) -> int:
    """Number of standard tableaux, i.e. the dimension of the S_n irrep labelled ``shape``."""
    return len(enumerate_standard(shape, max_boxes))


def hook_lengths(shape: YoungDiagram) -> list[list[int]]:
    cols = conjugate(shape).rows
    return [
        [(r - j - 1) + (cols[j] - i - 1) + 1 for j in range(r)]
        for i, r in enumerate(shape.rows)
    ]


def hook_length_count(shape: YoungDiagram) -> int:
    """n! over the product of hook lengths (no size cap)."""
    hooks = prod(h for row in hook_lengths(shape) for h in row)
    return factorial(shape.box_count) // hooks


def format_tableau(t: Tableau) -> str:
    return " / ".join(" ".join(map(str, r)) for r in t.rows)


def parse_tableau(text: str) -> Tableau:
    """Parse ``"1 2 / 3"``.  Raises ``ValueError`` on syntax errors."""
    text = text.strip()
    if not text:
        return Tableau(())
    return Tableau(tuple(tuple(int(x) for x in part.split()) for part in text.split("/")))


def tableau_from_rows(rows: Sequence[Sequence[int]]) -> Tableau:
    return Tableau(tuple(tuple(r) for r in rows))
