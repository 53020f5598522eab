"""Young diagrams, stored as weakly decreasing tuples of row lengths."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import NonPositiveRow, NotWeaklyDecreasing

CELL = "[ ]"


@dataclass(frozen=True, order=False)
class YoungDiagram:
    """A partition: row lengths from top to bottom.

    The empty tuple is the empty diagram (zero boxes).  Construction
    validates the rows; use :func:`make_diagram` for list input.
    """

    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        for r in rows:
            if r < 1:
                raise NonPositiveRow(f"row lengths must be >= 1, got {list(rows)}")
        for a, b in zip(rows, rows[1:]):
            if a < b:
                raise NotWeaklyDecreasing(
                    f"row lengths must be weakly decreasing, got {list(rows)}"
                )
        object.__setattr__(self, "rows", rows)

    @property
    def box_count(self) -> int:
        return sum(self.rows)

    @property
    def row_count(self) -> int:
        return len(self.rows)

    @property
    def column_count(self) -> int:
        return self.rows[0] if self.rows else 0

    def row_length(self, i: int) -> int:
        """Length of row ``i`` (0-based); 0 past the last row."""
        return self.rows[i] if i < len(self.rows) else 0

    def boxes(self) -> Iterator[tuple[int, int]]:
        """Box coordinates ``(row, column)``, 0-based, in row-major order."""
        for i, r in enumerate(self.rows):
            for j in range(r):
                yield i, j

    def conjugate(self) -> YoungDiagram:
        return conjugate(self)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    def __str__(self) -> str:
        return format_diagram(self)


def make_diagram(rows: Iterable[int]) -> YoungDiagram:
    return YoungDiagram(tuple(rows))


def conjugate(diagram: YoungDiagram) -> YoungDiagram:
    """Transpose: row ``j`` of the result counts the rows of length > ``j``."""
    rows = diagram.rows
    return YoungDiagram(
        tuple(sum(1 for r in rows if r > j) for j in range(diagram.column_count))
    )


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[YoungDiagram]:
    """All partitions of ``n`` in decreasing lexicographic order.

    >>> [str(y) for y in enumerate_partitions(3)]
    ['3', '2,1', '1,1,1']
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return [YoungDiagram(p) for p in _partitions(n, n)]


def enumerate_bounded(n: int, max_rows: int) -> list[YoungDiagram]:
    """Partitions of ``n`` with at most ``max_rows`` rows, same order as above."""
    if max_rows < 0:
        raise ValueError(f"max_rows must be nonnegative, got {max_rows}")
    return [y for y in enumerate_partitions(n) if y.row_count <= max_rows]


def render_ascii(diagram: YoungDiagram) -> str:
    if not diagram.rows:
        return "(empty)"
    return "\n".join(CELL * r for r in diagram.rows)


def format_diagram(diagram: YoungDiagram) -> str:
    return ",".join(str(r) for r in diagram.rows)


def parse_rows(text: str) -> list[int]:
    """Parse the comma-separated text form into integers, without validating shape.

    Raises ``ValueError`` on syntax errors only.
    """
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1].strip()
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def parse_diagram(text: str) -> YoungDiagram:
    return make_diagram(parse_rows(text))
