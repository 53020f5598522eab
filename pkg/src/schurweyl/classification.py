"""Irrep labels for S_n and the classical matrix groups.

Each group kind carries one size parameter (``n`` for S_n, ``N`` otherwise)
and accepts diagrams under its own row bound:

==================  ======================  =============
kind                diagram constraint      twist
==================  ======================  =============
Sn                  exactly n boxes         none
End, GLpoly         at most N rows          none
GL, U               fewer than N rows       any integer
SL, SU              fewer than N rows       none
==================  ======================  =============

The twisted kinds (``GL`` algebraic, ``U``) stand for ``det^k ⊗ ρ_Y``.  A
diagram with full columns of height N is the same irrep with the columns
moved into the twist, so :func:`make_label` stores the stripped form.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable

from .diagrams import YoungDiagram, enumerate_bounded, enumerate_partitions, format_diagram, parse_rows
from .errors import InvalidLabel, MissingTwistRange, TooManyRows
from .schur import schur_dimension
from .tableaux import count_standard


class GroupKind(enum.Enum):
    SYMMETRIC = "Sn"
    END = "End"
    GL_POLYNOMIAL = "GLpoly"
    GL_ALGEBRAIC = "GL"
    SL = "SL"
    UNITARY = "U"
    SU = "SU"

    @property
    def twisted(self) -> bool:
        return self in (GroupKind.GL_ALGEBRAIC, GroupKind.UNITARY)

    @property
    def strict_rows(self) -> bool:
        """Whether diagrams need fewer than N rows (rather than at most N)."""
        return self in (GroupKind.GL_ALGEBRAIC, GroupKind.UNITARY, GroupKind.SL, GroupKind.SU)

    @classmethod
    def parse(cls, text: str) -> GroupKind:
        try:
            return cls(text)
        except ValueError:
            raise ValueError(f"unknown group kind {text!r}; expected one of {[k.value for k in cls]}") from None


@dataclass(frozen=True)
class IrrepLabel:
    group: GroupKind
    size: int
    diagram: YoungDiagram
    twist: int | None = None

    def __str__(self) -> str:
        return format_label(self)


def validate_label(label: IrrepLabel) -> bool:
    kind, size, y = label.group, label.size, label.diagram
    if kind.twisted != (label.twist is not None):
        return False
    if kind is GroupKind.SYMMETRIC:
        return size >= 0 and y.box_count == size
    if size < 1:
        return False
    if kind.strict_rows:
        return y.row_count < size
    return y.row_count <= size


def _full_columns(y: YoungDiagram, N: int) -> int:
    if y.row_count > N:
        raise TooManyRows(f"diagram {format_diagram(y)} has {y.row_count} rows, more than N = {N}")
    return y.rows[N - 1] if y.row_count == N else 0


def normalize_gl_label(y: YoungDiagram, k: int, N: int) -> tuple[YoungDiagram, int]:
    """Move every full-height column of ``y`` into the determinant twist ``k``.

    >>> normalize_gl_label(YoungDiagram((5, 4, 2, 2, 2)), 0, 5)
    (YoungDiagram(rows=(3, 2)), 2)
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    s = _full_columns(y, N)
    rows = tuple(r - s for r in y.rows if r > s)
    return YoungDiagram(rows), k + s


def denormalize_gl_label(y: YoungDiagram, k: int, N: int) -> YoungDiagram:
    """Prepend ``k >= 0`` full columns of height N."""
    if k < 0:
        raise ValueError(f"cannot prepend a negative number of columns ({k})")
    for _ in range(k):
        y = tensor_with_determinant(y, N)
    return y


def tensor_with_determinant(y: YoungDiagram, N: int) -> YoungDiagram:
    """Add one column of height N (pad to N rows, add 1 to each)."""
    _full_columns(y, N)
    return YoungDiagram(tuple(y.row_length(i) + 1 for i in range(N)))


def make_label(kind: GroupKind, size: int, diagram: YoungDiagram, twist: int | None = None) -> IrrepLabel:
    """Build a validated label; twisted kinds are normalized first.

    Raises :class:`InvalidLabel` if the result violates the kind's constraint.
    """
    if kind.twisted:
        if size < 1:
            raise InvalidLabel(f"{kind.value} needs N >= 1, got {size}")
        try:
            diagram, twist = normalize_gl_label(diagram, twist or 0, size)
        except TooManyRows as exc:
            raise InvalidLabel(str(exc)) from None
    elif twist is not None:
        raise InvalidLabel(f"{kind.value} labels carry no twist")
    label = IrrepLabel(kind, size, diagram, twist)
    if not validate_label(label):
        raise InvalidLabel(f"{format_label(label)} violates the constraint for {kind.value}")
    return label


def enumerate_labels(
    kind: GroupKind,
    size: int,
    boxes: int | None = None,
    twists: Iterable[int] | None = None,
) -> list[IrrepLabel]:
    """All valid labels with at most ``boxes`` boxes (exactly ``size`` boxes for S_n).

    Ordered by box count, then decreasing lexicographic diagram, then twist.
    Twisted kinds need an explicit ``twists`` range.
    """
    if kind is GroupKind.SYMMETRIC:
        return [IrrepLabel(kind, size, y) for y in enumerate_partitions(size)]
    if boxes is None:
        raise ValueError(f"{kind.value} needs a box budget")
    if boxes < 0 or size < 1:
        raise ValueError(f"need boxes >= 0 and N >= 1, got boxes={boxes}, N={size}")
    if kind.twisted and twists is None:
        raise MissingTwistRange(f"{kind.value} labels need an explicit twist range")
    max_rows = size - 1 if kind.strict_rows else size
    twist_list = sorted(set(twists)) if kind.twisted else [None]
    labels = []
    for b in range(boxes + 1):
        for y in enumerate_bounded(b, max_rows):
            labels.extend(IrrepLabel(kind, size, y, k) for k in twist_list)
    return labels


def label_dimension(label: IrrepLabel) -> int:
    """Dimension of the irrep; the determinant twist never changes it."""
    if not validate_label(label):
        raise InvalidLabel(f"{format_label(label)} is not a valid {label.group.value} label")
    if label.group is GroupKind.SYMMETRIC:
        return count_standard(label.diagram)
    return schur_dimension(label.diagram, label.size)


def format_label(label: IrrepLabel) -> str:
    """Text form such as ``Sn:3:[2,1]`` or ``GL:2:[2,1]:k=-3``."""
    text = f"{label.group.value}:{label.size}:[{format_diagram(label.diagram)}]"
    if label.twist is not None:
        text += f":k={label.twist}"
    return text


_LABEL_RE = re.compile(r"^(\w+):(\d+):\[([^\]]*)\](?::k=(-?\d+))?$")


def parse_label(text: str) -> IrrepLabel:
    """Parse the text form into an unvalidated label.

    A missing ``k=`` on a twisted kind means twist 0.  Raises ``ValueError``
    on syntax errors; shape errors surface as the diagram's own errors.
    """
    m = _LABEL_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed label {text!r}")
    kind = GroupKind.parse(m.group(1))
    twist = int(m.group(4)) if m.group(4) is not None else None
    if kind.twisted and twist is None:
        twist = 0
    return IrrepLabel(kind, int(m.group(2)), YoungDiagram(tuple(parse_rows(m.group(3)))), twist)
