"""Richardson quadruples and the demolitions that shrink them.

Boxes live in the ``ell x kay`` frame in matrix coordinates (row 1 on top,
column 1 on the left).  ``lam`` hangs from the top-left corner and
``rotate(mu)`` sits in the bottom-right corner, so row ``i`` holds ``lam_i``
boxes of ``lam`` and ``mu_(ell+1-i)`` boxes of ``rotate(mu)``.  Columns use the
conjugate shapes the same way.

Every demolition is a deletion of one row or column of the frame: deleting a
row removes the corresponding part from whichever shapes meet it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence, Union

from .partition import (
    Frame,
    Partition,
    conjugate,
    corners,
    fits,
    format_partition,
    is_fat_hook,
    is_hook,
    overlaps,
    part,
    partition,
)


@dataclass(frozen=True)
class RichardsonQuadruple:
    lam: Partition
    mu: Partition
    frame: Frame

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", partition(self.lam))
        object.__setattr__(self, "mu", partition(self.mu))
        object.__setattr__(self, "frame", Frame(*self.frame))
        for shape in (self.lam, self.mu):
            if not fits(shape, self.frame):
                raise ValueError(f"{shape} does not fit in {self.frame}")
        if overlaps(self.lam, self.mu, self.frame):
            raise ValueError(f"{self.lam} and rotate({self.mu}) overlap in {self.frame}")

    @property
    def ell(self) -> int:
        return self.frame.ell

    @property
    def kay(self) -> int:
        return self.frame.kay

    def conjugate(self) -> "RichardsonQuadruple":
        return RichardsonQuadruple(conjugate(self.lam), conjugate(self.mu), self.frame.transpose())

    def swap(self) -> "RichardsonQuadruple":
        return RichardsonQuadruple(self.mu, self.lam, self.frame)

    def __str__(self) -> str:
        return f"(({format_partition(self.lam)}), ({format_partition(self.mu)}), {self.frame})"


class Axis(enum.Enum):
    ROW = "row"
    COLUMN = "column"


class LineRef(NamedTuple):
    axis: Axis
    index: int

    def __str__(self) -> str:
        return f"{self.axis.value} {self.index}"


def row(i: int) -> LineRef:
    return LineRef(Axis.ROW, i)


def column(j: int) -> LineRef:
    return LineRef(Axis.COLUMN, j)


class LineStatus(enum.Enum):
    EMPTY = "empty"
    ONLY_LAM = "only_lam"
    ONLY_MU = "only_mu"
    MIXED = "mixed"
    FULL = "full"


def all_lines(q: RichardsonQuadruple) -> list[LineRef]:
    """Columns first, then rows, each in increasing index order."""
    return [column(j) for j in range(1, q.kay + 1)] + [row(i) for i in range(1, q.ell + 1)]


def _line_counts(q: RichardsonQuadruple, line: LineRef) -> tuple[int, int, int]:
    """(boxes of lam, boxes of rotate(mu), length) along ``line``."""
    axis, idx = line
    if axis is Axis.ROW:
        if not 1 <= idx <= q.ell:
            raise ValueError(f"{line} is outside {q.frame}")
        return part(q.lam, idx), part(q.mu, q.ell + 1 - idx), q.kay
    if not 1 <= idx <= q.kay:
        raise ValueError(f"{line} is outside {q.frame}")
    return part(conjugate(q.lam), idx), part(conjugate(q.mu), q.kay + 1 - idx), q.ell


def line_status(q: RichardsonQuadruple, line: LineRef) -> LineStatus:
    n_lam, n_mu, length = _line_counts(q, line)
    if n_lam + n_mu == length:
        return LineStatus.FULL
    if n_lam == 0 and n_mu == 0:
        return LineStatus.EMPTY
    if n_mu == 0:
        return LineStatus.ONLY_LAM
    if n_lam == 0:
        return LineStatus.ONLY_MU
    return LineStatus.MIXED


def lines_with_status(q: RichardsonQuadruple, *statuses: LineStatus) -> list[LineRef]:
    return [line for line in all_lines(q) if line_status(q, line) in statuses]


def full_lines(q: RichardsonQuadruple) -> list[LineRef]:
    return lines_with_status(q, LineStatus.FULL)


def empty_lines(q: RichardsonQuadruple) -> list[LineRef]:
    return lines_with_status(q, LineStatus.EMPTY)


def is_basic(q: RichardsonQuadruple) -> bool:
    return not full_lines(q)


def _delete_row(q: RichardsonQuadruple, i: int) -> RichardsonQuadruple:
    ell = q.ell
    lam_rows = [part(q.lam, r) for r in range(1, ell + 1)]
    mu_rows = [part(q.mu, ell + 1 - r) for r in range(1, ell + 1)]
    del lam_rows[i - 1], mu_rows[i - 1]
    return RichardsonQuadruple(partition(lam_rows), partition(reversed(mu_rows)), Frame(ell - 1, q.kay))


def delete_line(q: RichardsonQuadruple, line: LineRef) -> RichardsonQuadruple:
    """Delete ``line`` from the frame together with any boxes on it; no status check."""
    _line_counts(q, line)
    if line.axis is Axis.ROW:
        return _delete_row(q, line.index)
    return _delete_row(q.conjugate(), line.index).conjugate()


def basic_demolition(q: RichardsonQuadruple) -> RichardsonQuadruple:
    """Delete every full row and column of ``q`` at once.

    Deleting a full column takes one box from every row and one unit from the
    row length, so a row's fullness never changes; the same holds with rows and
    columns swapped.  Simultaneous deletion therefore equals iterating to a
    fixed point.
    """
    doomed = full_lines(q)
    # highest index first so the remaining indices stay valid
    for line in sorted(doomed, key=lambda l: (l.axis is Axis.COLUMN, -l.index)):
        q = delete_line(q, line)
    return q


def remove_empty_line(q: RichardsonQuadruple, line: LineRef) -> RichardsonQuadruple:
    status = line_status(q, line)
    if status is not LineStatus.EMPTY:
        raise ValueError(f"{line} of {q} is {status.value}, not empty")
    return delete_line(q, line)


def stembridge_lines(q: RichardsonQuadruple) -> list[LineRef]:
    """Lines holding boxes of exactly one of the two shapes and not full."""
    return lines_with_status(q, LineStatus.ONLY_LAM, LineStatus.ONLY_MU)


def stembridge_demolish(q: RichardsonQuadruple, line: LineRef) -> RichardsonQuadruple:
    status = line_status(q, line)
    if status not in (LineStatus.ONLY_LAM, LineStatus.ONLY_MU):
        raise ValueError(f"{line} of {q} is {status.value}; a Stembridge demolition needs a single-shape line")
    return delete_line(q, line)


def stembridge_demolish_all(q: RichardsonQuadruple, lines: Iterable[LineRef]) -> RichardsonQuadruple:
    """Delete several Stembridge lines of ``q`` together; indices refer to ``q`` itself.

    A line may stop being single-shape once another is gone (a row can turn
    full after a column is removed), so statuses are checked on ``q`` only.
    """
    lines = list(lines)
    if len(set(lines)) != len(lines):
        raise ValueError(f"repeated line in {[str(l) for l in lines]}")
    allowed = set(stembridge_lines(q))
    for line in lines:
        if line not in allowed:
            raise ValueError(f"{line} of {q} is {line_status(q, line).value}; "
                             "a Stembridge demolition needs a single-shape line")
    for line in sorted(lines, key=lambda l: (l.axis is Axis.COLUMN, -l.index)):
        q = delete_line(q, line)
    return q


def is_inductive(q: RichardsonQuadruple, line: Union[LineRef, Sequence[LineRef]], case) -> bool:
    """Does demolishing ``line`` (or several lines at once) keep ``q`` basic and in ``case``?"""
    from .classifier import satisfies_case

    if not is_basic(q):
        raise ValueError(f"{q} is not basic")
    if not satisfies_case(q, case):
        raise ValueError(f"{q} is not in case {case.value}")
    lines = [line] if isinstance(line, LineRef) else list(line)
    result = stembridge_demolish_all(q, lines)
    return is_basic(result) and satisfies_case(result, case)


def lam_corners(q: RichardsonQuadruple) -> tuple[tuple[int, int], tuple[int, int]]:
    """Corners ``(A, B)`` of a fat hook ``lam``: A lowest/leftmost, B highest/rightmost."""
    top, bottom = corners(q.lam)
    return bottom, top


def mu_corners(q: RichardsonQuadruple) -> tuple[tuple[int, int], tuple[int, int]]:
    """Corners ``(X, Y)`` of ``rotate(mu)`` for a fat hook ``mu``: X lowest/leftmost, Y highest/rightmost."""
    (i1, j1), (i2, j2) = corners(q.mu)
    ell, kay = q.frame
    return (ell + 1 - i1, kay + 1 - j1), (ell + 1 - i2, kay + 1 - j2)


def is_well_ordered(q: RichardsonQuadruple) -> bool:
    if not (is_fat_hook(q.lam) and is_fat_hook(q.mu)):
        raise ValueError(f"well-ordering needs two fat hooks, got {q}")
    (a_row, _), (b_row, _) = lam_corners(q)
    (x_row, _), (y_row, _) = mu_corners(q)
    return a_row < x_row and b_row < y_row


@dataclass(frozen=True)
class InductiveLine:
    """An inductive Stembridge demolition removing all of ``lines`` (indices into the original)."""

    lines: tuple[LineRef, ...]

    def verify(self, q: RichardsonQuadruple) -> bool:
        from .classifier import Case

        try:
            return is_inductive(q, self.lines, Case.I)
        except ValueError:
            return False


@dataclass(frozen=True)
class HookCase:
    shape: str  # "lam" or "mu"

    def verify(self, q: RichardsonQuadruple) -> bool:
        return is_hook(q.lam if self.shape == "lam" else q.mu)


@dataclass(frozen=True)
class WellOrdered:
    conjugated: bool

    def verify(self, q: RichardsonQuadruple) -> bool:
        if not (is_fat_hook(q.lam) and is_fat_hook(q.mu)):
            return False
        return is_well_ordered(q.conjugate() if self.conjugated else q)


Reduction = Union[InductiveLine, HookCase, WellOrdered]


def inductive_sequences(q: RichardsonQuadruple, case, max_lines: int = 2) -> Iterable[tuple[LineRef, ...]]:
    """Sets of Stembridge lines of ``q`` whose joint removal is inductive for ``case``, smallest first."""
    from .classifier import satisfies_case

    candidates = stembridge_lines(q)
    for n in range(1, max_lines + 1):
        for lines in combinations(candidates, n):
            result = stembridge_demolish_all(q, lines)
            if is_basic(result) and satisfies_case(result, case):
                yield lines


def propose_reduction(q: RichardsonQuadruple, max_lines: int = 2) -> Reduction:
    """Pick one of: an inductive demolition, a hook among the shapes, or a well-ordered placement.

    Alternatives are tried in that order.  Inductive demolitions use one line
    where possible, else two removed together (e.g. the leftmost column with
    the bottom row).
    """
    from .classifier import Case, satisfies_case

    if not is_basic(q):
        raise ValueError(f"{q} is not basic")
    if not satisfies_case(q, Case.I):
        raise ValueError(f"both shapes of {q} need at least two distinct part sizes")
    for seq in inductive_sequences(q, Case.I, max_lines):
        return InductiveLine(seq)
    for name in ("lam", "mu"):
        if is_hook(getattr(q, name)):
            return HookCase(name)
    if is_fat_hook(q.lam) and is_fat_hook(q.mu):
        if is_well_ordered(q):
            return WellOrdered(False)
        if is_well_ordered(q.conjugate()):
            return WellOrdered(True)
    raise RuntimeError(f"no reduction found for {q}")


def describe_lines(lines: Iterable[LineRef]) -> dict[str, list[int]]:
    out: dict[str, list[int]] = {"rows": [], "columns": []}
    for line in lines:
        out["rows" if line.axis is Axis.ROW else "columns"].append(line.index)
    return out


def richardson_quadruples(frame: Frame) -> Iterable[RichardsonQuadruple]:
    """Every non-overlapping pair in ``frame``, lexicographic in ``(lam, mu)``."""
    from .partition import partitions_in_frame

    shapes = list(partitions_in_frame(frame))
    return (RichardsonQuadruple(lam, mu, frame) for lam in shapes for mu in shapes
            if not overlaps(lam, mu, frame))

