"""Partitions, rectangle frames and the shape predicates used by the classifier.

A partition is a plain tuple of positive integers in weakly decreasing order;
the empty partition is ``()``.  Anything that needs a fixed number of rows
(frame-relative formulas) pads with zeros on the fly.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import groupby
from typing import Iterable, Iterator, NamedTuple, Sequence

Partition = tuple[int, ...]


class Frame(NamedTuple):
    """The ``ell x kay`` rectangle (``ell`` rows, ``kay`` columns)."""

    ell: int
    kay: int

    def transpose(self) -> "Frame":
        return Frame(self.kay, self.ell)

    def __str__(self) -> str:
        return f"{self.ell}x{self.kay}"


class ShapeClass(enum.Enum):
    EMPTY = "empty"
    RECTANGLE = "rectangle"
    FAT_HOOK = "fat_hook"
    OTHER = "other"


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` into a canonical partition, dropping zero parts.

    Raises ValueError on negative or increasing parts.
    """
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts are not weakly decreasing: {parts}")
    return tuple(p for p in parts if p > 0)


def padded(lam: Partition, n: int) -> tuple[int, ...]:
    """``lam`` with zeros appended up to length ``n``."""
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    return lam + (0,) * (n - len(lam))


def part(lam: Partition, i: int) -> int:
    """1-based part ``lam_i``, zero beyond the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def size(lam: Partition) -> int:
    return sum(lam)


@lru_cache(maxsize=1 << 16)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    """True iff the diagram of ``inner`` sits inside the diagram of ``outer``."""
    return len(inner) <= len(outer) and all(i <= o for i, o in zip(inner, outer))


def fits(lam: Partition, frame: Frame) -> bool:
    return len(lam) <= frame.ell and (not lam or lam[0] <= frame.kay)


def overlaps(lam: Partition, mu: Partition, frame: Frame) -> bool:
    """True iff ``lam`` and the 180-degree rotation of ``mu`` share a box."""
    ell, kay = frame
    return any(part(lam, i) + part(mu, ell + 1 - i) > kay for i in range(1, ell + 1))


def distinct_part_sizes(lam: Partition) -> int:
    return len(set(lam))


def classify(lam: Partition) -> ShapeClass:
    n = distinct_part_sizes(lam)
    if n == 0:
        return ShapeClass.EMPTY
    if n == 1:
        return ShapeClass.RECTANGLE
    if n == 2:
        return ShapeClass.FAT_HOOK
    return ShapeClass.OTHER


def is_rectangle(lam: Partition) -> bool:
    return distinct_part_sizes(lam) == 1


def is_fat_hook(lam: Partition) -> bool:
    return distinct_part_sizes(lam) == 2


def is_hook(lam: Partition) -> bool:
    """A shape ``(b, 1^a)`` with two distinct part sizes, so ``b >= 2`` and ``a >= 1``."""
    return is_fat_hook(lam) and lam[-1] == 1 and lam[1] == 1


def lattice_path(lam: Partition, frame: Frame) -> str:
    """Steps ('N'/'E') of the boundary of ``lam`` from the SW to the NE corner."""
    if not fits(lam, frame):
        raise ValueError(f"{lam} does not fit in {frame}")
    ell, kay = frame
    steps = []
    col = 0
    for i in range(ell, 0, -1):
        width = part(lam, i)
        steps.append("E" * (width - col))
        col = width
        steps.append("N")
    steps.append("E" * (kay - col))
    return "".join(steps)


def segments(lam: Partition, frame: Frame) -> list[int]:
    return [len(list(run)) for _, run in groupby(lattice_path(lam, frame))]


def shortness(lam: Partition, frame: Frame) -> int:
    """Length of the shortest maximal straight run of the lattice path of ``lam``."""
    if frame.ell < 1 or frame.kay < 1:
        raise ValueError(f"shortness is undefined on the degenerate frame {frame}")
    return min(segments(lam, frame))


def star(alpha: Partition, ell: int) -> Partition:
    """``(a_1 - a_ell, a_1 - a_(ell-1), ..., a_1 - a_1)`` with ``alpha`` zero-padded to ``ell`` rows."""
    if len(alpha) > ell:
        raise ValueError(f"{alpha} has more than {ell} parts")
    top = part(alpha, 1)
    return partition(top - part(alpha, i) for i in range(ell, 0, -1))


def corners(lam: Partition) -> list[tuple[int, int]]:
    """Outer corners ``(row, column)`` of ``lam``, top to bottom, 1-based matrix coordinates."""
    if not lam:
        raise ValueError("the empty partition has no corners")
    return [(i, lam[i - 1]) for i in range(1, len(lam) + 1) if part(lam, i + 1) < lam[i - 1]]


def rotate_complement(nu: Partition, frame: Frame) -> Partition:
    """The complement of ``nu`` in ``frame``, rotated by 180 degrees."""
    if not fits(nu, frame):
        raise ValueError(f"{nu} does not fit in {frame}")
    ell, kay = frame
    return partition(kay - part(nu, i) for i in range(ell, 0, -1))


def partitions_in_frame(frame: Frame) -> Iterator[Partition]:
    """Every partition fitting ``frame``, in lexicographic order of parts."""
    ell, kay = frame

    def rec(prefix: tuple[int, ...], bound: int) -> Iterator[Partition]:
        yield prefix
        if len(prefix) < ell:
            for p in range(1, bound + 1):
                yield from rec(prefix + (p,), p)

    return rec((), kay)


def partitions_of(n: int, frame: Frame | None = None, inside: Partition | None = None,
                  containing: Partition = ()) -> Iterator[Partition]:
    """Partitions of ``n`` fitting ``frame`` and containing ``containing``, largest first."""
    max_rows = frame.ell if frame is not None else n
    max_cols = frame.kay if frame is not None else n

    def rec(prefix: tuple[int, ...], remaining: int, bound: int) -> Iterator[Partition]:
        if remaining == 0:
            if contains(prefix, containing):
                yield prefix
            return
        i = len(prefix) + 1
        if i > max_rows:
            return
        low = max(1, part(containing, i))
        for p in range(min(bound, remaining), low - 1, -1):
            yield from rec(prefix + (p,), remaining - p, p)

    return rec((), n, max_cols)


def parse_partition(text: str) -> Partition:
    """Parse ``"4,4,2,2"`` or the exponent shorthand ``"7^5,3"``; ``""`` and ``"0"`` are empty."""
    text = text.strip()
    if text in ("", "0", "()", "∅"):
        return ()
    parts: list[int] = []
    for token in text.strip("()").split(","):
        token = token.strip()
        if not token:
            raise ValueError(f"empty part in {text!r}")
        value, _, exponent = token.partition("^")
        try:
            value_int = int(value)
            count = int(exponent) if exponent else 1
        except ValueError:
            raise ValueError(f"cannot parse part {token!r} in {text!r}") from None
        if count < 0:
            raise ValueError(f"negative exponent in {token!r}")
        parts.extend([value_int] * count)
    return partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam) if lam else "0"
