"""Littlewood-Richardson fillings, coefficients and Schubert product expansions.

The search fills a skew shape one row at a time, top to bottom.  Rows are
weakly increasing, so a row is determined by how many copies of each value it
holds; the reading word visits a row right to left, i.e. from its largest
value down.  That makes the ballot condition checkable once per row: after
row ``r`` every value ``v >= 2`` must satisfy

    count_before(v) + count_in_row(v) <= count_before(v - 1)

which is the tightest point of the prefix condition for ``v`` inside the row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .partition import Frame, Partition, contains, fits, format_partition, padded, partition, size


class SkewShape(NamedTuple):
    inner: Partition
    outer: Partition


@dataclass(frozen=True)
class LRFilling:
    """A filling of ``shape``; ``rows[i]`` lists the entries of the skew boxes of row ``i + 1``."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def reading_word(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in reversed(row))

    def content(self) -> tuple[int, ...]:
        word = self.reading_word()
        top = max(word, default=0)
        return tuple(word.count(v) for v in range(1, top + 1))

    def entry(self, row: int, col: int) -> int | None:
        """Entry at 1-based ``(row, col)``; None for boxes of the inner shape or outside."""
        inner = padded(self.shape.inner, len(self.shape.outer))
        if not 1 <= row <= len(self.rows):
            return None
        offset = col - inner[row - 1] - 1
        r = self.rows[row - 1]
        return r[offset] if 0 <= offset < len(r) else None


@dataclass
class Expansion:
    """``sigma_lam * sigma_mu`` written in the Schubert basis of ``frame``."""

    frame: Frame
    terms: dict[Partition, int] = field(default_factory=dict)

    def sorted_terms(self) -> list[tuple[Partition, int]]:
        return sorted(self.terms.items(), key=lambda kv: padded(kv[0], self.frame.ell))

    def is_multiplicity_free(self) -> bool:
        return all(c <= 1 for c in self.terms.values())

    def to_text(self) -> str:
        """One ``coeff * nu`` line per term, in sorted order; the zero product is the empty string."""
        return "".join(f"{c} * {format_partition(nu)}\n" for nu, c in self.sorted_terms())

    def to_dict(self) -> dict:
        return {"frame": [self.frame.ell, self.frame.kay],
                "terms": [{"nu": list(nu), "coeff": c} for nu, c in self.sorted_terms()]}


def is_ballot(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for w in word:
        if w < 1:
            return False
        counts[w] = counts.get(w, 0) + 1
        if w > 1 and counts[w] > counts.get(w - 1, 0):
            return False
    return True


def validate_filling(f: LRFilling) -> tuple[bool, str]:
    """Check semistandardness, the ballot condition and that the content is a partition.

    Returns ``(ok, diagnostic)``.  Rows that do not cover the skew boxes exactly
    raise ValueError, since that is a malformed filling rather than a bad one.
    """
    inner, outer = f.shape
    if not contains(outer, inner):
        raise ValueError(f"inner shape {inner} is not contained in {outer}")
    if len(f.rows) != len(outer):
        raise ValueError(f"expected {len(outer)} rows, got {len(f.rows)}")
    inner_p = padded(inner, len(outer))
    for i, row in enumerate(f.rows):
        if len(row) != outer[i] - inner_p[i]:
            raise ValueError(f"row {i + 1} has {len(row)} entries, expected {outer[i] - inner_p[i]}")

    for i, row in enumerate(f.rows, start=1):
        if any(v < 1 for v in row):
            return False, f"row {i} holds a non-positive entry"
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False, f"row {i} is not weakly increasing"
    for i in range(2, len(outer) + 1):
        for col in range(inner_p[i - 1] + 1, outer[i - 1] + 1):
            above = f.entry(i - 1, col)
            if above is not None and above >= f.entry(i, col):
                return False, f"column {col} is not strictly increasing at row {i}"
    if not is_ballot(f.reading_word()):
        return False, "reading word is not a ballot sequence"
    content = f.content()
    if any(c == 0 for c in content) or partition(sorted(content, reverse=True)) != content:
        return False, "content is not a partition"
    return True, "ok"


def _search(lam: Partition, mu: Partition, max_rows: int, max_cols: int,
            nu: Partition | None = None) -> Iterator[tuple[Partition, tuple[tuple[int, ...], ...]]]:
    """Yield ``(outer, rows)`` for every LR filling of ``outer/lam`` with content ``mu``.

    ``outer`` ranges over shapes with at most ``max_rows`` rows and ``max_cols``
    columns, or is pinned to ``nu`` when given.  Order: rows top to bottom,
    smaller entries tried first.
    """
    if len(lam) > max_rows or (lam and lam[0] > max_cols):
        return
    if nu is not None:
        if len(nu) > max_rows or not contains(nu, lam) or size(nu) != size(lam) + size(mu):
            return
        target = padded(nu, max_rows)
    n = len(mu)
    lam_p = padded(lam, max_rows)
    counts = [0] * (n + 1)
    outer: list[int] = []
    rows: list[tuple[int, ...]] = []

    def row_fillings(r: int, start: int, cap: int, above_start: int,
                     above: tuple[int, ...], exact: int | None) -> Iterator[tuple[int, ...]]:
        vmax = min(n, r)
        row: list[int] = []

        def place(v: int, pos: int) -> Iterator[tuple[int, ...]]:
            if v > vmax or pos == cap:
                if exact is None or pos == exact:
                    yield tuple(row)
                return
            limit = mu[v - 1] - counts[v]
            if v > 1:
                limit = min(limit, counts[v - 1] - counts[v])
            limit = min(limit, cap - pos)
            if exact is not None:
                limit = min(limit, exact - pos)
            # the last box of the run bounds all others: entries above grow to the right
            while limit > 0:
                e = pos + limit - 1
                if e < above_start or above[e - above_start] < v:
                    break
                limit -= 1
            for x in range(limit, -1, -1):
                row.extend([v] * x)
                yield from place(v + 1, pos + x)
                if x:
                    del row[-x:]

        return place(1, start)

    def rec(i: int, remaining: int, prev_len: int, above_start: int,
            above: tuple[int, ...]) -> Iterator[tuple[Partition, tuple[tuple[int, ...], ...]]]:
        if remaining == 0:
            tail = lam_p[i:]
            if nu is None or tuple(target[i:]) == tail:
                yield partition(outer + list(tail)), tuple(rows) + ((),) * len(tail)
            return
        if i == max_rows:
            return
        start = lam_p[i]
        cap = min(prev_len, max_cols)
        exact = target[i] if nu is not None else None
        if exact is not None and exact > cap:
            return
        for row in row_fillings(i + 1, start, cap, above_start, above, exact):
            for v in row:
                counts[v] += 1
            outer.append(start + len(row))
            rows.append(row)
            yield from rec(i + 1, remaining - len(row), start + len(row), start, row)
            rows.pop()
            outer.pop()
            for v in row:
                counts[v] -= 1

    # no row above the first: every column counts as unconstrained
    for out, filled in rec(0, size(mu), max_cols, max_cols, ()):
        yield out, filled[: len(out)]


def enumerate_lr_fillings(shape: SkewShape, content: Partition) -> Iterator[LRFilling]:
    inner, outer = shape
    if not contains(outer, inner) or size(outer) - size(inner) != size(content):
        return
    cols = outer[0] if outer else 0
    for out, rows in _search(inner, content, len(outer), cols, nu=outer):
        yield LRFilling(SkewShape(inner, out), rows)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition, cap: int | None = None) -> int:
    """Number of LR fillings of ``nu/lam`` with content ``mu``, stopping early at ``cap``."""
    if not contains(nu, lam) or size(nu) != size(lam) + size(mu):
        return 0
    count = 0
    for _ in _search(lam, mu, len(nu), nu[0] if nu else 0, nu=nu):
        count += 1
        if cap is not None and count >= cap:
            break
    return count


@lru_cache(maxsize=None)
def _expansion_terms(lam: Partition, mu: Partition, ell: int, kay: int) -> tuple[tuple[Partition, int], ...]:
    terms: dict[Partition, int] = {}
    for out, _ in _search(lam, mu, ell, kay):
        terms[out] = terms.get(out, 0) + 1
    return tuple(sorted(terms.items(), key=lambda kv: padded(kv[0], ell)))


def expand_product(lam: Partition, mu: Partition, frame: Frame) -> Expansion:
    """Coefficients of ``sigma_lam * sigma_mu`` on every ``sigma_nu`` with ``nu`` in ``frame``.

    Overlapping shapes give the empty expansion (the zero product).
    """
    for shape in (lam, mu):
        if not fits(shape, frame):
            raise ValueError(f"{shape} does not fit in {frame}")
    return Expansion(frame, dict(_expansion_terms(lam, mu, frame.ell, frame.kay)))


@lru_cache(maxsize=None)
def _has_multiplicity(lam: Partition, mu: Partition, ell: int, kay: int) -> bool:
    seen: set[Partition] = set()
    for out, _ in _search(lam, mu, ell, kay):
        if out in seen:
            return True
        seen.add(out)
    return False


def has_multiplicity_bruteforce(lam: Partition, mu: Partition, frame: Frame) -> bool:
    """True iff some ``nu`` in ``frame`` has LR coefficient at least 2 (search stops at the first)."""
    for shape in (lam, mu):
        if not fits(shape, frame):
            raise ValueError(f"{shape} does not fit in {frame}")
    return _has_multiplicity(lam, mu, frame.ell, frame.kay)


def filling_from_rows(inner: Partition, rows: Sequence[Sequence[int]]) -> LRFilling:
    """Build the left-justified filling whose row ``i`` reads ``rows[i]`` left to right.

    Trailing empty rows beyond the inner shape are dropped.  Nothing is
    validated here (rows are not sorted either); pass the result to
    ``validate_filling``.
    """
    n = max(len(rows), len(inner))
    inner_p = padded(inner, n)
    full = [tuple(rows[i]) if i < len(rows) else () for i in range(n)]
    outer = [inner_p[i] + len(full[i]) for i in range(n)]
    while outer and outer[-1] == 0:
        outer.pop()
        full.pop()
    if any(outer[i] < outer[i + 1] for i in range(len(outer) - 1)):
        raise ValueError(f"rows do not form a skew shape: outer row lengths {outer}")
    return LRFilling(SkewShape(inner, tuple(outer)), tuple(full))
