"""Evidence of multiplicity: a shape ``nu`` together with two LR fillings of ``nu/lam``.

``find_witness`` searches.  The ``witness_*`` functions build the two fillings
directly for the base configurations, and ``witness_via_reduction`` shrinks a
quadruple with demolitions until one of those applies, then carries ``nu``
back up.  Every constructed filling goes through ``validate_filling``; nothing
here is trusted on its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, islice, product
from typing import Iterator, Optional, Sequence

from .classifier import Case, classify, satisfies_case, theorem1prime_case
from .demolition import (
    Axis,
    HookCase,
    InductiveLine,
    LineRef,
    RichardsonQuadruple,
    WellOrdered,
    basic_demolition,
    delete_line,
    empty_lines,
    full_lines,
    is_basic,
    is_well_ordered,
    lam_corners,
    mu_corners,
    propose_reduction,
    remove_empty_line,
    stembridge_demolish_all,
    stembridge_lines,
)
from .lr_engine import (
    LRFilling,
    SkewShape,
    enumerate_lr_fillings,
    expand_product,
    filling_from_rows,
    validate_filling,
)
from .partition import (
    Partition,
    conjugate,
    distinct_part_sizes,
    format_partition,
    is_fat_hook,
    is_hook,
    is_rectangle,
    padded,
    part,
    partition,
    shortness,
)

Cells = dict[tuple[int, int], int]


@dataclass(frozen=True)
class MultiplicityWitness:
    lam: Partition
    mu: Partition
    nu: Partition
    fillings: tuple[LRFilling, LRFilling]
    chain: tuple[str, ...] = ()

    def check(self) -> None:
        """Raise ValueError unless both fillings are distinct LR fillings of ``nu/lam`` with content ``mu``."""
        shape = SkewShape(self.lam, self.nu)
        for f in self.fillings:
            if f.shape != shape:
                raise ValueError(f"filling has shape {f.shape}, expected {shape}")
            ok, why = validate_filling(f)
            if not ok:
                raise ValueError(why)
            if f.content() != self.mu:
                raise ValueError(f"filling has content {f.content()}, expected {self.mu}")
        if self.fillings[0].rows == self.fillings[1].rows:
            raise ValueError("the two fillings coincide")

    def to_text(self) -> str:
        grids = "\n\n".join(format_filling(f) for f in self.fillings)
        return f"nu = {format_partition(self.nu)}\n\n{grids}\n"

    def to_dict(self) -> dict:
        return {"lam": list(self.lam), "mu": list(self.mu), "nu": list(self.nu),
                "fillings": [filling_to_dict(f) for f in self.fillings], "chain": list(self.chain)}


def format_filling(f: LRFilling) -> str:
    """Grid rows top to bottom: ``.`` for boxes of the inner shape, entries elsewhere."""
    inner = padded(f.shape.inner, len(f.shape.outer))
    return "\n".join(" ".join(["."] * inner[i] + [str(v) for v in row]) for i, row in enumerate(f.rows))


def filling_to_dict(f: LRFilling) -> dict:
    return {"inner": list(f.shape.inner), "outer": list(f.shape.outer), "rows": [list(r) for r in f.rows]}


def _witness(lam: Partition, mu: Partition, first: LRFilling, second: LRFilling,
             chain: Sequence[str] = ()) -> MultiplicityWitness:
    if first.shape != second.shape:
        raise ValueError(f"fillings have different shapes {first.shape.outer} and {second.shape.outer}")
    w = MultiplicityWitness(lam, mu, first.shape.outer, (first, second), tuple(chain))
    w.check()
    return w


def witness_from_enumeration(lam: Partition, mu: Partition, nu: Partition,
                             chain: Sequence[str] = ()) -> MultiplicityWitness:
    """The first two enumerated LR fillings of ``nu/lam``; ValueError if there are fewer."""
    found = list(islice(enumerate_lr_fillings(SkewShape(lam, nu), mu), 2))
    if len(found) < 2:
        raise ValueError(f"nu={nu} has fewer than two LR fillings over lam={lam} with content {mu}")
    return _witness(lam, mu, found[0], found[1], chain)


def find_witness(q: RichardsonQuadruple) -> Optional[MultiplicityWitness]:
    """Lexicographically least ``nu`` with coefficient at least 2, with its first two fillings."""
    expansion = expand_product(q.lam, q.mu, q.frame)
    for nu, coeff in sorted(expansion.terms.items()):
        if coeff >= 2:
            return witness_from_enumeration(q.lam, q.mu, nu, (f"brute-force search on {q}",))
    return None


def _cells_to_filling(lam: Partition, cells: Cells) -> LRFilling:
    """Left-justify ``cells`` row by row against ``lam``, keeping their left-to-right order."""
    if not cells:
        return filling_from_rows(lam, [])
    n = max(r for r, _ in cells)
    rows = [[cells[rc] for rc in sorted(k for k in cells if k[0] == i)] for i in range(1, n + 1)]
    return filling_from_rows(lam, rows)


def _filling_cells(f: LRFilling) -> Cells:
    inner = padded(f.shape.inner, len(f.shape.outer))
    return {(i + 1, inner[i] + j + 1): v for i, row in enumerate(f.rows) for j, v in enumerate(row)}


def _strip_capacities(lam: Partition, ell: int, kay: int) -> list[int]:
    """Boxes a horizontal strip can add to each row ``1..ell`` of ``lam`` inside the frame."""
    lp = padded(lam, ell)
    return [kay - lp[0]] + [lp[i - 1] - lp[i] for i in range(1, ell)]


def _distributions(caps: Sequence[int], total: int, lower: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Vectors ``lower <= t <= caps`` summing to ``total``, filling top rows first."""
    n = len(caps)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]
    t: list[int] = []

    def rec(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            if remaining == 0:
                yield tuple(t)
            return
        for x in range(min(caps[i], remaining), lower[i] - 1, -1):
            if remaining - x > suffix[i + 1]:
                break
            t.append(x)
            yield from rec(i + 1, remaining - x)
            t.pop()

    return rec(0, total)


# --- hook against a shape with two or more part sizes -------------------------------------


def _hook_label_rows(ell: int, a: int, r: int, s: int) -> Iterator[tuple[int, ...]]:
    def admissible(rows: tuple[int, ...]) -> bool:
        between = [i for i in rows if r < i < s]
        return s in rows and r not in rows and between == list(range(r + 1, r + 1 + len(between)))

    preferred = tuple(i for i in range(2, a + 3) if i != r)
    if len(preferred) == a and max(preferred, default=0) <= ell and admissible(preferred):
        yield preferred
    for rows in combinations([i for i in range(2, ell + 1) if i != r], a):
        if rows != preferred and admissible(rows):
            yield rows


def witness_hook_case(q: RichardsonQuadruple) -> MultiplicityWitness:
    """Two fillings when ``mu = (b, 1^a)`` is a hook and ``lam`` has at least two part sizes.

    First filling: a horizontal strip of ``b`` ones meeting row 1 and row ``r``
    (the first row shorter than row 1) but not filling row ``s`` (the first row
    shorter than row ``r``), plus the labels ``2..a+1`` one per row at the row
    ends.  Second filling: the last 1 of row ``r`` takes the label below it,
    the labels between ``r`` and ``s`` move up one row, and the label of row
    ``s`` becomes a 1.
    """
    lam, mu, (ell, kay) = q.lam, q.mu, q.frame
    if not is_basic(q):
        raise ValueError(f"{q} is not basic")
    if not is_hook(mu) or distinct_part_sizes(lam) < 2:
        raise ValueError(f"need a hook mu and at least two part sizes in lam, got {q}")
    b, a = mu[0], len(mu) - 1
    lp = padded(lam, ell)
    r = next(i for i in range(1, ell + 1) if lp[i - 1] < lp[0])
    s = next(i for i in range(r + 1, ell + 1) if lp[i - 1] < lp[r - 1])
    caps = _strip_capacities(lam, ell, kay)
    caps[s - 1] -= 1
    lower = [0] * ell
    lower[0] = lower[r - 1] = 1

    for label_rows in _hook_label_rows(ell, a, r, s):
        label = {row: v for v, row in enumerate(label_rows, start=2)}
        moved = [i for i in label_rows if r < i <= s]
        for ones in _distributions(caps, b, lower):
            first = [[1] * ones[i - 1] + ([label[i]] if i in label else []) for i in range(1, ell + 1)]
            second = [list(row_) for row_ in first]
            second[r - 1] = [1] * (ones[r - 1] - 1) + [label[moved[0]]]
            for this, nxt in zip(moved, moved[1:]):
                second[this - 1] = [1] * ones[this - 1] + [label[nxt]]
            second[s - 1] = [1] * (ones[s - 1] + 1)
            try:
                return _witness(lam, mu, filling_from_rows(lam, first), filling_from_rows(lam, second),
                                (f"hook construction on {q} (r={r}, s={s})",))
            except ValueError:
                continue
    raise ValueError(f"hook construction found no pair of fillings for {q}")


# --- two fat hooks, well-ordered -----------------------------------------------------------


def _special_splits(x: int, y: int) -> Iterator[tuple[list[int], list[int]]]:
    """Ways to share the set-aside labels (less the 1 of the last column) between B and A.

    Labels ``2..x`` occur twice and go to both columns; every other label goes to one of them.
    """
    single = [1] + list(range(x + 1, y + 1))
    double = list(range(2, x + 1))
    for choice in product((False, True), repeat=len(single)):
        to_a = sorted(double + [v for v, a in zip(single, choice) if a])
        to_b = sorted(double + [v for v, a in zip(single, choice) if not a])
        yield to_b, to_a


def witness_wellordered_case(q: RichardsonQuadruple) -> MultiplicityWitness:
    """Two fillings for a well-ordered pair of fat hooks, built column by column from ``rotate(mu)``.

    The columns of ``rotate(mu)`` through its corners X and Y are set aside,
    the others are repacked (order kept) into columns ``kay-mu_1 .. kay-1``
    avoiding the columns of the corners A and B of ``lam``, pushed up against
    ``lam`` and relabelled ``1..h`` downwards.  The set-aside labels fill the
    last column (a single 1) and the columns below B and A: first as
    ``2..t`` and ``1..x, t+1..y``, then as ``1..t-1`` and ``2..x, t..y``,
    where ``t = y - (a - x)``.

    Those two fillings coincide when ``t == 1`` and the second one repeats a
    label below A when ``t <= x``.  In that event every other way of sharing
    the set-aside labels between the columns below A and B is tried, and the
    first shape reached by two valid fillings wins.
    """
    lam, mu, (ell, kay) = q.lam, q.mu, q.frame
    if not is_basic(q):
        raise ValueError(f"{q} is not basic")
    if not (is_fat_hook(lam) and is_fat_hook(mu)) or not is_well_ordered(q):
        raise ValueError(f"{q} is not a well-ordered pair of fat hooks")
    (ra, ca), (rb, cb) = lam_corners(q)
    (rx, cx), (ry, cy) = mu_corners(q)
    a, x, y = ell - ra, ell - rx + 1, ell - ry + 1
    t = y - (a - x)
    lam_c, mu_c = conjugate(lam), conjugate(mu)
    heights = [part(mu_c, kay + 1 - j) for j in range(cx, kay + 1) if j not in (cx, cy)]
    targets = [j for j in range(kay - mu[0], kay) if j not in (ca, cb)]
    prescribed_pair = [(list(range(2, t + 1)), list(range(1, x + 1)) + list(range(t + 1, y + 1))),
                       (list(range(1, t)), list(range(2, x + 1)) + list(range(t, y + 1)))]
    label = f"well-ordered construction on {q} (a={a}, x={x}, y={y})"

    for chosen in combinations(targets, len(heights)):
        base: Cells = {(part(lam_c, kay) + 1, kay): 1}
        for j, h in zip(chosen, heights):
            for i in range(1, h + 1):
                base[(part(lam_c, j) + i, j)] = i

        def build(below_b: list[int], below_a: list[int]) -> Optional[LRFilling]:
            cells = dict(base)
            for r0, c0, labels in ((rb, cb, below_b), (ra, ca, below_a)):
                for i, v in enumerate(labels, start=1):
                    if (r0 + i, c0) in cells or r0 + i > ell:
                        return None
                    cells[(r0 + i, c0)] = v
            try:
                f = _cells_to_filling(lam, cells)
            except ValueError:
                return None
            return f if validate_filling(f)[0] else None

        first, second = (build(*split) for split in prescribed_pair)
        if first and second and first.shape == second.shape and first.rows != second.rows:
            return _witness(lam, mu, first, second, (label,))
        by_shape: dict[Partition, LRFilling] = {}
        for split in _special_splits(x, y):
            f = build(*split)
            if f is None:
                continue
            other = by_shape.setdefault(f.shape.outer, f)
            if other.rows != f.rows:
                return _witness(lam, mu, other, f, (label + " with a different split of the set-aside labels",))
    raise ValueError(f"well-ordered construction found no pair of fillings for {q}")


# --- many part sizes against a rectangle ---------------------------------------------------


def _two_row_witness(q: RichardsonQuadruple) -> MultiplicityWitness:
    """``mu = (g, g)``: a horizontal strip of ``g + 2`` boxes over four or more rows.

    The last strip boxes of four rows are the blanks ``B1..B4``; the other
    ``g - 2`` strip boxes hold 1 and get a 2 directly below.  The blanks are
    filled 1,1,2,2 or 1,2,1,2.
    """
    lam, mu, (ell, kay) = q.lam, q.mu, q.frame
    g = mu[0]
    caps = _strip_capacities(lam, ell, kay)
    for strip in _distributions(caps, g + 2, [0] * ell):
        used = [i for i in range(1, ell + 1) if strip[i - 1]]
        if len(used) < 4:
            continue
        for blanks in combinations(used, 4):
            ones = [strip[i - 1] - (i in blanks) for i in range(1, ell + 1)]
            if ones[-1]:
                continue
            pair = []
            for values in ((1, 1, 2, 2), (1, 2, 1, 2)):
                blank = dict(zip(blanks, values))
                rows = [[1] * ones[i - 1] + ([blank[i]] if i in blank else []) + [2] * (ones[i - 2] if i > 1 else 0)
                        for i in range(1, ell + 1)]
                try:
                    pair.append(filling_from_rows(lam, rows))
                except ValueError:
                    break
            if len(pair) < 2:
                continue
            try:
                return _witness(lam, mu, *pair, (f"two-row strip construction on {q}",))
            except ValueError:
                continue
    raise ValueError(f"two-row construction found no pair of fillings for {q}")


def _near_hook_table_witness(q: RichardsonQuadruple) -> MultiplicityWitness:
    """``lam = (kay-1, 2, 1^(ell-3))`` and ``mu = ((kay-2)^h)``: fillings given column by column.

    The second filling exchanges the contents of column 2 with another
    column.  Column ``kay - 2`` is tried first; it holds one label more than
    column 2, so the exchange changes the shape, and column ``kay - 1`` (same
    length as column 2) is used instead.
    """
    lam, mu, (ell, kay) = q.lam, q.mu, q.frame
    h = len(mu)
    columns = {kay: [1], kay - 1: list(range(2, h + 1)), 2: list(range(1, h)), 1: [h]}
    for i in range(3, kay - 1):
        columns[i] = list(range(1, h + 1))
    lam_c = conjugate(lam)

    def build(table: dict[int, list[int]]) -> LRFilling:
        cells = {(part(lam_c, j) + t, j): v for j, labels in table.items() for t, v in enumerate(labels, start=1)}
        if any(r_ > ell for r_, _ in cells):
            raise ValueError(f"column table does not fit in {q.frame}")
        return _cells_to_filling(lam, cells)

    first = build(columns)
    for other in (kay - 2, kay - 1):
        swapped = dict(columns)
        swapped[2], swapped[other] = columns[other], columns[2]
        try:
            return _witness(lam, mu, first, build(swapped),
                            (f"column-table construction on {q}, columns 2 and {other} exchanged",))
        except ValueError:
            continue
    raise ValueError(f"column-table construction found no pair of fillings for {q}")


def _is_near_hook_base(q: RichardsonQuadruple) -> bool:
    ell, kay = q.frame
    return (ell >= 3 and kay >= 5 and q.lam == partition((kay - 1, 2) + (1,) * (ell - 3))
            and is_rectangle(q.mu) and q.mu[0] == kay - 2)


def witness_caseII_base(q: RichardsonQuadruple) -> MultiplicityWitness:
    """Base configurations for ``lam`` with three or more part sizes against a rectangle ``(g^h)``.

    Handles ``h == 2`` (``g == 2`` through conjugation) and the configuration
    ``lam = (kay-1, 2, 1^(ell-3))``, ``mu = ((kay-2)^h)`` (or its conjugate).
    """
    lam, mu, (ell, kay) = q.lam, q.mu, q.frame
    if not is_basic(q):
        raise ValueError(f"{q} is not basic")
    if distinct_part_sizes(lam) < 3 or not is_rectangle(mu):
        raise ValueError(f"need three part sizes against a rectangle, got {q}")
    g, h = mu[0], len(mu)
    if not (2 <= g <= kay - 2 and 2 <= h <= ell - 2):
        raise ValueError(f"rectangle {mu} has shortness below 2 in {q.frame}")
    if h == 2:
        return _two_row_witness(q)
    if g == 2:
        nu = conjugate(_two_row_witness(q.conjugate()).nu)
        return witness_from_enumeration(lam, mu, nu, (f"two-row strip construction on conjugate of {q}",))
    if _is_near_hook_base(q):
        return _near_hook_table_witness(q)
    if _is_near_hook_base(q.conjugate()):
        nu = conjugate(_near_hook_table_witness(q.conjugate()).nu)
        return witness_from_enumeration(lam, mu, nu, (f"column-table construction on conjugate of {q}",))
    raise ValueError(f"{q} is not a base configuration; reduce it first")


# --- fat hook against a rectangle ----------------------------------------------------------


def _caseIII_tables(c: int, a: int, kay: int, g: int, h: int,
                    dropped: Sequence[int]) -> tuple[dict[int, list[int]], dict[int, list[int]]]:
    span = lambda lo, hi: list(range(lo, hi + 1))  # noqa: E731
    table = {1: [h - 1, h], 2: [h], c - 1: span(1, h - 2) + [h], c: span(2, h - 1),
             kay - 1: span(1, h - 1), kay: [1]}
    for i in range(a + 1, kay + 1):
        if i not in table and i not in dropped:
            table[i] = span(1, h)
    if g == kay - a:
        table[3], table[2], table[1] = table[2], table[1], span(1, h)
    other = {j: list(v) for j, v in table.items()}
    other[c - 1][-1], other[c][-1] = table[c][-1], table[c - 1][-1]
    return table, other


def witness_caseIII(q: RichardsonQuadruple) -> MultiplicityWitness:
    """Fat hook ``lam = (c^d, a^b)`` against ``mu = (g^h)`` with ``g <= kay - a`` and ``h < ell - d``.

    The fillings come from a column table built for ``min(h, b + 1)`` rows of
    labels; the second filling swaps the bottom entries of columns ``c - 1``
    and ``c``.  Spare columns are dropped when ``g < kay - a - 1`` and labels
    ``b+2..h`` are stacked on the first ``g`` columns when ``h > b + 1``.
    """
    lam, mu, (ell, kay) = q.lam, q.mu, q.frame
    if not is_basic(q):
        raise ValueError(f"{q} is not basic")
    if not (is_fat_hook(lam) and shortness(lam, q.frame) >= 2 and is_rectangle(mu)):
        raise ValueError(f"need a fat hook of shortness >= 2 against a rectangle, got {q}")
    c, a = lam[0], lam[-1]
    d, b = lam.count(c), lam.count(a)
    g, h = mu[0], len(mu)
    if not (3 <= g <= kay - 3 and 3 <= h <= ell - 3):
        raise ValueError(f"rectangle {mu} has shortness below 3 in {q.frame}")
    if not (g <= kay - a and h < ell - d):
        raise ValueError(f"{q} needs g <= kay - a and h < ell - d; reduce it first")
    if g == kay - a and a < 3:
        raise ValueError(f"{q} has g = kay - a with a < 3")
    base_h = min(h, b + 1)
    spare = [i for i in range(a + 1, kay + 1) if i not in (c - 1, c, kay - 1, kay)]
    n_drop = max(0, kay - a - 1 - g)
    lam_c = conjugate(lam)

    for dropped in combinations(spare, n_drop):
        pair = []
        for table in _caseIII_tables(c, a, kay, g, base_h, dropped):
            cells = {(part(lam_c, j) + t, j): v for j, labels in table.items() for t, v in enumerate(labels, start=1)}
            try:
                f = _cells_to_filling(lam, cells)
            except ValueError:
                break
            if h > base_h:
                cells = _filling_cells(f)
                outer_c = conjugate(f.shape.outer)
                for j in range(1, g + 1):
                    for t, v in enumerate(range(b + 2, h + 1), start=1):
                        cells[(part(outer_c, j) + t, j)] = v
                try:
                    f = _cells_to_filling(lam, cells)
                except ValueError:
                    break
            if len(f.shape.outer) > ell or (f.shape.outer and f.shape.outer[0] > kay):
                break
            pair.append(f)
        if len(pair) < 2:
            continue
        try:
            return _witness(lam, mu, *pair, (f"fat-hook/rectangle column table on {q} (c={c}, d={d}, a={a}, b={b})",))
        except ValueError:
            continue
    raise ValueError(f"fat-hook/rectangle construction found no pair of fillings for {q}")


# --- lifting shapes back through demolitions -----------------------------------------------


def lift_basic(q: RichardsonQuadruple, nu: Partition) -> Partition:
    """Carry ``nu`` from the basic demolition of ``q`` back to ``q``; coefficients are unchanged.

    Each deleted full column widens every row of ``nu`` by one and each deleted
    full row comes back as a row of full length.
    """
    lines = full_lines(q)
    n_rows = sum(1 for line in lines if line.axis is Axis.ROW)
    n_cols = len(lines) - n_rows
    return partition((q.kay,) * n_rows + tuple(v + n_cols for v in padded(nu, q.ell - n_rows)))


def _insert(nu: Partition, p: int) -> Partition:
    return tuple(sorted(nu + (p,), reverse=True)) if p else nu


def lift_stembridge(q: RichardsonQuadruple, lines: Sequence[LineRef], nu: Partition) -> Partition:
    """Carry ``nu`` back through the Stembridge demolition of ``lines``: each removed part returns.

    The coefficient can only grow along the way.
    """
    removed = []
    current = q
    for line in sorted(lines, key=lambda l: (l.axis is Axis.COLUMN, -l.index)):
        if line.axis is Axis.ROW:
            p = part(current.lam, line.index) + part(current.mu, current.ell + 1 - line.index)
        else:
            p = part(conjugate(current.lam), line.index) + part(conjugate(current.mu), current.kay + 1 - line.index)
        removed.append((line.axis, p))
        current = delete_line(current, line)
    for axis, p in reversed(removed):
        nu = _insert(nu, p) if axis is Axis.ROW else conjugate(_insert(conjugate(nu), p))
    return nu


# --- the reduction driver ------------------------------------------------------------------


def _construct(q: RichardsonQuadruple, case: Case, chain: list[str]) -> Optional[Partition]:
    """A witness shape for the basic ``q`` straight from a construction, or None."""
    if case is Case.I:
        red = propose_reduction(q)
        if isinstance(red, InductiveLine):
            smaller = stembridge_demolish_all(q, red.lines)
            chain.append(f"inductive Stembridge demolition of {', '.join(map(str, red.lines))}: {q} -> {smaller}")
            return lift_stembridge(q, red.lines, _reduce(smaller, chain))
        attempts = []
        if isinstance(red, HookCase):
            attempts = [(witness_hook_case, q if red.shape == "mu" else q.swap(), False)]
        elif isinstance(red, WellOrdered):
            attempts = [(witness_wellordered_case, q.conjugate() if red.conjugated else q, red.conjugated)]
    elif case is Case.II:
        attempts = [(witness_caseII_base, q, False)]
    elif case is Case.III:
        attempts = [(witness_caseIII, q, False), (witness_caseIII, q.conjugate(), True)]
    else:
        chain.append(f"swap the shapes: {q} -> {q.swap()}")
        return _reduce(q.swap(), chain)
    for build, target, conjugated in attempts:
        try:
            w = build(target)
        except ValueError:
            continue
        chain.extend(w.chain)
        return conjugate(w.nu) if conjugated else w.nu
    return None


def _demolition_steps(q: RichardsonQuadruple):
    for line in empty_lines(q):
        yield f"emptiness demolition of {line}", remove_empty_line(q, line), (lambda nu: nu)
    candidates = stembridge_lines(q)
    for n in (1, 2):
        for lines in combinations(candidates, n):
            yield (f"Stembridge demolition of {', '.join(map(str, lines))}", stembridge_demolish_all(q, lines),
                   (lambda nu, lines=lines: lift_stembridge(q, lines, nu)))


def _reduce(q: RichardsonQuadruple, chain: list[str]) -> Partition:
    """A shape ``nu`` in the frame of ``q`` whose coefficient is at least 2."""
    if not is_basic(q):
        smaller = basic_demolition(q)
        chain.append(f"basic demolition: {q} -> {smaller}")
        return lift_basic(q, _reduce(smaller, chain))
    case = theorem1prime_case(q)
    if case is None:
        raise ValueError(f"{q} is multiplicity-free")
    nu = _construct(q, case, chain)
    if nu is not None:
        return nu
    # any demolition landing in the same case, else any that keeps multiplicity
    steps = list(_demolition_steps(q))
    for same_case in (True, False):
        for label, smaller, lift in steps:
            demolished = basic_demolition(smaller)
            if demolished.ell == 0 or demolished.kay == 0:
                continue
            new_case = theorem1prime_case(demolished)
            if new_case is None or (same_case and not satisfies_case(demolished, case)):
                continue
            chain.append(f"{label}: {q} -> {smaller}")
            return lift(_reduce(smaller, chain))
    chain.append(f"fallback: brute-force search on {q}")
    w = find_witness(q)
    if w is None:
        raise RuntimeError(f"{q} was classified with multiplicity but search found none")
    return w.nu


def witness_via_reduction(q: RichardsonQuadruple) -> MultiplicityWitness:
    """Demolish down to a base configuration, build a witness there and carry its shape back."""
    if not classify(q.lam, q.mu, q.frame).has_multiplicity:
        raise ValueError(f"{q} is multiplicity-free")
    chain: list[str] = []
    nu = _reduce(q, chain)
    try:
        return witness_from_enumeration(q.lam, q.mu, nu, chain)
    except ValueError as exc:
        raise RuntimeError(f"lifted shape {nu} is not a witness for {q}; chain: {chain}") from exc
