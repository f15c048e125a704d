"""Exhaustive cross-check of the classifier against brute-force LR enumeration.

Work is split by ``(frame, lam)``; each item checks every partner ``mu``.
Results are merged in a fixed order, so the report does not depend on how
many worker processes ran.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .classifier import classify
from .demolition import (
    RichardsonQuadruple,
    basic_demolition,
    empty_lines,
    is_basic,
    remove_empty_line,
    stembridge_demolish,
    stembridge_lines,
)
from .lr_engine import expand_product, has_multiplicity_bruteforce
from .partition import Frame, Partition, format_partition, overlaps, partitions_in_frame

Mismatch = tuple[Partition, Partition, Frame, str, str]


@dataclass
class VerifyReport:
    frames: list[Frame] = field(default_factory=list)
    pairs: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    invariant_failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.invariant_failures

    def to_text(self, timing: bool = False) -> str:
        lines = [f"frames: {len(self.frames)}", f"pairs: {self.pairs}",
                 f"mismatches: {len(self.mismatches)}", f"invariant failures: {len(self.invariant_failures)}"]
        for lam, mu, frame, got, want in self.mismatches:
            lines.append(f"MISMATCH ({format_partition(lam)}) ({format_partition(mu)}) {frame}: "
                         f"classify={got} bruteforce={want}")
        lines.extend(f"INVARIANT {msg}" for msg in self.invariant_failures)
        if timing:
            lines.append(f"elapsed: {self.elapsed:.1f}s")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "frames": [[f.ell, f.kay] for f in self.frames],
            "pairs": self.pairs,
            "mismatches": [{"lam": list(lam), "mu": list(mu), "frame": [f.ell, f.kay], "classify": got,
                            "bruteforce": want} for lam, mu, f, got, want in self.mismatches],
            "invariant_failures": list(self.invariant_failures),
        }


def _outcome(flag: bool) -> str:
    return "has_multiplicity" if flag else "multiplicity_free"


def demolition_invariant_failures(q: RichardsonQuadruple) -> list[str]:
    """Check the three demolition facts on ``q`` against brute force; return what failed."""
    failures = []
    multiple = has_multiplicity_bruteforce(q.lam, q.mu, q.frame)
    demolished = basic_demolition(q)
    if not is_basic(demolished):
        failures.append(f"{q}: basic demolition {demolished} is not basic")
    if has_multiplicity_bruteforce(demolished.lam, demolished.mu, demolished.frame) != multiple:
        failures.append(f"{q}: basic demolition {demolished} changes the verdict")
    expansion = expand_product(q.lam, q.mu, q.frame).terms
    for line in empty_lines(q):
        smaller = remove_empty_line(q, line)
        if expand_product(smaller.lam, smaller.mu, smaller.frame).terms != expansion:
            failures.append(f"{q}: removing empty {line} changes the expansion")
    if not multiple:
        for line in stembridge_lines(q):
            smaller = stembridge_demolish(q, line)
            if has_multiplicity_bruteforce(smaller.lam, smaller.mu, smaller.frame):
                failures.append(f"{q}: Stembridge demolition of {line} creates multiplicity")
    return failures


def _check_row(item: tuple[Frame, Partition, bool]) -> tuple[int, list[Mismatch], list[str]]:
    frame, lam, invariants = item
    pairs, mismatches, failures = 0, [], []
    for mu in partitions_in_frame(frame):
        if overlaps(lam, mu, frame):
            continue
        pairs += 1
        got = classify(lam, mu, frame).has_multiplicity
        want = has_multiplicity_bruteforce(lam, mu, frame)
        if got != want:
            mismatches.append((lam, mu, frame, _outcome(got), _outcome(want)))
        if invariants:
            failures.extend(demolition_invariant_failures(RichardsonQuadruple(lam, mu, frame)))
    return pairs, mismatches, failures


def run_verify(max_ell: int, max_kay: int, jobs: int = 1, invariants: bool = True) -> VerifyReport:
    """Sweep every frame up to ``max_ell x max_kay`` and every non-overlapping pair in it."""
    if max_ell < 1 or max_kay < 1:
        raise ValueError("frame bounds must be at least 1")
    start = time.perf_counter()
    frames = [Frame(ell, kay) for ell in range(1, max_ell + 1) for kay in range(1, max_kay + 1)]
    items = [(frame, lam, invariants) for frame in frames for lam in partitions_in_frame(frame)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_row, items, chunksize=16))
    else:
        results = [_check_row(item) for item in items]
    report = VerifyReport(frames=frames)
    for pairs, mismatches, failures in results:
        report.pairs += pairs
        report.mismatches.extend(mismatches)
        report.invariant_failures.extend(failures)
    report.elapsed = time.perf_counter() - start
    return report
