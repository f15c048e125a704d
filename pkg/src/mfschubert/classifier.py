"""Closed-form multiplicity-freeness verdicts.

The decision is made on the basic demolition of the quadruple.  There, a
product has multiplicity exactly when one of four shape cases holds (``Case``);
when none does, the product is multiplicity-free and one of the four
complementary conditions (``Reason``) names why.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional

from .demolition import RichardsonQuadruple, basic_demolition, is_basic
from .partition import (
    Frame,
    Partition,
    distinct_part_sizes,
    fits,
    is_fat_hook,
    is_rectangle,
    overlaps,
    partitions_in_frame,
    shortness,
)


class Case(enum.Enum):
    """Shape cases that force multiplicity on a basic quadruple."""

    I = "I'"
    II = "II'"
    III = "III'"
    IV = "IV'"


class Reason(enum.Enum):
    """Why a basic quadruple is multiplicity-free."""

    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    EMPTY_SHAPE = "empty_shape"


class Outcome(enum.Enum):
    MULTIPLICITY_FREE = "multiplicity_free"
    HAS_MULTIPLICITY = "has_multiplicity"
    ZERO_PRODUCT = "zero_product"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    reason: Optional[Reason] = None
    case: Optional[Case] = None
    demolished: Optional[RichardsonQuadruple] = None

    @property
    def has_multiplicity(self) -> bool:
        return self.outcome is Outcome.HAS_MULTIPLICITY

    def to_dict(self) -> dict:
        d = self.demolished
        return {
            "outcome": self.outcome.value,
            "reason": self.reason.value if self.reason else None,
            "case": self.case.value if self.case else None,
            "demolished": None if d is None else {"lam": list(d.lam), "mu": list(d.mu), "frame": [d.ell, d.kay]},
        }


def _degenerate(frame: Frame) -> bool:
    return frame.ell == 0 or frame.kay == 0


def _many_vs_rectangle(big: Partition, rect: Partition, frame: Frame) -> bool:
    return distinct_part_sizes(big) >= 3 and is_rectangle(rect) and shortness(rect, frame) >= 2


def _fat_hook_vs_rectangle(hook: Partition, rect: Partition, frame: Frame) -> bool:
    return (is_fat_hook(hook) and shortness(hook, frame) >= 2
            and is_rectangle(rect) and shortness(rect, frame) >= 3)


def satisfies_case(q: RichardsonQuadruple, case: Case) -> bool:
    """Whether the shapes of ``q`` meet ``case``; basicness is not checked here."""
    lam, mu, frame = q.lam, q.mu, q.frame
    if _degenerate(frame):
        return False
    if case is Case.I:
        return distinct_part_sizes(lam) >= 2 and distinct_part_sizes(mu) >= 2
    if case is Case.II:
        return _many_vs_rectangle(lam, mu, frame)
    if case is Case.III:
        return _fat_hook_vs_rectangle(lam, mu, frame)
    return _many_vs_rectangle(mu, lam, frame) or _fat_hook_vs_rectangle(mu, lam, frame)


def theorem1prime_case(q: RichardsonQuadruple) -> Optional[Case]:
    """First case among I'..IV' met by the basic quadruple ``q``, or None."""
    if not is_basic(q):
        raise ValueError(f"{q} is not basic")
    for case in Case:
        if satisfies_case(q, case):
            return case
    return None


def satisfies_reason(q: RichardsonQuadruple, reason: Reason) -> bool:
    lam, mu, frame = q.lam, q.mu, q.frame
    if reason is Reason.EMPTY_SHAPE:
        return not lam or not mu or _degenerate(frame)
    if not lam or not mu:
        return False

    def rect(p: Partition, sh: Optional[int] = None) -> bool:
        return is_rectangle(p) and (sh is None or shortness(p, frame) == sh)

    def fat(p: Partition, sh: Optional[int] = None) -> bool:
        return is_fat_hook(p) and (sh is None or shortness(p, frame) == sh)

    if reason is Reason.I:
        return rect(lam, 1) or rect(mu, 1)
    if reason is Reason.II:
        return (rect(lam, 2) and fat(mu)) or (rect(mu, 2) and fat(lam))
    if reason is Reason.III:
        return (rect(lam) and fat(mu, 1)) or (rect(mu) and fat(lam, 1))
    return rect(lam) and rect(mu)


def theorem1_condition(q: RichardsonQuadruple) -> Optional[Reason]:
    """First of the conditions I..IV making the basic quadruple ``q`` multiplicity-free."""
    if not is_basic(q):
        raise ValueError(f"{q} is not basic")
    if not q.lam or not q.mu:
        raise ValueError(f"conditions I-IV need two nonempty shapes, got {q}")
    for reason in (Reason.I, Reason.II, Reason.III, Reason.IV):
        if satisfies_reason(q, reason):
            return reason
    return None


def classify(lam: Partition, mu: Partition, frame: Frame) -> Verdict:
    frame = Frame(*frame)
    for shape in (lam, mu):
        if not fits(shape, frame):
            raise ValueError(f"{shape} does not fit in {frame}")
    if overlaps(lam, mu, frame):
        return Verdict(Outcome.ZERO_PRODUCT)
    demolished = basic_demolition(RichardsonQuadruple(lam, mu, frame))
    case = theorem1prime_case(demolished)
    if case is not None:
        return Verdict(Outcome.HAS_MULTIPLICITY, case=case, demolished=demolished)
    if satisfies_reason(demolished, Reason.EMPTY_SHAPE):
        return Verdict(Outcome.MULTIPLICITY_FREE, reason=Reason.EMPTY_SHAPE, demolished=demolished)
    reason = theorem1_condition(demolished)
    if reason is None:
        raise RuntimeError(f"{demolished} meets neither the multiplicity cases nor conditions I-IV")
    return Verdict(Outcome.MULTIPLICITY_FREE, reason=reason, demolished=demolished)


def gl_frame(lam: Partition, mu: Partition) -> Frame:
    """A frame large enough that no term of the product is truncated."""
    return Frame(len(lam) + len(mu), (lam[0] if lam else 0) + (mu[0] if mu else 0))


def classify_gl(lam: Partition, mu: Partition) -> Verdict:
    return classify(lam, mu, gl_frame(lam, mu))


def multiplicity_free_pairs(frame: Frame, basic_only: bool = False) -> Iterator[tuple[Partition, Partition]]:
    """Non-overlapping pairs in ``frame`` whose product is multiplicity-free, in lexicographic order."""
    frame = Frame(*frame)
    shapes = list(partitions_in_frame(frame))
    for lam in shapes:
        for mu in shapes:
            if overlaps(lam, mu, frame):
                continue
            if basic_only and not is_basic(RichardsonQuadruple(lam, mu, frame)):
                continue
            if not classify(lam, mu, frame).has_multiplicity:
                yield lam, mu
