import json

import pytest
from hypothesis import given, settings, strategies as st

from mfschubert.classifier import (
    Case,
    Outcome,
    Reason,
    classify,
    classify_gl,
    gl_frame,
    multiplicity_free_pairs,
    satisfies_case,
    satisfies_reason,
    theorem1_condition,
    theorem1prime_case,
)
from mfschubert.demolition import RichardsonQuadruple, basic_demolition, is_basic, richardson_quadruples
from mfschubert.lr_engine import has_multiplicity_bruteforce, lr_coefficient
from mfschubert.partition import Frame, conjugate, overlaps, partitions_in_frame


def Q(lam, mu, ell, kay):
    return RichardsonQuadruple(lam, mu, Frame(ell, kay))


@pytest.mark.parametrize("q, reason", [
    (Q((4, 4, 2, 2, 2), (3, 3, 3), 6, 6), Reason.III),
    (Q((4, 4, 2, 2), (3, 3, 3), 6, 6), None),
    (Q((2, 2), (3, 3), 5, 6), Reason.IV),
    (Q((1,), (1,), 2, 2), Reason.I),
    (Q((2, 2), (3, 1), 4, 4), Reason.II),
])
def test_free_condition(q, reason):
    assert theorem1_condition(q) is reason


def test_free_condition_preconditions():
    with pytest.raises(ValueError):
        theorem1_condition(Q((), (1,), 2, 2))
    with pytest.raises(ValueError):
        theorem1_condition(Q((6, 5, 4, 3, 2, 1, 1), (7, 6, 6, 6, 5, 2), 7, 9))


@pytest.mark.parametrize("q, case", [
    (Q((3, 2, 1), (5, 4, 4, 2), 5, 6), Case.I),
    (Q((4, 4, 2, 2), (3, 3, 3), 6, 6), Case.III),
    (Q((1,), (1,), 2, 2), None),
    (Q((4, 2, 1, 1), (3, 3, 3), 6, 5), Case.II),
    (Q((3, 3, 3), (4, 4, 2, 2), 6, 6), Case.IV),
    (Q((), (), 1, 1), None),
])
def test_multiplicity_case(q, case):
    assert theorem1prime_case(q) is case
    assert has_multiplicity_bruteforce(q.lam, q.mu, q.frame) is (case is not None)


def test_three_part_size_pair_has_multiplicity_by_brute_force():
    assert has_multiplicity_bruteforce((3, 2, 1), (5, 4, 4, 2), Frame(5, 6))


def test_case_lookup_needs_basic_input():
    with pytest.raises(ValueError):
        theorem1prime_case(Q((6, 5, 4, 3, 2, 1, 1), (7, 6, 6, 6, 5, 2), 7, 9))


def test_classify_examples():
    v = classify((4, 3, 2, 1), (4, 4, 2, 2, 1), Frame(5, 5))
    assert v.outcome is Outcome.MULTIPLICITY_FREE
    assert v.reason is Reason.I
    assert v.demolished == Q((1,), (1,), 2, 2)

    v = classify((4, 3, 2, 1), (4, 4, 2, 2, 1), Frame(6, 5))
    assert v.has_multiplicity

    v = classify((6, 5, 4, 3, 2, 1, 1), (7, 6, 6, 6, 5, 2), Frame(7, 9))
    assert v.outcome is Outcome.HAS_MULTIPLICITY and v.case is Case.I
    assert v.demolished == Q((3, 2, 1), (5, 4, 4, 2), 5, 6)

    v = classify((3,), (3,), Frame(1, 5))
    assert v.outcome is Outcome.ZERO_PRODUCT and v.demolished is None

    v = classify((4, 4, 2, 2, 2), (3, 3, 3), Frame(6, 6))
    assert v.outcome is Outcome.MULTIPLICITY_FREE and v.reason is Reason.III


def test_classify_tiling_is_empty_shape():
    v = classify((2, 2), (1, 1), Frame(2, 3))
    assert v.outcome is Outcome.MULTIPLICITY_FREE and v.reason is Reason.EMPTY_SHAPE


def test_classify_rejects_misfit():
    with pytest.raises(ValueError):
        classify((3,), (), Frame(2, 2))


def test_classify_gl():
    assert gl_frame((4, 3, 2, 1), (4, 4, 2, 2, 1)) == Frame(9, 8)
    assert classify_gl((4, 3, 2, 1), (4, 4, 2, 2, 1)).has_multiplicity
    assert lr_coefficient((4, 3, 2, 1), (4, 4, 2, 2, 1), (5, 4, 4, 4, 4, 2)) == 3
    v = classify_gl((3, 1), ())
    assert v.outcome is Outcome.MULTIPLICITY_FREE and v.reason is Reason.EMPTY_SHAPE
    assert classify_gl((1,), (1,)).outcome is Outcome.MULTIPLICITY_FREE


def test_verdict_reason_and_case_hold_on_the_demolished_quadruple():
    for ell in range(1, 5):
        for kay in range(1, 5):
            for q in richardson_quadruples(Frame(ell, kay)):
                v = classify(q.lam, q.mu, q.frame)
                assert v.demolished == basic_demolition(q)
                if v.case is not None:
                    assert satisfies_case(v.demolished, v.case)
                else:
                    assert satisfies_reason(v.demolished, v.reason)


def test_verdict_json():
    v = classify((4, 3, 2, 1), (4, 4, 2, 2, 1), Frame(5, 5))
    assert json.loads(json.dumps(v.to_dict())) == {
        "outcome": "multiplicity_free", "reason": "I", "case": None,
        "demolished": {"lam": [1], "mu": [1], "frame": [2, 2]},
    }
    assert classify((3,), (3,), Frame(1, 5)).to_dict() == {
        "outcome": "zero_product", "reason": None, "case": None, "demolished": None}
    assert classify((4, 4, 2, 2), (3, 3, 3), Frame(6, 6)).to_dict()["case"] == "III'"


@st.composite
def framed_pair(draw):
    frame = Frame(draw(st.integers(1, 7)), draw(st.integers(1, 7)))
    shapes = list(partitions_in_frame(frame))
    lam, mu = draw(st.sampled_from(shapes)), draw(st.sampled_from(shapes))
    return lam, mu, frame


@settings(max_examples=200, deadline=None)
@given(framed_pair())
def test_classify_symmetries(case):
    lam, mu, frame = case
    outcome = classify(lam, mu, frame).outcome
    assert classify(mu, lam, frame).outcome is outcome
    assert classify(conjugate(lam), conjugate(mu), frame.transpose()).outcome is outcome
    if not overlaps(lam, mu, frame):
        small = basic_demolition(RichardsonQuadruple(lam, mu, frame))
        assert classify(small.lam, small.mu, small.frame).outcome is outcome


def test_classify_matches_brute_force_up_to_4x4():
    for ell in range(1, 5):
        for kay in range(1, 5):
            for q in richardson_quadruples(Frame(ell, kay)):
                assert classify(q.lam, q.mu, q.frame).has_multiplicity == \
                    has_multiplicity_bruteforce(q.lam, q.mu, q.frame)


def test_conditions_and_cases_are_complementary_up_to_4x4():
    for ell in range(1, 5):
        for kay in range(1, 5):
            for q in richardson_quadruples(Frame(ell, kay)):
                if is_basic(q) and q.lam and q.mu:
                    assert (theorem1_condition(q) is None) != (theorem1prime_case(q) is None)


def test_multiplicity_free_pairs():
    frame = Frame(2, 2)
    shapes = list(partitions_in_frame(frame))
    every = sorted((l, m) for l in shapes for m in shapes if not overlaps(l, m, frame))
    assert sorted(multiplicity_free_pairs(frame)) == every
    assert len(every) == 20
    basic = list(multiplicity_free_pairs(Frame(3, 3), basic_only=True))
    assert all(is_basic(Q(l, m, 3, 3)) for l, m in basic)
    assert ((1,), (1,)) in basic and ((3,), ()) not in basic
