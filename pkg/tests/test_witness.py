import pytest

from mfschubert.classifier import classify
from mfschubert.demolition import (
    RichardsonQuadruple,
    basic_demolition,
    column,
    is_well_ordered,
    richardson_quadruples,
    stembridge_demolish,
)
from mfschubert.lr_engine import LRFilling, SkewShape, filling_from_rows, lr_coefficient, validate_filling
from mfschubert.partition import Frame, is_fat_hook
from mfschubert.witness import (
    MultiplicityWitness,
    find_witness,
    format_filling,
    lift_basic,
    lift_stembridge,
    witness_caseII_base,
    witness_caseIII,
    witness_hook_case,
    witness_via_reduction,
    witness_wellordered_case,
)

HOOK_EXAMPLE = RichardsonQuadruple((11, 11, 11, 7, 7, 4, 4, 2, 2), (12,) + (1,) * 9, Frame(11, 13))
FIRST_WORD = (1, 1, 2, 3, 1, 1, 1, 1, 4, 5, 1, 1, 6, 7, 1, 1, 8, 9, 1, 1, 10)
SECOND_WORD = (1, 1, 2, 3, 4, 1, 1, 1, 5, 1, 1, 1, 6, 7, 1, 1, 8, 9, 1, 1, 10)


def Q(lam, mu, ell, kay):
    return RichardsonQuadruple(lam, mu, Frame(ell, kay))


def assert_sound(q, w):
    """Both fillings validate on their own, and the engine agrees nu has coefficient >= 2."""
    assert (w.lam, w.mu) == (q.lam, q.mu)
    assert len(w.nu) <= q.ell and w.nu[0] <= q.kay
    for f in w.fillings:
        assert f.shape == SkewShape(q.lam, w.nu)
        assert validate_filling(f) == (True, "ok")
        assert f.content() == q.mu
    assert w.fillings[0].rows != w.fillings[1].rows
    assert lr_coefficient(q.lam, q.mu, w.nu, cap=2) == 2


def test_hook_construction_reproduces_both_reading_words():
    w = witness_hook_case(HOOK_EXAMPLE)
    assert [f.reading_word() for f in w.fillings] == [FIRST_WORD, SECOND_WORD]
    assert w.nu == (13, 12, 12, 11, 8, 7, 5, 5, 3, 3, 1)
    assert_sound(HOOK_EXAMPLE, w)


def test_first_hook_filling_validates():
    first = witness_hook_case(HOOK_EXAMPLE).fillings[0]
    rebuilt = filling_from_rows(HOOK_EXAMPLE.lam, first.rows)
    assert validate_filling(rebuilt) == (True, "ok")


@pytest.mark.parametrize("q", [Q((2, 1), (2, 1), 4, 4), Q((3, 3, 1), (3, 1), 5, 5), Q((2, 1), (2, 1), 3, 3)])
def test_hook_construction_small(q):
    assert_sound(q, witness_hook_case(q))


def test_hook_construction_preconditions():
    with pytest.raises(ValueError):
        witness_hook_case(Q((3, 3), (3, 1), 5, 5))
    with pytest.raises(ValueError):
        witness_hook_case(Q((4, 4, 2, 2), (3, 3, 3), 6, 6))


def test_well_ordered_construction_when_the_two_prescribed_fillings_coincide():
    q = Q((3, 2), (3, 2), 4, 4)
    w = witness_wellordered_case(q)
    assert w.nu == (4, 3, 2, 1)
    assert "different split" in w.chain[0]
    assert_sound(q, w)


def test_well_ordered_construction_sweep_up_to_6x6():
    count = 0
    for ell in range(2, 7):
        for kay in range(2, 7):
            for q in richardson_quadruples(Frame(ell, kay)):
                if is_fat_hook(q.lam) and is_fat_hook(q.mu) and classify(q.lam, q.mu, q.frame).demolished == q \
                        and is_well_ordered(q):
                    assert_sound(q, witness_wellordered_case(q))
                    count += 1
    assert count > 100


def test_well_ordered_construction_rejects_other_shapes():
    with pytest.raises(ValueError):
        witness_wellordered_case(Q((3, 2, 1), (3, 2), 5, 5))


def test_column_table_base_configuration():
    # lam = (k-1, 2, 1^(l-3)), mu = ((k-2)^h) with l=6, k=5, h=3
    q = Q((4, 2, 1, 1, 1), (3, 3, 3), 6, 5)
    w = witness_caseII_base(q)
    assert w.nu == (5, 4, 4, 3, 1, 1)
    assert_sound(q, w)


def test_two_row_base_configuration_and_its_conjugate():
    q = Q((4, 2, 1), (3, 3), 6, 6)
    w = witness_caseII_base(q)
    assert w.nu == (6, 4, 2, 1)
    assert_sound(q, w)
    w = witness_caseII_base(q.conjugate())
    assert "conjugate" in w.chain[0]
    assert_sound(q.conjugate(), w)


def test_non_base_configurations_are_refused():
    with pytest.raises(ValueError, match="base configuration"):
        witness_caseII_base(Q((3, 2, 1), (3, 3, 3), 5, 5))


def test_fat_hook_rectangle_table_example():
    q = Q((8, 8, 3, 3, 3, 3, 3), (7, 7, 7, 7, 7), 12, 11)
    w = witness_caseIII(q)
    assert w.nu == (11, 10, 10, 10, 9, 7, 6, 2, 1)
    first, second = w.fillings
    # the two fillings differ only in the bottom entries of columns 7 and 8, swapped
    diff = [(i, j) for i in range(1, 10) for j in range(1, 12) if first.entry(i, j) != second.entry(i, j)]
    assert diff == [(5, 8), (6, 7)]
    assert (first.entry(5, 8), first.entry(6, 7)) == (second.entry(6, 7), second.entry(5, 8))
    assert_sound(q, w)


@pytest.mark.parametrize("q, nu", [
    (Q((4, 4, 2, 2), (3, 3, 3), 8, 8), (6, 5, 4, 3, 2, 1)),         # h = b+1, g < k-a-1
    (Q((4, 4, 2, 2), (5, 5, 5), 8, 8), (8, 7, 6, 3, 2, 1)),         # h = b+1
    (Q((4, 4, 2, 2), (3, 3, 3, 3), 8, 8), (6, 5, 4, 3, 3, 2, 1)),   # h > b+1
    (Q((4, 4, 2, 2, 2), (3, 3, 3), 8, 8), (6, 5, 4, 3, 2, 2, 1)),   # h <= b, g < k-a-1
])
def test_fat_hook_rectangle_table_variants(q, nu):
    w = witness_caseIII(q)
    assert w.nu == nu
    assert_sound(q, w)


def test_lifting_through_the_column_three_chain():
    q = Q((4, 2, 2, 1), (2, 2, 2), 5, 5)
    step = stembridge_demolish(q, column(3))
    assert step == Q((3, 2, 2, 1), (2, 2, 2), 5, 4)
    base = basic_demolition(step)
    assert base == Q((3, 2, 1), (2, 2), 4, 4)
    w = witness_caseII_base(base)
    assert_sound(base, w)
    nu = lift_stembridge(q, [column(3)], lift_basic(step, w.nu))
    assert lr_coefficient(q.lam, q.mu, nu, cap=2) == 2


@pytest.mark.parametrize("q", [
    Q((4, 2, 2, 1), (2, 2, 2), 5, 5),
    Q((6, 5, 4, 3, 2, 1, 1), (7, 6, 6, 6, 5, 2), 7, 9),
    Q((4, 4, 2, 2), (3, 3, 3), 6, 6),
    Q((3, 3, 3), (4, 4, 2, 2), 6, 6),
])
def test_witness_via_reduction(q):
    w = witness_via_reduction(q)
    assert_sound(q, w)
    assert w.chain and not any(step.startswith("fallback") for step in w.chain)


def test_reduction_chain_for_the_staircase_example():
    w = witness_via_reduction(Q((6, 5, 4, 3, 2, 1, 1), (7, 6, 6, 6, 5, 2), 7, 9))
    assert w.chain[0].startswith("basic demolition")
    assert w.chain[-1].startswith("hook construction")
    assert w.nu == (9, 9, 9, 8, 8, 6, 5)


def test_witness_via_reduction_refuses_multiplicity_free_input():
    with pytest.raises(ValueError):
        witness_via_reduction(Q((4, 4, 2, 2, 2), (3, 3, 3), 6, 6))


def test_reduction_covers_every_multiplicity_quadruple_up_to_4x5():
    for ell in range(1, 5):
        for kay in range(1, 6):
            for q in richardson_quadruples(Frame(ell, kay)):
                if classify(q.lam, q.mu, q.frame).has_multiplicity:
                    w = witness_via_reduction(q)
                    assert not any(step.startswith("fallback") for step in w.chain)


def test_find_witness_examples():
    w = find_witness(Q((4, 4, 2, 2), (3, 3, 3), 6, 6))
    assert w.nu == (6, 5, 4, 3, 2, 1)
    assert_sound(Q((4, 4, 2, 2), (3, 3, 3), 6, 6), w)
    assert find_witness(Q((2, 2), (3, 3), 5, 6)) is None
    q = Q((4, 3, 2, 1), (4, 4, 2, 2, 1), 6, 5)
    w = find_witness(q)
    assert w.nu <= (5, 4, 4, 4, 4, 2)
    assert_sound(q, w)


def test_find_witness_is_absent_exactly_when_multiplicity_free_up_to_4x4():
    for ell in range(1, 5):
        for kay in range(1, 5):
            for q in richardson_quadruples(Frame(ell, kay)):
                assert (find_witness(q) is not None) == classify(q.lam, q.mu, q.frame).has_multiplicity


def test_check_rejects_equal_or_invalid_fillings():
    f = filling_from_rows((1,), [(1,), (1,)])
    with pytest.raises(ValueError, match="coincide"):
        MultiplicityWitness((1,), (2,), (2, 1), (f, f)).check()
    bad = LRFilling(SkewShape((), (1,)), ((2,),))
    with pytest.raises(ValueError):
        MultiplicityWitness((), (1,), (1,), (bad, bad)).check()


def test_text_and_json_formats():
    w = find_witness(Q((4, 4, 2, 2), (3, 3, 3), 6, 6))
    text = w.to_text()
    assert text.startswith("nu = 6,5,4,3,2,1\n\n")
    first_grid = format_filling(w.fillings[0]).splitlines()
    assert first_grid[0].startswith(". . . .")
    assert len(first_grid) == 6
    d = w.to_dict()
    assert d["nu"] == [6, 5, 4, 3, 2, 1]
    assert d["fillings"][0]["inner"] == [4, 4, 2, 2]
    assert d["fillings"][0]["outer"] == [6, 5, 4, 3, 2, 1]
    assert format_filling(filling_from_rows((2, 1), [(1,), (2,)])) == ". . 1\n. 2"
