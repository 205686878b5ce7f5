import numpy as np
import pytest
from hypothesis import given, strategies as st

from invlift.root_datum import build_root_datum
from invlift.weyl_group import (
    BudgetExceeded,
    WeylElem,
    all_elements,
    central_parabolics,
    descent_decompose,
    eigen_subsystem,
    enumerate_involutions,
    longest_element,
    parse_word,
    reflection,
    word_str,
)

# telephone numbers for A_l; the rest are classical counts
INVOLUTION_COUNTS = {"A1": 2, "A2": 4, "A3": 10, "A4": 26, "A5": 76, "B2": 6, "B3": 20,
                     "D4": 44, "G2": 8, "F4": 140, "E6": 892}


@pytest.mark.parametrize("label,n", sorted(INVOLUTION_COUNTS.items()))
def test_involution_counts(label, n, involutions):
    assert len(involutions(label)) == n


@pytest.mark.parametrize("label", ["A3", "B3", "G2", "A1xA2"])
def test_exhaustive_matches_brute_force(label, involutions):
    d = build_root_datum(label)
    brute = {w for w in all_elements(d) if w.is_involution()}
    assert set(involutions(label)) == brute


def word_strategy(rank, max_len=12):
    return st.lists(st.integers(1, rank), max_size=max_len)


@given(st.sampled_from(["A3", "B3", "C3", "G2", "D4", "F4"]), st.data())
def test_word_roundtrip_and_length(label, data):
    d = build_root_datum(label)
    w = WeylElem.from_word(d, data.draw(word_strategy(d.rank)))
    u = WeylElem.from_word(d, w.word)
    assert u == w and len(w.word) == w.length
    assert (w * w.inverse()).is_identity()


@given(st.sampled_from(["A3", "B3", "G2", "D4"]), st.data())
def test_descents_agree_with_length(label, data):
    d = build_root_datum(label)
    w = WeylElem.from_word(d, data.draw(word_strategy(d.rank)))
    for i in range(1, d.rank + 1):
        assert w.right_descent(i) == (w.rmul_simple(i).length < w.length)
        assert w.left_descent(i) == (w.lmul_simple(i).length < w.length)


@pytest.mark.parametrize("label", ["A3", "B4", "C3", "D5", "F4", "G2", "E6"])
def test_braid_relations(label):
    d = build_root_datum(label)
    A = d.cartan
    order = {0: 2, 1: 3, 2: 4, 3: 6}
    for i in range(1, d.rank + 1):
        for j in range(i + 1, d.rank + 1):
            m = order[int(A[i - 1, j - 1] * A[j - 1, i - 1])]
            lhs = WeylElem.from_word(d, [i, j] * (m // 2) + [i] * (m % 2))
            rhs = WeylElem.from_word(d, [j, i] * (m // 2) + [j] * (m % 2))
            assert lhs == rhs


@pytest.mark.parametrize("label,length", [("A4", 10), ("E8", 120), ("G2", 6), ("D5", 20)])
def test_longest_element(label, length):
    d = build_root_datum(label)
    w0 = longest_element(d)
    assert w0.length == length
    assert all(w0.right_descent(i) for i in range(1, d.rank + 1))


def test_longest_parabolic():
    d = build_root_datum("E8")
    w = longest_element(d, range(1, 8))
    assert w.length == 63 and w.is_involution() and not w.right_descent(8)


def test_central_parabolics_d5():
    # w_J central iff each component of J is not A_k (k >= 2), D_odd, or E6
    d = build_root_datum("D5")
    for J in central_parabolics(d):
        M = longest_element(d, J).matrix
        assert all(M[j - 1, j - 1] == -1 for j in J)
    assert frozenset({1, 2, 3, 4, 5}) not in central_parabolics(d)


def test_descent_decompose_cases():
    d = build_root_datum("A3")
    assert descent_decompose(longest_element(d, [1, 3])).case == "ii"
    dec = descent_decompose(longest_element(d))
    assert dec.case == "i"
    with pytest.raises(ValueError):
        descent_decompose(WeylElem.from_word(d, [1, 2]))


def test_sampled_is_seeded():
    d = build_root_datum("E7")
    a = [w.word for w in enumerate_involutions(d, mode="sampled", n=30, seed=7)]
    b = [w.word for w in enumerate_involutions(d, mode="sampled", n=30, seed=7)]
    c = [w.word for w in enumerate_involutions(d, mode="sampled", n=30, seed=8)]
    assert a == b and a != c and len(set(a)) == 30
    assert all(WeylElem.from_word(d, x).is_involution() for x in a)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        list(enumerate_involutions(build_root_datum("E7")))
    with pytest.raises(ValueError):
        list(enumerate_involutions(build_root_datum("A2"), mode="bogus"))


def test_parse_word():
    assert parse_word("121") == (1, 2, 1)
    assert parse_word("1,2,1") == parse_word("1 2 1") == (1, 2, 1)
    assert parse_word("e") == ()
    assert word_str((10, 1)) == "10,1" and word_str(()) == "e"
    with pytest.raises(ValueError):
        parse_word("14", rank=3)


def test_eigen_subsystem_longest_a3():
    d = build_root_datum("A3")
    sub = eigen_subsystem(longest_element(d))
    # R_{w0} in A3 is spanned by alpha_1+alpha_2+alpha_3 and alpha_2
    assert sub.rank == 2 and len(sub.positives) == 2
    assert {tuple(r) for r in sub.positive_roots} == {(1, 1, 1), (0, 1, 0)}


@pytest.mark.parametrize("label", ["B3", "G2", "D4"])
def test_reflection_matches_word(label):
    d = build_root_datum(label)
    for k in range(d.num_positive):
        s = reflection(d, k)
        assert s.is_involution() and s.act(d.positive_coroots[k]).tolist() == (-d.positive_coroots[k]).tolist()
        assert s.length % 2 == 1


def test_datum_mismatch():
    with pytest.raises(ValueError):
        build_root_datum("A2").s(1) * build_root_datum("A3").s(1)
