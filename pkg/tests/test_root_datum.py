import numpy as np
import pytest
from hypothesis import given, strategies as st

from invlift.root_datum import (
    CartanSpec,
    NotFiniteType,
    RootDatum,
    build_root_datum,
    cartan_matrix,
    pairing,
    split_label,
    weyl_group_order,
)

# |R^+| for each irreducible type
POSITIVE_COUNTS = {
    "A1": 1, "A2": 3, "A5": 15, "B2": 4, "B3": 9, "B9": 81, "C3": 9, "C8": 64,
    "D4": 12, "D5": 20, "D8": 56, "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6,
}


@pytest.mark.parametrize("label,n", sorted(POSITIVE_COUNTS.items()))
def test_positive_root_counts(label, n):
    assert build_root_datum(label).num_positive == n


def test_product_types_add_up():
    d = build_root_datum("A1xB2xG2")
    assert d.rank == 5 and d.num_positive == 1 + 4 + 6
    assert [len(c) for c in d.components] == [1, 2, 2]


def test_cartan_conventions():
    # the short simple root carries the -2 / -3 in its row
    assert cartan_matrix("B3")[2, 1] == -2
    assert cartan_matrix("C3")[1, 2] == -2
    assert cartan_matrix("F4")[2, 1] == -2
    assert cartan_matrix("G2")[0, 1] == -3
    E8 = cartan_matrix("E8")
    assert E8[1, 3] == -1 and E8[1, 2] == 0  # alpha_2 hangs off alpha_4


def test_highest_roots():
    assert build_root_datum("G2").positive_roots[-1].tolist() == [3, 2]
    assert build_root_datum("E8").positive_roots[-1].tolist() == [2, 3, 4, 6, 5, 4, 3, 2]
    assert build_root_datum("F4").positive_roots[-1].tolist() == [2, 3, 4, 2]
    d = build_root_datum("B3")
    assert d.positive_roots[d.highest_root_index()].tolist() == [1, 2, 2]
    assert d.positive_coroots[d.highest_root_index()].tolist() == [1, 2, 1]


def test_sign_coherent_and_sorted_by_height():
    for label in ("B4", "E6", "G2"):
        d = build_root_datum(label)
        assert (d.positive_roots >= 0).all() and (d.positive_coroots >= 0).all()
        assert (np.diff(d.heights) >= 0).all()


@pytest.mark.parametrize("label", ["B3", "C4", "F4", "G2", "E6"])
def test_aligned_coroots_are_dual(label):
    d = build_root_datum(label)
    P = d.pairing_matrix
    assert (np.diag(P) == 2).all()
    # reflection in alpha permutes the roots
    roots = {tuple(r) for r in d.positive_roots} | {tuple(-r) for r in d.positive_roots}
    for a, (r, c) in enumerate(zip(d.positive_roots, d.positive_coroots)):
        for b in d.positive_roots:
            img = b - pairing(d, c, b) * r
            assert tuple(img) in roots


def test_pairing_dimension_check():
    d = build_root_datum("A2")
    with pytest.raises(ValueError):
        pairing(d, [1, 0, 0], [1, 0])


@pytest.mark.parametrize("bad", ["", "H3", "E9", "D3", "B1", "A0", "Q2"])
def test_bad_labels(bad):
    with pytest.raises(ValueError):
        build_root_datum(bad)


def test_non_finite_rejected():
    affine = np.array([[2, -2], [-2, 2]])
    with pytest.raises(NotFiniteType):
        RootDatum(CartanSpec("affine", affine))
    with pytest.raises(NotFiniteType):
        RootDatum(CartanSpec("asym", np.array([[2, -1], [0, 2]])))


def test_split_and_order():
    assert split_label("A1xB2") == [("A", 1), ("B", 2)]
    assert weyl_group_order("E8") == 696729600
    assert weyl_group_order("A1xA2") == 12


def test_cached():
    assert build_root_datum("D4") is build_root_datum("d4")


@given(st.sampled_from(["A3", "B3", "C3", "G2", "D4"]), st.data())
def test_simple_reflection_is_involution(label, data):
    d = build_root_datum(label)
    i = data.draw(st.integers(1, d.rank))
    s = d.s(i)
    assert (s * s).is_identity() and s.length == 1
