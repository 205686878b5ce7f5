from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from invlift.exact import det_int, solve_exact


@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_float(M):
    assert det_int(M) == round(np.linalg.det(np.array(M, dtype=float)))


def test_det_edge_cases():
    assert det_int(np.zeros((0, 0))) == 1
    assert det_int([[0, 1], [1, 0]]) == -1
    assert det_int([[1, 2], [2, 4]]) == 0


def test_solve():
    B = np.array([[2, 0], [1, 1], [0, 3]])
    assert solve_exact(B, [2, 2, 3]) == [Fraction(1), Fraction(1)]
    assert solve_exact([[2]], [1]) == [Fraction(1, 2)]
    with pytest.raises(ValueError):
        solve_exact(B, [1, 0, 0])
    with pytest.raises(ValueError):
        solve_exact([[1, 2], [2, 4]], [1, 2])
