import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclomat import pell


@given(st.integers(0, 400), st.integers(1, 10**9))
def test_fast_pair_matches_recurrence(i, m):
    P, Q = pell.pell_naive(i)
    pair = pell.pell_pair_mod(i, m)
    assert (pair.P, pair.Q) == (P % m, Q % m)


def test_small_values():
    assert pell.pell_naive(5) == (29, 82)
    assert pell.pell_naive(0) == (0, 2)
    assert pell.pell_naive(1) == (1, 2)
    pair = pell.pell_pair_mod(7, 49)
    assert (pair.P, pair.Q) == (22, 37)


@pytest.mark.parametrize("p,a,b", [(7, 2, 0), (11, None, 0), (13, 0, None), (29, None, 27)])
def test_residues(p, a, b):
    if a is not None:
        assert pell.a_p(p) == a
    if b is not None:
        assert pell.b_p(p) == b


@pytest.mark.parametrize("p", [7, 11, 13, 17, 19, 23, 29, 31, 37, 101, 103])
def test_residues_from_exact_integers(p):
    P, Q = pell.pell_naive(p)
    l2 = 1 if p % 8 in (1, 7) else -1
    assert (2 - Q) % p == 0 and (2 - Q) // p % p == pell.a_p(p)
    assert (2 * l2 - 2 * P - p) % p == 0 and (2 * l2 - 2 * P - p) // p % p == pell.b_p(p)
    assert pell.predicate_qp(p) == ((2 - Q) % (p * p) == 0)


def test_predicates_reject_small():
    with pytest.raises(ValueError):
        pell.predicate_qp(5)
