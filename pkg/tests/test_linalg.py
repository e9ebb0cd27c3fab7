import random

import pytest
from conftest import det_leibniz
from hypothesis import given
from hypothesis import strategies as st

from cyclomat import linalg
from cyclomat.chars import CharSpec
from cyclomat.ff import field_of_order

small_int_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(small_int_matrices)
def test_bareiss_matches_leibniz(rows):
    assert linalg.det_exact(rows) == det_leibniz(rows)


@given(small_int_matrices, st.sampled_from([7, 13, 101]))
def test_modp_elimination_matches_leibniz(rows, p):
    assert linalg.det_mod_p(rows, p).code == det_leibniz(rows) % p


@given(small_int_matrices)
def test_complex_lu_matches_exact(rows):
    d = linalg.det_exact(rows)
    assert abs(linalg.det_complex(rows) - d) <= 1e-8 * max(1, abs(d))


def test_bareiss_dual_modulus():
    rng = random.Random(5)
    rows = [[rng.randrange(-10**6, 10**6) for _ in range(9)] for _ in range(9)]
    d = linalg.det_exact(rows)
    for p in (1_000_003, 786_433):
        assert linalg.det_mod_p(rows, p).code == d % p


def test_bq_over_extension_field_matches_leibniz():
    F = field_of_order(9)
    for m in range(0, 9):
        M = linalg.build_bq(F, m)
        want = det_leibniz(M.entries)
        got = linalg.det_mod_p(M)
        assert got == (want if not isinstance(want, int) else F.elem(want))


def test_bq_small_examples():
    assert linalg.det_mod_p(linalg.build_bq(field_of_order(7), 2)).code == 1
    assert linalg.det_mod_p(linalg.build_bq(field_of_order(9), 3)).code == 0
    with pytest.raises(ValueError):
        linalg.build_bq(field_of_order(5), 1)


def test_dq_quadratic_q5():
    F = field_of_order(5)
    M = linalg.to_integer(linalg.build_dq(F, CharSpec(F, 2), "-"))
    assert M.shape == (3, 3)
    assert linalg.det_exact(M) == -2


@pytest.mark.parametrize("seed", range(40))
def test_linear_kernel_formula(seed):
    rng = random.Random(seed)
    m = rng.randint(1, 5)
    x = [rng.randint(-9, 9) for _ in range(m)]
    y = [rng.randint(-9, 9) for _ in range(m)]
    h = [rng.randint(-5, 5) for _ in range(m)]
    rows = [[sum(c * (xi + yj) ** k for k, c in enumerate(h)) for yj in y] for xi in x]
    assert linalg.det_linear_kernel_formula(x, y, h) == linalg.det_exact(rows)


@pytest.mark.parametrize("seed", range(40))
def test_gsz_formula(seed):
    rng = random.Random(1000 + seed)
    l = rng.randint(1, 5)
    x = [rng.randint(-9, 9) for _ in range(l)]
    y = [rng.randint(-9, 9) for _ in range(l)]
    rows = [[(xi + yj) ** l for yj in y] for xi in x]
    assert linalg.det_gsz(x, y) == linalg.det_exact(rows)


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=7))
def test_circulant_eigen_det(v):
    C = linalg.circulant(v)
    W = linalg.almost_circulant(v)
    dc, dw = linalg.circulant_eigen_det(v)
    assert abs(dc - linalg.det_exact(C)) < 1e-6 * max(1, abs(dc))
    assert abs(dw - linalg.det_exact(W)) < 1e-6 * max(1, abs(dw))


def test_matrix_json_round_trip():
    F = field_of_order(25)
    for M in (linalg.build_bq(F, 5), linalg.build_dq(field_of_order(7), CharSpec(field_of_order(7), 1), "+")):
        back = linalg.Matrix.from_json(M.to_json())
        assert back.entries == M.entries and back.domain == M.domain


def test_chapman_p3mod4_values():
    assert linalg.det_exact(linalg.build_chapman(7, 1)) == 0
    # elimination and a permutation expansion agree on the sign
    M = linalg.build_chapman(7, 0)
    assert linalg.det_exact(M) == det_leibniz(M.entries) == 8
