import pickle

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclomat import ff
from cyclomat.ff import field_of_order, make_field

ORDERS = [5, 7, 9, 11, 13, 25, 27, 49, 81, 121, 125]


def test_small_generators():
    assert make_field(7).g.code == 3
    assert make_field(5).g.code == 2
    F9 = field_of_order(9)
    x = F9.elem([0, 1])
    assert x * x == F9.elem(2)
    assert F9.g == F9.elem([1, 1])
    assert ff.trace(x) == 0


@pytest.mark.parametrize("q", ORDERS)
def test_generator_order_and_squares(q):
    F = field_of_order(q)
    seen = {F.pow(F.generator, k) for k in range(q - 1)}
    assert len(seen) == q - 1 and 0 not in seen
    squares = F.nonzero_squares()
    assert len(squares) == F.n and squares[0] == F.one
    assert {s.code for s in squares} == {F.mul(x, x) for x in range(1, q)}


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms_exhaustive_distributivity(q):
    F = field_of_order(q)
    elems = list(range(q))[: min(q, 30)]
    for a in elems:
        for b in elems:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in elems[:5]:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        if a:
            assert F.mul(a, F.inv(a)) == 1


@settings(max_examples=60)
@given(st.sampled_from(ORDERS), st.data())
def test_log_exp_roundtrip(q, data):
    F = field_of_order(q)
    a = data.draw(st.integers(1, q - 1))
    assert F.exp(F.log(a)) == a
    b = data.draw(st.integers(1, q - 1))
    assert F.log(F.mul(a, b)) == (F.log(a) + F.log(b)) % (q - 1)


@pytest.mark.parametrize("q", [9, 27, 25, 121])
def test_frobenius_and_trace(q):
    F = field_of_order(q)
    for a in range(q):
        t = a
        total = 0
        for _ in range(F.f):
            total = F.add(total, t)
            t = F.pow(t, F.p)
        assert t == a
        assert F.coeffs(total)[1:] == (0,) * (F.f - 1)
        assert F.trace_code(a) == F.coeffs(total)[0]


def test_irreducible_choice():
    assert ff.smallest_irreducible(3, 2) == (1, 0, 1)
    assert ff.is_irreducible((1, 0, 1), 3)
    assert not ff.is_irreducible((1, 0, 1), 5)


def test_pickle_round_trip():
    F = field_of_order(49)
    assert pickle.loads(pickle.dumps(F)) is F


def test_rejects_non_prime_power():
    with pytest.raises(ValueError):
        field_of_order(15)
