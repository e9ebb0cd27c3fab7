import cmath
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from cyclomat.cyclo import CycNum, cyc_inv, cyclotomic_poly, embed_complex, euler_phi, reduce_mod_p
from cyclomat.ff import field_of_order

MODS = [4, 6, 8, 10, 12, 18, 24]


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert all(len(cyclotomic_poly(m)) - 1 == euler_phi(m) for m in range(1, 60))


def cyc(m):
    return st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=euler_phi(m), max_size=euler_phi(m)).map(
        lambda c: CycNum(m, c)
    )


@settings(max_examples=40)
@given(st.sampled_from(MODS).flatmap(lambda m: st.tuples(cyc(m), cyc(m), cyc(m))))
def test_ring_laws_and_embedding(t):
    a, b, c = t
    assert a * (b + c) == a * b + a * c
    assert abs(embed_complex(a * b) - embed_complex(a) * embed_complex(b)) < 1e-9
    if a:
        assert a * cyc_inv(a) == 1


@given(st.sampled_from(MODS), st.integers(-50, 50))
def test_zeta_powers(m, k):
    z = CycNum.zeta(m, k)
    assert abs(embed_complex(z) - cmath.exp(2j * cmath.pi * k / m)) < 1e-12
    assert z ** m == 1
    assert z.conj() * z == 1


def test_rational_detection():
    z = CycNum.zeta(8)
    assert (z + z.conj()) ** 2 == 2
    assert ((z + z.conj()) ** 2).to_rational() == Fraction(2)
    assert not z.is_rational()


def test_galois_is_automorphism():
    m = 12
    a, b = CycNum(m, [1, 2, 0, -1]), CycNum(m, [0, 1, 3, 1])
    for t in (1, 5, 7, 11):
        assert (a * b).galois(t) == a.galois(t) * b.galois(t)


def test_reduce_mod_p_is_a_ring_map():
    F = field_of_order(13)
    m = 12
    a, b = CycNum(m, [1, 2, 0, -1]), CycNum(m, [Fraction(1, 2), 1, 3, 1])
    assert reduce_mod_p(a * b, F) == reduce_mod_p(a, F) * reduce_mod_p(b, F)
    assert reduce_mod_p(CycNum.zeta(m), F) == F.g


def test_reduce_mod_p_extension():
    F = field_of_order(9)
    z = CycNum.zeta(8, 3)
    assert reduce_mod_p(z, F) == F.g ** 3
