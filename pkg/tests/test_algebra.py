from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from colordesigns.algebra import (Cyclotomic, FiniteField, character, character_sum_check, field_make, gf,
                                  inv_sqrt3, zeta)
from colordesigns.errors import (DivisionByZero, IncompatibleCyclotomicOrder, NotIrreducible, NotPrime,
                                 NotPrimitive, NotSquareOrder)

cyc = st.lists(st.integers(-6, 6), min_size=4, max_size=4).map(lambda v: Cyclotomic(12, v))


# -- cyclotomic constants -----------------------------------------------------

def test_zeta_has_order_twelve():
    z = zeta()
    assert z ** 12 == 1
    assert all(z ** k != 1 for k in range(1, 12))


def test_inverse_square_root_of_three():
    r = inv_sqrt3()
    assert r * r == Fraction(1, 3)
    assert r.conjugate() == r


def test_cube_root_of_unity_from_zeta12():
    w = zeta(12, 4)
    assert w ** 3 == 1 and 1 + w + w * w == 0


def test_rational_embedding_and_render():
    assert Cyclotomic.rational(Fraction(-2, 3)).render() == "-2/3"
    assert (zeta() * 2).render() == "2*z"


def test_mixed_orders_rejected():
    with pytest.raises(IncompatibleCyclotomicOrder):
        zeta(12) + zeta(4)


def test_zero_has_no_inverse():
    with pytest.raises(DivisionByZero):
        Cyclotomic.zero().inverse()


@given(cyc, cyc, cyc)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(cyc)
def test_inverse_roundtrip(a):
    if a:
        assert a * a.inverse() == 1


@given(cyc, st.sampled_from([1, 5, 7, 11]))
def test_galois_is_multiplicative(a, k):
    b = a + zeta()
    assert (a * b).galois(k) == a.galois(k) * b.galois(k)


# -- finite fields ------------------------------------------------------------

def test_gf4_labels_and_tables():
    F = gf(4)
    assert list(F.labels) == ["0", "1", "s", "s2"]
    s, s2 = F("s"), F("s2")
    assert s * s == s2 and s * s2 == F(1) and s + F(1) == s2
    assert s.conj() == s2


def test_gf3_parse():
    F = gf(3)
    assert F.parse("2") == 2 and F.parse(-1) == 2


def test_bad_fields():
    with pytest.raises(NotPrime):
        FiniteField(6)
    with pytest.raises(NotIrreducible):
        field_make(2, 2, [1, 0, 1])
    with pytest.raises(NotPrimitive):
        field_make(3, 2, [1, 0, 1])
    with pytest.raises(NotSquareOrder):
        gf(3).sqrt_q


def test_division_by_zero_in_field():
    with pytest.raises(DivisionByZero):
        gf(4).inv(0)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_field_axioms_exhaustive(q):
    F = gf(q)
    els = F.elements()
    for a in els:
        assert a + F(0) == a and a * F(1) == a
        if a.index:
            assert a * a.inv() == F(1)
        for b in els:
            assert a * b == b * a and a + b == b + a


@pytest.mark.parametrize("q", [3, 4])
def test_character_sum_exhaustive(q):
    F = gf(q)
    for b in F.elements()[1:]:
        for a in F.elements():
            want = q if a.index == 0 else 0
            assert character_sum_check(F, a, b) == want


@pytest.mark.parametrize("q", [2, 3, 4])
def test_character_is_additive(q):
    F = gf(q)
    one = F(1)
    for a in F.elements():
        for b in F.elements():
            assert character(one, a + b) == character(one, a) * character(one, b)


def test_character_needs_pth_roots():
    with pytest.raises(IncompatibleCyclotomicOrder):
        character(gf(5)(1), gf(5)(1))
