import pytest
from hypothesis import given, strategies as st

from colordesigns.algebra import Cyclotomic, gf, zeta
from colordesigns.errors import AlphabetMismatch, KindMismatch, MissingRule, NonIntegerCoefficient
from colordesigns.polyring import (HAMMING, Polynomial, VarKey, diff_terms, evaluate, evaluate_at_ones, flip_kind,
                                   from_json, merge_blocks, monomial, nonzero_merge_map, parse, partial_derivative,
                                   render, s_merge, specialize, substitute_linear, to_hamming, to_json, x, y)
from colordesigns.polyring import _substitute_all

F3, F4 = gf(3), gf(4)


def var(k, a, block=1, al=F3):
    return Polynomial.var(al, VarKey(block, k, a))


@st.composite
def polys(draw, al=F3, blocks=(1, 2), rational=True):
    terms = {}
    for _ in range(draw(st.integers(0, 5))):
        pairs = [(VarKey(draw(st.sampled_from(blocks)), draw(st.sampled_from("xy")), draw(st.integers(0, al.q - 1))),
                  draw(st.integers(1, 3))) for _ in range(draw(st.integers(0, 3)))]
        c = draw(st.integers(-9, 9))
        terms[monomial(pairs)] = c if rational else Cyclotomic(12, [c, draw(st.integers(-3, 3)), 0, 0])
    return Polynomial(al, terms)


def test_monomial_canonical():
    a = monomial([(x(1), 1), (x(0), 2), (x(1), 2)])
    assert a == ((x(0), 2), (x(1), 3))
    assert monomial([(x(0), 0)]) == ()


def test_arithmetic():
    p = var("x", 0) + var("x", 1)
    assert p * p == var("x", 0) ** 2 + 2 * var("x", 0) * var("x", 1) + var("x", 1) ** 2
    assert p - p == 0 and (p - p).is_zero()
    assert (p * 3).coeff((x(0), 1)) == 3


def test_mixing_alphabets_rejected():
    with pytest.raises(AlphabetMismatch):
        var("x", 0) + var("x", 0, al=F4)


def test_parse_examples():
    p = parse("x_0^4+x_0x_1^3+3x_0x_1^2x_2", F3)
    assert len(p.terms) == 3 and p.coeff((x(0), 1), (x(1), 2), (x(2), 1)) == 3
    q = parse("y_{s^2}^2 + y_s^2", F4)
    assert q.coeff((y(3), 2)) == 1 and q.coeff((y(2), 2)) == 1
    r = parse("x_{X2,s}y_{X1,0}", F4)
    assert r.coeff((VarKey(1, "y", 0), 1), (VarKey(2, "x", 2), 1)) == 1
    h = parse("w^2+2zy", HAMMING)
    assert h.coeff((VarKey(1, "x", 0), 2)) == 1


def test_parse_grouping():
    p = parse("x_0(y_0+y_1)^{2}", F3)
    assert p == var("x", 0) * (var("y", 0) + var("y", 1)) ** 2


def test_render_hamming_and_split():
    assert render(parse("w x^3 + 2 w y^3", HAMMING)) == "w*x^3 + 2*w*y^3"
    assert "x_{X2,1}" in render(var("x", 1, block=2))
    assert render(Polynomial(F3)) == "0"


@given(polys())
def test_render_parse_roundtrip(p):
    assert parse(render(p), F3) == p


@given(polys(al=F4, rational=False))
def test_json_roundtrip(p):
    assert from_json(to_json(p)) == p


def test_partial_derivative():
    p = parse("x_0^3y_1+y_1^2", F3)
    assert partial_derivative(p, y(1)) == parse("x_0^3+2y_1", F3)


def test_specialize_kind_mismatch():
    with pytest.raises(KindMismatch):
        specialize(var("x", 1), {x(1): y(1)})


def test_s_merge_and_hamming():
    p = parse("x_0x_1x_2^2", F3)
    assert s_merge(p) == parse("x_0x_1^3", F3)
    assert render(to_hamming(p)) == "w*z^3"


def test_flip_and_merge_blocks():
    p = parse("x_{X1,0}y_{X2,1}", F3)
    assert flip_kind(p) == parse("y_{X1,0}x_{X2,1}", F3)
    assert merge_blocks(p) == parse("x_0y_1", F3)


def test_missing_rule():
    with pytest.raises(MissingRule):
        substitute_linear(var("x", 0), {})


def test_evaluate():
    p = parse("x_0^2+3x_1", F3)
    assert evaluate_at_ones(p) == 4
    assert evaluate(p, {x(0): zeta()}, default=0) == zeta() ** 2


def test_demote_to_integers():
    p = parse("x_0", F3).scale(Cyclotomic.rational(1, 12) / 2)
    with pytest.raises(NonIntegerCoefficient):
        p.demote_to_integers()


def test_diff_terms():
    a, b = parse("x_0+2x_1", F3), parse("x_0+x_2", F3)
    assert set(diff_terms(a, b)) == {((x(1), 1),), ((x(2), 1),)}


@given(polys(al=F4, rational=False), st.lists(st.integers(-2, 2), min_size=16, max_size=16))
def test_groupwise_substitution_matches_termwise(p, coeffs):
    rules = {}
    for blk in (1, 2):
        for kd in "xy":
            for a in range(4):
                terms = {((VarKey(blk, kd, b), 1),): coeffs[4 * a + b] * zeta(12, a + b) for b in range(4)}
                rules[VarKey(blk, kd, a)] = Polynomial(F4, terms)
    assert substitute_linear(p, rules) == _substitute_all(p, rules, F4)


@given(polys(al=F4), polys(al=F4))
def test_specialize_is_a_ring_map(p, q):
    m = nonzero_merge_map(F4, blocks=(1, 2))
    assert specialize(p * q, m) == specialize(p, m) * specialize(q, m)
