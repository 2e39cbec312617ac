import itertools

import pytest
from hypothesis import given, strategies as st

from colordesigns import catalog, fixtures
from colordesigns.algebra import Cyclotomic, gf
from colordesigns.codes import dual, zero_code
from colordesigns.enumerators import (SplitSpec, complete_jacobi, cwe, cwe_y, hamming_we, jacobi, macwilliams_scj,
                                      macwilliams_scwe, singleton_decomposition_rhs, polarize, polarize_power, scwe,
                                      split_complete_jacobi, verify_singleton_decomposition, verify_polarization_identity)
from colordesigns.errors import AlphabetMismatch, ColorDesignsError, PreconditionError
from colordesigns.polyring import (HAMMING, Polynomial, VarKey, substitute_linear, evaluate_at_ones, flip_kind, merge_blocks, parse, to_hamming)

from strategies import small_codes, splits

C4 = catalog.get("c4")


def test_cwe_c4_matches_printed():
    assert cwe(C4) == fixtures.polynomial("cwe_c4")[1]


def test_hamming_we_c4():
    assert hamming_we(C4) == parse("x^4+8xy^3", HAMMING)


def test_scwe_c4_matches_printed():
    p = scwe(C4, [[1, 2], [3, 4]])
    assert p == fixtures.polynomial("scwe_c4")[1] and len(p.terms) == 9


def test_cj_c4_matches_printed():
    assert complete_jacobi(C4, [1, 3]) == fixtures.polynomial("cj_c4_T13")[1]


def test_cj_g12_singleton_coefficient():
    p = complete_jacobi(catalog.get("g12"), [1])
    assert p.coeff((VarKey(1, "x", 0), 1), (VarKey(1, "y", 0), 5), (VarKey(1, "y", 1), 3), (VarKey(1, "y", 2), 3)) == 110


def test_split_spec_validation():
    with pytest.raises(PreconditionError):
        SplitSpec(((1, 2), (2, 3)))
    with pytest.raises(ColorDesignsError):
        SplitSpec(((1,), (3,)), n=3)
    with pytest.raises(PreconditionError):
        SplitSpec(((1, 2),), ((3,),))


def test_macwilliams_rejects_hamming():
    with pytest.raises(AlphabetMismatch):
        macwilliams_scwe(hamming_we(C4), gf(3), 9)


@given(small_codes(), st.data())
def test_macwilliams_scwe_random_codes(code, data):
    spec = SplitSpec(data.draw(splits(code.length)))
    F = code.field
    for herm in ([False, True] if F.q == 4 else [False]):
        d = dual(code, herm)
        w = scwe(code, spec)
        t = macwilliams_scwe(w, F, len(code), herm)
        assert t == scwe(d, spec)
        assert macwilliams_scwe(t, F, len(d), herm) == w


@given(small_codes(max_n=5), st.data())
def test_macwilliams_independent_of_nontrivial_character(code, data):
    F = code.field
    b = data.draw(st.integers(1, F.q - 1))
    w = cwe(code)
    step = w.order // F.p
    rules = {VarKey(1, "x", a): Polynomial(F, {((VarKey(1, "x", c), 1),): Cyclotomic.zeta(
        w.order, step * F.character_exponent(b, F.mul(a, c))) for c in range(F.q)}, w.order) for a in range(F.q)}
    via_b = substitute_linear(w, rules).scale(Cyclotomic.rational(1, w.order) / len(code))
    assert via_b == macwilliams_scwe(w, F, len(code))


@given(small_codes(max_n=5), st.data())
def test_macwilliams_scj_random_codes(code, data):
    blocks = data.draw(splits(code.length))
    refs = tuple(tuple(i for i in b if data.draw(st.booleans())) for b in blocks)
    spec = SplitSpec(blocks, refs)
    F = code.field
    herm = F.q == 4
    d = dual(code, herm)
    t = macwilliams_scj(split_complete_jacobi(code, spec), F, len(code), herm)
    assert t == split_complete_jacobi(d, spec)


@given(small_codes(), st.data())
def test_scj_refinements(code, data):
    blocks = data.draw(splits(code.length))
    spec = SplitSpec(blocks)
    empty = spec.with_refs([()] * spec.ell)
    assert flip_kind(split_complete_jacobi(code, empty), "x") == scwe(code, spec)
    T = tuple(i for i in range(1, code.length + 1) if data.draw(st.booleans()))
    assert split_complete_jacobi(code, SplitSpec.single(code.length, T)) == complete_jacobi(code, T)
    refs = [tuple(i for i in b if i in T) for b in blocks]
    assert merge_blocks(split_complete_jacobi(code, spec.with_refs(refs))) == complete_jacobi(code, T)


@given(small_codes())
def test_evaluate_at_ones_is_size(code):
    assert evaluate_at_ones(cwe(code)) == len(code)


@given(small_codes(), st.data())
def test_hamming_jacobi_is_specialized_cj(code, data):
    T = [i for i in range(1, code.length + 1) if data.draw(st.booleans())]
    assert jacobi(code, T) == to_hamming(complete_jacobi(code, T))
    assert jacobi(code, []) == hamming_we(code)


@pytest.mark.parametrize("name,tmax", [("g12", 3), ("h6", 2), ("c8iv", 3)])
def test_polarization_gives_jacobi(name, tmax):
    code = catalog.get(name)
    base = cwe_y(code)
    for t in range(tmax + 1):
        target = polarize_power(base, t)
        for T in itertools.islice(itertools.combinations(range(1, code.length + 1), t), 25):
            assert complete_jacobi(code, T) == target


def test_polarization_needs_homogeneity():
    p = parse("y_0+y_1^2", gf(3))
    with pytest.raises(PreconditionError):
        polarize(p)


@given(small_codes(max_n=5), st.data())
def test_average_of_singletons_is_polarization(code, data):
    T = data.draw(st.integers(1, code.length))
    rep = verify_singleton_decomposition(code, SplitSpec.single(code.length), 1, T)
    assert rep.holds, rep.detail


@pytest.mark.parametrize("name,split", [("c4", None), ("c4", ((1, 2), (3, 4))), ("h6", None),
                                        ("h6", ((1, 2, 3), (4, 5, 6)))])
def test_decomposition_every_coordinate(name, split):
    code = catalog.get(name)
    spec = SplitSpec(split) if split else SplitSpec.single(code.length)
    for i in range(1, code.length + 1):
        rep = verify_singleton_decomposition(code, spec, spec.block_of(i), i)
        assert rep.holds, rep.detail


def test_g12_homogeneous_form():
    rep = verify_singleton_decomposition(catalog.get("g12"), SplitSpec.single(12), 1, 1)
    assert rep.holds and rep.checks["homogeneous"] and rep.checks["homogeneous_form"]


def test_decomposition_zero_code():
    z = zero_code(gf(3), 3)
    rhs = singleton_decomposition_rhs(z, SplitSpec.single(3), 1, 2)
    assert rhs == parse("x_0y_0^2", gf(3))
    assert verify_singleton_decomposition(z, SplitSpec.single(3), 1, 2).holds


def test_decomposition_precondition():
    with pytest.raises(PreconditionError):
        singleton_decomposition_rhs(C4, SplitSpec(((1, 2), (3, 4))), 1, 3)


@pytest.mark.parametrize("name,t,count", [("g12", 3, 220), ("h6", 2, 15)])
def test_polarization_identity_holds(name, t, count):
    rep = verify_polarization_identity(catalog.get(name), None, t)
    assert rep.holds and rep.checked == count and rep.hypothesis_met


def test_polarization_identity_fails_on_c8iv_t4():
    rep = verify_polarization_identity(catalog.get("c8iv"), None, 4)
    # minimum weight 4 meets the weight hypothesis; equality still fails (two CJ classes at t = 4)
    assert not rep.holds and rep.violating is not None
    assert rep.hypothesis_met


def test_polarization_identity_split_c4():
    rep = verify_polarization_identity(C4, SplitSpec(((1, 2), (3, 4))), [1, 0])
    assert rep.checked >= 1
