import random

import pytest
from hypothesis import given

from colordesigns import catalog
from colordesigns.algebra import gf
from colordesigns.codes import (classify, code_from_generator, code_from_words, composition, delta_identity, dual,
                                full_space, is_linear_closed, puncture, shorten, value_subcode, zero_code)
from colordesigns.errors import DimensionMismatch, IndexOutOfRange, PreconditionError

from strategies import small_codes


def test_c4_words():
    c4 = catalog.get("c4")
    assert len(c4) == 9 and c4.dimension == 2
    assert (1, 0, 1, 1) in c4 and (0, 1, 1, 2) in c4
    assert c4.weight_distribution() == {0: 1, 3: 8}


@pytest.mark.parametrize("name,size,wmin", [("g12", 729, 6), ("c2iv", 4, 2), ("c4iv", 16, 2),
                                            ("h6", 64, 4), ("c8iv", 256, 4)])
def test_catalog_sizes(name, size, wmin):
    c = catalog.get(name)
    assert len(c) == size and c.min_nonzero_weight() == wmin


@pytest.mark.parametrize("name", ["c4", "g12", "c2iv", "c4iv", "h6", "c8iv"])
def test_catalog_types_confirmed(name):
    assert classify(catalog.get(name))[catalog.asserted_type(name)] is True


def test_unknown_code():
    with pytest.raises(PreconditionError):
        catalog.get("nope")


def test_catalog_file(tmp_path):
    f = tmp_path / "mine.txt"
    f.write_text("code rep3 q=2 n=3\n1 1 1\n")
    c = catalog.get(str(f))
    assert len(c) == 2 and c.length == 3


def test_unequal_rows():
    with pytest.raises(DimensionMismatch):
        code_from_generator(gf(3), [[1, 0], [1, 1, 1]])


def test_composition():
    F = gf(4)
    c = composition(F, ["0", "1", "s", "s", "s2"])
    assert c.counts == (1, 1, 2, 1) and c["s"] == 2 and c.size == 5
    assert composition(F, [0, 1, 2, 3], [1, 2]).counts == (1, 1, 0, 0)
    with pytest.raises(IndexOutOfRange):
        composition(F, [0, 1], [3])


def test_derived_codes_of_c4():
    c4 = catalog.get("c4")
    assert len(puncture(c4, 1)) == 9
    sh = shorten(c4, 1)
    assert len(sh) == 3 and sh.length == 3
    v = value_subcode(c4, 1, 1)
    assert len(v) == 3 and not is_linear_closed(v)


def test_zero_and_full():
    F = gf(3)
    assert len(zero_code(F, 4)) == 1
    assert dual(zero_code(F, 3)).same_words(full_space(F, 3))


def test_span():
    F = gf(2)
    c = code_from_words(F, 3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])
    assert c.dimension == 2


@given(small_codes())
def test_dual_dimension_and_orthogonality(code):
    F = code.field
    for herm in ([False, True] if F.f % 2 == 0 else [False]):
        d = dual(code, herm)
        assert code.dimension + d.dimension == code.length
        for u in code.generator:
            for v in d.generator:
                assert F.dot(u, v, herm) == 0
        assert dual(d, herm).same_words(code)


@given(small_codes(max_n=5))
def test_delta_identity(code):
    rng = random.Random(len(code))
    F = code.field
    herm = F.f % 2 == 0
    d = dual(code, herm)
    for _ in range(5):
        v = [rng.randrange(F.q) for _ in range(code.length)]
        assert delta_identity(code, v, herm) == (1 if tuple(v) in d else 0)


@given(small_codes(max_n=5))
def test_linear_codes_are_closed(code):
    assert is_linear_closed(code)
