"""Shared hypothesis strategies: small fields, random generator matrices, splits."""

from hypothesis import strategies as st

from colordesigns.algebra import gf
from colordesigns.codes import code_from_generator

fields = st.sampled_from([2, 3, 4]).map(gf)


@st.composite
def small_codes(draw, qs=(2, 3, 4), max_n=6, max_k=3):
    F = gf(draw(st.sampled_from(list(qs))))
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(0, min(max_k, n)))
    rows = [[draw(st.integers(0, F.q - 1)) for _ in range(n)] for _ in range(k)]
    return code_from_generator(F, rows, length=n) if rows else code_from_generator(F, [], length=n)


@st.composite
def splits(draw, n):
    """A random partition of 1..n into nonempty blocks."""
    ell = draw(st.integers(1, min(3, n)))
    labels = [draw(st.integers(0, ell - 1)) for _ in range(n)]
    blocks = [tuple(i + 1 for i in range(n) if labels[i] == b) for b in range(ell)]
    return tuple(b for b in blocks if b)
