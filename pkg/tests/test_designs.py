import itertools
import warnings

import pytest
from hypothesis import given, strategies as st

from colordesigns import catalog
from colordesigns.acceptance import compare_table
from colordesigns.algebra import gf
from colordesigns.codes import WordSet, zero_code
from colordesigns.designs import (EmptyBlockSet, colored_design_check, generalized_colored_design_check,
                                  homogeneity_scan, lambda_table, packing_covering_params, parse_multiset_label,
                                  realized_compositions)
from colordesigns.enumerators import SplitSpec
from colordesigns.errors import PreconditionError

from strategies import small_codes


@pytest.mark.parametrize("name,comp,t,blocks", [
    ("g12", (6, 3, 3), 3, 220), ("g12", (6, 6, 0), 3, 22), ("h6", (2, 2, 2, 0), 2, 15),
    ("c4iv", (2, 2, 0, 0), 1, 2), ("c8iv", (4, 4, 0, 0), 3, 14), ("c8iv", (2, 2, 2, 2), 3, 168)])
def test_known_designs(name, comp, t, blocks):
    rep = colored_design_check(catalog.get(name), comp, t)
    assert rep.is_design and rep.block_count == blocks and rep.cross_checked


def test_non_designs_at_higher_strength():
    assert not colored_design_check(catalog.get("g12"), (6, 3, 3), 4).is_design
    assert not colored_design_check(catalog.get("h6"), (2, 2, 2, 0), 3).is_design


def test_summary_text():
    rep = colored_design_check(catalog.get("g12"), (6, 3, 3), 3)
    assert rep.summary() == "composition (6,3,3), t=3: 3-colored 3-design, 220 blocks"


@pytest.mark.parametrize("name,comp,t", [("g12", (6, 3, 3), 4), ("h6", (2, 2, 2, 0), 3), ("c8iv", (2, 2, 2, 2), 4)])
def test_lambda_rows_sum_to_block_count(name, comp, t):
    rep = colored_design_check(catalog.get(name), comp, t, cross_check=False)
    for lam in rep.group_lambdas:
        assert sum(lam) == rep.block_count


def test_lambda_table_examples():
    tab = lambda_table(catalog.get("c4iv"), [(2, 2, 0, 0)], 2, cross_check=False)
    rows = dict(tab.rows())
    rep = tab.reports[0]
    assert rep.max_of("01") == 2 and rep.lambda_of(1, "00") in (0, 1)
    assert max(r[tab.header.index("00")] for k, r in rows.items() if k[7].isdigit()) == 1
    g12 = colored_design_check(catalog.get("g12"), (6, 6, 0), 4, cross_check=False)
    assert sorted(g12.lambda_of(i, "0011") for i in (1, 2)) == [6, 12]
    assert sorted(g12.lambda_of(i, "0001") for i in (1, 2)) == [4, 8]
    assert g12.max_of("0000") == 1
    c8 = colored_design_check(catalog.get("c8iv"), (2, 2, 2, 2), 4, cross_check=False)
    assert c8.max_of("01ss2") == 96 and c8.min_of("01ss2") == 24


def test_h6_table_symmetric_cell():
    rep = colored_design_check(catalog.get("h6"), (2, 2, 2, 0), 3, cross_check=False)
    assert all(rep.lambda_of(g, "01s") == 6 for g in range(1, len(rep.groups) + 1))


@pytest.mark.parametrize("name", ["lambda_c4iv", "lambda_h6"])
def test_printed_tables_reproduced(name):
    diffs, _ = compare_table(name)
    assert diffs == []


def test_g12_lambda_differences_are_only_the_inconsistent_cells():
    diffs, _ = compare_table("lambda_g12")
    assert {(r, c) for r, c, _, _ in diffs} == {
        ("lambda_2^2", "0022"), ("lambda_2^2", "0111"), ("lambda_max^2", "0022"),
        ("lambda_max^2", "0111"), ("lambda_min^2", "0022"), ("lambda_min^2", "0111")}


def test_doubling_symmetry_forces_equal_cells():
    # u -> 2u fixes g12 and the composition (6,3,3) while swapping the colours 1 and 2
    code = catalog.get("g12")
    F = code.field
    assert all(tuple(F.mul(2, a) for a in w) in code for w in code)
    rep = colored_design_check(code, (6, 3, 3), 4, cross_check=False)
    for g in range(1, len(rep.groups) + 1):
        assert rep.lambda_of(g, "0011") == rep.lambda_of(g, "0022")
        assert rep.lambda_of(g, "0111") == rep.lambda_of(g, "0222")


def test_c8iv_lambda_differences_are_impossible_cells():
    diffs, _ = compare_table("lambda_c8iv")
    assert {(r, c) for r, c, _, _ in diffs} == {("lambda_2^2", "111s"), ("lambda_max^2", "111s")}
    rep = colored_design_check(catalog.get("c8iv"), (2, 2, 2, 2), 4, cross_check=False)
    assert rep.max_of("111s") == 0


@pytest.mark.parametrize("name,comp,t,mid", [("g12", (6, 3, 3), 4, 220), ("c8iv", (4, 4, 0, 0), 4, 14),
                                             ("h6", (2, 2, 2, 0), 3, 15)])
def test_packing_covering_middle(name, comp, t, mid):
    pc = packing_covering_params(colored_design_check(catalog.get(name), comp, t, cross_check=False))
    assert pc["block_count"] == mid and f"<= {mid} <=" in pc["statement"]


def test_scan_h6():
    res = homogeneity_scan(catalog.get("h6"), 3)
    assert res.delta_c == 2 and not res.capped


def test_scan_c8iv():
    res = homogeneity_scan(catalog.get("c8iv"), 4)
    assert res.delta_c >= 3


def test_scan_zero_code():
    res = homogeneity_scan(zero_code(gf(3), 3), 2)
    assert res.degenerate == [(3, 0, 0)]


def test_empty_block_set_warns():
    with pytest.warns(EmptyBlockSet):
        rep = colored_design_check(catalog.get("c4"), (2, 2, 0), 1, cross_check=False)
    assert rep.block_count == 0


def test_bad_queries():
    c4 = catalog.get("c4")
    with pytest.raises(PreconditionError):
        colored_design_check(c4, (1, 3, 0), 5)
    with pytest.raises(PreconditionError):
        colored_design_check(c4, (1, 2, 0), 1)
    with pytest.raises(PreconditionError):
        generalized_colored_design_check(c4, [[1, 2], [3, 4]], [(1, 1, 0), (0, 1, 1)], [3, 0])


def test_generalized_trivial_strength():
    c4 = catalog.get("c4")
    rep = generalized_colored_design_check(c4, [[1, 2], [3, 4]], [(1, 1, 0), (0, 1, 1)], [0, 0])
    assert rep.is_design and rep.group_lambdas == [(rep.block_count,)]


def test_single_block_collapse():
    code = catalog.get("h6")
    a = colored_design_check(code, (2, 2, 2, 0), 2)
    b = generalized_colored_design_check(code, [list(range(1, 7))], [(2, 2, 2, 0)], [2])
    assert a.is_design == b.is_design and a.group_lambdas == b.group_lambdas


def test_split_c4_all_classes_cross_checked():
    c4 = catalog.get("c4")
    spec = SplitSpec(((1, 2), (3, 4)))
    comps = {tuple(tuple(sum(1 for i in b if w[i - 1] == a) for a in range(3)) for b in spec.blocks) for w in c4}
    for comp in comps:
        for ts in [(1, 0), (0, 1), (1, 1)]:
            assert generalized_colored_design_check(c4, spec, comp, ts).cross_checked


def test_multiset_labels():
    labels = gf(4).labels
    assert parse_multiset_label("01ss2", labels) == [0, 1, 2, 3]
    assert parse_multiset_label("s2s2", labels) == [3, 3]


def test_permuted_composition_same_block_count():
    code = catalog.get("g12")
    a = colored_design_check(code, (6, 3, 3), 3, cross_check=False)
    b = colored_design_check(code, (3, 6, 3), 3, cross_check=False)
    assert a.block_count == b.block_count


def test_relabeling_coordinates_keeps_lambda_multiset():
    code = catalog.get("h6")
    perm = [5, 2, 0, 4, 1, 3]
    shuffled = WordSet(code.field, 6, [tuple(w[p] for p in perm) for w in code])
    a = colored_design_check(code, (2, 2, 2, 0), 3, cross_check=False)
    b = colored_design_check(shuffled, (2, 2, 2, 0), 3, cross_check=False)
    assert sorted(a.group_lambdas) == sorted(b.group_lambdas)
    assert sorted(map(len, a.groups)) == sorted(map(len, b.groups))


@given(small_codes(max_n=5), st.integers(1, 2))
def test_counting_agrees_with_jacobi_slices(code, t):
    if t > code.length:
        return
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", EmptyBlockSet)
        for comp in realized_compositions(code):
            rep = colored_design_check(code, comp, t)
            assert rep.cross_checked
            assert all(sum(l) == rep.block_count for l in rep.group_lambdas)
            assert rep.is_design == (len(rep.groups) == 1)


def test_report_json():
    rep = colored_design_check(catalog.get("h6"), (2, 2, 2, 0), 2)
    obj = rep.to_json_obj()
    assert obj["block_count"] == 15 and obj["is_design"] is True


def test_threads_env_gives_same_answer(monkeypatch):
    code = catalog.get("h6")
    a = colored_design_check(code, (2, 2, 2, 0), 3, cross_check=False)
    monkeypatch.setenv("CODE_DESIGNS_THREADS", "2")
    b = colored_design_check(code, (2, 2, 2, 0), 3, cross_check=False)
    assert a.group_lambdas == b.group_lambdas and a.groups == b.groups
