"""Acceptance checks 1-11 against the shipped reference values.

Every check compares an exact computation with either a printed value (from
``data/fixtures``) or an independent brute-force oracle.  Printed values that
are provably wrong are listed in ``KNOWN_MISPRINTS``; a polynomial check passes
when the diff against the printed text is exactly that list, so any new
discrepancy still fails.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field as dc_field
from typing import Callable

from . import catalog, fixtures
from .algebra import Cyclotomic, gf, character
from .codes import LinearCode, classify, delta_identity, dual
from .designs import colored_design_check, generalized_colored_design_check, lambda_table, realized_compositions
from .enumerators import (SplitSpec, complete_jacobi, cwe, cwe_y, macwilliams_scj, macwilliams_scwe,
                          polarize_power, scwe, split_complete_jacobi, verify_singleton_decomposition)
from .errors import CrossCheckMismatch
from .invariants import (doubled_action, exact_rank, group_alphabet, invariant_basis, molien_bivariate,
                         named_group, reynolds, specialization_rank_check)
from .polyring import Polynomial, diff_terms, evaluate_at_ones, nonzero_merge_map, parse, render_monomial


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    details: list[str] = dc_field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} criterion {self.number}: {self.title}"


# fixture name -> {monomial text: (oracle coefficient, printed coefficient)}
KNOWN_MISPRINTS: dict[str, dict[str, tuple[int, int]]] = {
    "scj_c4": {
        "x_{X1,0}y_{X1,1}x_{X2,1}y_{X2,2}": (1, 0),
        "x_{X1,0}y_{X1,1}x_{X2,1}y_{X2,2}^2": (0, 1),
    },
    "cj_g12_t3": {
        "x_0^2x_2y_0^4y_1^3y_2^2": (45, 0),
        "x_0^2x_2y_0^6y_1^3": (0, 45),
        "x_1x_2^2y_0^5y_1y_2^3": (0, 9),
        "x_1x_2^2y_0^6y_1^2y_2": (9, 0),
    },
    "cj_g12_t4_b": {
        "x_0x_1^3y_0^2y_1^3y_2^3": (24, 0),
        "x_0x_1^3y_0^5y_2^3": (0, 24),
    },
    "cj_h6_t2": {
        "x_0x_{s2}y_0y_1y_{s2}^2": (0, 4),
        "x_0x_{s2}y_0y_1^2y_{s2}": (4, 0),
        "x_1x_{s2}y_1y_s^2y_{s2}": (4, 1),
    },
    "cj_c8iv_t3": {
        "x_0^3y_0y_1^4": (1, 0),
        "x_0^3y_0y_s^4": (1, 2),
    },
}

# printed f[4] of the order-576 group (not homogeneous); the computed series is authoritative
PRINTED_F4 = "u^4+u^3v+2u^2+uv^3+v^2"


def _misprint_diff(name: str, alphabet) -> dict:
    out = {}
    for text, (a, b) in KNOWN_MISPRINTS.get(name, {}).items():
        (m,) = parse(text, alphabet).terms
        out[m] = (a, b)
    return out


def _diff_matches(name: str, oracle: Polynomial, printed: Polynomial) -> tuple[bool, list[str]]:
    got = {m: (a, b) for m, (a, b) in diff_terms(oracle, printed).items()}
    expected = _misprint_diff(name, oracle.alphabet)
    notes = [f"{name}: {render_monomial(oracle.alphabet, m, True)} oracle {a} printed {b}"
             for m, (a, b) in sorted(got.items())]
    ok = set(got) == set(expected) and all(got[m][0] == a and got[m][1] == b for m, (a, b) in expected.items())
    return ok, notes


_cj_cache: dict = {}


def distinct_jacobi(code: LinearCode, t: int) -> list[Polynomial]:
    """The distinct CJ(C, T) over all T of size t, in order of first appearance."""
    key = (code.name, t)
    if key not in _cj_cache:
        seen: list[Polynomial] = []
        for T in itertools.combinations(range(1, code.length + 1), t):
            p = complete_jacobi(code, T)
            if p not in seen:
                seen.append(p)
        _cj_cache[key] = seen
    return _cj_cache[key]


def _split_halves(n: int) -> SplitSpec:
    h = n // 2
    return SplitSpec((tuple(range(1, h + 1)), tuple(range(h + 1, n + 1))))


# ---------------------------------------------------------------------------
# the criteria
# ---------------------------------------------------------------------------

def criterion_1() -> CriterionResult:
    r = CriterionResult(1, "complete weight enumerator of c4", False)
    _, printed = fixtures.polynomial("cwe_c4")
    ours = cwe(catalog.get("c4"))
    al = ours.alphabet
    c1 = ours.coefficient_of(next(iter(parse("x_0x_1^2x_2", al).terms)))
    c2 = ours.coefficient_of(next(iter(parse("x_0x_1x_2^2", al).terms)))
    r.passed = ours == printed and len(ours.terms) == 5 and c1 == 3 and c2 == 3
    r.details.append(f"terms={len(ours.terms)} equal_to_printed={ours == printed}")
    return r


def criterion_2() -> CriterionResult:
    r = CriterionResult(2, "split enumerators of c4 (printed diff limited to the flagged term)", False)
    code = catalog.get("c4")
    spec = SplitSpec(((1, 2), (3, 4)))
    _, printed = fixtures.polynomial("scwe_c4")
    ours = scwe(code, spec)
    ok1 = ours == printed and len(ours.terms) == 9
    _, printed_scj = fixtures.polynomial("scj_c4")
    oracle = split_complete_jacobi(code, spec.with_refs([(1,), (3,)]))
    ok2, notes = _diff_matches("scj_c4", oracle, printed_scj)
    _, printed_cj = fixtures.polynomial("cj_c4_T13")
    ok3 = complete_jacobi(code, [1, 3]) == printed_cj
    r.passed = ok1 and ok2 and ok3
    r.details += [f"scwe terms={len(ours.terms)} equal={ours == printed}", f"cj T={{1,3}} equal={ok3}"] + notes
    return r


def criterion_3() -> CriterionResult:
    r = CriterionResult(3, "MacWilliams transforms against directly enumerated duals", True)
    for name in catalog.names():
        code = catalog.get(name)
        herm = code.field.q == 4
        d = dual(code, hermitian=herm)
        n = code.length
        specs = [SplitSpec.single(n)]
        if n >= 2:
            specs.append(_split_halves(n))
        for spec in specs:
            w = scwe(code, spec)
            t1 = macwilliams_scwe(w, code.field, len(code), herm)
            ok = t1 == scwe(d, spec)
            back = macwilliams_scwe(t1, code.field, len(d), herm) == w
            refs = [b[:1] for b in spec.blocks]
            j = split_complete_jacobi(code, spec.with_refs(refs))
            tj = macwilliams_scj(j, code.field, len(code), herm)
            okj = tj == split_complete_jacobi(d, spec.with_refs(refs))
            backj = macwilliams_scj(tj, code.field, len(d), herm) == j
            if not (ok and back and okj and backj):
                r.passed = False
            r.details.append(f"{name} blocks={len(spec.blocks)}: scwe={ok} double={back} scj={okj} double={backj}")
    return r


def criterion_4() -> CriterionResult:
    r = CriterionResult(4, "group orders 2592 and 576", False)
    g3, g4 = named_group("g3"), named_group("g4")
    r.passed = len(g3) == 2592 and len(g4) == 576
    r.details.append(f"|G3|={len(g3)} |G4|={len(g4)}")
    return r


def criterion_5() -> CriterionResult:
    r = CriterionResult(5, "bivariate Molien coefficients", False)
    m4 = molien_bivariate(named_group("g4"), 8)
    m3 = molien_bivariate(named_group("g3"), 12)
    f6 = m4.homogeneous(6)
    f8 = m4.homogeneous(8)
    f12 = m3.homogeneous(12)
    f4 = m4.homogeneous(4)
    ok6 = f6 == [2, 2, 3, 4, 3, 2, 2]
    ok8 = f8[:5] == [3, 5, 7, 8, 10]
    ok12 = f12[:3] == [2, 2, 3] and f12[9] == 4
    r.passed = ok6 and ok8 and ok12
    r.details += [f"f[6]={f6}", f"f[8]={f8}", f"f[12]={f12}",
                  f"f[4]={f4} (printed {PRINTED_F4} is not homogeneous; flagged, not matched)"]
    return r


G4_SEEDS_24 = "x_0^2y_0^4,x_0^2y_1^2y_s^2,x_0x_1y_0y_1y_s^2"
G4_SEEDS_33 = "x_0^3y_0^3,x_0^2x_1y_1y_s^2,x_0x_1^2y_0y_s^2,x_0x_1x_sy_0y_1y_s"
# the last seed is printed with y_2^2, which has the wrong bidegree; y_2^3 restores (3,9)
G3_SEEDS_39 = "x_0^3y_0^9,x_0^3y_0^3y_1^6,x_0^3y_0^3y_1^3y_2^3,x_0^2x_1y_0^4y_1^5"


def _seed_monomials(text: str, q: int):
    return [next(iter(parse(t, gf(q)).terms)) for t in text.split(",")]


def criterion_6() -> CriterionResult:
    r = CriterionResult(6, "Reynolds bases and specialization ranks", True)
    g3, g4 = named_group("g3"), named_group("g4")
    for label, grp, seeds, want in [("G4 (2,4)", g4, G4_SEEDS_24, 3), ("G4 (3,3)", g4, G4_SEEDS_33, 4),
                                    ("G3 (3,9)", g3, G3_SEEDS_39, 4)]:
        basis = [reynolds(m, grp) for m in _seed_monomials(seeds, grp.dim)]
        rk = exact_rank(basis)
        inv = all(doubled_action(g, b) == b for g in grp.generators for b in basis)
        r.passed &= rk == want and inv
        r.details.append(f"{label}: rank {rk} (want {want}), invariant={inv}")
    for grp, pairs in [(g4, [(1, 5), (2, 4)]), (g3, [(1, 11), (2, 10), (3, 9)])]:
        mol = molien_bivariate(grp, sum(pairs[0]))
        merge = nonzero_merge_map(group_alphabet(grp))
        for i, j in pairs:
            basis = invariant_basis(grp, i, j, target=mol.dims[(i, j)])
            rc = specialization_rank_check(basis, merge)
            ok = rc["rank_before"] == rc["rank_after"] == mol.dims[(i, j)]
            r.passed &= ok
            r.details.append(f"{grp.name} M_{{{i},{j}}}: dim {mol.dims[(i, j)]}, rank {rc['rank_before']} -> "
                             f"{rc['rank_after']} after merging nonzero variables")
    return r


DESIGN_CASES = [
    ("g12", (6, 3, 3), 3, 220),
    ("g12", (6, 6, 0), 3, 22),
    ("c4iv", (2, 2, 0, 0), 1, 2),
    ("h6", (2, 2, 2, 0), 2, 15),
    ("c8iv", (4, 4, 0, 0), 3, 14),
    ("c8iv", (2, 2, 2, 2), 3, 168),
]


def criterion_7() -> CriterionResult:
    r = CriterionResult(7, "design verdicts and block counts", True)
    for name, comp, t, blocks in DESIGN_CASES:
        rep = colored_design_check(catalog.get(name), comp, t)
        ok = rep.is_design and rep.block_count == blocks
        r.passed &= ok
        r.details.append(f"{name} {comp} t={t}: design={rep.is_design} blocks={rep.block_count} (want {blocks})")
    return r


def compare_table(name: str) -> tuple[list[tuple[str, str, int, int]], object]:
    """Cell differences (row, column, printed, computed); group rows are matched by content."""
    meta, header, printed = fixtures.table(name)
    comps = [tuple(int(x) for x in c.split(",")) for c in meta["compositions"].split(";")]
    tab = lambda_table(catalog.get(meta["code"]), comps, int(meta["t"]), cross_check=False)
    if tab.header != header:
        return [("header", "", 0, 0)], tab
    mine = dict(tab.rows())
    diffs = []
    for j in range(1, len(comps) + 1):
        sup = f"^{j}" if len(comps) > 1 else ""

        def group_rows(rows):
            return [k for k in rows if k.startswith("lambda_") and k[7].isdigit() and k.endswith(sup)]

        pg, mg = group_rows(printed), group_rows(mine)
        if len(pg) != len(mg):
            diffs.append((f"groups{sup}", "", len(pg), len(mg)))
            continue

        def cost(perm):
            return sum(a != b for p, m in zip(pg, perm) for a, b in zip(printed[p], mine[m]))

        best = min(itertools.permutations(mg), key=cost)
        pairs = list(zip(pg, best)) + [(f"lambda_max{sup}",) * 2, (f"lambda_min{sup}",) * 2]
        for p, m in pairs:
            for h, a, b in zip(header, printed[p], mine[m]):
                if a != b:
                    diffs.append((p, h, a, b))
    return diffs, tab


def criterion_8() -> CriterionResult:
    r = CriterionResult(8, "lambda tables cell for cell", True)
    for name in ["lambda_g12", "lambda_c4iv", "lambda_h6", "lambda_c8iv"]:
        diffs, _ = compare_table(name)
        r.passed &= not diffs
        r.details.append(f"{name}: {len(diffs)} differing cells")
        r.details += [f"  {row} [{col}]: printed {a}, computed {b}" for row, col, a, b in diffs]
    # the g12 cells are forced equal by u -> 2u, which fixes the code and the composition (6,3,3)
    rep = colored_design_check(catalog.get("g12"), (6, 3, 3), 4, cross_check=False)
    sym = all(rep.lambda_of(g, "0011") == rep.lambda_of(g, "0022") and rep.lambda_of(g, "0111") == rep.lambda_of(g, "0222")
              for g in range(1, len(rep.groups) + 1))
    r.details.append(f"g12 (6,3,3): lambda(0011)=lambda(0022) and lambda(0111)=lambda(0222) in every group: {sym}")
    r.details.append("c8iv (2,2,2,2): a block has exactly two 1s, so lambda(111s) must be 0")
    return r


def _printed_vs_oracle(fixture: str, code: LinearCode, t: int, notes: list[str]) -> bool:
    _, printed = fixtures.polynomial(fixture)
    cands = distinct_jacobi(code, t)
    best = min(cands, key=lambda c: len(diff_terms(c, printed)))
    ok, lines = _diff_matches(fixture, best, printed)
    notes.append(f"{fixture}: matches oracle modulo flagged misprints: {ok}")
    notes += ["  " + ln for ln in lines]
    return ok


def criterion_9() -> CriterionResult:
    r = CriterionResult(9, "polarization and decomposition identities", True)
    for name, tmax in [("g12", 3), ("h6", 2), ("c8iv", 3)]:
        code = catalog.get(name)
        base = cwe_y(code)
        for t in range(tmax + 1):
            target = polarize_power(base, t)
            ok = all(complete_jacobi(code, T) == target for T in itertools.combinations(range(1, code.length + 1), t))
            r.passed &= ok
            r.details.append(f"{name} |T|={t}: CJ = A^t cwe for every T: {ok}")
    for fx in fixtures.names():
        meta, _ = fixtures.read(fx)
        if meta.get("kind") == "cj" and "t" in meta:
            r.passed &= _printed_vs_oracle(fx, catalog.get(meta["code"]), int(meta["t"]), r.details)
    for name, spec in [("c4", SplitSpec.single(4)), ("c4", SplitSpec(((1, 2), (3, 4)))),
                       ("h6", SplitSpec.single(6)), ("h6", SplitSpec(((1, 2, 3), (4, 5, 6))))]:
        code = catalog.get(name)
        for i in range(1, code.length + 1):
            k = spec.block_of(i)
            rep = verify_singleton_decomposition(code, spec, k, i)
            r.passed &= rep.holds
            if not rep.holds:
                r.details.append(f"{name} blocks={spec.ell} i={i}: {rep.detail}")
        r.details.append(f"{name} blocks={spec.ell}: decomposition identity checked at every coordinate")
    return r


def design_matrix() -> list[tuple]:
    """(code name, spec or None, composition, t) for the full cross-check run."""
    cases = []
    for name, tmax in [("c4iv", 2), ("h6", 3), ("c2iv", 1)]:
        code = catalog.get(name)
        for comp in realized_compositions(code):
            for t in range(1, tmax + 1):
                cases.append((name, None, comp, t))
    for name, comp, t, _ in DESIGN_CASES:
        cases.append((name, None, comp, t))
    cases += [("g12", None, (6, 3, 3), 4), ("g12", None, (6, 6, 0), 4), ("c8iv", None, (2, 2, 2, 2), 4)]
    c4 = catalog.get("c4")
    spec = SplitSpec(((1, 2), (3, 4)))
    split_comps = sorted({tuple(tuple(sum(1 for i in b if w[i - 1] == a) for a in range(3)) for b in spec.blocks)
                          for w in c4})
    for comp in split_comps:
        for ts in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (2, 1)]:
            cases.append(("c4", spec, comp, ts))
    return cases


def criterion_10() -> CriterionResult:
    r = CriterionResult(10, "counting verdict agrees with SCJ independence", True)
    count = 0
    for name, spec, comp, t in design_matrix():
        code = catalog.get(name)
        try:
            if spec is None:
                colored_design_check(code, comp, t, cross_check=True)
            else:
                generalized_colored_design_check(code, spec, comp, t, cross_check=True)
            count += 1
        except CrossCheckMismatch as e:
            r.passed = False
            r.details.append(f"{name} {comp} t={t}: {e}")
    r.details.append(f"{count} queries cross-checked")
    return r


def criterion_11(samples: int = 50, seed: int = 2024) -> CriterionResult:
    r = CriterionResult(11, "character sums, delta identity, evaluation, group invariance", True)
    for q in (3, 4):
        F = gf(q)
        ok = True
        for b in F.elements()[1:]:
            for a in F.elements():
                s = sum((character(b, a * c) for c in F.elements()), Cyclotomic.zero())
                ok &= s == (q if a.index == 0 else 0)
        r.passed &= ok
        r.details.append(f"GF({q}) character sums: {ok}")
    rng = random.Random(seed)
    for name in catalog.names():
        code = catalog.get(name)
        herm = code.field.q == 4
        d = dual(code, hermitian=herm)
        ok = True
        for _ in range(samples):
            v = [rng.randrange(code.field.q) for _ in range(code.length)]
            ok &= delta_identity(code, v, herm) == (1 if tuple(v) in d else 0)
        ones = evaluate_at_ones(cwe(code)) == len(code)
        r.passed &= ok and ones
        r.details.append(f"{name}: delta identity on {samples} vectors {ok}, cwe(1,...,1)=|C| {ones}")
    for name in catalog.names():
        typ = catalog.asserted_type(name)
        grp = named_group("g3" if typ == "type3" else "g4")
        code = catalog.get(name)
        if typ is None or classify(code).get(typ) is not True:
            continue
        polys = [cwe(code)]
        if code.length >= 2:
            polys.append(scwe(code, _split_halves(code.length)))
        ok = all(doubled_action(g, p) == p for g in grp.generators for p in polys)
        if name == "c4":
            # not every type III code is fixed by the diagonal generators; report, do not require
            r.details.append(f"c4 under {grp.name} generators: invariant={ok}")
            continue
        r.passed &= ok
        r.details.append(f"{name} under {grp.name} generators: invariant={ok}")
    return r


CRITERIA: list[Callable[[], CriterionResult]] = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11,
]


def run(numbers=None) -> list[CriterionResult]:
    out = []
    for i, fn in enumerate(CRITERIA, 1):
        if numbers and i not in numbers:
            continue
        t0 = time.time()
        res = fn()
        res.seconds = time.time() - t0
        out.append(res)
    return out
