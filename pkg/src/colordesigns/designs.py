"""Colored t-designs held by the codewords of a fixed composition.

The blocks of a design are the codewords u with a prescribed composition;
a block "uses" the colour multiset P on a t-set T when the multiset of
entries of u on T equals P.  Counting these incidences for every T gives
the lambda-vectors; T-sets with identical vectors form one group, and the
structure is a design exactly when there is a single group.

Every query is cross-checked against the split complete Jacobi polynomial:
the slice of SCJ with the target composition must be independent of the
reference sets exactly when the counting verdict says "design".
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
import warnings
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .codes import WordSet
from .enumerators import SplitSpec, split_complete_jacobi
from .errors import CrossCheckMismatch, PreconditionError


class EmptyBlockSet(UserWarning):
    """No codeword has the requested composition."""


@dataclass
class DesignReport:
    code_name: str
    n: int
    q: int
    labels: list[str]
    spec: SplitSpec
    composition: tuple[tuple[int, ...], ...]
    t: tuple[int, ...]
    block_count: int
    multisets: list[tuple[tuple[int, ...], ...]]
    groups: list[list[tuple[tuple[int, ...], ...]]]
    group_lambdas: list[tuple[int, ...]]
    lambda_max: tuple[int, ...]
    lambda_min: tuple[int, ...]
    is_design: bool
    degenerate: bool = False
    cross_checked: bool = False
    notes: list[str] = dc_field(default_factory=list)

    @property
    def palette(self) -> dict[str, int]:
        tot = [sum(c) for c in zip(*self.composition)]
        return {self.labels[a]: tot[a] for a in range(self.q)}

    def lambda_of(self, group: int, P) -> int:
        """lambda for a 1-based group index and a multiset given as labels or a label string."""
        key = self._multiset_key(P)
        return self.group_lambdas[group - 1][self.multisets.index(key)]

    def max_of(self, P) -> int:
        return self.lambda_max[self.multisets.index(self._multiset_key(P))]

    def min_of(self, P) -> int:
        return self.lambda_min[self.multisets.index(self._multiset_key(P))]

    def _multiset_key(self, P):
        if isinstance(P, str):
            P = (P,)
        if P and isinstance(P[0], str) and len(self.spec.blocks) == 1 and len(P) == 1:
            P = (tuple(parse_multiset_label(P[0], self.labels)),)
        return tuple(tuple(sorted(p)) for p in P)

    def multiset_label(self, P) -> str:
        return "|".join("".join(self.labels[a] for a in p) for p in P)

    def to_json_obj(self) -> dict:
        return {
            "code": self.code_name,
            "n": self.n,
            "q": self.q,
            "blocks": [list(b) for b in self.spec.blocks],
            "composition": [list(c) for c in self.composition],
            "t": list(self.t),
            "block_count": self.block_count,
            "is_design": self.is_design,
            "degenerate": self.degenerate,
            "cross_checked": self.cross_checked,
            "multisets": [self.multiset_label(P) for P in self.multisets],
            "groups": [
                {"size": len(g), "members": [[list(T) for T in Ts] for Ts in g], "lambda": list(lam)}
                for g, lam in zip(self.groups, self.group_lambdas)
            ],
            "lambda_max": list(self.lambda_max),
            "lambda_min": list(self.lambda_min),
            "notes": self.notes,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_json_obj(), **kw)

    def summary(self) -> str:
        t = sum(self.t)
        comp = "/".join(",".join(map(str, c)) for c in self.composition)
        if self.block_count == 0:
            return f"composition ({comp}): no blocks"
        kind = f"{self.q}-colored {t}-design" if self.is_design else f"not a {self.q}-colored {t}-design"
        extra = "" if self.is_design else f" ({len(self.groups)} T-groups)"
        return f"composition ({comp}), t={t}: {kind}, {self.block_count} blocks{extra}"


def parse_multiset_label(text: str, labels: Sequence[str]) -> list[int]:
    """'01ss2' -> element indices; longest label first."""
    order = sorted(range(len(labels)), key=lambda i: -len(labels[i]))
    out, pos = [], 0
    text = text.replace("^", "")
    while pos < len(text):
        for i in order:
            if text.startswith(labels[i], pos):
                out.append(i)
                pos += len(labels[i])
                break
        else:
            raise ValueError(f"cannot parse multiset {text!r}")
    return out


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("CODE_DESIGNS_THREADS", "1")))
    except ValueError:
        return 1


def _count_chunk(args):
    words, coord_tuples = args
    out = []
    for coords in coord_tuples:
        c = Counter()
        for w in words:
            c[tuple(tuple(sorted(w[i] for i in T)) for T in coords)] += 1
        out.append(c)
    return out


def _incidence_counts(words, all_coords):
    """One Counter of used multiset-tuples per reference tuple, in input order."""
    k = _threads()
    if k == 1 or len(all_coords) < 2 * k:
        return _count_chunk((words, all_coords))
    size = -(-len(all_coords) // k)
    chunks = [all_coords[i:i + size] for i in range(0, len(all_coords), size)]
    with ProcessPoolExecutor(max_workers=k) as ex:
        parts = list(ex.map(_count_chunk, [(words, ch) for ch in chunks]))
    return [c for part in parts for c in part]


def _normalize_comp(code: WordSet, spec: SplitSpec, composition) -> tuple[tuple[int, ...], ...]:
    q = code.field.q
    comp = composition
    if hasattr(comp, "counts"):
        comp = (comp.counts,)
    elif comp and isinstance(comp[0], int):
        comp = (tuple(comp),)
    comp = tuple(tuple(int(x) for x in c) for c in comp)
    if len(comp) != spec.ell:
        raise PreconditionError("one composition per block is required")
    for c, b in zip(comp, spec.blocks):
        if len(c) != q:
            raise PreconditionError(f"composition {c} needs {q} entries")
        if sum(c) != len(b) or min(c) < 0:
            raise PreconditionError(f"composition {c} does not sum to the block size {len(b)}")
    return comp


def _block_comp(w, spec: SplitSpec, q: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for b in spec.blocks:
        c = [0] * q
        for i in b:
            c[w[i - 1]] += 1
        out.append(tuple(c))
    return tuple(out)


def _scj_slice(code: WordSet, spec: SplitSpec, refs, comp, q: int) -> dict:
    """Coefficients of the SCJ monomials whose per-block total composition is ``comp``."""
    poly = split_complete_jacobi(code, spec.with_refs(refs))
    out = {}
    for m, c in poly.terms.items():
        tot = [[0] * q for _ in spec.blocks]
        xs = [[0] * q for _ in spec.blocks]
        for v, e in m:
            tot[v.block - 1][v.elem] += e
            if v.kind == "x":
                xs[v.block - 1][v.elem] += e
        if tuple(map(tuple, tot)) == comp:
            out[tuple(map(tuple, xs))] = c
    return out


def generalized_colored_design_check(code: WordSet, spec, composition, t, cross_check: bool = True) -> DesignReport:
    """Design check over split coordinates with a strength per block."""
    if not isinstance(spec, SplitSpec):
        spec = SplitSpec(tuple(tuple(b) for b in spec), None, code.length)
    spec = spec.without_refs()
    q = code.field.q
    ts = (t,) if isinstance(t, int) else tuple(t)
    if len(ts) != spec.ell:
        raise PreconditionError("one strength per block is required")
    for ti, b in zip(ts, spec.blocks):
        if ti < 0 or ti > len(b):
            raise PreconditionError(f"strength {ti} is outside [0, {len(b)}]")
    comp = _normalize_comp(code, spec, composition)
    blocks = [w for w in code if _block_comp(w, spec, q) == comp]
    multisets = list(itertools.product(
        *(itertools.combinations_with_replacement(range(q), ti) for ti in ts)))
    ref_tuples = list(itertools.product(*(itertools.combinations(b, ti) for ti, b in zip(ts, spec.blocks))))
    coords = [tuple(tuple(i - 1 for i in T) for T in refs) for refs in ref_tuples]
    counts = _incidence_counts(blocks, coords)
    by_vec: dict[tuple[int, ...], list] = {}
    for refs, c in zip(ref_tuples, counts):
        vec = tuple(c.get(P, 0) for P in multisets)
        by_vec.setdefault(vec, []).append(refs)
    ordered = sorted(by_vec.items(), key=lambda kv: (len(kv[1]), kv[1][0]))
    groups = [g for _, g in ordered]
    lambdas = [vec for vec, _ in ordered]
    lam_max = tuple(max(col) for col in zip(*lambdas)) if lambdas else ()
    lam_min = tuple(min(col) for col in zip(*lambdas)) if lambdas else ()
    notes = []
    if not blocks:
        warnings.warn(f"no codeword has composition {comp}", EmptyBlockSet, stacklevel=2)
        notes.append("empty block set")
    tot = [sum(col) for col in zip(*comp)]
    degenerate = sum(1 for x in tot if x) <= 1
    if degenerate:
        notes.append("degenerate composition (single colour)")
    report = DesignReport(
        code_name=code.name, n=code.length, q=q, labels=list(code.field.labels), spec=spec,
        composition=comp, t=ts, block_count=len(blocks), multisets=multisets, groups=groups,
        group_lambdas=lambdas, lambda_max=lam_max, lambda_min=lam_min, is_design=len(groups) <= 1,
        degenerate=degenerate, notes=notes)
    if cross_check:
        _cross_check(code, spec, comp, ref_tuples, report)
    return report


def _cross_check(code, spec, comp, ref_tuples, report: DesignReport) -> None:
    q = code.field.q
    first = None
    independent = True
    for refs in ref_tuples:
        sl = _scj_slice(code, spec, refs, comp, q)
        if first is None:
            first = sl
        elif sl != first:
            independent = False
            break
    if independent != report.is_design:
        raise CrossCheckMismatch(
            f"counting says design={report.is_design}, SCJ slice independence says {independent}")
    report.cross_checked = True


def colored_design_check(code: WordSet, composition, t: int, cross_check: bool = True) -> DesignReport:
    """Unsplit check: every t-subset of [n] against every t-multiset of colours."""
    if t > code.length:
        raise PreconditionError(f"t = {t} exceeds the length {code.length}")
    return generalized_colored_design_check(code, SplitSpec.single(code.length), composition, t, cross_check)


# ---------------------------------------------------------------------------
# lambda tables
# ---------------------------------------------------------------------------

@dataclass
class LambdaTable:
    code_name: str
    t: int
    labels: list[str]
    reports: list[DesignReport]

    @property
    def header(self) -> list[str]:
        return [self.reports[0].multiset_label(P) for P in self.reports[0].multisets]

    def rows(self) -> list[tuple[str, list[int]]]:
        multi = len(self.reports) > 1
        out = []
        for j, rep in enumerate(self.reports, 1):
            sup = f"^{j}" if multi else ""
            for gi, lam in enumerate(rep.group_lambdas, 1):
                out.append((f"lambda_{gi}{sup}", list(lam)))
            out.append((f"lambda_max{sup}", list(rep.lambda_max)))
            out.append((f"lambda_min{sup}", list(rep.lambda_min)))
        return out

    def render(self, width: int = 8) -> str:
        """Aligned text table, wrapped every ``width`` columns."""
        head = self.header
        rows = self.rows()
        name_w = max(len(r[0]) for r in rows + [("P", [])])
        lines = []
        comps = ", ".join("(" + ",".join(map(str, r.composition[0])) + ")" for r in self.reports)
        lines.append(f"{self.code_name}: t={self.t}, compositions {comps}")
        for start in range(0, len(head), width):
            cols = head[start:start + width]
            cw = [max(len(c), *(len(str(r[1][start + k])) for r in rows)) for k, c in enumerate(cols)]
            lines.append("  ".join(["P".ljust(name_w)] + [c.rjust(w) for c, w in zip(cols, cw)]))
            for name, vals in rows:
                vs = vals[start:start + width]
                lines.append("  ".join([name.ljust(name_w)] + [str(v).rjust(w) for v, w in zip(vs, cw)]))
            lines.append("")
        return "\n".join(lines).rstrip() + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["row"] + self.header)
        for name, vals in self.rows():
            wr.writerow([name] + vals)
        return buf.getvalue()

    def to_json_obj(self) -> dict:
        return {"code": self.code_name, "t": self.t, "multisets": self.header,
                "rows": {name: vals for name, vals in self.rows()},
                "reports": [r.to_json_obj() for r in self.reports]}


def lambda_table(code: WordSet, compositions, t: int, cross_check: bool = True) -> LambdaTable:
    if compositions and isinstance(compositions[0], int):
        compositions = [compositions]
    reports = [colored_design_check(code, c, t, cross_check) for c in compositions]
    return LambdaTable(code.name, t, list(code.field.labels), reports)


def packing_covering_params(report: DesignReport) -> dict:
    """Block count bracketed by the lambda extremes: D_{lmax}(n, s, t) <= |B| <= C_{lmin}(n, s, t)."""
    comp = ",".join(map(str, report.composition[0])) if report.spec.ell == 1 else str(report.composition)
    t = sum(report.t)
    return {
        "block_count": report.block_count,
        "lambda_max": list(report.lambda_max),
        "lambda_min": list(report.lambda_min),
        "statement": f"D_lambda_max({report.n},({comp}),{t}) <= {report.block_count} <= "
                     f"C_lambda_min({report.n},({comp}),{t})",
    }


# ---------------------------------------------------------------------------
# homogeneity scan
# ---------------------------------------------------------------------------

@dataclass
class ScanResult:
    code_name: str
    t_max: int
    delta_c: int
    s_c: int
    capped: bool
    verdicts: dict[tuple[tuple[int, ...], int], bool]
    degenerate: list[tuple[int, ...]]

    def to_json_obj(self) -> dict:
        return {
            "code": self.code_name, "t_max": self.t_max, "delta_c": self.delta_c, "s_c": self.s_c,
            "capped": self.capped,
            "verdicts": [{"composition": list(c), "t": t, "design": v} for (c, t), v in sorted(self.verdicts.items())],
            "degenerate": [list(c) for c in self.degenerate],
        }

    def render(self) -> str:
        lines = [f"{self.code_name}: delta_c = {self.delta_c}{'+' if self.capped else ''}, s_c = {self.s_c}"
                 f" (t <= {self.t_max})"]
        comps = sorted({c for c, _ in self.verdicts})
        for c in comps:
            ts = [t for t in range(1, self.t_max + 1) if self.verdicts.get((c, t))]
            lines.append(f"  ({','.join(map(str, c))}): designs for t in {ts}")
        for c in self.degenerate:
            lines.append(f"  ({','.join(map(str, c))}): degenerate, excluded")
        return "\n".join(lines) + "\n"


def realized_compositions(code: WordSet) -> list[tuple[int, ...]]:
    q = code.field.q
    seen = Counter()
    for w in code:
        c = [0] * q
        for a in w:
            c[a] += 1
        seen[tuple(c)] += 1
    return sorted(seen)


def homogeneity_scan(code: WordSet, t_max: int = 5, cross_check: bool = False) -> ScanResult:
    """delta_c: largest t with every composition a design; s_c: largest t with some composition a design."""
    t_max = min(t_max, code.length)
    comps = realized_compositions(code)
    degenerate = [c for c in comps if sum(1 for x in c if x) <= 1]
    live = [c for c in comps if c not in degenerate]
    verdicts = {}
    for t in range(1, t_max + 1):
        for c in live:
            verdicts[(c, t)] = colored_design_check(code, c, t, cross_check).is_design
    delta = 0
    for t in range(1, t_max + 1):
        if all(verdicts[(c, t)] for c in live):
            delta = t
        else:
            break
    s = max([t for (c, t), v in verdicts.items() if v], default=0)
    return ScanResult(code.name, t_max, delta, s, delta == t_max, verdicts, degenerate)
