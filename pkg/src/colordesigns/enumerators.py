"""Code polynomials: complete, split and Jacobi-type enumerators.

All enumerators are computed by direct enumeration of the code.  The
MacWilliams transforms and polarization operators act on the resulting
:class:`~colordesigns.polyring.Polynomial` values, and the ``verify_*``
functions compare both sides of the decomposition identities exactly.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .algebra import DEFAULT_ORDER, Cyclotomic, FiniteField
from .codes import LinearCode, WordSet, shorten, value_subcode
from .errors import AlphabetMismatch, IndexOutOfRange, PreconditionError
from .polyring import (HAMMING, Polynomial, VarKey, diff_terms, flip_kind, monomial,
                       partial_derivative, render_monomial, substitute_linear, to_hamming)


@dataclass(frozen=True)
class SplitSpec:
    """Disjoint coordinate blocks X_1..X_l covering [n] (1-based), with optional refs T_i within X_i."""

    blocks: tuple[tuple[int, ...], ...]
    refs: tuple[tuple[int, ...], ...] | None = None
    n: int | None = None

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        flat = [i for b in blocks for i in b]
        if len(flat) != len(set(flat)):
            raise PreconditionError("split blocks are not pairwise disjoint")
        n = self.n if self.n is not None else len(flat)
        object.__setattr__(self, "n", n)
        if sorted(flat) != list(range(1, n + 1)):
            raise IndexOutOfRange(f"split blocks do not cover [1, {n}] exactly")
        if self.refs is not None:
            refs = tuple(tuple(sorted(t)) for t in self.refs)
            if len(refs) != len(blocks):
                raise PreconditionError("one reference set per block is required")
            for t, b in zip(refs, blocks):
                if not set(t) <= set(b):
                    raise PreconditionError(f"reference set {t} is not inside block {b}")
            object.__setattr__(self, "refs", refs)

    @classmethod
    def single(cls, n: int, refs: Iterable[int] | None = None) -> "SplitSpec":
        return cls((tuple(range(1, n + 1)),), None if refs is None else (tuple(refs),), n)

    @property
    def ell(self) -> int:
        return len(self.blocks)

    def with_refs(self, refs: Sequence[Iterable[int]]) -> "SplitSpec":
        return SplitSpec(self.blocks, tuple(tuple(t) for t in refs), self.n)

    def without_refs(self) -> "SplitSpec":
        return SplitSpec(self.blocks, None, self.n)

    def drop_coordinate(self, i: int) -> "SplitSpec":
        """Remove coordinate i and renumber the later coordinates down by one."""
        def fix(s):
            return tuple(j - (j > i) for j in s if j != i)
        refs = None if self.refs is None else tuple(fix(t) for t in self.refs)
        return SplitSpec(tuple(fix(b) for b in self.blocks), refs, self.n - 1)

    def block_of(self, i: int) -> int:
        for k, b in enumerate(self.blocks, 1):
            if i in b:
                return k
        raise IndexOutOfRange(f"coordinate {i} is in no block")


def _as_spec(code: WordSet, spec) -> SplitSpec:
    if spec is None:
        return SplitSpec.single(code.length)
    if isinstance(spec, SplitSpec):
        if spec.n != code.length:
            raise PreconditionError(f"split covers {spec.n} coordinates, code has length {code.length}")
        return spec
    return SplitSpec(tuple(tuple(b) for b in spec), None, code.length)


def _count_monomials(code: WordSet, spec: SplitSpec, use_refs: bool) -> Counter:
    q = code.field.q
    parts = []  # (kind, block, 0-based coords)
    for k, b in enumerate(spec.blocks, 1):
        if use_refs:
            t = set(spec.refs[k - 1]) if spec.refs is not None else set()
            parts.append(("x", k, [i - 1 for i in b if i in t]))
            parts.append(("y", k, [i - 1 for i in b if i not in t]))
        else:
            parts.append(("x", k, [i - 1 for i in b]))
    keys = {(kd, k): [VarKey(k, kd, a) for a in range(q)] for kd, k, _ in parts}
    parts.sort(key=lambda p: (p[1], p[0]))
    counts: Counter = Counter()
    for w in code:
        m = []
        for kd, k, coords in parts:
            c = [0] * q
            for i in coords:
                c[w[i]] += 1
            ks = keys[(kd, k)]
            for a in range(q):
                if c[a]:
                    m.append((ks[a], c[a]))
        counts[tuple(m)] += 1
    return counts


def _poly(code: WordSet, counts: Counter, order: int) -> Polynomial:
    return Polynomial.from_counts(code.field, counts, order)


def cwe(code: WordSet, order: int = DEFAULT_ORDER) -> Polynomial:
    """Complete weight enumerator in the variables x_a."""
    return _poly(code, _count_monomials(code, SplitSpec.single(code.length), False), order)


def cwe_y(code: WordSet, order: int = DEFAULT_ORDER) -> Polynomial:
    """cwe written in the y-variables (the form the polarization operators act on)."""
    return flip_kind(cwe(code, order))


def hamming_we(code: WordSet, order: int = DEFAULT_ORDER) -> Polynomial:
    """Hamming weight enumerator W(x, y) = sum x^(n - wt) y^wt."""
    return to_hamming(cwe_y(code, order))


def scwe(code: WordSet, spec=None, order: int = DEFAULT_ORDER) -> Polynomial:
    """Split complete weight enumerator over the blocks of ``spec``."""
    return _poly(code, _count_monomials(code, _as_spec(code, spec).without_refs(), False), order)


def split_complete_jacobi(code: WordSet, spec: SplitSpec, order: int = DEFAULT_ORDER) -> Polynomial:
    """SCJ: x-variables count T_i, y-variables count X_i minus T_i."""
    spec = _as_spec(code, spec)
    if spec.refs is None:
        spec = spec.with_refs([()] * spec.ell)
    return _poly(code, _count_monomials(code, spec, True), order)


def complete_jacobi(code: WordSet, T: Iterable[int], order: int = DEFAULT_ORDER) -> Polynomial:
    return split_complete_jacobi(code, SplitSpec.single(code.length, T), order)


def jacobi(code: WordSet, T: Iterable[int], order: int = DEFAULT_ORDER) -> Polynomial:
    """Hamming Jacobi polynomial in w, z (on T) and x, y (off T)."""
    return to_hamming(complete_jacobi(code, T, order))


# ---------------------------------------------------------------------------
# MacWilliams transforms
# ---------------------------------------------------------------------------

def macwilliams_rules(field: FiniteField, keys: Iterable[tuple[int, str]], hermitian: bool = False,
                      order: int = DEFAULT_ORDER) -> dict[VarKey, Polynomial]:
    """x_{k,a} -> sum_b chi(a b) x_{k,b} for every (block, kind) in ``keys``.

    With ``hermitian`` the pairing is chi(a conj(b)).
    """
    if hermitian:
        field.sqrt_q
    if order % field.p:
        raise AlphabetMismatch(f"Q(zeta_{order}) does not contain zeta_{field.p}")
    step = order // field.p
    q = field.q
    chi = []
    for a in range(q):
        row = []
        for b in range(q):
            bb = field.conj(b) if hermitian else b
            row.append(Cyclotomic.zeta(order, step * field.character_exponent(1, field.mul(a, bb))))
        chi.append(row)
    rules = {}
    for blk, kd in keys:
        for a in range(q):
            rules[VarKey(blk, kd, a)] = Polynomial(
                field, {((VarKey(blk, kd, b), 1),): chi[a][b] for b in range(q)}, order)
    return rules


def _macwilliams(p: Polynomial, field: FiniteField, size: int, hermitian: bool, kinds) -> Polynomial:
    if p.alphabet is HAMMING or p.alphabet != field:
        raise AlphabetMismatch(f"polynomial over {p.alphabet!r}, transform over {field!r}")
    keys = {(k.block, k.kind) for k in p.variables()} | {(1, kd) for kd in kinds if not p.variables()}
    rules = macwilliams_rules(field, keys, hermitian, p.order)
    return substitute_linear(p, rules).scale(Cyclotomic.rational(1, p.order) / size)


def macwilliams_scwe(p: Polynomial, field: FiniteField, size: int, hermitian: bool = False) -> Polynomial:
    """Enumerator of the (Euclidean or Hermitian) dual from scwe/cwe of a code with ``size`` words."""
    return _macwilliams(p, field, size, hermitian, ("x",))


def macwilliams_scj(p: Polynomial, field: FiniteField, size: int, hermitian: bool = False) -> Polynomial:
    """Same transform applied to both x- and y-variables of an SCJ/CJ polynomial."""
    return _macwilliams(p, field, size, hermitian, ("x", "y"))


# ---------------------------------------------------------------------------
# polarization
# ---------------------------------------------------------------------------

def block_y_degrees(p: Polynomial, k: int) -> set[int]:
    return {sum(e for v, e in m if v.block == k and v.kind == "y") for m in p.terms}


def polarize(p: Polynomial, k: int = 1, v: int | None = None) -> Polynomial:
    """(1/v) * sum_a x_{k,a} dp/dy_{k,a}.

    Without ``v`` the divisor is the common block-k y-degree of p, so that
    repeated application averages over reference sets of growing size.
    """
    if p.is_zero():
        return p
    if v is None:
        degs = block_y_degrees(p, k)
        if len(degs) != 1:
            raise PreconditionError(f"polynomial is not homogeneous in the block-{k} y-variables: {sorted(degs)}")
        v = degs.pop()
        if v == 0:
            return p.zero_like()
    q = p.alphabet.q
    total = p.zero_like()
    for a in range(q):
        yk = VarKey(k, "y", a)
        d = partial_derivative(p, yk)
        if d.is_zero():
            continue
        total = total + d * Polynomial.var(p.alphabet, VarKey(k, "x", a), p.order)
    return total.scale(Cyclotomic.rational(1, p.order) / v)


def polarize_power(p: Polynomial, t: int, k: int = 1) -> Polynomial:
    for _ in range(t):
        p = polarize(p, k)
    return p


def polarize_vector(p: Polynomial, ts: Sequence[int]) -> Polynomial:
    """A_l^{t_l} ... A_1^{t_1} p."""
    for k, t in enumerate(ts, 1):
        p = polarize_power(p, t, k)
    return p


# A_4 / A_6 / A_8 are the single-block operator for q = 2, 3, 4.
a4 = a6 = a8 = polarize


# ---------------------------------------------------------------------------
# decomposition identities
# ---------------------------------------------------------------------------

@dataclass
class IdentityReport:
    holds: bool
    checks: dict[str, bool] = dc_field(default_factory=dict)
    detail: str = ""
    violating: tuple | None = None
    checked: int = 0
    hypothesis_met: bool = True

    def __bool__(self):
        return self.holds


def _first_diff(a: Polynomial, b: Polynomial) -> str:
    d = diff_terms(a, b)
    if not d:
        return ""
    m = min(d, key=lambda m: tuple((k, -e) for k, e in m))
    ca, cb = d[m]
    return f"{render_monomial(a.alphabet, m, True)}: {ca} vs {cb}"


def singleton_decomposition_rhs(code: WordSet, spec: SplitSpec, k: int, i: int, order: int = DEFAULT_ORDER) -> Polynomial:
    """x_{k,0} scwe(C/i) + sum_{a != 0} x_{k,a} scwe(C + i_a), written in y-variables."""
    spec = _as_spec(code, spec).without_refs()
    if i not in spec.blocks[k - 1]:
        raise PreconditionError(f"coordinate {i} is not in block {k}")
    small = spec.drop_coordinate(i)
    field = code.field
    total = Polynomial(field, {}, order)
    for a in range(field.q):
        sub = shorten(code, i) if a == 0 and isinstance(code, LinearCode) else value_subcode(code, i, a)
        if not len(sub):
            continue
        part = flip_kind(scwe(sub, small, order))
        total = total + part * Polynomial.var(field, VarKey(k, "x", a), order)
    return total


def _singleton_scj(code: WordSet, spec: SplitSpec, k: int, i: int, order: int) -> Polynomial:
    refs = [()] * spec.ell
    refs[k - 1] = (i,)
    return split_complete_jacobi(code, spec.with_refs(refs), order)


def verify_singleton_decomposition(code: WordSet, spec, k: int, i: int, order: int = DEFAULT_ORDER) -> IdentityReport:
    """Check the puncture/shorten decomposition of SCJ at T_k = {i}.

    Also checks the averaged form (sum over i in X_k equals v_k times the
    polarized scwe) and, when all singleton SCJs agree, the homogeneous form
    SCJ = A_k scwe.
    """
    spec = _as_spec(code, spec).without_refs()
    lhs = _singleton_scj(code, spec, k, i, order)
    rhs = singleton_decomposition_rhs(code, spec, k, i, order)
    checks = {"identity": lhs == rhs}
    detail = _first_diff(lhs, rhs)
    sy = flip_kind(scwe(code, spec, order))
    vk = len(spec.blocks[k - 1])
    singles = [_singleton_scj(code, spec, k, j, order) for j in spec.blocks[k - 1]]
    avg_lhs = polarize(sy, k, 1)
    avg_rhs = sum(singles[1:], singles[0])
    checks["averaged"] = avg_lhs == avg_rhs
    homogeneous = all(s == singles[0] for s in singles)
    checks["homogeneous"] = homogeneous
    if homogeneous:
        checks["homogeneous_form"] = lhs == polarize(sy, k, vk)
    ok = checks["identity"] and checks["averaged"] and checks.get("homogeneous_form", True)
    if not detail and not checks["averaged"]:
        detail = "averaged form: " + _first_diff(avg_lhs, avg_rhs)
    return IdentityReport(ok, checks, detail)


def t_tuples(spec: SplitSpec, ts: Sequence[int]) -> Iterable[tuple[tuple[int, ...], ...]]:
    if len(ts) != spec.ell:
        raise PreconditionError("one strength per block is required")
    for t, b in zip(ts, spec.blocks):
        if t > len(b):
            raise PreconditionError(f"strength {t} exceeds block size {len(b)}")
    return itertools.product(*(itertools.combinations(b, t) for t, b in zip(ts, spec.blocks)))


def verify_polarization_identity(code: WordSet, spec, ts: Sequence[int] | int, order: int = DEFAULT_ORDER) -> IdentityReport:
    """SCJ equals the iterated polarization of scwe for every reference tuple."""
    spec = _as_spec(code, spec).without_refs()
    if isinstance(ts, int):
        ts = [ts]
    t = sum(ts)
    wmin = code.min_nonzero_weight()
    hyp = wmin is None or wmin >= t
    target = polarize_vector(flip_kind(scwe(code, spec, order)), ts)
    checked = 0
    for refs in t_tuples(spec, ts):
        got = split_complete_jacobi(code, spec.with_refs(refs), order)
        checked += 1
        if got != target:
            return IdentityReport(False, {"all_equal": False}, _first_diff(got, target), refs, checked, hyp)
    return IdentityReport(True, {"all_equal": True}, "", None, checked, hyp)
