"""Finite matrix groups over Q(zeta_N) acting diagonally on x- and y-variables.

A matrix g acts on a polynomial by x_i -> sum_j g[i][j] x_j, simultaneously on
every (block, kind) group of variables.  On top of that this module gives
closure from generators, the bivariate Molien series, the Reynolds operator
and exact rank checks for invariant bases and their specializations.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import DEFAULT_ORDER, Cyclotomic, gf, inv_sqrt3
from .errors import CapExceeded, DimensionMismatch, NonIntegerCoefficient
from .polyring import Monomial, Polynomial, VarKey, mono_mul, monomial, specialize

CLOSURE_CAP = 10 ** 5


def _cyc(v, order: int) -> Cyclotomic:
    return v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v, order)


class CycMatrix:
    """Square matrix with exact Q(zeta_N) entries."""

    __slots__ = ("dim", "rows", "order", "_key")

    def __init__(self, rows: Sequence[Sequence], order: int = DEFAULT_ORDER):
        self.dim = len(rows)
        if any(len(r) != self.dim for r in rows):
            raise DimensionMismatch("matrix is not square")
        self.order = order
        self.rows = tuple(tuple(_cyc(v, order) for v in r) for r in rows)
        self._key = None

    @classmethod
    def identity(cls, dim: int, order: int = DEFAULT_ORDER) -> "CycMatrix":
        return cls([[1 if i == j else 0 for j in range(dim)] for i in range(dim)], order)

    @classmethod
    def diagonal(cls, entries: Sequence, order: int = DEFAULT_ORDER) -> "CycMatrix":
        d = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(d)] for i in range(d)], order)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other):
        if isinstance(other, CycMatrix):
            if other.dim != self.dim:
                raise DimensionMismatch(f"{self.dim} vs {other.dim}")
            cols = list(zip(*other.rows))
            zero = Cyclotomic.zero(self.order)
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = zero
                    for a, b in zip(r, c):
                        if a and b:
                            acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return CycMatrix(out, self.order)
        c = _cyc(other, self.order)
        return CycMatrix([[v * c for v in r] for r in self.rows], self.order)

    __rmul__ = __mul__

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(v.key() for r in self.rows for v in r)
        return self._key

    def __eq__(self, other):
        return isinstance(other, CycMatrix) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def is_identity(self) -> bool:
        return self == CycMatrix.identity(self.dim, self.order)

    def is_monomial(self) -> bool:
        return all(sum(1 for v in r if v) == 1 for r in self.rows) and \
            all(sum(1 for v in c if v) == 1 for c in zip(*self.rows))

    def is_diagonal(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.dim) for j in range(self.dim) if i != j)

    def scalar(self) -> Cyclotomic | None:
        """c if the matrix is c * I, else None."""
        if not self.is_diagonal():
            return None
        c = self.rows[0][0]
        return c if all(self.rows[i][i] == c for i in range(self.dim)) else None

    def transpose(self) -> "CycMatrix":
        return CycMatrix(list(zip(*self.rows)), self.order)

    def inverse(self) -> "CycMatrix":
        n = self.dim
        one, zero = Cyclotomic.one(self.order), Cyclotomic.zero(self.order)
        m = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next(i for i in range(c, n) if m[i][c])
            m[c], m[piv] = m[piv], m[c]
            inv = m[c][c].inverse()
            m[c] = [v * inv for v in m[c]]
            for i in range(n):
                if i != c and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return CycMatrix([r[n:] for r in m], self.order)

    def principal_minor_sums(self) -> list[Cyclotomic]:
        """[e_0, e_1, ..., e_m]: sums of principal k x k minors, so det(1 - u g) = sum (-u)^k e_k."""
        out = [Cyclotomic.one(self.order)]
        for k in range(1, self.dim + 1):
            acc = Cyclotomic.zero(self.order)
            for idx in itertools.combinations(range(self.dim), k):
                acc = acc + _det([[self.rows[i][j] for j in idx] for i in idx], self.order)
            out.append(acc)
        return out

    def to_json_obj(self) -> list[list[str]]:
        return [[v.render() for v in r] for r in self.rows]

    def __repr__(self):
        return f"CycMatrix({self.to_json_obj()})"


def _det(m: list[list[Cyclotomic]], order: int) -> Cyclotomic:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    acc = Cyclotomic.zero(order)
    for j in range(n):
        if not m[0][j]:
            continue
        sub = [r[:j] + r[j + 1:] for r in m[1:]]
        term = m[0][j] * _det(sub, order)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


class MatrixGroup:
    """A closed finite matrix group with its generators."""

    def __init__(self, generators: Sequence[CycMatrix], elements: Sequence[CycMatrix], name: str = ""):
        self.generators = list(generators)
        self.elements = list(elements)
        self.dim = generators[0].dim if generators else elements[0].dim
        self.order_n = generators[0].order if generators else elements[0].order
        self.name = name
        self._index = {g.key(): i for i, g in enumerate(self.elements)}
        self._cache: dict = {}

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: CycMatrix) -> bool:
        return g.key() in self._index

    def __iter__(self):
        return iter(self.elements)

    def scalar_subgroup(self) -> list[Cyclotomic]:
        if "scalars" not in self._cache:
            self._cache["scalars"] = [c for c in (g.scalar() for g in self.elements) if c is not None]
        return self._cache["scalars"]

    def coset_representatives(self) -> list[CycMatrix]:
        """One element per coset of the scalar subgroup."""
        if "scalar_reps" in self._cache:
            return self._cache["scalar_reps"]
        scalars = self.scalar_subgroup()
        seen: set = set()
        reps = []
        for g in self.elements:
            if g.key() in seen:
                continue
            reps.append(g)
            for c in scalars:
                seen.add((g * c).key())
        self._cache["scalar_reps"] = reps
        return reps

    def diagonal_elements(self) -> list[CycMatrix]:
        if "diagonal" not in self._cache:
            self._cache["diagonal"] = [g for g in self.elements if g.is_diagonal()]
        return self._cache["diagonal"]

    def diagonal_coset_representatives(self) -> list[CycMatrix]:
        """One h per right coset K h of the diagonal subgroup K."""
        if "diag_reps" not in self._cache:
            diag = self.diagonal_elements()
            seen: set = set()
            reps = []
            for g in self.elements:
                if g.key() in seen:
                    continue
                reps.append(g)
                for k in diag:
                    seen.add((k * g).key())
            self._cache["diag_reps"] = reps
        return self._cache["diag_reps"]

    def element_order(self, g: CycMatrix) -> int:
        k, h = 1, g
        while not h.is_identity():
            h = h * g
            k += 1
        return k

    def to_json_obj(self, with_elements: bool = False) -> dict:
        out = {"name": self.name, "dim": self.dim, "order": len(self),
               "generators": [g.to_json_obj() for g in self.generators]}
        if with_elements:
            out["elements"] = [g.to_json_obj() for g in self.elements]
        return out


def group_closure(generators: Sequence[CycMatrix], cap: int = CLOSURE_CAP, name: str = "") -> MatrixGroup:
    """Breadth-first closure under right multiplication by the generators."""
    if not generators:
        raise DimensionMismatch("at least one generator is required")
    dim = generators[0].dim
    if any(g.dim != dim for g in generators):
        raise DimensionMismatch("generators have different sizes")
    ident = CycMatrix.identity(dim, generators[0].order)
    elements = [ident]
    seen = {ident.key()}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for h in generators:
            p = g * h
            k = p.key()
            if k not in seen:
                seen.add(k)
                elements.append(p)
                queue.append(p)
                if len(elements) > cap:
                    raise CapExceeded(f"closure exceeds {cap} elements")
    return MatrixGroup(generators, elements, name)


# ---------------------------------------------------------------------------
# the two groups of the Type III / Type IV settings
# ---------------------------------------------------------------------------

def g3_generators(order: int = DEFAULT_ORDER) -> list[CycMatrix]:
    """Generators for ternary Type III codes: the scaled Fourier matrix, two phase gates, a scalar."""
    w = Cyclotomic.zeta(order, order // 3)
    w2 = w * w
    r = inv_sqrt3(order)
    fourier = CycMatrix([[1, 1, 1], [1, w, w2], [1, w2, w]], order) * r
    return [
        fourier,
        CycMatrix.diagonal([1, w, 1], order),
        CycMatrix.diagonal([1, 1, w], order),
        CycMatrix.diagonal([Cyclotomic.zeta(order, order // 12)] * 3, order),
    ]


def g4_generators(order: int = DEFAULT_ORDER) -> list[CycMatrix]:
    """Generators for quaternary Type IV codes; coordinates in the order 0, 1, s, s2."""
    half = Fraction(1, 2)
    return [
        CycMatrix([[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]], order) * half,
        CycMatrix.diagonal([1, -1, -1, -1], order),
        CycMatrix([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], order),
        CycMatrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]], order),
    ]


_GROUPS: dict[str, MatrixGroup] = {}


def named_group(name: str) -> MatrixGroup:
    """'g3' (order 2592 expected) or 'g4' (order 576 expected), closed once and cached."""
    if name not in _GROUPS:
        if name == "g3":
            _GROUPS[name] = group_closure(g3_generators(), name="g3")
        elif name == "g4":
            _GROUPS[name] = group_closure(g4_generators(), name="g4")
        else:
            raise KeyError(f"unknown group {name!r}; use g3 or g4")
    return _GROUPS[name]


def group_alphabet(group: MatrixGroup):
    return gf(group.dim)


# ---------------------------------------------------------------------------
# action on polynomials
# ---------------------------------------------------------------------------

def _check_dim(g: CycMatrix, p: Polynomial) -> None:
    if p.alphabet.q != g.dim:
        raise DimensionMismatch(f"matrix of size {g.dim} on an alphabet with {p.alphabet.q} letters")


def _monomial_image(g: CycMatrix, m: Monomial) -> tuple[Monomial, Cyclotomic]:
    coef = Cyclotomic.one(g.order)
    pairs = []
    for v, e in m:
        row = g.rows[v.elem]
        j = next(j for j, c in enumerate(row) if c)
        coef = coef * row[j] ** e
        pairs.append((VarKey(v.block, v.kind, j), e))
    return monomial(pairs), coef


def _dmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = mono_mul(m1, m2)
            v = c1 * c2
            out[m] = out[m] + v if m in out else v
    return out


def _general_image(g: CycMatrix, p: Polynomial) -> Polynomial:
    """Expand g . p term by term, caching linear-form powers and per-group part images."""
    powers: dict = {}
    parts: dict = {}

    def power(v: VarKey, e: int) -> dict:
        if (v, e) not in powers:
            if e == 1:
                row = g.rows[v.elem]
                powers[(v, e)] = {((VarKey(v.block, v.kind, j), 1),): c for j, c in enumerate(row) if c}
            else:
                powers[(v, e)] = _dmul(power(v, e - 1), power(v, 1))
        return powers[(v, e)]

    def part_image(part: Monomial) -> dict:
        if part not in parts:
            img = None
            for v, e in part:
                img = power(v, e) if img is None else _dmul(img, power(v, e))
            parts[part] = img
        return parts[part]

    acc: dict = {}
    for m, c in p.terms.items():
        split: dict = {}
        for v, e in m:
            split.setdefault((v.block, v.kind), []).append((v, e))
        img = {(): c}
        for key in sorted(split):
            img = _dmul(img, part_image(tuple(split[key])))
        for m2, c2 in img.items():
            acc[m2] = acc[m2] + c2 if m2 in acc else c2
    return Polynomial(p.alphabet, acc, p.order)


def doubled_action(g: CycMatrix, p: Polynomial) -> Polynomial:
    """Apply g to the x-variables and identically to the y-variables (and to every block)."""
    _check_dim(g, p)
    if g.is_monomial():
        acc: dict = {}
        for m, c in p.terms.items():
            m2, c2 = _monomial_image(g, m)
            v = c * c2
            acc[m2] = acc[m2] + v if m2 in acc else v
        return Polynomial(p.alphabet, acc, p.order)
    return _general_image(g, p)


def is_invariant(p: Polynomial, gens: Iterable[CycMatrix]) -> bool:
    return all(doubled_action(g, p) == p for g in gens)


def invariance_report(p: Polynomial, gens: Sequence[CycMatrix]) -> list[bool]:
    return [doubled_action(g, p) == p for g in gens]


# ---------------------------------------------------------------------------
# Molien series
# ---------------------------------------------------------------------------

@dataclass
class MolienTable:
    group_name: str
    max_degree: int
    dims: dict[tuple[int, int], int]

    def homogeneous(self, d: int) -> list[int]:
        """Coefficients of u^d, u^(d-1) v, ..., v^d."""
        return [self.dims[(d - j, j)] for j in range(d + 1)]

    def render_degree(self, d: int) -> str:
        parts = []
        for j, c in enumerate(self.homogeneous(d)):
            if not c:
                continue
            i = d - j
            u = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
            v = "" if j == 0 else ("v" if j == 1 else f"v^{j}")
            mono = u + v
            parts.append((str(c) if c != 1 or not mono else "") + mono)
        return f"f[{d}] = " + (" + ".join(parts) if parts else "0")

    def to_csv(self) -> str:
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["degree", "i", "j", "dim"])
        for d in range(self.max_degree + 1):
            for j in range(d + 1):
                wr.writerow([d, d - j, j, self.dims[(d - j, j)]])
        return buf.getvalue()

    def to_json_obj(self) -> dict:
        return {"group": self.group_name, "max_degree": self.max_degree,
                "degrees": {str(d): self.homogeneous(d) for d in range(self.max_degree + 1)}}


def _inverse_series(e: list[Cyclotomic], d: int, order: int) -> list[Cyclotomic]:
    """Power series of 1/det(1 - u g) up to u^d from the principal-minor sums."""
    c = [(-1) ** k * e[k] for k in range(len(e))]
    a = [Cyclotomic.one(order)]
    for n in range(1, d + 1):
        acc = Cyclotomic.zero(order)
        for k in range(1, min(n, len(c) - 1) + 1):
            if c[k]:
                acc = acc - c[k] * a[n - k]
        a.append(acc)
    return a


def molien_bivariate(group: MatrixGroup, max_degree: int = 12) -> MolienTable:
    """dim M_{i,j} for i + j <= max_degree, averaged exactly and demoted to integers."""
    order = group.order_n
    classes: Counter = Counter()
    rep = {}
    for g in group:
        e = g.principal_minor_sums()
        key = tuple(v.key() for v in e)
        classes[key] += 1
        rep.setdefault(key, e)
    totals = {(i, j): Cyclotomic.zero(order) for i in range(max_degree + 1) for j in range(max_degree + 1 - i)}
    for key, mult in classes.items():
        a = _inverse_series(rep[key], max_degree, order)
        for (i, j) in totals:
            totals[(i, j)] = totals[(i, j)] + a[i] * a[j] * mult
    dims = {}
    for ij, v in totals.items():
        v = v / len(group)
        if not v.is_integer():
            raise NonIntegerCoefficient(f"Molien coefficient {ij} = {v}")
        dims[ij] = int(v.to_fraction())
    return MolienTable(group.name, max_degree, dims)


# ---------------------------------------------------------------------------
# Reynolds operator and ranks
# ---------------------------------------------------------------------------

def _diag_kills(group: MatrixGroup, m: Monomial) -> bool:
    """True when some diagonal element scales m by a root of unity != 1 (then its orbit sum is 0)."""
    for d in group.diagonal_elements():
        c = Cyclotomic.one(group.order_n)
        for v, e in m:
            c = c * d.rows[v.elem][v.elem] ** e
        if c != 1:
            return True
    return False


def reynolds(seed, group: MatrixGroup, alphabet=None) -> Polynomial:
    """Sum of g . seed over the whole group (exact; may be zero).

    For a single monomial m every diagonal element either fixes m or the sum
    vanishes; in the first case the sum is |K| times the sum over right cosets
    K h of the diagonal subgroup K.  Otherwise the scalar subgroup Z is used:
    the sum is (sum_{c in Z} c^deg) times the sum over cosets of Z.
    """
    alphabet = alphabet if alphabet is not None else group_alphabet(group)
    p = seed if isinstance(seed, Polynomial) else Polynomial(alphabet, {monomial(seed): 1}, group.order_n)
    _check_dim(group.elements[0], p)
    degs = p.total_degrees()
    scalars = group.scalar_subgroup()
    if len(p.terms) == 1:
        (m,) = p.terms
        if _diag_kills(group, m):
            return p.zero_like()
        factor = Cyclotomic.rational(len(group.diagonal_elements()), group.order_n)
        reps = group.diagonal_coset_representatives()
    elif len(degs) == 1 and len(scalars) > 1:
        d = degs.pop()
        factor = Cyclotomic.zero(group.order_n)
        for c in scalars:
            factor = factor + c ** d
        if not factor:
            return p.zero_like()
        reps = group.coset_representatives()
    else:
        factor = Cyclotomic.one(group.order_n)
        reps = group.elements
    acc: dict = {}
    for g in reps:
        for m, c in doubled_action(g, p).terms.items():
            acc[m] = acc[m] + c if m in acc else c
    return Polynomial(p.alphabet, acc, p.order).scale(factor)


def _normalized(p: Polynomial) -> Polynomial:
    if p.is_zero():
        return p
    lead = p.terms[min(p.terms)]
    return p.scale(lead.inverse())


def exact_rank(polys: Sequence[Polynomial]) -> int:
    """Rank over Q(zeta_N) of the coefficient vectors of ``polys``."""
    monos = sorted({m for p in polys for m in p.terms})
    idx = {m: i for i, m in enumerate(monos)}
    rows = []
    for p in polys:
        r = [None] * len(monos)
        for m, c in p.terms.items():
            r[idx[m]] = c
        rows.append(r)
    zero = polys[0].coefficient_of(()) * 0 if polys else None
    rows = [[v if v is not None else zero for v in r] for r in rows]
    rank = 0
    for col in range(len(monos)):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inverse()
        prow = [v * inv if v else v for v in rows[rank]]
        rows[rank] = prow
        for i in range(rank + 1, len(rows)):
            f = rows[i][col]
            if f:
                rows[i] = [a - f * b if b else a for a, b in zip(rows[i], prow)]
        rank += 1
    return rank


def specialization_rank_check(basis: Sequence[Polynomial], merge: dict[VarKey, VarKey]) -> dict[str, int]:
    before = exact_rank(basis)
    after = exact_rank([specialize(p, merge) for p in basis])
    return {"rank_before": before, "rank_after": after}


def bidegree_monomials(q: int, i: int, j: int, block: int = 1) -> list[Monomial]:
    out = []
    for xs in itertools.combinations_with_replacement(range(q), i):
        for ys in itertools.combinations_with_replacement(range(q), j):
            pairs = [(VarKey(block, "x", a), 1) for a in xs] + [(VarKey(block, "y", b), 1) for b in ys]
            out.append(monomial(pairs))
    return out


def _monomial_orbit_key(group: MatrixGroup, m: Monomial, monomial_elems: list[CycMatrix]) -> Monomial:
    return min(_monomial_image(g, m)[0] for g in monomial_elems)


def invariant_basis(group: MatrixGroup, i: int, j: int, target: int | None = None,
                    seeds: Sequence[Monomial] | None = None) -> list[Polynomial]:
    """Reynolds images of seed monomials of bidegree (i, j), kept while they raise the rank.

    Without explicit seeds every monomial of that bidegree is tried (one per
    orbit of the monomial matrices in the group), stopping at ``target``.
    """
    alphabet = group_alphabet(group)
    if seeds is None:
        monos = [m for m in bidegree_monomials(group.dim, i, j) if not _diag_kills(group, m)]
        mono_elems = [g for g in group.elements if g.is_monomial()]
        reps = sorted({_monomial_orbit_key(group, m, mono_elems) for m in monos})
        seeds = reps
    basis: list[Polynomial] = []
    for m in seeds:
        if target is not None and len(basis) >= target:
            break
        r = reynolds(m, group, alphabet)
        if r.is_zero():
            continue
        cand = basis + [_normalized(r)]
        if exact_rank(cand) > len(basis):
            basis = cand
    return basis


def basis_to_json(basis: Sequence[Polynomial]) -> str:
    from .polyring import to_json_obj
    return json.dumps([to_json_obj(p) for p in basis])
