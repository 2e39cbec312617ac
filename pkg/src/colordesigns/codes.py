"""Linear codes over GF(q) and enumerated word-sets.

Words are stored as tuples of element indices (see :mod:`colordesigns.algebra`).
Coordinates are 1-based in every public function, matching the usual ``[n]``
notation; internally they are 0-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .algebra import Cyclotomic, DEFAULT_ORDER, FieldElement, FiniteField, character
from .errors import DimensionMismatch, IndexOutOfRange, PreconditionError

ENUMERATION_CAP = 2 ** 20

Word = tuple


class WordSet:
    """A finite, enumerated set of words of fixed length over a field.

    Every enumerator accepts a ``WordSet``; :class:`LinearCode` is the linear
    special case. Non-linear sets arise as value-restricted subcodes.
    """

    def __init__(self, field: FiniteField, length: int, words: Iterable[Sequence[int]], name: str = ""):
        self.field = field
        self.length = length
        self.name = name
        ws = []
        seen = set()
        for w in words:
            w = tuple(w)
            if len(w) != length:
                raise DimensionMismatch(f"word {w} does not have length {length}")
            if w not in seen:
                seen.add(w)
                ws.append(w)
        self._words = tuple(ws)
        self._set = frozenset(seen)

    @property
    def words(self) -> tuple[Word, ...]:
        return self._words

    def __len__(self) -> int:
        return len(self._words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self._words)

    def __contains__(self, w) -> bool:
        return tuple(w) in self._set

    def same_words(self, other: "WordSet") -> bool:
        return self.length == other.length and self._set == other._set

    def weights(self) -> list[int]:
        return [sum(1 for a in w if a) for w in self._words]

    def min_nonzero_weight(self) -> int | None:
        ws = [x for x in self.weights() if x]
        return min(ws) if ws else None

    def weight_distribution(self) -> dict[int, int]:
        dist: dict[int, int] = {}
        for w in self.weights():
            dist[w] = dist.get(w, 0) + 1
        return dict(sorted(dist.items()))

    def render_word(self, w: Word) -> str:
        return "(" + ",".join(self.field.label(a) for a in w) + ")"

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<WordSet{nm} over {self.field!r}, n={self.length}, |C|={len(self)}>"


def _rref(field: FiniteField, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Row-reduced echelon form over the field; returns (nonzero rows, pivots)."""
    m = [list(r) for r in rows]
    n = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, a) for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


class LinearCode(WordSet):
    """A linear code given by a generator matrix (stored row-reduced)."""

    def __init__(self, field: FiniteField, generator: Sequence[Sequence[int]], length: int, name: str = ""):
        gen, pivots = _rref(field, [list(r) for r in generator]) if generator else ([], [])
        self.generator = tuple(tuple(r) for r in gen)
        self.pivots = tuple(pivots)
        self.dimension = len(gen)
        if field.q ** self.dimension > ENUMERATION_CAP:
            raise PreconditionError(
                f"refusing to enumerate {field.q}^{self.dimension} codewords (cap {ENUMERATION_CAP})")
        super().__init__(field, length, self._enumerate(field, length), name=name)

    def _enumerate(self, field: FiniteField, n: int) -> Iterator[Word]:
        add, mul = field.add_table, field.mul_table
        for msg in itertools.product(range(field.q), repeat=self.dimension):
            w = [0] * n
            for c, row in zip(msg, self.generator):
                if c:
                    for j, g in enumerate(row):
                        if g:
                            w[j] = add[w[j]][mul[c][g]]
            yield tuple(w)

    def dual(self, hermitian: bool = False) -> "LinearCode":
        return dual(self, hermitian)

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<LinearCode{nm} [{self.length},{self.dimension}] over {self.field!r}>"


def _to_index_rows(field: FiniteField, rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for r in rows:
        out.append([a.index if isinstance(a, FieldElement) else field.parse(a) for a in r])
    return out


def code_from_generator(field: FiniteField, rows: Sequence[Sequence], length: int | None = None,
                        name: str = "") -> LinearCode:
    """Build a linear code from generator rows (ints, labels or FieldElements)."""
    rows = _to_index_rows(field, rows)
    if length is None:
        if not rows:
            raise DimensionMismatch("length is required when there are no generator rows")
        length = len(rows[0])
    if any(len(r) != length for r in rows):
        raise DimensionMismatch("generator rows have unequal lengths")
    return LinearCode(field, rows, length, name=name)


def zero_code(field: FiniteField, n: int) -> LinearCode:
    return LinearCode(field, [], n, name=f"zero{n}")


def full_space(field: FiniteField, n: int) -> LinearCode:
    return LinearCode(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n, name=f"full{n}")


def code_from_words(field: FiniteField, length: int, words: Iterable[Sequence[int]], name: str = "") -> LinearCode:
    """The linear span of ``words`` (used for derived linear codes)."""
    basis: list[list[int]] = []
    for w in words:
        if not any(w):
            continue
        cand, _ = _rref(field, basis + [list(w)])
        if len(cand) > len(basis):
            basis = cand
    return LinearCode(field, basis, length, name=name)


def dual(code: LinearCode, hermitian: bool = False) -> LinearCode:
    """Euclidean or Hermitian dual code."""
    field, n = code.field, code.length
    if hermitian:
        field.sqrt_q  # raises NotSquareOrder
    gen, pivots = list(code.generator), list(code.pivots)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for row, pc in zip(gen, pivots):
            v[pc] = field.neg(row[fc])
        basis.append(v)
    if hermitian:
        basis = [[field.conj(a) for a in v] for v in basis]
    suffix = "perpH" if hermitian else "perp"
    return LinearCode(field, basis, n, name=f"{code.name}_{suffix}" if code.name else "")


# ---------------------------------------------------------------------------
# compositions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Composition:
    """Per-element counts of a word on a coordinate set, in canonical element order."""

    field: FiniteField
    counts: tuple[int, ...]

    def __getitem__(self, a) -> int:
        if isinstance(a, FieldElement):
            return self.counts[a.index]
        return self.counts[self.field.parse(a)]

    def as_dict(self) -> dict[str, int]:
        return {self.field.label(i): c for i, c in enumerate(self.counts)}

    @property
    def size(self) -> int:
        return sum(self.counts)

    def __str__(self):
        return "(" + ",".join(map(str, self.counts)) + ")"


def _check_coords(X: Iterable[int], n: int) -> list[int]:
    out = []
    for i in X:
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"coordinate {i} outside [1, {n}]")
        out.append(i - 1)
    return out


def composition_counts(word: Sequence[int], q: int, coords0: Iterable[int] | None = None) -> tuple[int, ...]:
    """Fast internal composition on 0-based coordinates."""
    c = [0] * q
    if coords0 is None:
        for a in word:
            c[a] += 1
    else:
        for i in coords0:
            c[word[i]] += 1
    return tuple(c)


def composition(field: FiniteField, u: Sequence, X: Iterable[int] | None = None) -> Composition:
    """comp_X(u): counts of each field element among the coordinates X (1-based)."""
    u = _to_index_rows(field, [u])[0]
    coords = range(len(u)) if X is None else _check_coords(X, len(u))
    return Composition(field, composition_counts(u, field.q, coords))


# ---------------------------------------------------------------------------
# derived codes
# ---------------------------------------------------------------------------

def _delete(w: Word, i0: int) -> Word:
    return w[:i0] + w[i0 + 1:]


def puncture(code: WordSet, i: int) -> WordSet:
    """Delete coordinate i (1-based)."""
    (i0,) = _check_coords([i], code.length)
    words = [_delete(w, i0) for w in code]
    nm = f"{code.name}-{i}" if code.name else ""
    if isinstance(code, LinearCode):
        rows = [_delete(r, i0) for r in code.generator]
        return code_from_words(code.field, code.length - 1, rows, name=nm)
    return WordSet(code.field, code.length - 1, words, name=nm)


def value_subcode(code: WordSet, i: int, a) -> WordSet:
    """Words with u_i = a, coordinate i deleted (a word-set; linear only for a = 0)."""
    (i0,) = _check_coords([i], code.length)
    ai = a.index if isinstance(a, FieldElement) else code.field.parse(a)
    nm = f"{code.name}+{i}_{code.field.label(ai)}" if code.name else ""
    return WordSet(code.field, code.length - 1, [_delete(w, i0) for w in code if w[i0] == ai], name=nm)


def shorten(code: LinearCode, i: int) -> LinearCode:
    """Words with u_i = 0, coordinate i deleted."""
    sub = value_subcode(code, i, 0)
    nm = f"{code.name}/{i}" if code.name else ""
    return code_from_words(code.field, code.length - 1, sub.words, name=nm)


# ---------------------------------------------------------------------------
# classification and identities
# ---------------------------------------------------------------------------

def is_linear_closed(code: WordSet) -> bool:
    f = code.field
    for u in code:
        for v in code:
            if tuple(f.add(a, b) for a, b in zip(u, v)) not in code:
                return False
    return True


def classify(code: LinearCode) -> dict[str, bool]:
    field, n = code.field, code.length
    self_dual = 2 * code.dimension == n and dual(code).same_words(code)
    herm = False
    if field.f % 2 == 0:
        herm = 2 * code.dimension == n and dual(code, hermitian=True).same_words(code)
    weights = code.weights()
    type3 = field.q == 3 and self_dual and n % 4 == 0 and all(w % 3 == 0 for w in weights)
    type4 = field.q == 4 and herm and all(w % 2 == 0 for w in weights)
    return {"self_dual": self_dual, "hermitian_self_dual": herm, "type3": type3, "type4": type4}


def delta_identity(code: WordSet, v: Sequence[int], hermitian: bool = False,
                   order: int = DEFAULT_ORDER) -> Cyclotomic:
    """(1/|C|) sum_{u in C} chi(u . v) with chi = chi_1; equals 1 on the dual, else 0."""
    field = code.field
    one = field(1)
    total = Cyclotomic.zero(order)
    for u in code:
        total = total + character(one, FieldElement(field, field.dot(u, v, hermitian)), order)
    return total / len(code)
