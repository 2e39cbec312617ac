"""Exact arithmetic foundations.

Two value types live here:

* :class:`FiniteField` / :class:`FieldElement` -- GF(p^f) in the polynomial
  basis ``a_0 + a_1 s + ... + a_{f-1} s^{f-1}`` over GF(p), where ``s`` is a
  root of a primitive irreducible modulus polynomial.
* :class:`Cyclotomic` -- exact elements of Q(zeta_N), stored as an integer
  coefficient vector over ``1, z, ..., z^{d-1}`` (d = phi(N)) together with a
  positive common denominator.

Field elements are indexed ``0 .. q-1`` by the integer ``sum a_i p^i``; this
index order is the canonical element order used for variables, multisets and
printed tables (GF(4) comes out as ``0, 1, s, s2``).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    DivisionByZero,
    IncompatibleCyclotomicOrder,
    NotIrreducible,
    NotPrime,
    NotPrimitive,
    NotSquareOrder,
)

DEFAULT_ORDER = 12


# ---------------------------------------------------------------------------
# Cyclotomic field Q(zeta_N)
# ---------------------------------------------------------------------------

def _poly_divmod_int(num: list[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomials (low-to-high) by a monic divisor."""
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for i, di in enumerate(den):
                num[k - dd + i] -= c * di
    return quot, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds z^k reduced modulo Phi_n, for 0 <= k < max(n, 2d-1)."""
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    rows = []
    for k in range(max(n, 2 * d - 1)):
        mono = [0] * k + [1]
        _, rem = _poly_divmod_int(mono, phi)
        rows.append(tuple(rem + [0] * (d - len(rem))))
    return tuple(rows)


class Cyclotomic:
    """An exact element of Q(zeta_N) in canonical reduced form.

    ``num`` has length ``phi(N)``; the value is ``sum(num[i] z^i) / den`` with
    ``den > 0`` and ``gcd(den, *num) == 1``.  Equality is coefficientwise.
    Arithmetic mixes freely with ``int`` and ``Fraction``; mixing two
    different orders raises :class:`IncompatibleCyclotomicOrder`.
    """

    __slots__ = ("order", "num", "den", "_hash")

    def __init__(self, order: int, coeffs: Iterable = (), den: int = 1):
        d = len(cyclotomic_polynomial(order)) - 1
        fr = [Fraction(c) for c in coeffs]
        lcm = 1
        for c in fr:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in fr]
        denom = lcm * den
        if len(ints) > d:
            ints = _reduce_long(order, ints)
        ints += [0] * (d - len(ints))
        num, den_ = _normalize(ints, denom)
        self.order = order
        self.num = num
        self.den = den_
        self._hash = None

    # -- construction helpers -------------------------------------------------
    @classmethod
    def _raw(cls, order: int, num: list[int], den: int) -> "Cyclotomic":
        num_t, den_ = _normalize(num, den)
        obj = cls.__new__(cls)
        obj.order = order
        obj.num = num_t
        obj.den = den_
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, r, order: int = DEFAULT_ORDER) -> "Cyclotomic":
        r = Fraction(r)
        d = len(cyclotomic_polynomial(order)) - 1
        return cls._raw(order, [r.numerator] + [0] * (d - 1), r.denominator)

    @classmethod
    def zeta(cls, order: int = DEFAULT_ORDER, k: int = 1) -> "Cyclotomic":
        """The root of unity ``zeta_order ** k``."""
        rows = _reduction_rows(order)
        return cls._raw(order, list(rows[k % order]), 1)

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "Cyclotomic":
        return cls.rational(0, order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "Cyclotomic":
        return cls.rational(1, order)

    # -- predicates / conversions --------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def is_integer(self) -> bool:
        return self.is_rational() and self.den == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def __bool__(self) -> bool:
        return any(self.num)

    # -- coercion -------------------------------------------------------------
    def _coerce(self, other) -> "Cyclotomic | None":
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise IncompatibleCyclotomicOrder(
                    f"cannot mix Q(zeta_{self.order}) and Q(zeta_{other.order})")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(other, self.order)
        return None

    # -- ring operations ------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return Cyclotomic._raw(self.order, [a + b for a, b in zip(self.num, o.num)], self.den)
        return Cyclotomic._raw(
            self.order,
            [a * o.den + b * self.den for a, b in zip(self.num, o.num)],
            self.den * o.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, [-a for a in self.num], self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclotomic._raw(self.order, [a * other for a in self.num], self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.num, o.num
        if not any(b[1:]):
            c = b[0]
            return Cyclotomic._raw(self.order, [x * c for x in a], self.den * o.den)
        if not any(a[1:]):
            c = a[0]
            return Cyclotomic._raw(self.order, [x * c for x in b], self.den * o.den)
        d = len(a)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        res = prod[:d]
        rows = _reduction_rows(self.order)
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                for i, r in enumerate(rows[k]):
                    if r:
                        res[i] += c * r
        return Cyclotomic._raw(self.order, res, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended gcd with Phi_N."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero in Q(zeta_N)")
        if self.is_rational():
            return Cyclotomic.rational(Fraction(self.den, self.num[0]), self.order)
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        a = [Fraction(c) for c in self.num]
        s = _poly_inverse_mod(a, phi)
        return Cyclotomic(self.order, [c * self.den for c in s])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclotomic.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def galois(self, k: int) -> "Cyclotomic":
        """Apply the automorphism z -> z^k (k coprime to N)."""
        if math.gcd(k, self.order) != 1:
            raise ValueError("Galois exponent must be coprime to the order")
        rows = _reduction_rows(self.order)
        d = len(self.num)
        res = [0] * d
        for i, c in enumerate(self.num):
            if c:
                for j, r in enumerate(rows[(i * k) % self.order]):
                    if r:
                        res[j] += c * r
        return Cyclotomic._raw(self.order, res, self.den)

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation (z -> z^-1)."""
        return self.galois(-1)

    # -- equality / hashing ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.order == other.order and self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.order, self.num, self.den))
        return self._hash

    def key(self) -> tuple:
        """Serializable canonical form (used for hashing matrices)."""
        return (self.num, self.den)

    # -- text -----------------------------------------------------------------
    def render(self, var: str = "z") -> str:
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        parts = []
        for i, c in enumerate(self.num):
            if not c:
                continue
            coef = Fraction(c, self.den)
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not mono:
                parts.append(str(coef))
            elif coef == 1:
                parts.append(mono)
            elif coef == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{coef}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Cyclotomic({self.order}, {self.render()!r})"


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-a for a in num]
        den = -den
    if den != 1:
        g = math.gcd(den, *num)
        if g > 1:
            num = [a // g for a in num]
            den //= g
    if not any(num):
        den = 1
    return tuple(num), den


def _reduce_long(order: int, ints: list[int]) -> list[int]:
    _, rem = _poly_divmod_int(ints, cyclotomic_polynomial(order))
    return rem


def _poly_trim(a: list) -> list:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod_frac(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for i, bi in enumerate(b):
                a[k + i] -= c * bi
    return q, _poly_trim(a[: len(b) - 1] or [Fraction(0)])


def _poly_mul_frac(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub_frac(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _poly_inverse_mod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    """s with s*a == 1 (mod m) for coprime a, m over Q."""
    r0, r1 = _poly_trim(list(m)), _poly_trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while any(r1):
        q, r = _poly_divmod_frac(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub_frac(s0, _poly_mul_frac(q, s1))
    if len(r0) != 1 or r0[0] == 0:
        raise DivisionByZero("element is not invertible")
    c = r0[0]
    return [x / c for x in s0]


def zeta(order: int = DEFAULT_ORDER, k: int = 1) -> Cyclotomic:
    return Cyclotomic.zeta(order, k)


def inv_sqrt3(order: int = DEFAULT_ORDER) -> Cyclotomic:
    """1/sqrt(3) = (z + z^11)/3 in Q(zeta_12)."""
    if order % 12:
        raise IncompatibleCyclotomicOrder("1/sqrt(3) needs 12 | N")
    k = order // 12
    return (Cyclotomic.zeta(order, k) + Cyclotomic.zeta(order, 11 * k)) / 3


# ---------------------------------------------------------------------------
# Finite fields
# ---------------------------------------------------------------------------

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(math.isqrt(p)) + 1))


def _polymod_p(a: list[int], m: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k] * inv_lead % p
        if c:
            for i, mi in enumerate(m):
                a[k - dm + i] = (a[k - dm + i] - c * mi) % p
    return a[:dm] + [0] * (dm - len(a[:dm]))


class FiniteField:
    """GF(p^f) with a fixed primitive modulus; elements indexed 0..q-1."""

    def __init__(self, p: int, f: int = 1, modulus_poly: Sequence[int] | None = None):
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if f < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus_poly is None:
            modulus_poly = default_modulus(p, f)
        mod = [int(c) % p for c in modulus_poly]
        while len(mod) > 1 and mod[-1] == 0:
            mod.pop()
        if len(mod) - 1 != f or mod[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {f}: {list(modulus_poly)}")
        self.p = p
        self.f = f
        self.modulus_poly = tuple(mod)
        self.q = p ** f
        if f > 1:
            if not _irreducible(self.modulus_poly, p):
                raise NotIrreducible(f"{list(modulus_poly)} is reducible over GF({p})")
        self._build_tables()
        if f > 1 and self._order_of(p) != self.q - 1:
            raise NotPrimitive(f"{list(modulus_poly)} is not primitive over GF({p})")
        self._build_labels()

    @property
    def element_count(self) -> int:
        return self.q

    # -- tables ---------------------------------------------------------------
    def coeffs(self, i: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.f):
            out.append(i % self.p)
            i //= self.p
        return tuple(out)

    def index(self, coeffs: Sequence[int]) -> int:
        i = 0
        for c in reversed(list(coeffs)):
            i = i * self.p + c % self.p
        return i

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        vecs = [self.coeffs(i) for i in range(q)]
        self.add_table = [[self.index([(a + b) % p for a, b in zip(vecs[i], vecs[j])])
                           for j in range(q)] for i in range(q)]
        self.neg_table = [self.index([(-a) % p for a in vecs[i]]) for i in range(q)]
        mul = [[0] * q for _ in range(q)]
        for i in range(q):
            for j in range(i, q):
                prod = [0] * (2 * self.f - 1)
                for a_i, a in enumerate(vecs[i]):
                    for b_i, b in enumerate(vecs[j]):
                        prod[a_i + b_i] += a * b
                r = self.index(_polymod_p(prod, self.modulus_poly, p))
                mul[i][j] = mul[j][i] = r
        self.mul_table = mul
        self.inv_table = [0] * q
        for i in range(1, q):
            for j in range(1, q):
                if mul[i][j] == 1:
                    self.inv_table[i] = j
                    break

    def _order_of(self, i: int) -> int:
        if i == 0:
            return 0
        x, k = i, 1
        while x != 1:
            x = self.mul_table[x][i]
            k += 1
        return k

    def _build_labels(self) -> None:
        if self.f == 1:
            self.labels = [str(i) for i in range(self.q)]
        else:
            self.labels = ["0"] + [""] * (self.q - 1)
            x = 1
            for k in range(self.q - 1):
                self.labels[x] = "1" if k == 0 else ("s" if k == 1 else f"s{k}")
                x = self.mul_table[x][self.p]
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}

    # -- element API ----------------------------------------------------------
    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to another field")
            return value
        return FieldElement(self, self.parse(value))

    def parse(self, value) -> int:
        """Element index from an int (prime fields), label or coefficient list."""
        if isinstance(value, int):
            if self.f == 1:
                return value % self.p
            if 0 <= value < self.q:
                return value
            raise ValueError(f"index {value} out of range for GF({self.q})")
        if isinstance(value, (list, tuple)):
            return self.index(value)
        s = str(value).strip().replace("^", "").replace("²", "2").replace("{", "").replace("}", "")
        if s in self._label_index:
            return self._label_index[s]
        if self.f == 1 and s.lstrip("-").isdigit():
            return int(s) % self.p
        raise ValueError(f"unknown element label {value!r} for GF({self.q})")

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, i) for i in range(self.q)]

    def label(self, i: int) -> str:
        return self.labels[i]

    def add(self, i: int, j: int) -> int:
        return self.add_table[i][j]

    def mul(self, i: int, j: int) -> int:
        return self.mul_table[i][j]

    def neg(self, i: int) -> int:
        return self.neg_table[i]

    def sub(self, i: int, j: int) -> int:
        return self.add_table[i][self.neg_table[j]]

    def inv(self, i: int) -> int:
        if i == 0:
            raise DivisionByZero("inverse of 0 in a finite field")
        return self.inv_table[i]

    def power(self, i: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul_table[r][i]
        return r

    @property
    def sqrt_q(self) -> int:
        if self.f % 2:
            raise NotSquareOrder(f"q = {self.q} is not an even power of {self.p}")
        return self.p ** (self.f // 2)

    def conj(self, i: int) -> int:
        """Frobenius conjugation a -> a^sqrt(q)."""
        return self.power(i, self.sqrt_q)

    def dot(self, u: Sequence[int], v: Sequence[int], hermitian: bool = False) -> int:
        acc = 0
        add, mul = self.add_table, self.mul_table
        if hermitian:
            v = [self.conj(b) for b in v]
        for a, b in zip(u, v):
            acc = add[acc][mul[a][b]]
        return acc

    def character_exponent(self, b: int, a: int) -> int:
        """Exponent e in chi_b(a) = zeta_p^e."""
        return sum(x * y for x, y in zip(self.coeffs(a), self.coeffs(b))) % self.p

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.modulus_poly) == (other.p, other.modulus_poly)

    def __hash__(self):
        return hash((self.p, self.modulus_poly))

    def __repr__(self):
        if self.f == 1:
            return f"GF({self.p})"
        return f"GF({self.q}; modulus={list(self.modulus_poly)})"


def _irreducible(mod: Sequence[int], p: int) -> bool:
    f = len(mod) - 1
    for deg in range(1, f // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            g = list(tail) + [1]
            if not any(_polymod_p(list(mod), g, p)):
                return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, f: int) -> tuple[int, ...]:
    """Lexicographically first primitive monic polynomial of degree f."""
    if f == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=f):
        cand = tuple(tail) + (1,)
        if cand[0] == 0:
            continue
        try:
            FiniteField(p, f, cand)
        except (NotIrreducible, NotPrimitive):
            continue
        return cand
    raise NotPrimitive(f"no primitive polynomial of degree {f} over GF({p})")


def field_make(p: int, f: int = 1, modulus_poly: Sequence[int] | None = None) -> FiniteField:
    return FiniteField(p, f, modulus_poly)


@lru_cache(maxsize=None)
def gf(q: int) -> FiniteField:
    """The field of order q with the default (lexicographically first) modulus."""
    p = next((d for d in range(2, q + 1) if q % d == 0), None)
    if p is not None:
        f, r = 0, q
        while r % p == 0:
            r //= p
            f += 1
        if r == 1:
            return FiniteField(p, f)
    raise ValueError(f"{q} is not a prime power")


class FieldElement:
    """An element of a :class:`FiniteField`, stored by its canonical index."""

    __slots__ = ("field", "index")

    def __init__(self, field: FiniteField, index: int):
        self.field = field
        self.index = index

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.index)

    @property
    def label(self) -> str:
        return self.field.label(self.index)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.index
        return self.field.parse(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.index, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.index, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.index))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.index, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.index))

    def __truediv__(self, other):
        return self * FieldElement(self.field, self._other(other)).inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        return FieldElement(self.field, self.field.power(self.index, e))

    def conj(self) -> "FieldElement":
        return FieldElement(self.field, self.field.conj(self.index))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.index == other.index
        try:
            return self.index == self.field.parse(other)
        except ValueError:
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.index))

    def __lt__(self, other):
        return self.index < other.index

    def __repr__(self):
        return f"{self.label}"


def frobenius_conj(a: FieldElement) -> FieldElement:
    return a.conj()


def character(b: FieldElement, a: FieldElement, order: int = DEFAULT_ORDER) -> Cyclotomic:
    """chi_b(a) = zeta_p^(a_0 b_0 + ... + a_{f-1} b_{f-1}) inside Q(zeta_order)."""
    if a.field != b.field:
        raise ValueError("elements of different fields")
    p = a.field.p
    if order % p:
        raise IncompatibleCyclotomicOrder(f"Q(zeta_{order}) does not contain zeta_{p}")
    e = a.field.character_exponent(b.index, a.index)
    return Cyclotomic.zeta(order, e * (order // p))


def character_sum_check(field: FiniteField, a: FieldElement, b: FieldElement | None = None,
                        order: int = DEFAULT_ORDER) -> Cyclotomic:
    """sum over c in GF(q) of chi(a c) for the nontrivial character chi = chi_b (default b = 1)."""
    chi_b = b if b is not None else field(1)
    total = Cyclotomic.zero(order)
    for c in field.elements():
        total = total + character(chi_b, a * c, order)
    return total
