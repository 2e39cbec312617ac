"""Sparse exact multivariate polynomials over Q(zeta_N).

Variables are :class:`VarKey` triples ``(block, kind, elem)``: ``kind`` is
``"x"`` or ``"y"`` and ``elem`` is a canonical field-element index.  A
monomial is a sorted tuple of ``(VarKey, exponent)`` pairs with positive
exponents.  A :class:`Polynomial` maps monomials to nonzero
:class:`~colordesigns.algebra.Cyclotomic` coefficients and carries an
*alphabet*: the finite field naming its variables, or :data:`HAMMING` for
the two-letter (zero / nonzero) alphabet of Hamming-type enumerators.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .algebra import Cyclotomic, DEFAULT_ORDER, FiniteField, gf
from .errors import AlphabetMismatch, KindMismatch, MissingRule, NonIntegerCoefficient


class _Hamming:
    """Alphabet of Hamming-type polynomials: element 0 = zero, 1 = nonzero."""

    q = 2
    labels = ["0", "1"]

    def label(self, i: int) -> str:
        return self.labels[i]

    def parse(self, v) -> int:
        return int(v)

    def __repr__(self):
        return "HAMMING"


HAMMING = _Hamming()

_HAMMING_NAMES = {("x", 0): "w", ("x", 1): "z", ("y", 0): "x", ("y", 1): "y"}


class VarKey(NamedTuple):
    block: int
    kind: str
    elem: int


Monomial = tuple  # tuple[tuple[VarKey, int], ...]


def monomial(pairs: Mapping[VarKey, int] | Iterable[tuple[VarKey, int]]) -> Monomial:
    """Canonical monomial from (VarKey, exponent) pairs; zero exponents dropped."""
    items = pairs.items() if isinstance(pairs, Mapping) else pairs
    acc: dict[VarKey, int] = {}
    for k, e in items:
        acc[k] = acc.get(k, 0) + e
    return tuple(sorted((k, e) for k, e in acc.items() if e))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for k, e in b:
        acc[k] = acc.get(k, 0) + e
    return tuple(sorted(acc.items()))


def x(elem: int, block: int = 1) -> VarKey:
    return VarKey(block, "x", elem)


def y(elem: int, block: int = 1) -> VarKey:
    return VarKey(block, "y", elem)


def _coerce_coeff(c, order: int) -> Cyclotomic:
    if isinstance(c, Cyclotomic):
        return c
    return Cyclotomic.rational(c, order)


class Polynomial:
    """Immutable sparse polynomial; equality is exact term-map equality."""

    __slots__ = ("terms", "alphabet", "order")

    def __init__(self, alphabet, terms: Mapping[Monomial, object] | None = None, order: int = DEFAULT_ORDER):
        self.alphabet = alphabet
        self.order = order
        clean = {}
        for m, c in (terms or {}).items():
            c = _coerce_coeff(c, order)
            if c:
                clean[m] = c
        self.terms = clean

    @classmethod
    def _raw(cls, alphabet, terms: dict, order: int) -> "Polynomial":
        obj = cls.__new__(cls)
        obj.alphabet = alphabet
        obj.order = order
        obj.terms = terms
        return obj

    @classmethod
    def from_counts(cls, alphabet, counts: Mapping[Monomial, int], order: int = DEFAULT_ORDER) -> "Polynomial":
        return cls._raw(alphabet, {m: Cyclotomic.rational(c, order) for m, c in counts.items() if c}, order)

    @classmethod
    def var(cls, alphabet, key: VarKey, order: int = DEFAULT_ORDER) -> "Polynomial":
        return cls._raw(alphabet, {((key, 1),): Cyclotomic.one(order)}, order)

    @classmethod
    def const(cls, alphabet, c, order: int = DEFAULT_ORDER) -> "Polynomial":
        return cls(alphabet, {(): c}, order)

    def zero_like(self) -> "Polynomial":
        return Polynomial._raw(self.alphabet, {}, self.order)

    # -- inspection -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def variables(self) -> set[VarKey]:
        return {k for m in self.terms for k, _ in m}

    def coefficient_of(self, m: Monomial) -> Cyclotomic:
        return self.terms.get(m, Cyclotomic.zero(self.order))

    def coeff(self, *pairs) -> Cyclotomic:
        """Coefficient of the monomial given as (VarKey, exp) pairs."""
        return self.coefficient_of(monomial(pairs))

    def total_degrees(self) -> set[int]:
        return {sum(e for _, e in m) for m in self.terms}

    def block_kind_degrees(self, m: Monomial) -> dict[tuple[int, str], int]:
        out: dict[tuple[int, str], int] = {}
        for k, e in m:
            out[(k.block, k.kind)] = out.get((k.block, k.kind), 0) + e
        return out

    # -- arithmetic -----------------------------------------------------------
    def _check(self, other: "Polynomial") -> None:
        if other.alphabet is not self.alphabet and other.alphabet != self.alphabet:
            raise AlphabetMismatch(f"{self.alphabet!r} vs {other.alphabet!r}")

    def _lift(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return Polynomial.const(self.alphabet, other, self.order)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in o.terms.items():
            if m in terms:
                s = terms[m] + c
                if s:
                    terms[m] = s
                else:
                    del terms[m]
            else:
                terms[m] = c
        return Polynomial._raw(self.alphabet, terms, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.alphabet, {m: -c for m, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "Polynomial":
        c = _coerce_coeff(c, self.order)
        if not c:
            return self.zero_like()
        return Polynomial._raw(self.alphabet, {m: v * c for m, v in self.terms.items()}, self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scale(other)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                if m in acc:
                    acc[m] = acc[m] + c
                else:
                    acc[m] = c
        return Polynomial._raw(self.alphabet, {m: c for m, c in acc.items() if c}, self.order)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        result = Polynomial.const(self.alphabet, 1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.terms == Polynomial.const(self.alphabet, other, self.order).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_monomials(self, fn) -> "Polynomial":
        """Apply a monomial -> monomial map and collect like terms."""
        acc: dict = {}
        for m, c in self.terms.items():
            m2 = fn(m)
            acc[m2] = acc[m2] + c if m2 in acc else c
        return Polynomial._raw(self.alphabet, {m: c for m, c in acc.items() if c}, self.order)

    def with_alphabet(self, alphabet) -> "Polynomial":
        return Polynomial._raw(alphabet, dict(self.terms), self.order)

    def demote_to_integers(self) -> dict[Monomial, int]:
        out = {}
        for m, c in self.terms.items():
            if not c.is_integer():
                raise NonIntegerCoefficient(f"coefficient {c} of {render_monomial(self.alphabet, m)}")
            out[m] = c.num[0]
        return out

    def is_integral(self) -> bool:
        return all(c.is_integer() for c in self.terms.values())

    def __repr__(self):
        return f"Polynomial({render(self)!r})"

    def __str__(self):
        return render(self)


# ---------------------------------------------------------------------------
# substitutions, derivatives, specializations
# ---------------------------------------------------------------------------

def substitute_linear(p: Polynomial, rules: Mapping[VarKey, Polynomial], alphabet=None) -> Polynomial:
    """Simultaneous substitution v -> rules[v], fully expanded.

    Rules are applied one (block, kind) group at a time with cancellation in
    between, which keeps intermediate results close to the final size when the
    rules only mix variables within a group.
    """
    alphabet = alphabet if alphabet is not None else p.alphabet
    for v in p.variables():
        if v not in rules:
            raise MissingRule(v)
    local = all(all((k.block, k.kind) == (v.block, v.kind) for k in r.variables()) for v, r in rules.items())
    if not local:
        return _substitute_all(p, rules, alphabet)
    groups = sorted({(v.block, v.kind) for v in p.variables()})
    powers: dict = {}

    def power(v: VarKey, e: int) -> Polynomial:
        if (v, e) not in powers:
            powers[(v, e)] = rules[v] if e == 1 else power(v, e - 1) * rules[v]
        return powers[(v, e)]

    terms = dict(p.terms)
    for grp in groups:
        images: dict = {}
        acc: dict = {}
        for m, c in terms.items():
            part = tuple((v, e) for v, e in m if (v.block, v.kind) == grp)
            rest = tuple((v, e) for v, e in m if (v.block, v.kind) != grp)
            if part not in images:
                img = None
                for v, e in part:
                    img = power(v, e) if img is None else img * power(v, e)
                images[part] = img.terms if img is not None else {(): Cyclotomic.one(p.order)}
            for m2, c2 in images[part].items():
                key = mono_mul(rest, m2)
                val = c * c2
                acc[key] = acc[key] + val if key in acc else val
        terms = {m: c for m, c in acc.items() if c}
    return Polynomial._raw(alphabet, terms, p.order)


def _substitute_all(p: Polynomial, rules: Mapping[VarKey, Polynomial], alphabet) -> Polynomial:
    powers: dict[tuple[VarKey, int], Polynomial] = {}

    def power(v: VarKey, e: int) -> Polynomial:
        key = (v, e)
        if key not in powers:
            powers[key] = rules[v] if e == 1 else power(v, e - 1) * rules[v]
        return powers[key]

    acc: dict = {}
    for m, c in p.terms.items():
        img = None
        for v, e in m:
            f = power(v, e)
            img = f if img is None else img * f
        if img is None:
            img = Polynomial.const(alphabet, 1, p.order)
        for m2, c2 in img.terms.items():
            v2 = c * c2
            acc[m2] = acc[m2] + v2 if m2 in acc else v2
    return Polynomial._raw(alphabet, {m: c for m, c in acc.items() if c}, p.order)


def partial_derivative(p: Polynomial, v: VarKey) -> Polynomial:
    acc = {}
    for m, c in p.terms.items():
        for i, (k, e) in enumerate(m):
            if k == v:
                m2 = m[:i] + (((k, e - 1),) if e > 1 else ()) + m[i + 1:]
                acc[m2] = c * e
                break
    return Polynomial._raw(p.alphabet, acc, p.order)


def specialize(p: Polynomial, merge: Mapping[VarKey, VarKey], alphabet=None) -> Polynomial:
    """Rename variables per ``merge`` (same kind only) and collect terms."""
    for a, b in merge.items():
        if a.kind != b.kind:
            raise KindMismatch(f"{a} -> {b}")

    def fn(m):
        return monomial((merge.get(k, k), e) for k, e in m)

    out = p.map_monomials(fn)
    if alphabet is not None:
        out = out.with_alphabet(alphabet)
    return out


def nonzero_merge_map(alphabet, blocks: Iterable[int] = (1,), kinds: Iterable[str] = ("x", "y")) -> dict[VarKey, VarKey]:
    """Merge every nonzero-element variable onto element 1 (S_6 for q = 3, S_8 for q = 4)."""
    out = {}
    for b in blocks:
        for kd in kinds:
            for a in range(2, alphabet.q):
                out[VarKey(b, kd, a)] = VarKey(b, kd, 1)
    return out


def s_merge(p: Polynomial) -> Polynomial:
    """Specialization collapsing x_a, y_a (a != 0) onto x_1, y_1 in every block."""
    blocks = {k.block for k in p.variables()} or {1}
    return specialize(p, nonzero_merge_map(p.alphabet, blocks))


def to_hamming(p: Polynomial) -> Polynomial:
    """Collapse a complete-style polynomial to the Hamming alphabet."""
    return s_merge(p).with_alphabet(HAMMING)


def flip_kind(p: Polynomial, to: str | None = None) -> Polynomial:
    """Swap x <-> y (or force every variable to kind ``to``)."""
    def fn(m):
        if to is None:
            return monomial((VarKey(k.block, "y" if k.kind == "x" else "x", k.elem), e) for k, e in m)
        return monomial((VarKey(k.block, to, k.elem), e) for k, e in m)
    return p.map_monomials(fn)


def merge_blocks(p: Polynomial, target: int = 1) -> Polynomial:
    """Forget the block index of every variable."""
    return p.map_monomials(lambda m: monomial((VarKey(target, k.kind, k.elem), e) for k, e in m))


def evaluate(p: Polynomial, assignment: Mapping[VarKey, object], default=None) -> Cyclotomic:
    total = Cyclotomic.zero(p.order)
    cache = {}
    for m, c in p.terms.items():
        val = c
        for k, e in m:
            if k in assignment:
                v = assignment[k]
            elif default is not None:
                v = default
            else:
                raise MissingRule(k)
            if (k, e) not in cache:
                cache[(k, e)] = _coerce_coeff(v, p.order) ** e
            val = val * cache[(k, e)]
        total = total + val
    return total


def evaluate_at_ones(p: Polynomial) -> Cyclotomic:
    return evaluate(p, {}, default=1)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def var_name(alphabet, k: VarKey, split: bool = False) -> str:
    if alphabet is HAMMING:
        return _HAMMING_NAMES[(k.kind, k.elem)]
    lab = alphabet.label(k.elem)
    if split:
        return f"{k.kind}_{{X{k.block},{lab}}}"
    return f"{k.kind}_{lab}" if len(lab) == 1 else f"{k.kind}_{{{lab}}}"


def render_monomial(alphabet, m: Monomial, split: bool = False) -> str:
    if not m:
        return "1"
    parts = []
    for k, e in m:
        nm = var_name(alphabet, k, split)
        parts.append(nm if e == 1 else f"{nm}^{e}")
    return "*".join(parts)


def _sort_key(m: Monomial):
    # exponent vector in VarKey order, descending: x_0^a ... first
    return tuple((k, -e) for k, e in m)


def render(p: Polynomial) -> str:
    """Deterministic text form with grouped x-monomials first."""
    if not p.terms:
        return "0"
    split = any(k.block != 1 for k in p.variables())
    out = []
    for m in sorted(p.terms, key=_sort_key):
        c = p.terms[m]
        ms = render_monomial(p.alphabet, m, split)
        if c.is_rational():
            fr = c.to_fraction()
            sign = "-" if fr < 0 else "+"
            mag = abs(fr)
            if not m:
                body = str(mag)
            elif mag == 1:
                body = ms
            else:
                body = f"{mag}*{ms}"
        else:
            sign = "+"
            body = f"({c.render()})" + ("" if not m else f"*{ms}")
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def _alphabet_tag(alphabet) -> dict:
    if alphabet is HAMMING:
        return {"alphabet": "hamming"}
    return {"alphabet": "field", "p": alphabet.p, "f": alphabet.f, "modulus": list(alphabet.modulus_poly)}


def _alphabet_from_tag(tag: dict):
    if tag["alphabet"] == "hamming":
        return HAMMING
    return FiniteField(tag["p"], tag["f"], tag["modulus"])


def to_json_obj(p: Polynomial) -> dict:
    terms = []
    for m in sorted(p.terms, key=_sort_key):
        terms.append({
            "monomial": [[k.block, k.kind, p.alphabet.label(k.elem), e] for k, e in m],
            "coeff": p.terms[m].render(),
        })
    return {**_alphabet_tag(p.alphabet), "order": p.order, "terms": terms}


def to_json(p: Polynomial, **kw) -> str:
    return json.dumps(to_json_obj(p), **kw)


def from_json(data) -> Polynomial:
    if isinstance(data, str):
        data = json.loads(data)
    alphabet = _alphabet_from_tag(data)
    order = data.get("order", DEFAULT_ORDER)
    terms = {}
    for t in data["terms"]:
        m = monomial((VarKey(int(b), kd, alphabet.parse(lab)), int(e)) for b, kd, lab, e in t["monomial"])
        terms[m] = parse_cyclotomic(t["coeff"], order)
    return Polynomial(alphabet, terms, order)


_CYC_TERM = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*(z(?:\^(\d+))?)?\s*")


def parse_cyclotomic(text: str, order: int = DEFAULT_ORDER) -> Cyclotomic:
    """Inverse of :meth:`Cyclotomic.render` (e.g. ``"-1/3 + 2*z^3"``)."""
    s = text.replace(" ", "")
    total = Cyclotomic.zero(order)
    pos = 0
    while pos < len(s):
        mt = _CYC_TERM.match(s, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse cyclotomic {text!r}")
        sign, num, zpart, exp = mt.groups()
        coef = Fraction(num) if num else Fraction(1)
        if sign == "-":
            coef = -coef
        k = (int(exp) if exp else 1) if zpart else 0
        total = total + Cyclotomic.zeta(order, k) * coef
        pos = mt.end()
    return total


# ---------------------------------------------------------------------------
# text parser (rendered output and juxtaposed notation)
# ---------------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+(?:/\d+)?)"
    r"|(?P<cvar>[xy])_(?P<lab>\{[^}]*\}|s2|s|\d)"
    r"|(?P<hvar>[wzxy])"
    r"|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    text = text.replace("\\\\", " ").replace("~", " ").replace("&", " ").replace("\n", " ")
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace() or text[pos] in ",.":
            pos += 1
            continue
        if text[pos] == "{" or text[pos] == "}":
            toks.append(("op", text[pos]))
            pos += 1
            continue
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"unexpected character {text[pos]!r} at {pos} in polynomial text")
        if mt.group("num"):
            toks.append(("num", mt.group("num")))
        elif mt.group("cvar"):
            toks.append(("cvar", mt.group("cvar") + ":" + mt.group("lab")))
        elif mt.group("hvar"):
            toks.append(("hvar", mt.group("hvar")))
        else:
            toks.append(("op", mt.group("op")))
        pos = mt.end()
    return toks


class _Parser:
    def __init__(self, text: str, alphabet, order: int):
        self.toks = _tokenize(text)
        self.i = 0
        self.alphabet = alphabet
        self.order = order

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        acc = self.term().scale(sign)
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            t = self.peek()
            if t == ("op", "*"):
                self.take()
                acc = acc * self.factor()
            elif t[0] in ("num", "cvar", "hvar") or t == ("op", "("):
                acc = acc * self.factor()
            else:
                return acc

    def exponent(self) -> int:
        if self.peek() == ("op", "^"):
            self.take()
            if self.peek() == ("op", "{"):
                self.take()
                e = int(self.take()[1])
                assert self.take() == ("op", "}")
                return e
            return int(self.take()[1])
        return 1

    def factor(self) -> Polynomial:
        kind, val = self.take()
        if kind == "num":
            base = Polynomial.const(self.alphabet, Fraction(val), self.order)
        elif kind == "cvar":
            kd, lab = val.split(":", 1)
            lab = lab.strip("{}")
            block = 1
            if "," in lab:
                blk, lab = lab.split(",", 1)
                block = int(blk.lstrip("X"))
            base = Polynomial.var(self.alphabet, VarKey(block, kd, self.alphabet.parse(lab)), self.order)
        elif kind == "hvar":
            inv = {v: k for k, v in _HAMMING_NAMES.items()}
            kd, el = inv[val]
            base = Polynomial.var(self.alphabet, VarKey(1, kd, el), self.order)
        elif (kind, val) == ("op", "("):
            base = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
        elif (kind, val) == ("op", "{"):
            base = self.expr()
            if self.take() != ("op", "}"):
                raise ValueError("unbalanced braces")
        else:
            raise ValueError(f"unexpected token {val!r}")
        e = self.exponent()
        return base if e == 1 else base ** e


def parse(text: str, alphabet, order: int = DEFAULT_ORDER) -> Polynomial:
    """Parse rendered or juxtaposed polynomial text over ``alphabet``.

    Accepts ``3*x_0*x_1^2``, juxtaposition ``3x_0x_1^{2}``, braced labels
    ``y_{s^2}``, split variables ``x_{X2,s}`` and, for :data:`HAMMING`, the
    letters ``w, z, x, y``.
    """
    if isinstance(alphabet, int):
        alphabet = gf(alphabet)
    p = _Parser(text, alphabet, order)
    out = p.expr()
    if p.i != len(p.toks):
        raise ValueError(f"trailing tokens in polynomial text: {p.toks[p.i:]}")
    return out


def diff_terms(a: Polynomial, b: Polynomial) -> dict[Monomial, tuple[Cyclotomic, Cyclotomic]]:
    """Monomials where a and b disagree -> (coeff in a, coeff in b)."""
    out = {}
    for m in set(a.terms) | set(b.terms):
        ca, cb = a.coefficient_of(m), b.coefficient_of(m)
        if ca != cb:
            out[m] = (ca, cb)
    return out


def count_polynomial(alphabet, monomials: Iterable[Monomial], order: int = DEFAULT_ORDER) -> Polynomial:
    """Sum of the given monomials with multiplicity (integer counting)."""
    return Polynomial.from_counts(alphabet, Counter(monomials), order)
