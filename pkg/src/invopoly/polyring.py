"""Sparse polynomials over a finite field and the x^r * h(x^s) shape.

A SparsePoly is a map exponent -> nonzero coefficient.  Two polynomials
induce the same function on F_q whenever their exponents agree under the
reduction e -> ((e - 1) mod (q - 1)) + 1 (exponent 0 is kept as is, so
the constant term stays a constant term and x^0 = 1 everywhere).

RhsForm captures f = x^r * h(x^s) with s a divisor of q - 1 and h reduced
modulo x^d - 1 for d = (q - 1) / s.  decompose() extracts the shape from a
plain polynomial, expand() goes back.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .errors import (
    CharacteristicDividesD,
    FieldTooLarge,
    HasConstantTerm,
    NotADivisor,
    ParseError,
    PreconditionViolated,
    ZeroPolynomial,
)
from .gf import Element, Field

VALUE_TABLE_LIMIT = 1 << 24   # refuse full value tables beyond this q
COMPOSE_LIMIT = 1 << 11       # full-field interpolation is quadratic in q


def reduce_exponent(e: int, q: int) -> int:
    """Canonical exponent mod the function identity x^q = x: positive
    exponents fold into [1, q-1], zero stays zero."""
    if e == 0:
        return 0
    return (e - 1) % (q - 1) + 1


class SparsePoly:
    """Polynomial with few terms, stored exponent -> coefficient."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: dict[int, Element]):
        self.field = field
        clean: dict[int, Element] = {}
        for e, c in terms.items():
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if not c.is_zero:
                clean[int(e)] = c
        self.terms = clean

    @classmethod
    def from_pairs(cls, field: Field, pairs) -> SparsePoly:
        """Build from (exponent, coefficient) pairs, merging duplicates."""
        acc: dict[int, Element] = {}
        for e, c in pairs:
            if e in acc:
                acc[e] = acc[e] + c
            else:
                acc[e] = c
        return cls(field, acc)

    @classmethod
    def zero(cls, field: Field) -> SparsePoly:
        return cls(field, {})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Largest exponent, or -1 for the zero polynomial."""
        return max(self.terms) if self.terms else -1

    def coefficient(self, e: int) -> Element:
        return self.terms.get(e, self.field.zero())

    def evaluate(self, x: Element) -> Element:
        acc = self.field.zero()
        for e, c in self.terms.items():
            acc = acc + c * x**e
        return acc

    def __call__(self, x: Element) -> Element:
        return self.evaluate(x)

    def reduce_exponents(self) -> SparsePoly:
        """Fold exponents by x^q = x; the induced function is unchanged."""
        q = self.field.q
        return SparsePoly.from_pairs(
            self.field, ((reduce_exponent(e, q), c) for e, c in self.terms.items()))

    def value_table(self) -> list[int]:
        """Encodings of f(x) for every x, indexed by the encoding of x.

        Table-backed fields get integer only inner loops; anything larger
        falls back to per-element evaluation.
        """
        f = self.field
        q = f.q
        if q > VALUE_TABLE_LIMIT:
            raise FieldTooLarge(f"value table over q = {q} refused")
        tab = f._tables()
        if tab is None:
            return [self.evaluate(x).enc for x in f.elements()]
        exp, log = tab.exp, tab.log
        qm1 = q - 1
        if f.p == 2:
            out = [0] * q
            for e, c in self.terms.items():
                if e == 0:
                    ce = c.enc
                    for x in range(q):
                        out[x] ^= ce
                else:
                    lc = log[c.enc]
                    for j in range(qm1):
                        out[exp[j]] ^= exp[(j * e + lc) % qm1]
            return out
        if f.n == 1:
            p = f.p
            out = [0] * q
            for e, c in self.terms.items():
                if e == 0:
                    ce = c.enc
                    for x in range(q):
                        out[x] = (out[x] + ce) % p
                else:
                    lc = log[c.enc]
                    for j in range(qm1):
                        x = exp[j]
                        out[x] = (out[x] + exp[(j * e + lc) % qm1]) % p
            return out
        p, n = f.p, f.n
        vec = tab.vec
        acc = [[0] * n for _ in range(q)]
        for e, c in self.terms.items():
            if e == 0:
                cv = vec[c.enc]
                for x in range(q):
                    row = acc[x]
                    for i in range(n):
                        row[i] += cv[i]
            else:
                lc = log[c.enc]
                for j in range(qm1):
                    tv = vec[exp[(j * e + lc) % qm1]]
                    row = acc[exp[j]]
                    for i in range(n):
                        row[i] += tv[i]
        out = [0] * q
        for x in range(q):
            row = acc[x]
            enc = 0
            for i in range(n - 1, -1, -1):
                enc = enc * p + row[i] % p
            out[x] = enc
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.field, frozenset((e, c.enc) for e, c in self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                parts.append(str(c))
                continue
            xpart = "x" if e == 1 else f"x^{e}"
            if c == self.field.one():
                parts.append(xpart)
            else:
                parts.append(f"{c}*{xpart}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<poly {self} over {self.field!r}>"


@dataclass(frozen=True)
class RhsForm:
    """f = x^r * h(x^s) with s | q - 1; h is reduced mod x^d - 1, d = (q-1)/s.

    r is normalised into [1, q-1].  Both normalisations preserve the induced
    map on F_q, and because any replacement r -> r + k(q-1) keeps r mod s and
    shifts the subgroup exponent (r^2 - 1)/s by a multiple of d, they also
    leave every subgroup-level test unchanged.
    """

    field: Field
    r: int
    s: int
    h: SparsePoly

    def __post_init__(self):
        q = self.field.q
        if self.s < 1 or (q - 1) % self.s:
            raise NotADivisor(f"s = {self.s} does not divide q-1 = {q - 1}")
        if self.r < 1:
            raise PreconditionViolated(f"r must be at least 1, got {self.r}")
        if self.h.field != self.field:
            raise ValueError("h lives in a different field")
        object.__setattr__(self, "r", reduce_exponent(self.r, q))
        d = (q - 1) // self.s
        folded = SparsePoly.from_pairs(
            self.field, ((e % d, c) for e, c in self.h.terms.items()))
        object.__setattr__(self, "h", folded)

    @property
    def d(self) -> int:
        return (self.field.q - 1) // self.s

    def expand(self) -> SparsePoly:
        """The plain polynomial x^r * h(x^s) with exponents folded into
        [1, q-1].  Distinct h exponents mod d stay distinct here."""
        q = self.field.q
        return SparsePoly.from_pairs(
            self.field,
            ((reduce_exponent(self.r + self.s * e, q), c) for e, c in self.h.terms.items()))

    def evaluate(self, x: Element) -> Element:
        return x**self.r * self.h.evaluate(x**self.s)

    def __str__(self) -> str:
        return f"x^{self.r} * h(x^{self.s}) with h = {self.h}"


def decompose(f: SparsePoly, s: int | None = None) -> RhsForm:
    """Write f as x^r * h(x^s) with r the least exponent and, by default,
    the largest s compatible with the exponent spacing.

    A nonzero constant term blocks the shape (HasConstantTerm); an explicit
    s must divide the generic one (NotADivisor).
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot decompose the zero polynomial")
    f = f.reduce_exponents()
    if 0 in f.terms:
        raise HasConstantTerm("polynomial has a constant term; x^r * h(x^s) needs r >= 1")
    q = f.field.q
    r = min(f.terms)
    g0 = 0
    for e in f.terms:
        g0 = gcd(g0, e - r)
    g0 = gcd(g0, q - 1)
    if g0 == 0:
        g0 = q - 1
    if s is None:
        s = g0
    elif s < 1 or g0 % s:
        raise NotADivisor(f"s = {s} does not divide the exponent gcd {g0}")
    h = SparsePoly.from_pairs(
        f.field, (((e - r) // s, c) for e, c in f.terms.items()))
    return RhsForm(f.field, r, s, h)


def interpolate_on_subgroup(field: Field, values: list[Element]) -> SparsePoly:
    """The unique h of degree < d with h(omega^i) = values[i] on the d-th
    roots of unity, via the inverse discrete Fourier transform
    h_k = d^{-1} * sum_i values[i] * omega^{-ik}."""
    d = len(values)
    if d < 1 or (field.q - 1) % d:
        raise NotADivisor(f"{d} does not divide q-1 = {field.q - 1}")
    if d % field.p == 0:
        raise CharacteristicDividesD(f"characteristic {field.p} divides d = {d}")
    omega = field.alpha ** ((field.q - 1) // d)
    dinv = field.scalar(d).inverse()
    pairs = []
    for k in range(d):
        acc = field.zero()
        for i, v in enumerate(values):
            acc = acc + v * omega ** (-i * k)
        pairs.append((k, dinv * acc))
    return SparsePoly.from_pairs(field, pairs)


def interpolate_table(field: Field, table: list[int]) -> SparsePoly:
    """The unique polynomial of degree < q matching a full value table
    (encodings indexed by encoding).

    Closed form from delta functions 1 - (x - c)^{q-1}: the constant term
    is t_0 and, for k >= 1, the x^k coefficient is
    -(sum over c != 0 of t_c * c^{q-1-k}), with t_0 joining the k = q-1 sum.
    """
    q = field.q
    if q > COMPOSE_LIMIT:
        raise FieldTooLarge(f"full-field interpolation over q = {q} refused")
    if len(table) != q:
        raise ValueError(f"table must have {q} entries, got {len(table)}")
    t = [field.element(v) for v in table]
    pairs = [(0, t[0])]
    elems = [field._from_enc(e) for e in range(1, q)]
    for k in range(1, q):
        acc = field.zero()
        for c in elems:
            acc = acc + t[c.enc] * c ** (q - 1 - k)
        if k == q - 1:
            acc = acc + t[0]
        pairs.append((k, -acc))
    return SparsePoly.from_pairs(field, pairs)


def compose_reduce(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """The reduced polynomial inducing x -> f(g(x)), by value table plus
    full-field interpolation."""
    if f.field != g.field:
        raise ValueError("polynomials live in different fields")
    gt = g.value_table()
    ft = f.value_table()
    return interpolate_table(f.field, [ft[v] for v in gt])


_TERM_RE = re.compile(r"^(?:(?P<coef>[^*]+?)\s*\*\s*)?(?P<var>x(?:\^(?P<exp>\d+))?)$")


def parse_poly(field: Field, text: str) -> SparsePoly:
    """Parse '2*x^5 + 3*x^3 + 3*x' style text; terms may come in any order
    and repeated exponents are merged.  Coefficients use the element text
    forms of the field ('a^k' in extensions, decimal in prime fields)."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty polynomial")
    if stripped == "0":
        return SparsePoly.zero(field)
    if stripped[0] not in "+-":
        stripped = "+" + stripped
    pos = 0
    pairs = []
    while pos < len(stripped):
        sign = stripped[pos]
        if sign not in "+-":
            raise ParseError(f"expected sign at {stripped[pos:]!r}")
        pos += 1
        nxt_p = stripped.find("+", pos)
        nxt_m = stripped.find("-", pos)
        nxt = min(x for x in (nxt_p, nxt_m, len(stripped)) if x >= 0)
        term = stripped[pos:nxt].strip()
        pos = nxt
        if not term:
            raise ParseError(f"empty term in {text!r}")
        m = _TERM_RE.match(term)
        if m:
            coef_text = m.group("coef")
            c = field.parse_element(coef_text) if coef_text else field.one()
            e = int(m.group("exp")) if m.group("exp") else (1 if m.group("var") == "x" else 0)
        else:
            c = field.parse_element(term)
            e = 0
        if sign == "-":
            c = -c
        pairs.append((e, c))
    return SparsePoly.from_pairs(field, pairs)
