"""Explicit involution families over extension fields, plus subfield lifting.

Each family has a validator that reports every hypothesis as a named
pass/fail check, and a generator that refuses inadmissible parameters and
cross-checks its own output against the subgroup criterion before
returning it.  Families over F_{q^2} work on mu_{q+1}; the palindromic
family works over F_{q^m} with coefficients from the base subfield; the
lifting construction turns an involution of a base field into one of an
extension.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

from .criterion import check_involution
from .errors import (
    BaseNotInvolution,
    EvenCharacteristic,
    EvenQNoSolution,
    HValueZero,
    HypothesisViolated,
    InternalMismatch,
    ParseError,
    PreconditionViolated,
    RSquareCondition,
    UnknownFamily,
    WrongFieldShape,
)
from .gf import Element, Field, make_field, subfield_embedding
from .oracle import _check_table
from .polyring import RhsForm, SparsePoly

FAMILY_IDS = (
    "thm-conj-symmetric",
    "cor-qb",
    "thm-palindromic",
    "cor-mdq1",
    "cor-m4d4",
    "thm-reversal",
    "cor-exm",
    "thm-geometric",
    "lift",
)


@dataclass(frozen=True)
class ConditionCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class FamilySpec:
    family_id: str
    field: Field
    params: dict = dc_field(default_factory=dict)


@dataclass(frozen=True)
class ReversalOutcome:
    """The reversal family decides involution-ness outright: a root of h
    on mu_{q+1} is a definitive no, not an input error."""

    rhs: RhsForm
    involution: bool
    root: Element | None


def _fail(checks: list[ConditionCheck]) -> list[ConditionCheck]:
    return [c for c in checks if not c.ok]


def _gate(checks: list[ConditionCheck]) -> None:
    bad = _fail(checks)
    if not bad:
        return
    root_only = [c for c in bad if c.name.startswith("h-nonzero")]
    if root_only and len(root_only) == len(bad):
        raise HValueZero(bad[0].detail)
    raise PreconditionViolated(
        "; ".join(f"{c.name}: {c.detail}" if c.detail else c.name for c in bad))


def _split_square(ext: Field) -> int:
    """Base q for a quadratic extension F_{q^2}."""
    if ext.n % 2:
        raise WrongFieldShape(f"{ext!r} is not a quadratic extension")
    return ext.p ** (ext.n // 2)


def _base_degree(base_q: int, p: int) -> int:
    j, t = 0, base_q
    while t > 1 and t % p == 0:
        t //= p
        j += 1
    if t != 1 or j == 0:
        raise WrongFieldShape(f"{base_q} is not a power of the characteristic {p}")
    return j


# -- conjugate-symmetric family over F_{q^2} --------------------------------

def omega_set(q: int, r: int) -> set[int]:
    """Admissible term positions for the conjugate-symmetric h: those
    0 <= i <= q with ((r+1)/(q-1) + i)(r-1) = 0 (mod q+1)."""
    if q > 2 and (r + 1) % (q - 1):
        raise PreconditionViolated(f"r = {r} is not -1 mod q-1 = {q - 1}")
    base = (r + 1) // (q - 1) if q > 2 else r + 1
    return {i for i in range(q + 1) if (base + i) * (r - 1) % (q + 1) == 0}


def _conj_h(ext: Field, q: int, coeffs: dict) -> SparsePoly:
    pairs = []
    for i, v in coeffs.items():
        v = ext.element(v)
        pairs.append((i % (q + 1), v))
        pairs.append((q * i % (q + 1), v**q))
    return SparsePoly.from_pairs(ext, pairs)


def _cond_conj_symmetric(ext: Field, r: int, coeffs: dict) -> list[ConditionCheck]:
    checks = []
    try:
        q = _split_square(ext)
    except WrongFieldShape as exc:
        return [ConditionCheck("field-is-quadratic-extension", False, str(exc))]
    checks.append(ConditionCheck("field-is-quadratic-extension", True, f"base order {q}"))
    r_ok = q == 2 or (r + 1) % (q - 1) == 0
    checks.append(ConditionCheck("r-is-minus-one-mod-q-minus-1", r_ok, f"r = {r}"))
    if not r_ok:
        return checks
    hyp = 2 * ((r * r - 1) // (q - 1)) % (q + 1) == 0
    checks.append(ConditionCheck("double-exponent-vanishes-mod-q-plus-1", hyp,
                                 f"2(r^2-1)/(q-1) mod {q + 1}"))
    omg = omega_set(q, r)
    stray = sorted(set(coeffs) - omg)
    checks.append(ConditionCheck("positions-admissible", not stray,
                                 f"outside positions {stray}" if stray else f"allowed {sorted(omg)}"))
    if stray or not hyp:
        return checks
    h = _conj_h(ext, q, coeffs)
    root = next((b for b in ext.subgroup(q + 1)[1] if h.evaluate(b).is_zero), None)
    checks.append(ConditionCheck("h-nonzero-on-mu", root is None,
                                 f"h({root}) = 0" if root is not None else ""))
    return checks


def gen_conj_symmetric(ext: Field, r: int, coeffs: dict) -> RhsForm:
    """Involution x^r * h(x^{q-1}) on F_{q^2} from conjugate-closed h:
    each supplied term h_i x^i brings its partner h_i^q x^{qi}."""
    checks = _cond_conj_symmetric(ext, r, coeffs)
    _gate(checks)
    q = _split_square(ext)
    h = _conj_h(ext, q, coeffs)
    rhs = RhsForm(ext, r, q - 1, h)
    zexp = (r * r - 1) // (q - 1)
    for b in ext.subgroup(q + 1)[1]:
        hb = h.evaluate(b)
        if hb**q != hb or b**zexp * h.evaluate(b**r) != hb:
            raise InternalMismatch(f"conjugate symmetry identity fails at {b}")
    if not check_involution(rhs).verdict:
        raise InternalMismatch("conjugate-symmetric construction failed the criterion")
    return rhs


def gen_cor_qb(ext: Field, i: int, b) -> RhsForm:
    """Two-term special case h = b x^i + b^q x^{qi} with r = q^2 - q - 1;
    admissible exactly per the residue class of q and squareness of b."""
    checks = _cond_cor_qb(ext, i, b)
    _gate(checks)
    q = _split_square(ext)
    try:
        return gen_conj_symmetric(ext, q * q - q - 1, {i: ext.element(b)})
    except HValueZero as exc:
        raise InternalMismatch(f"square condition passed but h vanishes: {exc}") from exc


def _cond_cor_qb(ext: Field, i: int, b) -> list[ConditionCheck]:
    checks = []
    try:
        q = _split_square(ext)
    except WrongFieldShape as exc:
        return [ConditionCheck("field-is-quadratic-extension", False, str(exc))]
    checks.append(ConditionCheck("field-is-quadratic-extension", True, f"base order {q}"))
    if ext.p == 2:
        checks.append(ConditionCheck("q-odd", False, "even characteristic"))
        return checks
    checks.append(ConditionCheck("q-odd", True))
    checks.append(ConditionCheck("position-in-range", 1 <= i <= q, f"i = {i}"))
    b = ext.element(b)
    checks.append(ConditionCheck("b-nonzero", not b.is_zero))
    if b.is_zero:
        return checks
    is_square = b ** ((ext.q - 1) // 2) == ext.one()
    if q % 4 == 1:
        checks.append(ConditionCheck("residue-square-match", is_square,
                                     f"q = 1 mod 4 needs square b, b is "
                                     f"{'square' if is_square else 'non-square'}"))
    else:
        checks.append(ConditionCheck("residue-square-match", not is_square,
                                     f"q = 3 mod 4 needs non-square b, b is "
                                     f"{'square' if is_square else 'non-square'}"))
    return checks


# -- palindromic family over F_{q^m} ----------------------------------------

def _mirror(i: int, d: int, e: int) -> int:
    return e - i if i <= e else d + e - i


def _palindromic_complete(ext: Field, d: int, e: int, coeffs: dict):
    """Fill the coefficient vector from the given positions by the mirror
    symmetry; returns (vector, conflict position or None)."""
    full: dict[int, Element] = {}
    for i, v in coeffs.items():
        v = ext.element(v)
        for j in (i, _mirror(i, d, e)):
            if j in full and full[j] != v:
                return full, j
            full[j] = v
    return full, None


def _cond_palindromic(ext: Field, base_q: int, d: int, r: int, coeffs: dict) -> list[ConditionCheck]:
    checks = []
    try:
        j = _base_degree(base_q, ext.p)
    except WrongFieldShape as exc:
        return [ConditionCheck("base-field-shape", False, str(exc))]
    if ext.n % j:
        return [ConditionCheck("base-field-shape", False,
                               f"degree {ext.n} not a multiple of {j}")]
    m = ext.n // j
    checks.append(ConditionCheck("base-field-shape", True, f"q = {base_q}, m = {m}"))
    d_ok = d >= 1 and gcd(base_q - 1, m) % d == 0
    checks.append(ConditionCheck("d-divides-gcd", d_ok, f"gcd({base_q - 1}, {m}) vs d = {d}"))
    if not d_ok:
        return checks
    s = (ext.q - 1) // d
    r_ok = r >= 1 and ((r + 1) % s == 0 if s > 1 else True)
    checks.append(ConditionCheck("r-is-minus-one-mod-s", r_ok, f"r = {r}, s = {s}"))
    if not r_ok:
        return checks
    e = ((r * r - 1) // s) % d
    in_range = all(0 <= i < d for i in coeffs)
    checks.append(ConditionCheck("positions-in-range", in_range, f"d = {d}"))
    if not in_range:
        return checks
    full, conflict = _palindromic_complete(ext, d, e, coeffs)
    checks.append(ConditionCheck("mirror-consistent", conflict is None,
                                 f"position {conflict} assigned twice" if conflict is not None else f"e = {e}"))
    if conflict is not None:
        return checks
    alien = [i for i, v in full.items() if v ** base_q != v]
    checks.append(ConditionCheck("coefficients-in-base-subfield", not alien,
                                 f"positions {sorted(alien)} outside order-{base_q} subfield" if alien else ""))
    if alien:
        return checks
    h = SparsePoly(ext, full)
    root = next((z for z in ext.subgroup(d)[1] if h.evaluate(z).is_zero), None)
    checks.append(ConditionCheck("h-nonzero-on-mu", root is None,
                                 f"h({root}) = 0" if root is not None else ""))
    return checks


def gen_palindromic(ext: Field, base_q: int, d: int, r: int, coeffs: dict) -> RhsForm:
    """Involution x^r * h(x^s) on F_{q^m} from base-subfield coefficients
    mirrored around the pivot e = (r^2-1)/s mod d."""
    checks = _cond_palindromic(ext, base_q, d, r, coeffs)
    _gate(checks)
    s = (ext.q - 1) // d
    e = ((r * r - 1) // s) % d
    full, _ = _palindromic_complete(ext, d, e, coeffs)
    rhs = RhsForm(ext, r, s, SparsePoly(ext, full))
    if not check_involution(rhs).verdict:
        raise InternalMismatch("palindromic construction failed the criterion")
    return rhs


def _mdq1_shape(ext: Field):
    if ext.p != 2:
        raise WrongFieldShape("this family needs characteristic 2")
    for k in range(2, ext.n + 1):
        if k * (2**k - 1) == ext.n:
            return 2**k
    raise WrongFieldShape(
        f"degree {ext.n} is not k*(2^k - 1) for any k >= 2")


def gen_cor_mdq1(ext: Field, a, b) -> RhsForm:
    """h = a x^{q-2} + b x^{q-3} + b over F_{q^{q-1}}, q = 2^k, with
    r = s - 1: the palindromic family at m = d = q - 1."""
    q = _mdq1_shape(ext)
    d = q - 1
    s = (ext.q - 1) // d
    return gen_palindromic(ext, q, d, s - 1, {0: b, q - 3: b, q - 2: a})


def _m4d4_shape(ext: Field):
    if ext.p != 3 or ext.n % 8:
        raise WrongFieldShape(f"need order 3^(8k), got {ext.p}^{ext.n}")
    return 3 ** (ext.n // 4)


def gen_cor_m4d4(ext: Field, a, b, c) -> RhsForm:
    """h = a x^3 + b x^2 + a x + c over F_{q^4}, q = 3^{2k}, with
    r = q^4 - 2: the palindromic family at m = d = 4."""
    q = _m4d4_shape(ext)
    return gen_palindromic(ext, q, 4, ext.q - 2, {3: a, 2: b, 1: a, 0: c})


# -- reversal family over F_{q^2} -------------------------------------------

def _cond_reversal(ext: Field, r: int, deg: int, coeffs: dict):
    checks = []
    try:
        q = _split_square(ext)
    except WrongFieldShape as exc:
        return [ConditionCheck("field-is-quadratic-extension", False, str(exc))], None
    checks.append(ConditionCheck("field-is-quadratic-extension", True, f"base order {q}"))
    r_ok = q == 2 or (r + 1) % (q - 1) == 0
    checks.append(ConditionCheck("r-is-minus-one-mod-q-minus-1", r_ok, f"r = {r}"))
    deg_ok = deg >= 0 and (deg - (r - 1)) % (q + 1) == 0
    checks.append(ConditionCheck("degree-matches-r", deg_ok,
                                 f"deg = {deg} vs r-1 = {r - 1} mod {q + 1}"))
    in_range = all(0 <= i <= deg for i in coeffs)
    checks.append(ConditionCheck("positions-in-range", in_range, f"deg = {deg}"))
    if not (r_ok and deg_ok and in_range):
        return checks, None
    full: dict[int, Element] = {}
    conflict = None
    for i, v in coeffs.items():
        v = ext.element(v)
        for j, w in ((i, v), (deg - i, v**q)):
            if j in full and full[j] != w:
                conflict = j
                break
            full[j] = w
        if conflict is not None:
            break
    checks.append(ConditionCheck("conjugate-mirror-consistent", conflict is None,
                                 f"position {conflict} assigned twice" if conflict is not None else ""))
    if conflict is not None:
        return checks, None
    a0 = full.get(0, ext.zero())
    checks.append(ConditionCheck("constant-term-nonzero", not a0.is_zero))
    if a0.is_zero:
        return checks, None
    return checks, SparsePoly(ext, full)


def gen_reversal(ext: Field, r: int, deg: int, coeffs: dict) -> ReversalOutcome:
    """f = x^r * h(x^{q-1}) with conjugate-mirrored h of degree matching
    r - 1 mod q + 1.  Involution exactly when h misses 0 on mu_{q+1}; a
    root is the returned counterexample, not an error."""
    checks, h = _cond_reversal(ext, r, deg, coeffs)
    _gate(checks)
    q = _split_square(ext)
    rhs = RhsForm(ext, r, q - 1, h)
    root = next((z for z in ext.subgroup(q + 1)[1] if h.evaluate(z).is_zero), None)
    verdict = root is None
    if check_involution(rhs).verdict != verdict:
        raise InternalMismatch("criterion disagrees with the root test")
    return ReversalOutcome(rhs, verdict, root)


def cor_exm_case_verdict(ext: Field, a) -> bool:
    """Residue-class test for f = a x^{q^2-3q+1} + a^q x^{q-2}."""
    q = _split_square(ext)
    a = ext.element(a)
    if ext.p == 2 or a.is_zero:
        return False
    minus_one = ext.scalar(-1)
    if q % 4 == 1:
        return a ** ((ext.q - 1) // 2) != minus_one
    if q % 8 == 3:
        return a ** ((ext.q - 1) // 4) != minus_one
    return a ** ((ext.q - 1) // 4) != ext.one()


def cor_exm_gcd_verdict(ext: Field, a) -> bool:
    """Equivalent root-avoidance test: (-a^{q-1})^{(q+1)/gcd(q+1, q-3)} != 1."""
    q = _split_square(ext)
    a = ext.element(a)
    if ext.p == 2 or a.is_zero:
        return False
    g = gcd(q + 1, q - 3)
    return (-(a ** (q - 1))) ** ((q + 1) // g) != ext.one()


def gen_cor_exm(ext: Field, a) -> RhsForm:
    """f = a x^{q^2-3q+1} + a^q x^{q-2}, the reversal family with
    h = a x^{q-3} + a^q; both admissibility tests must agree."""
    q = _split_square(ext)
    if ext.p == 2:
        raise EvenQNoSolution("no choice of a works in even characteristic")
    a = ext.element(a)
    if a.is_zero:
        raise PreconditionViolated("a must be nonzero")
    case = cor_exm_case_verdict(ext, a)
    alt = cor_exm_gcd_verdict(ext, a)
    if case != alt:
        raise InternalMismatch(f"case table says {case}, root-avoidance form says {alt}")
    if not case:
        raise PreconditionViolated(f"a = {a} fails the residue-class test for q = {q}")
    h = SparsePoly.from_pairs(ext, [(q - 3, a), (0, a**q)])
    rhs = RhsForm(ext, q - 2, q - 1, h)
    if not check_involution(rhs).verdict:
        raise InternalMismatch("admissible a produced a non-involution")
    return rhs


# -- geometric family over F_{q^m}, m even ----------------------------------

def _cond_geometric(ext: Field, base_q: int, d: int, m: int, k: int) -> list[ConditionCheck]:
    checks = []
    try:
        j = _base_degree(base_q, ext.p)
    except WrongFieldShape as exc:
        return [ConditionCheck("base-field-shape", False, str(exc))]
    shape_ok = m >= 2 and m % 2 == 0 and ext.n == j * m
    checks.append(ConditionCheck("base-field-shape", shape_ok,
                                 f"need field order {base_q}^{m} with m even, field is {ext.p}^{ext.n}"))
    if not shape_ok:
        return checks
    d_ok = d >= 1 and (base_q + 1) % d == 0
    checks.append(ConditionCheck("d-divides-q-plus-1", d_ok, f"q = {base_q}, d = {d}"))
    checks.append(ConditionCheck("k-positive", k >= 1, f"k = {k}"))
    if not (d_ok and k >= 1):
        return checks
    half = m // 2
    num = half * (base_q * base_q - 1)
    integral = num % (2 * d) == 0
    checks.append(ConditionCheck("inner-quotient-integral", integral,
                                 f"(m/2)(q^2-1)/(2d) = {num}/{2 * d}"))
    if not integral:
        return checks
    big = num // (2 * d) - 1
    c1 = (k - 1) * gcd(k + 1, big) % d == 0
    checks.append(ConditionCheck("degree-congruence", c1,
                                 f"(k-1)*gcd(k+1, {big}) mod {d}"))
    checks.append(ConditionCheck("k-squared-unit", (k * k - 1) % ext.p == 0,
                                 f"k^2 mod {ext.p}"))
    return checks


def gen_geometric(ext: Field, base_q: int, d: int, m: int, k: int) -> SparsePoly:
    """f = x(1 + x^s + ... + x^{(k-1)s}) on the even extension F_{q^m},
    with s = (q^m - 1)/d and q = -1 mod d."""
    checks = _cond_geometric(ext, base_q, d, m, k)
    _gate(checks)
    s = (ext.q - 1) // d
    one = ext.one()
    f = SparsePoly.from_pairs(ext, [(1 + i * s, one) for i in range(k)])
    h = SparsePoly.from_pairs(ext, [(i, one) for i in range(k)])
    if not check_involution(RhsForm(ext, 1, s, h)).verdict:
        raise InternalMismatch("geometric construction failed the criterion")
    return f


# -- subfield lifting ---------------------------------------------------------

def lift_involution(base: Field, m: int, r: int, h: SparsePoly,
                    ext: Field | None = None) -> RhsForm:
    """Lift g = x^r * h(x)^m, an involution of the base field, to the
    involution x^r * h(x^{(q^m-1)/(q-1)}) of the degree-m extension."""
    if h.field != base:
        raise WrongFieldShape("h must live in the base field")
    if m < 1 or gcd(base.q - 1, m) != 1:
        raise PreconditionViolated(f"gcd(q-1, m) = {gcd(base.q - 1, m)} must be 1")
    if r < 1:
        raise PreconditionViolated(f"r = {r} must be positive")
    s = (base.q**m - 1) // (base.q - 1)
    if (r * r - 1) % s:
        raise RSquareCondition(f"r = {r}: r^2 - 1 not divisible by s = {s}")
    table = [(x**r * h.evaluate(x) ** m).enc for x in base.elements()]
    report = _check_table(base, table)
    if not (report.is_permutation and report.is_involution):
        raise BaseNotInvolution(
            f"x^{r} * h(x)^{m} is not an involution of the base field",
            witness=report.witness)
    if ext is None:
        ext = make_field(base.p, base.n * m)
    elif ext.p != base.p or ext.n != base.n * m:
        raise WrongFieldShape(f"{ext!r} is not the degree-{m} extension of {base!r}")
    embed = subfield_embedding(base, ext)
    lifted = SparsePoly.from_pairs(ext, ((e, embed(c)) for e, c in h.terms.items()))
    rhs = RhsForm(ext, r, s, lifted)
    if not check_involution(rhs).verdict:
        raise InternalMismatch("lifted map failed the involution criterion")
    return rhs


def check_iff_subgroup(rhs: RhsForm) -> bool:
    """When gcd(s, d) = 1 and h maps mu_d into itself, f is an involution
    exactly when g = z^r * h(z)^s is one on mu_d; this decides with d
    evaluations instead of q."""
    r, s, d = rhs.r, rhs.s, rhs.d
    if (r * r - 1) % s:
        raise HypothesisViolated(f"r^2 = 1 mod s fails for r = {r}, s = {s}")
    if gcd(s, d) != 1:
        raise HypothesisViolated(f"gcd(s, d) = {gcd(s, d)} must be 1")
    _, mu = rhs.field.subgroup(d)
    one = rhs.field.one()
    values = []
    for z in mu:
        v = rhs.h.evaluate(z)
        if v.is_zero or v**d != one:
            raise HypothesisViolated(f"h({z}) = {v} is outside mu_{d}", witness=z)
        values.append(v)
    index = {z.enc: i for i, z in enumerate(mu)}
    mapping = [index[(mu[i] ** r * values[i] ** s).enc] for i in range(d)]
    return all(mapping[mapping[i]] == i for i in range(d))


# -- uniform validation front end -------------------------------------------

def _need(params: dict, *names):
    missing = [n for n in names if n not in params]
    if missing:
        raise ParseError(f"missing parameters: {', '.join(missing)}")
    return [params[n] for n in names]


def _coeff_map(params: dict, prefix: str) -> dict:
    out = {}
    for key, val in params.items():
        if key.startswith(prefix) and key[len(prefix):].isdigit():
            out[int(key[len(prefix):])] = val
    return out


def validate(spec: FamilySpec) -> list[ConditionCheck]:
    """Evaluate every hypothesis of the named family on the parameters."""
    fid, fld, p = spec.family_id, spec.field, spec.params
    if fid == "thm-conj-symmetric":
        (r,) = _need(p, "r")
        return _cond_conj_symmetric(fld, int(r), _coeff_map(p, "h"))
    if fid == "cor-qb":
        i, b = _need(p, "i", "b")
        return _cond_cor_qb(fld, int(i), b)
    if fid == "thm-palindromic":
        q, d, r = _need(p, "q", "d", "r")
        return _cond_palindromic(fld, int(q), int(d), int(r), _coeff_map(p, "h"))
    if fid == "cor-mdq1":
        a, b = _need(p, "a", "b")
        try:
            q = _mdq1_shape(fld)
        except WrongFieldShape as exc:
            return [ConditionCheck("base-field-shape", False, str(exc))]
        return _cond_palindromic(fld, q, q - 1, (fld.q - 1) // (q - 1) - 1,
                                 {0: b, q - 3: b, q - 2: a})
    if fid == "cor-m4d4":
        a, b, c = _need(p, "a", "b", "c")
        try:
            q = _m4d4_shape(fld)
        except WrongFieldShape as exc:
            return [ConditionCheck("base-field-shape", False, str(exc))]
        return _cond_palindromic(fld, q, 4, fld.q - 2, {3: a, 2: b, 1: a, 0: c})
    if fid == "thm-reversal":
        r, d = _need(p, "r", "d")
        return _cond_reversal(fld, int(r), int(d), _coeff_map(p, "a"))[0]
    if fid == "cor-exm":
        (a,) = _need(p, "a")
        checks = []
        try:
            q = _split_square(fld)
        except WrongFieldShape as exc:
            return [ConditionCheck("field-is-quadratic-extension", False, str(exc))]
        checks.append(ConditionCheck("field-is-quadratic-extension", True, f"base order {q}"))
        if fld.p == 2:
            checks.append(ConditionCheck("admissible-a-exists", False,
                                         "no choice of a works in even characteristic"))
            return checks
        a_el = fld.element(a)
        checks.append(ConditionCheck("a-nonzero", not a_el.is_zero))
        if a_el.is_zero:
            return checks
        case = cor_exm_case_verdict(fld, a_el)
        checks.append(ConditionCheck("residue-class-test", case,
                                     f"q = {q} mod 8 is {q % 8}"))
        return checks
    if fid == "thm-geometric":
        q, d, m, k = _need(p, "q", "d", "m", "k")
        return _cond_geometric(fld, int(q), int(d), int(m), int(k))
    if fid == "lift":
        q, m, r = _need(p, "q", "m", "r")
        q, m, r = int(q), int(m), int(r)
        checks = []
        try:
            j = _base_degree(q, fld.p)
        except WrongFieldShape as exc:
            return [ConditionCheck("base-field-shape", False, str(exc))]
        shape_ok = fld.n == j * m
        checks.append(ConditionCheck("base-field-shape", shape_ok,
                                     f"field degree {fld.n} vs {j}*{m}"))
        if not shape_ok:
            return checks
        checks.append(ConditionCheck("m-coprime-to-group-order", gcd(q - 1, m) == 1,
                                     f"gcd({q - 1}, {m})"))
        s = (q**m - 1) // (q - 1)
        checks.append(ConditionCheck("r-squared-is-one", (r * r - 1) % s == 0,
                                     f"r = {r}, s = {s}"))
        return checks
    raise UnknownFamily(f"no family named {fid!r}")
