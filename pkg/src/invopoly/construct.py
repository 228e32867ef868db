"""Building involutions x^r * h(x^s) from involutions of mu_d.

The general recipe: pick an involution i -> l(i) of the exponents of
mu_d = <omega>, an exponent r with r^2 = 1 (mod s), and offsets
n_0..n_{d-1} in Z_s with n_{l(i)} + r * n_i = 0 (mod s); then interpolate

    h(omega^i) = alpha^{d * n_i + l(i) - i * r}

and f = x^r * h(x^s) is an involution.  The n_i pick which coset of mu_d
each coset lands in beyond the bare subgroup map, so the count of valid
offset vectors measures how many involutions share one l.

The closed forms for d = 2 and d = 3 below are the same interpolation
with the inversion map on mu_d written out; the two corollaries fix r
and part of the offsets in the d = 3 form over even characteristic.
"""

from __future__ import annotations

from .criterion import SubgroupInvolution, check_involution
from .errors import (
    CharacteristicDividesD,
    EvenCharacteristic,
    InternalMismatch,
    NotADivisor,
    PreconditionViolated,
    RSquareCondition,
    WrongFieldShape,
)
from .gf import Field
from .oracle import sweep
from .polyring import RhsForm, SparsePoly, interpolate_on_subgroup


def involutory_exponents(s: int) -> list[int]:
    """All r in [1, s] with r^2 = 1 (mod s); every admissible r is one of
    these modulo s."""
    return [r for r in range(1, s + 1) if (r * r - 1) % s == 0]


def fixed_point_choices(s: int, r: int) -> list[int]:
    """Offsets usable at indices the subgroup involution fixes."""
    return [n for n in range(s) if n * (r + 1) % s == 0]


def partner_offset(s: int, r: int, n_i: int) -> int:
    """The offset forced at l(i) once n_i is chosen at a non-fixed i."""
    return -r * n_i % s


def _interpolate_from_sigma(field: Field, s: int, sigma: SubgroupInvolution,
                            r: int, offsets) -> RhsForm:
    """The raw interpolation step, with no admissibility checks.  Feeding
    it inadmissible data is how the failure direction gets exercised."""
    d = sigma.d
    values = [field.pow_alpha(d * offsets[i] + sigma(i) - i * r) for i in range(d)]
    h = interpolate_on_subgroup(field, values)
    return RhsForm(field, r, s, h)


def construct_general(field: Field, s: int, sigma: SubgroupInvolution,
                      r: int = 1, offsets=None) -> RhsForm:
    """Involution x^r * h(x^s) inducing sigma on mu_d; raises on any
    inadmissible input and cross-checks its own output."""
    q = field.q
    if s < 1 or (q - 1) % s:
        raise NotADivisor(f"s = {s} does not divide q-1 = {q - 1}")
    d = (q - 1) // s
    if d % field.p == 0:
        raise CharacteristicDividesD(f"characteristic {field.p} divides d = {d}")
    if sigma.d != d:
        raise PreconditionViolated(f"subgroup involution has size {sigma.d}, need {d}")
    if (r * r - 1) % s:
        raise RSquareCondition(f"r = {r}: r^2 - 1 not divisible by s = {s}")
    if offsets is None:
        offsets = (0,) * d
    offsets = tuple(int(n) % s for n in offsets)
    if len(offsets) != d:
        raise PreconditionViolated(f"need {d} offsets, got {len(offsets)}")
    bad = [i for i in range(d) if (offsets[sigma(i)] + r * offsets[i]) % s]
    if bad:
        raise PreconditionViolated(
            f"offsets break n_l(i) + r*n_i = 0 (mod {s}) at indices {bad}")
    rhs = _interpolate_from_sigma(field, s, sigma, r, offsets)
    if not check_involution(rhs).verdict:
        raise InternalMismatch("constructed map failed the involution criterion")
    return rhs


def construct_from_inverse(field: Field, s: int, r: int = 1, offsets=None) -> RhsForm:
    """The z -> 1/z special case of construct_general."""
    d = (field.q - 1) // s if s >= 1 and (field.q - 1) % s == 0 else None
    if d is None:
        raise NotADivisor(f"s = {s} does not divide q-1 = {field.q - 1}")
    return construct_general(field, s, SubgroupInvolution.inversion(d), r, offsets)


def construct_d2(field: Field, r: int, a, b) -> SparsePoly:
    """The d = 2 closed form over odd q:

        f = (a-b)/2 * x^{s+r} + (a+b)/2 * x^r,   s = (q-1)/2,

    valid if and only if both value conditions below hold, so a passing
    construction needs no further check (one runs anyway)."""
    if field.p == 2:
        raise EvenCharacteristic("the d = 2 form needs odd q")
    q = field.q
    s = (q - 1) // 2
    if (r * r - 1) % s:
        raise RSquareCondition(f"r = {r}: r^2 - 1 not divisible by s = {s}")
    a = field.element(a)
    b = field.element(b)
    half = field.scalar(2).inverse()
    c_hi = (a - b) * half
    c_lo = (a + b) * half
    sign_r = field.scalar(-1 if r % 2 else 1)
    sign_e = field.scalar(-1 if ((r * r - 1) // s) % 2 else 1)
    cond1 = c_hi * a ** (s + r) + c_lo * a**r == field.one()
    cond2 = sign_r * c_hi * b ** (s + r) + c_lo * b**r == sign_e
    failed = [name for name, ok in [("value-at-a", cond1), ("value-at-b", cond2)] if not ok]
    if failed:
        raise PreconditionViolated(f"d = 2 conditions failed: {', '.join(failed)}")
    f = SparsePoly.from_pairs(field, [(s + r, c_hi), (r, c_lo)])
    if not check_involution(RhsForm(field, r, s, SparsePoly.from_pairs(
            field, [(1, c_hi), (0, c_lo)]))).verdict:
        raise InternalMismatch("d = 2 conditions passed but the map is not an involution")
    return f


def construct_d3(field: Field, r: int, n0: int, n1: int, n2: int) -> SparsePoly:
    """The d = 3 closed form over q = 1 (mod 3): inversion on mu_3 with
    offsets (n0, n1, n2), written without the interpolation step."""
    q = field.q
    if field.p == 3:
        raise CharacteristicDividesD("d = 3 needs characteristic away from 3")
    if (q - 1) % 3:
        raise NotADivisor(f"3 does not divide q-1 = {q - 1}")
    s = (q - 1) // 3
    if (r * r - 1) % s:
        raise RSquareCondition(f"r = {r}: r^2 - 1 not divisible by s = {s}")
    bad = []
    if n0 * (r + 1) % s:
        bad.append("n0*(r+1)")
    if (n1 * r + n2) % s:
        bad.append("n1*r + n2")
    if bad:
        raise PreconditionViolated(f"d = 3 offset conditions failed: {', '.join(bad)} != 0 mod {s}")
    va = field.pow_alpha(3 * n0)
    vb = field.pow_alpha(3 * n1 + 2 - r)
    vc = field.pow_alpha(3 * n2 + 1 - 2 * r)
    omega = field.pow_alpha(s)
    om2 = omega * omega
    one = field.one()
    two = field.scalar(2)
    three = field.scalar(3)
    h2 = ((two + om2) * va - (one + two * om2) * vb - (one - om2) * vc) \
        / (three * (one - omega))
    h1 = ((two + omega) * va - (one + two * omega) * vb - (one - omega) * vc) \
        / (three * (one - om2))
    h0 = (va + vb + vc) / three
    rhs = RhsForm(field, r, s, SparsePoly.from_pairs(field, [(2, h2), (1, h1), (0, h0)]))
    if not check_involution(rhs).verdict:
        raise InternalMismatch("d = 3 construction failed the involution criterion")
    return SparsePoly.from_pairs(field, [(2 * s + r, h2), (s + r, h1), (r, h0)])


def _require_even_square(field: Field) -> None:
    if field.p != 2 or field.n % 2:
        raise WrongFieldShape(f"need q = 4^k, got {field.p}^{field.n}")


def construct_cor_r1(field: Field, n1: int) -> SparsePoly:
    """d = 3, r = 1 over q = 4^k: offsets (0, n1, -n1) collapse to the one
    free parameter beta = alpha^{3*n1 + 1}."""
    _require_even_square(field)
    q = field.q
    s = (q - 1) // 3
    beta = field.pow_alpha(3 * n1 + 1)
    omega = field.pow_alpha(s)
    om2 = omega * omega
    binv = beta.inverse()
    one = field.one()
    h2 = one + omega * beta + om2 * binv
    h1 = one + om2 * beta + omega * binv
    h0 = one + beta + binv
    rhs = RhsForm(field, 1, s, SparsePoly.from_pairs(field, [(2, h2), (1, h1), (0, h0)]))
    if not check_involution(rhs).verdict:
        raise InternalMismatch("r = 1 closed form failed the involution criterion")
    return SparsePoly.from_pairs(
        field, [((2 * q + 1) // 3, h2), ((q + 2) // 3, h1), (1, h0)])


def construct_cor_rq43(field: Field, n0: int, n1: int) -> SparsePoly:
    """d = 3, r = (q-4)/3 over q = 4^k: here r + 1 = s, so every offset
    pair (n0, n1) in Z_s x Z_s is admissible."""
    _require_even_square(field)
    q = field.q
    s = (q - 1) // 3
    r = (q - 4) // 3
    h2 = field.pow_alpha(3 * n0)
    h0 = h2 + field.pow_alpha(3 * (n1 + 1))
    f = SparsePoly.from_pairs(field, [(q - 2, h2), ((2 * q - 5) // 3, h0), (r, h0)])
    if r >= 1:
        rhs = RhsForm(field, r, s, SparsePoly.from_pairs(field, [(2, h2), (1, h0), (0, h0)]))
        ok = check_involution(rhs).verdict
    else:
        ok = sweep(f).is_involution is True
    if not ok:
        raise InternalMismatch("r = (q-4)/3 closed form failed the involution check")
    return f
