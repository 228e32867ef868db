"""Subgroup-level tests for f = x^r * h(x^s) on F_q.

With d = (q - 1) / s and mu_d the d-th roots of unity, f is driven by the
map g(z) = z^r * h(z)^s on mu_d:

  * f permutes F_q        iff  gcd(r, s) = 1 and g permutes mu_d;
  * f is an involution    iff  r^2 = 1 (mod s) and
                               phi(z) = z^{(r^2-1)/s} * h(g(z)) * h(z)^r = 1
                               for every z in mu_d.

A root of h on mu_d kills both properties (the whole coset above it maps
to 0) and shows up here as phi(z) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import (
    NotInSubgroup,
    NotInvolutionOnSubgroup,
    PreconditionViolated,
    RSquareCondition,
)
from .gf import Element
from .polyring import RhsForm


@dataclass(frozen=True)
class CriterionReport:
    """verdict = r_condition and phi_all_one.

    When r_condition already fails, phi is never evaluated: phi_all_one is
    vacuously True and failing_z is None.  gcd_condition is informational
    (it follows from r_condition, since r^2 = 1 + ks forces gcd(r, s) = 1).
    """

    r_condition: bool
    gcd_condition: bool
    phi_all_one: bool
    failing_z: Element | None
    verdict: bool


@dataclass(frozen=True)
class PermutationCheck:
    """witness: a root z of h on mu_d, or a collision pair (z1, z2) of g."""

    ok: bool
    gcd_ok: bool
    witness: Element | tuple[Element, Element] | None = None


class SubgroupInvolution:
    """An involution on mu_d, stored as the index map i -> mapping[i]
    relative to the powers omega^0 .. omega^{d-1} of a fixed generator."""

    __slots__ = ("d", "mapping")

    def __init__(self, mapping):
        mapping = tuple(int(i) for i in mapping)
        d = len(mapping)
        if d < 1 or sorted(mapping) != list(range(d)):
            raise PreconditionViolated(f"{mapping} is not a permutation of 0..{d - 1}")
        for i in range(d):
            if mapping[mapping[i]] != i:
                raise PreconditionViolated(
                    f"index map is not an involution: {i} -> {mapping[i]} -> {mapping[mapping[i]]}")
        self.d = d
        self.mapping = mapping

    @classmethod
    def identity(cls, d: int) -> SubgroupInvolution:
        return cls(range(d))

    @classmethod
    def inversion(cls, d: int) -> SubgroupInvolution:
        """z -> z^{-1}, i.e. i -> (d - i) mod d on exponents."""
        return cls((d - i) % d for i in range(d))

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubgroupInvolution):
            return NotImplemented
        return self.mapping == other.mapping

    def __hash__(self) -> int:
        return hash(self.mapping)

    def __repr__(self) -> str:
        return f"SubgroupInvolution({list(self.mapping)})"


def _require_in_subgroup(rhs: RhsForm, z: Element) -> None:
    if z.is_zero or z ** rhs.d != rhs.field.one():
        raise NotInSubgroup(f"{z} is not a {rhs.d}-th root of unity", witness=z)


def g_map(rhs: RhsForm, z: Element) -> Element:
    """g(z) = z^r * h(z)^s; zero exactly when h(z) = 0."""
    _require_in_subgroup(rhs, z)
    return z**rhs.r * rhs.h.evaluate(z) ** rhs.s


def phi_map(rhs: RhsForm, z: Element) -> Element:
    """phi(z) = z^{(r^2-1)/s} * h(g(z)) * h(z)^r; needs r^2 = 1 (mod s)."""
    r, s = rhs.r, rhs.s
    if (r * r - 1) % s:
        raise RSquareCondition(f"r^2 - 1 = {r * r - 1} is not divisible by s = {s}")
    _require_in_subgroup(rhs, z)
    hz = rhs.h.evaluate(z)
    gz = z**r * hz**s
    return z ** ((r * r - 1) // s) * rhs.h.evaluate(gz) * hz**r


def check_involution(rhs: RhsForm) -> CriterionReport:
    """Decide whether x^r * h(x^s) is an involution without touching any
    element outside mu_d."""
    r, s = rhs.r, rhs.s
    gcd_ok = gcd(r, s) == 1
    if (r * r - 1) % s:
        return CriterionReport(False, gcd_ok, True, None, False)
    zexp = (r * r - 1) // s
    one = rhs.field.one()
    h = rhs.h
    _, mu = rhs.field.subgroup(rhs.d)
    for z in mu:
        hz = h.evaluate(z)
        if hz.is_zero:
            return CriterionReport(True, gcd_ok, False, z, False)
        gz = z**r * hz**s
        if z**zexp * h.evaluate(gz) * hz**r != one:
            return CriterionReport(True, gcd_ok, False, z, False)
    return CriterionReport(True, gcd_ok, True, None, True)


def check_permutation(rhs: RhsForm) -> PermutationCheck:
    """Decide whether x^r * h(x^s) permutes F_q via g on mu_d."""
    gcd_ok = gcd(rhs.r, rhs.s) == 1
    if not gcd_ok:
        return PermutationCheck(False, False)
    _, mu = rhs.field.subgroup(rhs.d)
    seen: dict[int, Element] = {}
    for z in mu:
        hz = rhs.h.evaluate(z)
        if hz.is_zero:
            return PermutationCheck(False, True, witness=z)
        gz = (z**rhs.r * hz**rhs.s).enc
        if gz in seen:
            return PermutationCheck(False, True, witness=(seen[gz], z))
        seen[gz] = z
    return PermutationCheck(True, True)


def induced_subgroup_involution(rhs: RhsForm) -> SubgroupInvolution:
    """The involution that g = z^r * h(z)^s induces on mu_d.

    Any involution f of this shape forces one: this raises
    NotInvolutionOnSubgroup when g is not an involution of mu_d.  The
    converse direction fails in general, so success here proves nothing
    about f on its own.
    """
    _, mu = rhs.field.subgroup(rhs.d)
    index = {z.enc: i for i, z in enumerate(mu)}
    mapping = []
    for z in mu:
        g = g_map(rhs, z)
        j = index.get(g.enc)
        if j is None:
            raise NotInvolutionOnSubgroup(
                f"g({z}) = {g} leaves the subgroup", witness=z)
        mapping.append(j)
    for i in range(rhs.d):
        if mapping[mapping[i]] != i:
            raise NotInvolutionOnSubgroup(
                f"g o g moves omega^{i} to omega^{mapping[mapping[i]]}",
                witness=mu[i])
    return SubgroupInvolution(mapping)
