"""Exhaustive ground truth for permutation and involution claims.

Everything here works from a full value table and never consults the
subgroup-level machinery, so it can referee it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldTooLarge, NotAPermutation
from .gf import Element, Field
from .polyring import SparsePoly, interpolate_table

DEFAULT_CAP = 1 << 20   # largest q the oracle will sweep without being forced


@dataclass(frozen=True)
class PermReport:
    """Outcome of an exhaustive sweep over the whole field.

    is_involution is None when the map is not even a permutation; witness
    is the first offender in encoding order: a collision pair (x, y) with
    f(x) = f(y) for a non-permutation, or (x, f(f(x))) for a permutation
    that is not an involution.
    """

    field: Field
    is_permutation: bool
    is_involution: bool | None = None
    fixed_point_count: int | None = None
    witness: tuple[Element, Element] | None = None


def _check_table(field: Field, table: list[int]) -> PermReport:
    q = field.q
    first_preimage = [-1] * q
    for x in range(q):
        y = table[x]
        if first_preimage[y] >= 0:
            return PermReport(field, False,
                             witness=(field.element(first_preimage[y]), field.element(x)))
        first_preimage[y] = x
    fixed = 0
    bad = -1
    for x in range(q):
        if table[table[x]] != x:
            bad = x
            break
        if table[x] == x:
            fixed += 1
    if bad >= 0:
        return PermReport(field, True, False,
                         witness=(field.element(bad), field.element(table[table[bad]])))
    return PermReport(field, True, True, fixed)


def sweep(f: SparsePoly, cap: int = DEFAULT_CAP) -> PermReport:
    """Evaluate f everywhere and report permutation / involution status."""
    if f.field.q > cap:
        raise FieldTooLarge(f"oracle sweep over q = {f.field.q} exceeds cap {cap}")
    return _check_table(f.field, f.value_table())


def is_permutation(f: SparsePoly, cap: int = DEFAULT_CAP) -> PermReport:
    return sweep(f, cap)


def is_involution(f: SparsePoly, cap: int = DEFAULT_CAP) -> PermReport:
    return sweep(f, cap)


def compositional_inverse(f: SparsePoly, cap: int = DEFAULT_CAP) -> SparsePoly:
    """The reduced polynomial inducing f^{-1}; NotAPermutation otherwise."""
    report = sweep(f, cap)
    if not report.is_permutation:
        raise NotAPermutation(f"no inverse: f collides at encodings "
                              f"{report.witness[0].enc} and {report.witness[1].enc}",
                              witness=report.witness)
    table = f.value_table()
    inv = [0] * len(table)
    for x, y in enumerate(table):
        inv[y] = x
    return interpolate_table(f.field, inv)
