"""Brute-force sweeps: the ground truth everything else is checked against."""

from __future__ import annotations

import random

import pytest

from invopoly.errors import FieldTooLarge, NotAPermutation
from invopoly.oracle import compositional_inverse, is_involution, is_permutation, sweep
from invopoly.polyring import SparsePoly, compose_reduce, parse_poly


def test_cube_is_not_a_permutation_of_f7(f7):
    report = sweep(parse_poly(f7, "x^3"))
    assert not report.is_permutation
    assert report.is_involution is None
    a, b = report.witness
    assert a != b and a**3 == b**3
    assert (a.enc, b.enc) == (1, 2)


def test_cube_permutes_f11_with_inverse_seventh_power(f11):
    cube = parse_poly(f11, "x^3")
    report = sweep(cube)
    assert report.is_permutation and not report.is_involution
    inv = compositional_inverse(cube)
    assert str(inv) == "x^7"
    assert compose_reduce(cube, inv).value_table() == list(range(11))


def test_identity_and_worked_example_fixed_points(f7):
    assert sweep(parse_poly(f7, "x")).fixed_point_count == 7
    report = sweep(parse_poly(f7, "2*x^5 + 3*x^3 + 3*x"))
    assert report.is_permutation and report.is_involution
    assert report.fixed_point_count == 3


def test_involution_implies_permutation_on_random_polys(f9):
    rng = random.Random(31)
    for _ in range(200):
        f = SparsePoly.from_pairs(
            f9, [(rng.randrange(0, 9), f9.element(rng.randrange(9)))
                 for _ in range(rng.randrange(1, 4))])
        report = sweep(f)
        if report.is_involution:
            assert report.is_permutation
        if not report.is_permutation:
            assert report.witness is not None
            a, b = report.witness
            assert f.evaluate(a) == f.evaluate(b)


def test_affine_involutions_of_f5(f5):
    # x -> c - x swaps around c/2; all five are involutions
    for c in range(5):
        f = parse_poly(f5, f"{(5 - 1)}*x + {c}")
        report = sweep(f)
        assert report.is_involution
        assert report.fixed_point_count == 1


def test_sweep_cap(f256):
    with pytest.raises(FieldTooLarge):
        sweep(parse_poly(f256, "x"), cap=100)
    assert is_involution(parse_poly(f256, "x"), cap=256).is_involution


def test_compositional_inverse_rejects_non_permutations(f7):
    with pytest.raises(NotAPermutation) as exc:
        compositional_inverse(parse_poly(f7, "x^3"))
    assert exc.value.witness is not None


def test_is_permutation_alias_matches_sweep(f13):
    rng = random.Random(47)
    for _ in range(50):
        f = SparsePoly.from_pairs(
            f13, [(rng.randrange(0, 13), f13.element(rng.randrange(13)))
                  for _ in range(2)])
        assert is_permutation(f).is_permutation == sweep(f).is_permutation
