"""Sparse polynomials, the x^r * h(x^s) form, and interpolation."""

from __future__ import annotations

import random

import pytest

from invopoly.errors import (
    FieldTooLarge,
    HasConstantTerm,
    NotADivisor,
    ParseError,
    PreconditionViolated,
    ZeroPolynomial,
)
from invopoly.polyring import (
    RhsForm,
    SparsePoly,
    compose_reduce,
    decompose,
    interpolate_on_subgroup,
    interpolate_table,
    parse_poly,
    reduce_exponent,
)


def test_reduce_exponent_preserves_nonzero_powers():
    q = 7
    assert reduce_exponent(0, q) == 0
    assert reduce_exponent(1, q) == 1
    assert reduce_exponent(q - 1, q) == q - 1
    assert reduce_exponent(q, q) == 1
    assert reduce_exponent(2 * (q - 1), q) == q - 1
    field_check = [(pow(x, e, q) == pow(x, reduce_exponent(e, q), q))
                   for x in range(q) for e in range(1, 30)]
    assert all(field_check)


def test_parse_and_str_round_trip(f7, f64):
    for field, text in ((f7, "2*x^5 + 3*x^3 + 3*x"),
                        (f64, "a^21*x^62 + a^42*x^41 + a^42*x^20"),
                        (f7, "x^6 + 5"),
                        (f7, "x")):
        assert str(parse_poly(field, text)) == text
    assert str(parse_poly(f7, "3*x + x^2 - x")) == "x^2 + 2*x"
    assert str(parse_poly(f7, "0")) == "0"
    with pytest.raises(ParseError):
        parse_poly(f7, "x +")
    with pytest.raises(ParseError):
        parse_poly(f7, "2*y")
    with pytest.raises(ParseError):
        parse_poly(f7, "x^-2")
    with pytest.raises(ValueError):
        SparsePoly.from_pairs(f7, [(-2, f7.one())])


def test_value_table_matches_pointwise_evaluation(f7, f9, f16):
    rng = random.Random(23)
    for field in (f7, f9, f16):
        for _ in range(25):
            terms = [(rng.randrange(0, 40), field.element(rng.randrange(field.q)))
                     for _ in range(rng.randrange(1, 5))]
            f = SparsePoly.from_pairs(field, terms)
            table = f.value_table()
            for x in field.elements():
                assert table[x.enc] == f.evaluate(x).enc


def test_sparse_poly_merges_duplicate_exponents(f7):
    f = SparsePoly.from_pairs(f7, [(3, f7.element(4)), (3, f7.element(5))])
    assert f.coefficient(3).enc == 2
    g = SparsePoly.from_pairs(f7, [(2, f7.element(3)), (2, f7.element(4))])
    assert g.is_zero


def test_rhs_form_folds_h_and_normalizes_r(f13):
    h = parse_poly(f13, "x^7 + 2*x^3 + 1")
    rhs = RhsForm(f13, 5, 4, h)
    assert rhs.d == 3
    assert max(rhs.h.terms) < 3
    # folding h mod x^d - 1 and normalizing r never changes the function
    direct = {x.enc: (x**5 * h.evaluate(x**4)).enc for x in f13.elements()}
    via = rhs.expand().value_table()
    assert [direct[i] for i in range(13)] == via
    big_r = RhsForm(f13, 5 + 12, 4, h)
    assert big_r.r == 5 and big_r.expand() == rhs.expand()
    with pytest.raises(NotADivisor):
        RhsForm(f13, 1, 5, h)
    with pytest.raises(PreconditionViolated):
        RhsForm(f13, 0, 4, h)


def test_decompose_worked_example(f7):
    f = parse_poly(f7, "2*x^5 + 3*x^3 + 3*x")
    rhs = decompose(f)
    assert (rhs.r, rhs.s, rhs.d) == (1, 2, 3)
    assert rhs.expand() == f


def test_decompose_picks_largest_s_and_respects_forced_s(f7, f13):
    assert decompose(parse_poly(f7, "x^5")).s == 6
    rhs = decompose(parse_poly(f13, "x^7 + x^3"), s=4)
    assert rhs.s == 4 and rhs.r == 3
    with pytest.raises(NotADivisor):
        decompose(parse_poly(f13, "x^7 + x^3"), s=3)  # 3 does not divide gcd of gaps
    with pytest.raises(HasConstantTerm):
        decompose(parse_poly(f7, "x + 1"))
    with pytest.raises(ZeroPolynomial):
        decompose(SparsePoly.zero(f7))


def test_decompose_round_trips_random_forms(f9, f16):
    rng = random.Random(41)
    for field in (f9, f16):
        for _ in range(50):
            s = rng.choice([t for t in range(1, field.q)
                            if (field.q - 1) % t == 0])
            r = rng.randrange(1, field.q)
            d = (field.q - 1) // s
            h = SparsePoly.from_pairs(
                field, [(i, field.element(rng.randrange(field.q))) for i in range(d)])
            if h.is_zero:
                continue
            rhs = RhsForm(field, r, s, h)
            back = decompose(rhs.expand())
            assert back.expand().value_table() == rhs.expand().value_table()


def test_interpolate_on_subgroup(f13):
    omega, mu = f13.subgroup(4)
    rng = random.Random(6)
    for _ in range(20):
        values = [f13.element(rng.randrange(13)) for _ in range(4)]
        h = interpolate_on_subgroup(f13, values)
        assert h.degree() < 4
        for z, v in zip(mu, values):
            assert h.evaluate(z) == v
    with pytest.raises(NotADivisor):
        interpolate_on_subgroup(f13, [f13.one()] * 5)


def test_interpolate_table_reproduces_any_map(f7, f16):
    rng = random.Random(17)
    for field in (f7, f16):
        for _ in range(10):
            table = [rng.randrange(field.q) for _ in range(field.q)]
            f = interpolate_table(field, table)
            assert f.value_table() == table
            assert f.degree() < field.q


def test_interpolate_table_respects_size_limit(f7):
    class Huge:
        q = 1 << 30
    with pytest.raises(FieldTooLarge):
        interpolate_table(Huge(), [])


def test_compose_reduce_worked_example(f7):
    f = parse_poly(f7, "2*x^5 + 3*x^3 + 3*x")
    ff = compose_reduce(f, f)
    assert ff.value_table() == [x for x in range(7)]
    g = parse_poly(f7, "x^3")
    gg = compose_reduce(g, g)
    assert gg.value_table() == [pow(x, 9, 7) for x in range(7)]
