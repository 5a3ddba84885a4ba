from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tribsq.errors import NonUnitConstantTerm
from tribsq.genfunc import (
    Polynomial,
    RationalFunction,
    convergence_radius_estimate,
    lemma2_generating_function,
    series_coefficients,
    theorem3_squares_genfunc,
    tribonacci_squares_genfunc,
)
from tribsq.recurrence import LinearRecurrence
from tribsq.sequence import TRIBONACCI, SequenceSpec, term
from tribsq.sums import theorem2_weighted_square_sum

from conftest import naive_terms

seeds = st.integers(-999, 999)
specs = st.builds(SequenceSpec, seeds, seeds, seeds)


def bisect_root(f, lo, hi, tol=1e-14):
    flo = f(lo)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if (f(mid) > 0) == (flo > 0):
            lo, flo = mid, f(mid)
        else:
            hi = mid
    return (lo + hi) / 2


def test_polynomial_basics():
    p = Polynomial([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert Polynomial().degree == float("-inf")
    assert (p * p).coeffs == (1, 4, 4)
    assert (p - p).is_zero()
    assert p(Fraction(1, 2)) == 2
    assert str(Polynomial([0, 1, -1, -1, -1])) == "x - x^2 - x^3 - x^4"


def test_denominator_factorization():
    den = Polynomial([1, -3, -1, -1]) * Polynomial([1, 1, 1, -1])
    assert den.coeffs == (1, -2, -3, -6, 1, 0, 1)
    # negated non-leading coefficients give the order-6 recurrence of the squares
    assert tuple(-c for c in den.coeffs[1:]) == (2, 3, 6, -1, 0, -1)


def test_lemma2_tribonacci():
    rf = lemma2_generating_function(LinearRecurrence.tribonacci(TRIBONACCI))
    assert rf == RationalFunction(Polynomial([0, 1]), Polynomial([1, -1, -1, -1]))
    assert series_coefficients(rf, 8) == [0, 1, 1, 2, 4, 7, 13, 24]


def test_lemma2_zero_sequence():
    rf = lemma2_generating_function(LinearRecurrence.tribonacci(SequenceSpec(0, 0, 0)))
    assert rf.numerator.is_zero()


def test_lemma2_squares_matches_g():
    rf = lemma2_generating_function(LinearRecurrence.tribonacci_squares(TRIBONACCI))
    assert rf == tribonacci_squares_genfunc()


def test_g_series():
    assert series_coefficients(tribonacci_squares_genfunc(), 8) == [0, 1, 1, 4, 16, 49, 169, 576]
    assert theorem3_squares_genfunc(TRIBONACCI) == tribonacci_squares_genfunc()


def test_theorem3_examples():
    assert theorem3_squares_genfunc(SequenceSpec(0, 0, 0)).numerator.is_zero()
    assert series_coefficients(theorem3_squares_genfunc(SequenceSpec(1, 1, 1)), 1) == [1]
    assert series_coefficients(theorem3_squares_genfunc(SequenceSpec(1, 0, 2)), 6) == [1, 0, 4, 9, 25, 100]


def test_geometric_series():
    assert series_coefficients(RationalFunction(1, Polynomial([1, -1])), 4) == [1, 1, 1, 1]
    # non-unit constant term is normalized
    assert series_coefficients(RationalFunction(1, Polynomial([2, -1])), 3) == [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]


def test_series_rejects_zero_constant_term():
    with pytest.raises(NonUnitConstantTerm):
        series_coefficients(RationalFunction(1, Polynomial([0, 1])), 3)


@settings(max_examples=25, deadline=None)
@given(specs)
def test_coefficient_fidelity(spec):
    t = naive_terms(spec, 0, 64)
    assert series_coefficients(theorem3_squares_genfunc(spec), 64) == [t[j] ** 2 for j in range(64)]


@settings(max_examples=25, deadline=None)
@given(specs)
def test_lemma2_consistency(spec):
    rf = lemma2_generating_function(LinearRecurrence.tribonacci_squares(spec))
    assert rf == theorem3_squares_genfunc(spec)


def test_radius_estimates():
    oracle = bisect_root(lambda x: 1 - 3 * x - x * x - x**3, 0.0, 1.0)
    assert abs(oracle - 0.2956) < 1e-4
    assert convergence_radius_estimate(tribonacci_squares_genfunc()) == pytest.approx(oracle, abs=1e-6)
    assert convergence_radius_estimate(RationalFunction(1, Polynomial([1, -1]))) == pytest.approx(1.0)
    assert convergence_radius_estimate(RationalFunction(1, Polynomial([1, Fraction(-1, 2)]))) == pytest.approx(2.0)
    # dominant root of x^3 - x^2 - x - 1, squared and inverted
    alpha = bisect_root(lambda x: x**3 - x * x - x - 1, 1.0, 2.0)
    assert oracle == pytest.approx(1 / alpha**2, abs=1e-9)


def test_radius_skips_cancelled_pole():
    # (1 - x)/((1 - x)(1 - x/3)) has radius 3, not 1
    rf = RationalFunction(Polynomial([1, -1]), Polynomial([1, -1]) * Polynomial([1, Fraction(-1, 3)]))
    assert convergence_radius_estimate(rf) == pytest.approx(3.0)


@pytest.mark.parametrize("x", [Fraction(1, 5), Fraction(-1, 4), Fraction(1, 10)])
@pytest.mark.parametrize("spec", [TRIBONACCI, SequenceSpec(3, -7, 2)])
def test_partial_sums_converge_to_genfunc(spec, x):
    rf = theorem3_squares_genfunc(spec)
    assert abs(x) < convergence_radius_estimate(rf)
    limit = float(rf(x))
    partial = float(theorem2_weighted_square_sum(spec, x, 200))
    assert partial == pytest.approx(limit, rel=1e-9)


def test_json_schema():
    rf = RationalFunction(Polynomial([Fraction(1, 2), -3]), Polynomial([1, 0, Fraction(-2, 7)]))
    d = rf.to_dict()
    assert d == {"num": ["1/2", "-3"], "den": ["1", "0", "-2/7"]}
    back = RationalFunction.from_dict(d)
    assert back.numerator == rf.numerator and back.denominator == rf.denominator


def test_cross_multiplied_equality_of_unreduced_forms():
    g = tribonacci_squares_genfunc()
    scaled = RationalFunction(g.numerator * Polynomial([2, 5]), g.denominator * Polynomial([2, 5]))
    assert scaled == g
    assert scaled != RationalFunction(g.numerator + 1, g.denominator)
    assert term(TRIBONACCI, 7) ** 2 == series_coefficients(scaled, 8)[7]
