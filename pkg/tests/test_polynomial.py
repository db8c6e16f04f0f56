import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromakit.polynomial import (
    LAMBDA,
    ONE,
    ZERO,
    IntPolynomial,
    add,
    equals,
    evaluate,
    from_coefficients,
    from_dict,
    from_json,
    linear,
    multiply,
    power,
    pretty,
    subtract,
    to_dict,
    to_json,
)

small_ints = st.integers(-50, 50)
polys = st.lists(small_ints, max_size=6).map(from_coefficients)


def test_power_of_lambda_minus_one():
    assert power(linear(-1), 2) == from_coefficients([1, -2, 1])


def test_multiply_lambda_by_lambda_minus_one():
    assert multiply(LAMBDA, linear(-1)) == from_coefficients([0, -1, 1])


def test_subtract_gives_c3():
    # λ(λ-1)^n - [(λ-1)^n + (-1)^n (λ-1)] at n = 2
    lhs = multiply(LAMBDA, power(linear(-1), 2))
    rhs = add(power(linear(-1), 2), linear(-1))
    assert subtract(lhs, rhs) == from_coefficients([0, 2, -3, 1])


@pytest.mark.parametrize(
    "coeffs, x, expected",
    [
        ([0, 2, -3, 1], 3, 6),
        ([], 7, 0),
        ([0, -1, 1], 4, 12),
        ([5], 10**30, 5),
    ],
)
def test_evaluate(coeffs, x, expected):
    assert evaluate(from_coefficients(coeffs), x) == expected


def test_canonical_form():
    assert from_coefficients([0, 0]) == ZERO
    assert from_coefficients([0, 0]).coeffs == ()
    assert from_coefficients([1, 2, 0, 0]).degree == 1
    assert ZERO.degree == -1
    assert equals(from_coefficients([0, -1, 1]), multiply(LAMBDA, linear(-1)))
    assert equals(from_coefficients([0]), ZERO)


def test_big_coefficients_stay_exact():
    p = power(linear(-1), 80)
    assert p.coeffs[40] == math.comb(80, 40)
    assert evaluate(p, 3) == 2**80


def test_serialization():
    p = from_coefficients([0, 2, -3, 1])
    assert to_dict(p) == {"coeffs": ["0", "2", "-3", "1"]}
    assert to_json(p) == '{"coeffs": ["0", "2", "-3", "1"]}'
    assert from_json(to_json(p)) == p
    assert from_dict({"coeffs": [1, "2"]}) == from_coefficients([1, 2])
    with pytest.raises(ValueError):
        from_dict({"c": []})


@pytest.mark.parametrize(
    "coeffs, text",
    [
        ([], "0"),
        ([1], "1"),
        ([-4], "-4"),
        ([0, 1], "λ"),
        ([0, 2, -3, 1], "λ^3 - 3*λ^2 + 2*λ"),
        ([1, 0, -1], "-λ^2 + 1"),
    ],
)
def test_pretty(coeffs, text):
    assert pretty(from_coefficients(coeffs)) == text


def test_power_zero_and_negative():
    assert power(from_coefficients([3, 4]), 0) == ONE
    with pytest.raises(ValueError):
        power(LAMBDA, -1)


@given(polys, polys)
def test_commutative(p, q):
    assert p + q == q + p
    assert p * q == q * p


@given(polys, polys, polys)
def test_associative_and_distributive(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys, polys, st.integers(-20, 20))
def test_evaluation_is_a_homomorphism(p, q, x):
    assert evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x)
    assert evaluate(p - q, x) == evaluate(p, x) - evaluate(q, x)


@given(polys, polys)
def test_degree_adds(p, q):
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree == p.degree + q.degree


@given(polys, st.integers(0, 6))
def test_power_matches_repeated_multiplication(p, k):
    expected = ONE
    for _ in range(k):
        expected = expected * p
    assert power(p, k) == expected


@given(polys)
def test_subtract_self_is_zero(p):
    assert (p - p).is_zero()
    assert isinstance(-p, IntPolynomial)
