"""q-brackets, Gaussian binomials, q-Pochhammer products and rational functions."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from genocchi.errors import BackendMismatch, InvalidQ, PoleAtOne
from genocchi.qcalc import (
    QParam,
    QPolynomial,
    QRationalFunction,
    gauss_binom,
    inv_pochhammer_series,
    q_binom_expand,
    q_bracket,
    q_factorial,
    q_pochhammer_neg,
    ratfunc_limit_at_one,
)

S = QParam.symbolic()
q = S.value
HALF = QParam.exact(Fraction(1, 2))

exact_q = st.fractions(min_value=Fraction(-9, 10), max_value=Fraction(9, 10),
                       max_denominator=12).filter(lambda v: v != 0).map(QParam.exact)
small = st.integers(min_value=0, max_value=12)


def poly(*coeffs):
    return QRationalFunction(QPolynomial(coeffs))


class TestParams:
    @pytest.mark.parametrize("bad", ["0", "1", "-1", "2", "3/2"])
    def test_exact_rejects_outside_disc(self, bad):
        with pytest.raises(InvalidQ):
            QParam.parse(bad, "exact")

    def test_parse_message_names_value(self):
        with pytest.raises(InvalidQ, match="got q = 2"):
            QParam.parse("2", "exact")

    def test_parse_garbage(self):
        with pytest.raises(InvalidQ, match="cannot read"):
            QParam.parse("half", "exact")

    def test_complex_parse(self):
        p = QParam.parse("0.3+0.4i", "float")
        assert p.value == 0.3 + 0.4j

    def test_complex_rejects_unit_circle(self):
        with pytest.raises(InvalidQ):
            QParam.complex(0.6 + 0.8j)

    def test_backend_mismatch(self):
        with pytest.raises(BackendMismatch):
            q_pochhammer_neg(q, HALF, 2)


class TestExamples:
    def test_bracket(self):
        assert q_bracket(0, HALF) == 0
        assert q_bracket(1, HALF) == 1
        assert q_bracket(3, HALF) == Fraction(7, 4)

    def test_factorial(self):
        assert q_factorial(0, HALF) == 1
        assert q_factorial(2, HALF) == Fraction(3, 2)
        assert q_factorial(3, S) == (1 + q) * (1 + q + q ** 2)

    def test_gauss_binom(self):
        assert gauss_binom(5, 0, HALF) == 1
        assert gauss_binom(4, 2, S) == poly(1, 1, 2, 1, 1)
        assert ratfunc_limit_at_one(gauss_binom(4, 2, S)) == 6

    def test_gauss_binom_outside_range_is_zero(self):
        assert gauss_binom(4, 5, S).is_zero()
        assert gauss_binom(4, -1, HALF) == 0

    def test_pochhammer(self):
        assert q_pochhammer_neg(Fraction(1), HALF, 0) == 1
        assert q_pochhammer_neg(Fraction(1), HALF, 2) == 3
        assert q_pochhammer_neg(q, S, 3) == (1 + q) * (1 + q ** 2) * (1 + q ** 3)

    def test_binom_expand(self):
        assert q_binom_expand(0, S) == [1]
        assert q_binom_expand(2, S) == [1, -(1 + q), q]
        third = QParam.exact(Fraction(1, 2))
        coeffs = q_binom_expand(3, third)
        x, y = Fraction(2), Fraction(1)
        product = (x - y) * (x - third.value * y) * (x - third.value ** 2 * y)
        assert sum(c * x ** (3 - i) * y ** i for i, c in enumerate(coeffs)) == product

    def test_inverse_pochhammer_geometric(self):
        terms = inv_pochhammer_series(Fraction(1, 2), HALF, 1, 80)
        assert abs(float(sum(terms)) - 2 / 3) < 1e-20
        assert inv_pochhammer_series(Fraction(1, 3), HALF, 3, 0) == [1]

    def test_inverse_pochhammer_truncation(self):
        z, M = Fraction(1, 4), 12
        partial = sum(inv_pochhammer_series(z, HALF, 2, M))
        residual = partial * (1 + z) * (1 + z * HALF.value) - 1
        assert abs(residual) <= z ** (M + 1) * 4

    def test_limits(self):
        assert ratfunc_limit_at_one((1 - q ** 3) / (1 - q)) == 3
        assert ratfunc_limit_at_one(-3 * (1 - q) / ((1 + q) * (1 + q ** 2))) == 0

    def test_pole_at_one(self):
        with pytest.raises(PoleAtOne):
            ratfunc_limit_at_one(1 / (1 - q))


class TestRationalFunctions:
    def test_canonical_form(self):
        f = (q ** 2 - 1) / (2 * q - 2)
        assert f == (q + 1) / 2
        assert f.is_polynomial()

    def test_reciprocal_substitution(self):
        f = (1 + q) / (1 - q ** 2)
        assert f.substitute_reciprocal() == q / (q - 1)

    def test_str_round_numbers(self):
        assert str(1 + q ** 2) == "1+q^2"


@given(small, small)
def test_binom_symmetry(n, k):
    k = k % (n + 1)
    assert gauss_binom(n, k, S) == gauss_binom(n, n - k, S)


@given(small, small)
def test_binom_polynomial_with_classical_limit(n, k):
    k = k % (n + 1)
    g = gauss_binom(n, k, S)
    assert g.is_polynomial()
    assert g.limit_at_one() == comb(n, k)


@given(st.integers(min_value=0, max_value=10), st.integers(min_value=1, max_value=10))
def test_pascal_rules(n, k):
    k = 1 + k % (n + 1)
    up = gauss_binom(n + 1, k, S)
    assert up == gauss_binom(n, k - 1, S) + q ** k * gauss_binom(n, k, S)
    assert up == q ** (n + 1 - k) * gauss_binom(n, k - 1, S) + gauss_binom(n, k, S)


@given(small, small, exact_q)
def test_symbolic_and_exact_agree(n, k, qp):
    k = k % (n + 1)
    assert gauss_binom(n, k, S).evaluate(qp.value) == gauss_binom(n, k, qp)


@given(st.integers(min_value=0, max_value=10), exact_q,
       st.fractions(max_denominator=9), st.fractions(max_denominator=9))
def test_binom_expand_matches_product(n, qp, x, y):
    expansion = sum(c * x ** (n - i) * y ** i for i, c in enumerate(q_binom_expand(n, qp)))
    product = Fraction(1)
    for i in range(n):
        product *= x - qp.value ** i * y
    assert expansion == product


@given(st.integers(min_value=1, max_value=4), st.integers(min_value=0, max_value=12))
def test_inverse_pochhammer_coefficients(r, N):
    # z-coefficients of (truncated 1/(-z;q)_r) * (-z;q)_r vanish up to the truncation order
    M = 12
    series = inv_pochhammer_series(QRationalFunction(1), S, r, M)
    prod = [(-1) ** k * c for k, c in enumerate(q_binom_expand(r, S))]
    c = sum((series[m] * prod[N - m] for m in range(max(0, N - r), N + 1)),
            QRationalFunction(0))
    assert c == (1 if N == 0 else 0)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5),
       st.lists(st.integers(-5, 5), min_size=1, max_size=5).filter(any))
def test_ratfunc_field_axioms(a, b):
    f, g = poly(*a), poly(*b)
    assert (f / g) * g == f
    assert f * g == g * f
    assert (f + g) - g == f
    assert f.substitute_reciprocal().substitute_reciprocal() == f
