"""Classical Genocchi, Bernoulli and Euler values."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from genocchi import classical as cl
from genocchi.characters import enumerate_characters, principal, quadratic
from genocchi.classical import PowerSeries


def test_genocchi_values():
    G = cl.genocchi_numbers(12)
    assert G[1] == 1
    assert [G[n] for n in range(2, 13, 2)] == [-1, 1, -3, 17, -155, 2073]
    assert all(G[n] == 0 for n in (3, 5, 7, 9, 11))
    assert all(g.denominator == 1 for g in G)


def test_genocchi_poly():
    G = cl.genocchi_numbers(12)
    assert all(cl.genocchi_poly(n, 0) == G[n] for n in range(13))
    assert cl.genocchi_poly(1, Fraction(7, 3)) == 1
    assert cl.genocchi_poly(2, 1) == 1


def test_higher_order():
    for n in range(11):
        for x in (0, 1, Fraction(-2, 3)):
            assert cl.higher_order_genocchi(n, 1, x) == cl.genocchi_poly(n, x)
    for r in (2, 3, 4):
        assert all(cl.higher_order_genocchi(n, r) == 0 for n in range(r))
    # Cauchy square of the numbers
    G = cl.genocchi_numbers(8)
    for n in range(9):
        assert cl.higher_order_genocchi(n, 2) == sum(comb(n, k) * G[k] * G[n - k]
                                                    for k in range(n + 1))


def test_generalized():
    for n in range(9):
        for r in (1, 2, 3):
            assert cl.generalized_genocchi(n, r, principal(1)) == cl.higher_order_genocchi(n, r)
    chi = quadratic(3)
    assert cl.generalized_genocchi(1, 1, chi) == -2
    assert cl.generalized_genocchi(0, 1, chi) == 0


def test_generalized_non_real_float():
    chi = next(c for c in enumerate_characters(5) if not c.is_real)
    v = cl.generalized_genocchi(1, 1, chi, backend="float")
    expected = 2 * sum(complex(chi(a)) * (-1) ** a for a in range(5)) / 2
    assert abs(v - expected) < 1e-12
    with pytest.raises(ValueError):
        cl.generalized_genocchi(1, 1, chi)


def test_bernoulli_euler():
    B = cl.bernoulli_numbers(4)
    assert B[1] == Fraction(-1, 2)
    assert B[2] == Fraction(1, 6)
    assert B[4] == Fraction(-1, 30)
    assert cl.euler_poly(0, Fraction(5, 7)) == 1


def test_bridge():
    G = cl.genocchi_numbers(30)
    B = cl.bernoulli_numbers(30)
    for n in range(1, 16):
        assert G[2 * n] == 2 * (1 - 2 ** (2 * n)) * B[2 * n] == 2 * n * cl.euler_poly(2 * n - 1, 0)


def test_prime_scan():
    assert cl.genocchi_prime_scan(10) == [6, 8]
    assert cl.genocchi_prime_scan(100) == [6, 8]
    with pytest.raises(ValueError):
        cl.genocchi_prime_scan(101)


def test_is_prime_known_values():
    assert [p for p in range(60) if cl.is_prime(p)] == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert cl.is_prime(2 ** 61 - 1)
    assert not cl.is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


@given(st.integers(2, 5000))
def test_is_prime_matches_trial_division(n):
    assert cl.is_prime(n) == all(n % p for p in range(2, int(n ** 0.5) + 1))


@given(st.integers(0, 14), st.fractions(max_denominator=6), st.fractions(max_denominator=6))
def test_appell_addition(n, x, y):
    # G_n(x + y) = sum_k C(n, k) G_k(x) y^(n-k)
    lhs = cl.genocchi_poly(n, x + y)
    rhs = sum(comb(n, k) * cl.genocchi_poly(k, x) * y ** (n - k) for k in range(n + 1))
    assert lhs == rhs


@given(st.integers(0, 12), st.fractions(max_denominator=6))
def test_genocchi_euler_relation(n, x):
    # 2t/(e^t+1) e^{xt} = t * (2 e^{xt}/(e^t+1)), so G_{n+1}(x) = (n+1) E_n(x)
    assert cl.genocchi_poly(n + 1, x) == (n + 1) * cl.euler_poly(n, x)


@given(st.integers(0, 6), st.integers(1, 3), st.sampled_from([3, 5, 7]))
def test_generalized_order_additivity(n, r, d):
    # kernel^(r+1) = kernel^r * kernel, so values convolve binomially
    chi = quadratic(d)
    lhs = cl.generalized_genocchi(n, r + 1, chi)
    rhs = sum(comb(n, k) * cl.generalized_genocchi(k, r, chi) * cl.generalized_genocchi(n - k, 1, chi)
              for k in range(n + 1))
    assert lhs == rhs


@given(st.lists(st.fractions(max_denominator=5), min_size=1, max_size=6),
       st.lists(st.fractions(max_denominator=5), min_size=1, max_size=6))
def test_series_division_inverts_product(a, b):
    if b[0] == 0:
        b[0] = Fraction(1)
    f, g = PowerSeries(a, 5), PowerSeries(b, 5)
    assert (f * g) / g == f
