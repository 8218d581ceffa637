"""q-brackets, q-factorials, Gaussian binomials and q-Pochhammer products."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import List

from . import _zpoly as zp
from .params import Backend, QParam, Scalar
from .polynomials import QRationalFunction


def _one_minus_powers(exponents) -> zp.ZPoly:
    acc = zp.ONE
    for e in exponents:
        acc = zp.mul(acc, zp.sub(zp.ONE, zp.monomial(e)))
    return acc


def _symbolic_exponent(q: QParam):
    """e when q's value is the monomial q**e (so products stay in Z[q])."""
    if q.backend is Backend.SYMBOLIC:
        return q.value.monomial_exponent()
    return None


def q_bracket(x: int, q: QParam) -> Scalar:
    """[x]_q = (1 - q**x) / (1 - q)."""
    if x < 0:
        raise ValueError("q_bracket needs x >= 0")
    if x == 0:
        return q.zero
    e = _symbolic_exponent(q)
    if e is not None and e > 0:
        return QRationalFunction._from_zpolys(_one_minus_powers([e * x]),
                                              _one_minus_powers([e]))
    return (q.one - q.pow(x)) / (q.one - q.value)


def q_factorial(n: int, q: QParam) -> Scalar:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    acc = q.one
    for k in range(1, n + 1):
        acc = acc * q_bracket(k, q)
    return acc


@lru_cache(maxsize=4096)
def gauss_binom(n: int, k: int, q: QParam) -> Scalar:
    """Gaussian binomial [n]_q! / ([n-k]_q! [k]_q!); zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("gauss_binom needs n >= 0")
    if k < 0 or k > n:
        return q.zero
    k = min(k, n - k)
    e = _symbolic_exponent(q)
    if e is not None and e > 0:
        # Falling q-factorial over [k]_q!, with the (1-q)**k factors cancelled.
        num = _one_minus_powers(e * (n - i) for i in range(k))
        den = _one_minus_powers(e * i for i in range(1, k + 1))
        return QRationalFunction._from_zpolys(num, den)
    num = q.one
    den = q.one
    for i in range(k):
        num = num * (q.one - q.pow(n - i))
        den = den * (q.one - q.pow(i + 1))
    return num / den


def q_pochhammer_neg(x: Scalar, q: QParam, r: int) -> Scalar:
    """(-x; q)_r = (1 + x)(1 + x q) ... (1 + x q**(r-1))."""
    if r < 0:
        raise ValueError("q_pochhammer_neg needs r >= 0")
    x = q.check(x)
    acc = q.one
    for i in range(r):
        acc = acc * (q.one + x * q.pow(i))
    return acc


def q_binom_expand(n: int, q: QParam) -> List[Scalar]:
    """Coefficients c_i with (x - y)(x - q y)...(x - q**(n-1) y) = sum c_i x**(n-i) y**i."""
    if n < 0:
        raise ValueError("q_binom_expand needs n >= 0")
    return [gauss_binom(n, i, q) * q.pow(i * (i - 1) // 2) * (-1) ** i
            for i in range(n + 1)]


def inv_pochhammer_series(z: Scalar, q: QParam, r: int, M: int) -> List[Scalar]:
    """Terms t_m = [m+r-1 choose m]_q (-z)**m, m <= M, of 1/(-z; q)_r."""
    if r < 1:
        raise ValueError("inv_pochhammer_series needs r >= 1")
    if M < 0:
        raise ValueError("truncation order must be >= 0")
    z = q.check(z)
    terms = []
    power = q.one
    for m in range(M + 1):
        terms.append(gauss_binom(m + r - 1, m, q) * power)
        power = power * (-z)
    return terms


def ratfunc_limit_at_one(f: QRationalFunction) -> Fraction:
    """Exact value of lim_{q->1} f; raises PoleAtOne if f has a pole there."""
    return f.limit_at_one()
