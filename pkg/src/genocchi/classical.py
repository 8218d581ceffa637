"""Classical Genocchi, Bernoulli and Euler numbers from exact power series.

Everything is read off truncated exponential generating functions.  Index
``n`` of a series is ``n! * [t^n]``; all coefficient arithmetic is exact
(``Fraction``) unless a non-real character forces complex floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable, List, Sequence

from .characters import DirichletCharacter, value as chi_value
from .qcalc import Backend

GUARD = 2


class PowerSeries:
    """Power series in t known exactly through t**order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence, order: int):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        c = list(coeffs[: order + 1])
        zero = c[0] * 0 if c else Fraction(0)
        c.extend([zero] * (order + 1 - len(c)))
        self.coeffs = c
        self.order = order

    @classmethod
    def exp(cls, a, order: int) -> "PowerSeries":
        """e^{a t}; exact when ``a`` is rational."""
        if isinstance(a, int):
            a = Fraction(a)
        out = []
        term = a ** 0
        for k in range(order + 1):
            out.append(term)
            term = term * a / (k + 1)
        return cls(out, order)

    @classmethod
    def monomial(cls, k: int, c, order: int) -> "PowerSeries":
        out = [c * 0] * (order + 1)
        if k <= order:
            out[k] = c
        return cls(out, order)

    def _match(self, other):
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.monomial(0, other, self.order)

    def __add__(self, other):
        o = self._match(other)
        n = min(self.order, o.order)
        return PowerSeries([a + b for a, b in zip(self.coeffs[: n + 1], o.coeffs[: n + 1])], n)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._match(other))

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([a * other for a in self.coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            s = a[0] * b[k]
            for i in range(1, k + 1):
                s += a[i] * b[k - i]
            out.append(s)
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([a / other for a in self.coeffs], self.order)
        n = min(self.order, other.order)
        b = other.coeffs
        if b[0] == 0:
            raise ZeroDivisionError("series division needs a unit constant term")
        out = []
        for k in range(n + 1):
            s = self.coeffs[k]
            for i in range(1, k + 1):
                s -= b[i] * out[k - i]
            out.append(s / b[0])
        return PowerSeries(out, n)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative series power")
        result = PowerSeries.monomial(0, self.coeffs[0] ** 0, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scaled_argument(self, a) -> "PowerSeries":
        """f(a t)."""
        return PowerSeries([c * a ** k for k, c in enumerate(self.coeffs)], self.order)

    def egf(self, n: int):
        """n! [t^n]."""
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n] * factorial(n)

    def __eq__(self, other):
        return (isinstance(other, PowerSeries) and self.order == other.order
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"PowerSeries({self.coeffs!r}, order={self.order})"


def _guarded(build: Callable[[int], PowerSeries], n: int) -> PowerSeries:
    """Build through t^(n+GUARD) and re-check against a deeper build."""
    s = build(n + GUARD)
    deeper = build(n + 2 * GUARD)
    if deeper.coeffs[: n + GUARD + 1] != s.coeffs:
        raise ArithmeticError(f"guard band mismatch building series to order {n}")
    return s


def genocchi_kernel(order: int) -> PowerSeries:
    """2t / (e^t + 1)."""
    two_t = PowerSeries.monomial(1, Fraction(2), order)
    return two_t / (PowerSeries.exp(1, order) + 1)


def genocchi_numbers(N: int) -> List[Fraction]:
    """G_0..G_N."""
    s = _guarded(genocchi_kernel, N)
    return [s.egf(n) for n in range(N + 1)]


def genocchi_poly(n: int, x) -> Fraction:
    """G_n(x) by binomial convolution of the numbers with e^{xt}."""
    x = Fraction(x)
    G = genocchi_numbers(n)
    return sum((comb(n, k) * G[k] * x ** (n - k) for k in range(n + 1)), Fraction(0))


def higher_order_genocchi(n: int, r: int, x=0) -> Fraction:
    """G^{(r)}_n(x): n! [t^n] of (2t/(e^t+1))^r e^{xt}."""
    if r < 1:
        raise ValueError("order r must be >= 1")
    x = Fraction(x)

    def build(order):
        return genocchi_kernel(order) ** r * PowerSeries.exp(x, order)

    return _guarded(build, n).egf(n)


def generalized_kernel(chi: DirichletCharacter, order: int,
                       backend: Backend = Backend.EXACT) -> PowerSeries:
    """2t sum_a chi(a) (-1)^a e^{at} / (e^{dt} + 1)."""
    d = chi.modulus
    one = Fraction(1) if backend is not Backend.FLOAT else 1 + 0j
    num = PowerSeries.monomial(0, one * 0, order)
    for a in range(d):
        c = chi_value(chi, a, backend if backend is Backend.FLOAT else Backend.EXACT)
        if c:
            num = num + PowerSeries.exp(a, order) * (c * (-1) ** a)
    num = num * PowerSeries.monomial(1, 2 * one, order)
    return num / (PowerSeries.exp(d, order) * one + one)


def generalized_genocchi(n: int, r: int, chi: DirichletCharacter, x=0,
                         backend: Backend = Backend.EXACT):
    """G^{(r)}_{n,chi}(x); exact for real chi, complex floats otherwise."""
    if r < 1:
        raise ValueError("order r must be >= 1")
    backend = Backend(backend)
    if backend is Backend.SYMBOLIC:
        backend = Backend.EXACT
    if backend is Backend.EXACT:
        chi.exact(1)  # NonRealCharacterInExactBackend for complex characters
        x = Fraction(x)
    else:
        x = complex(x)

    def build(order):
        return generalized_kernel(chi, order, backend) ** r * PowerSeries.exp(x, order)

    return _guarded(build, n).egf(n)


def bernoulli_numbers(N: int) -> List[Fraction]:
    """B_0..B_N from t / (e^t - 1) (so B_1 = -1/2)."""

    def build(order):
        # (e^t - 1)/t = sum t^k / (k+1)!
        denom = PowerSeries([Fraction(1, factorial(k + 1)) for k in range(order + 1)], order)
        return PowerSeries.monomial(0, Fraction(1), order) / denom

    s = _guarded(build, N)
    return [s.egf(n) for n in range(N + 1)]


def euler_poly(n: int, x) -> Fraction:
    """E_n(x): n! [t^n] of 2 e^{xt} / (e^t + 1)."""
    x = Fraction(x)

    def build(order):
        return PowerSeries.exp(x, order) * 2 / (PowerSeries.exp(1, order) + 1)

    return _guarded(build, n).egf(n)


# Bases 2..41 make Miller-Rabin deterministic below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
MR_DETERMINISTIC_BOUND = 3317044064679887385961981


def is_prime(n: int) -> bool:
    """Miller-Rabin; a proof below MR_DETERMINISTIC_BOUND, probable-prime above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


PRIME_SCAN_LIMIT = 100


def genocchi_prime_scan(N: int = PRIME_SCAN_LIMIT) -> List[int]:
    """Even n in 2..N with |G_n| prime.

    Odd indices are skipped: G_1 = 1 and G_n = 0 for odd n >= 3.  Composite
    verdicts carry a Miller-Rabin witness, so they are proofs; any prime
    verdict above the deterministic bound is only probable and is rejected.
    """
    if N > PRIME_SCAN_LIMIT:
        raise ValueError(f"prime scan is limited to n <= {PRIME_SCAN_LIMIT}")
    G = genocchi_numbers(N)
    hits = []
    for n in range(2, N + 1, 2):
        mag = abs(G[n].numerator)
        if G[n].denominator == 1 and is_prime(mag):
            if mag >= MR_DETERMINISTIC_BOUND:
                raise ArithmeticError(f"|G_{n}| is only a probable prime")
            hits.append(n)
    return hits
