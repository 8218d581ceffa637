"""Polynomials and rational functions in the indeterminate q.

:class:`QPolynomial` is the user-facing dense polynomial with exact rational
coefficients.  :class:`QRationalFunction` stores an integer numerator and
denominator in canonical form:

* numerator and denominator are coprime in Q[q];
* their integer contents are coprime;
* the leading coefficient of the denominator is positive;
* zero is ``0/1``.

Two rational functions are therefore equal exactly when their stored tuples
agree, which is what lets identity checks be decided by ``==``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from math import lcm
from numbers import Rational
from typing import Iterable, Tuple, Union

from ..errors import DenominatorVanishes, PoleAtOne
from . import _zpoly as zp

Number = Union[int, Fraction]


def _term(c, k: int) -> str:
    if k == 0:
        return str(c)
    mono = "q" if k == 1 else f"q^{k}"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def _poly_str(coeffs) -> str:
    parts = [_term(c, k) for k, c in enumerate(coeffs) if c]
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


class QPolynomial:
    """Dense polynomial in q with :class:`fractions.Fraction` coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[Number] = ()):
        c = [Fraction(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c: Tuple[Fraction, ...] = tuple(c)

    @classmethod
    def q(cls) -> "QPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Number) -> "QPolynomial":
        return cls((c,))

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def __call__(self, x):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def _coerce(self, other):
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return QPolynomial((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = (self._c, o._c) if len(self._c) >= len(o._c) else (o._c, self._c)
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self._c)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        sa, a = self.to_integer()
        sb, b = o.to_integer()
        return QPolynomial(sa * sb * c for c in zp.mul(a, b))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        s, a = self.to_integer()
        return QPolynomial(s ** k * c for c in zp.power(a, k))

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        db = o.degree
        lead = o._c[-1]
        quot = [Fraction(0)] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] / lead
            if c:
                quot[i - db] = c
                for j, bc in enumerate(o._c):
                    rem[i - db + j] -= c * bc
        return QPolynomial(quot), QPolynomial(rem[:db] if db else ())

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        return hash(("QPolynomial", self._c))

    def to_integer(self) -> Tuple[Fraction, zp.ZPoly]:
        """Return ``(s, p)`` with ``self == s * p`` and ``p`` integral."""
        if not self._c:
            return Fraction(0), zp.ZERO
        den = lcm(*(c.denominator for c in self._c))
        ints = tuple(int(c * den) for c in self._c)
        g = zp.content(ints)
        return Fraction(g, den), tuple(x // g for x in ints)

    def __str__(self):
        return _poly_str(self._c)

    def __repr__(self):
        return f"QPolynomial({self})"


Coercible = Union["QRationalFunction", QPolynomial, int, Fraction]


class QRationalFunction:
    """Exact element of Q(q) kept in canonical reduced form."""

    __slots__ = ("_num", "_den")

    def __init__(self, numerator: Coercible = 0, denominator: Coercible = 1):
        n = _as_pair(numerator)
        d = _as_pair(denominator)
        if n is None or d is None:
            raise TypeError("rational function parts must be polynomials or rationals")
        if not d[0]:
            raise ZeroDivisionError("zero denominator")
        num = zp.mul(n[0], d[1])
        den = zp.mul(n[1], d[0])
        self._num, self._den = _reduce(num, den)

    @classmethod
    def _raw(cls, num: zp.ZPoly, den: zp.ZPoly) -> "QRationalFunction":
        obj = cls.__new__(cls)
        obj._num = num
        obj._den = den
        return obj

    @classmethod
    def _from_zpolys(cls, num: zp.ZPoly, den: zp.ZPoly) -> "QRationalFunction":
        return cls._raw(*_reduce(num, den))

    @classmethod
    def q(cls) -> "QRationalFunction":
        return cls._raw((0, 1), zp.ONE)

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "QRationalFunction":
        """``c * q**k`` for any integer ``k``."""
        c = Fraction(c)
        if c == 0:
            return cls._raw(zp.ZERO, zp.ONE)
        if k >= 0:
            return cls._finish(zp.monomial(k, c.numerator), (c.denominator,))
        return cls._finish((c.numerator,), zp.monomial(-k, c.denominator))

    @classmethod
    def _finish(cls, num: zp.ZPoly, den: zp.ZPoly) -> "QRationalFunction":
        return cls._raw(*_normalize_content(num, den))

    # -- accessors ----------------------------------------------------------

    @property
    def numerator(self) -> QPolynomial:
        return QPolynomial(self._num)

    @property
    def denominator(self) -> QPolynomial:
        return QPolynomial(self._den)

    @property
    def parts(self) -> Tuple[zp.ZPoly, zp.ZPoly]:
        """Integer numerator and denominator tuples (canonical)."""
        return self._num, self._den

    def is_zero(self) -> bool:
        return not self._num

    def is_polynomial(self) -> bool:
        return len(self._den) == 1

    def as_polynomial(self) -> QPolynomial:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        d = self._den[0]
        return QPolynomial(Fraction(c, d) for c in self._num)

    def monomial_exponent(self):
        """``e`` if this is exactly ``q**e`` (any integer e), else ``None``."""
        n, d = self._num, self._den
        if n and n[-1] == 1 and d[-1] == 1 and not any(n[:-1]) and not any(d[:-1]):
            return (len(n) - 1) - (len(d) - 1)
        return None

    def as_rational(self) -> Fraction:
        if len(self._den) != 1 or len(self._num) > 1:
            raise ValueError(f"{self} is not constant")
        return Fraction(self._num[0] if self._num else 0, self._den[0])

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _coerce_rf(other)
        if o is None:
            return NotImplemented
        if not o._num:
            return self
        if not self._num:
            return o
        a, b = self._num, self._den
        c, e = o._num, o._den
        if b == e:
            return QRationalFunction._from_zpolys(zp.add(a, c), b)
        if len(b) == 1 and len(e) == 1:
            return QRationalFunction._finish(zp.add(zp.scale(a, e[0]), zp.scale(c, b[0])),
                                             (b[0] * e[0],))
        # Henrici: only the common part of the denominators can cancel.
        d1 = zp.gcd(b, e)
        if d1 == zp.ONE:
            num = zp.add(zp.mul(a, e), zp.mul(c, b))
            return QRationalFunction._finish(num, zp.mul(b, e))
        b1 = zp.div_exact(b, d1)
        e1 = zp.div_exact(e, d1)
        t = zp.add(zp.mul(a, e1), zp.mul(c, b1))
        if not t:
            return QRationalFunction._raw(zp.ZERO, zp.ONE)
        d2 = zp.gcd(t, d1)
        if d2 != zp.ONE:
            t = zp.div_exact(t, d2)
            e1 = zp.div_exact(e, d2)
        else:
            e1 = e
        return QRationalFunction._finish(t, zp.mul(b1, e1))

    __radd__ = __add__

    def __neg__(self):
        return QRationalFunction._raw(zp.neg(self._num), self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce_rf(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce_rf(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce_rf(other)
        if o is None:
            return NotImplemented
        if not self._num or not o._num:
            return QRationalFunction._raw(zp.ZERO, zp.ONE)
        a, b = self._num, self._den
        c, e = o._num, o._den
        g1 = zp.gcd(a, e)
        if g1 != zp.ONE:
            a, e = zp.div_exact(a, g1), zp.div_exact(e, g1)
        g2 = zp.gcd(c, b)
        if g2 != zp.ONE:
            c, b = zp.div_exact(c, g2), zp.div_exact(b, g2)
        return QRationalFunction._finish(zp.mul(a, c), zp.mul(b, e))

    __rmul__ = __mul__

    def reciprocal(self) -> "QRationalFunction":
        if not self._num:
            raise ZeroDivisionError("reciprocal of the zero rational function")
        return QRationalFunction._finish(self._den, self._num)

    def __truediv__(self, other):
        o = _coerce_rf(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = _coerce_rf(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.reciprocal()
        k = abs(k)
        return QRationalFunction._finish(zp.power(base._num, k), zp.power(base._den, k))

    def __eq__(self, other):
        o = _coerce_rf(other)
        if o is None:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __hash__(self):
        return hash(("QRationalFunction", self._num, self._den))

    # -- evaluation ---------------------------------------------------------

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        """Value at a rational (exact result) or complex (float result) point."""
        if isinstance(x, Rational):
            x = Fraction(x)
            p, s = x.numerator, x.denominator
            dn, dd = len(self._num) - 1, len(self._den) - 1
            hn = _homogeneous(self._num, p, s)
            hd = _homogeneous(self._den, p, s)
            if hd == 0:
                raise DenominatorVanishes(f"denominator of {self} vanishes at q = {x}")
            if dd >= dn:
                return Fraction(hn * s ** (dd - dn), hd)
            return Fraction(hn, hd * s ** (dn - dd))
        x = complex(x)
        den = zp.evaluate(self._den, x)
        if den == 0:
            raise DenominatorVanishes(f"denominator of {self} vanishes at q = {x}")
        return zp.evaluate(self._num, x) / den

    def limit_at_one(self) -> Fraction:
        """Exact limit as q -> 1 (the canonical form has no removable factors)."""
        den = sum(self._den)
        if den == 0:
            raise PoleAtOne(f"{self} has a pole at q = 1")
        return Fraction(sum(self._num), den)

    def substitute_reciprocal(self) -> "QRationalFunction":
        """The rational function ``q -> f(1/q)``."""
        if not self._num:
            return self
        num = zp.reverse(self._num)
        den = zp.reverse(self._den)
        k = (len(self._den) - 1) - (len(self._num) - 1)
        if k >= 0:
            num = zp.shift(num, k)
        else:
            den = zp.shift(den, -k)
        return QRationalFunction._from_zpolys(num, den)

    def __str__(self):
        num = _poly_str(self._num)
        if self._den == zp.ONE:
            return num
        if len([c for c in self._num if c]) > 1:
            num = f"({num})"
        den = _poly_str(self._den)
        nterms = len([c for c in self._den if c])
        bare = nterms == 1 and (len(self._den) == 1 or self._den[-1] == 1)
        return f"{num}/{den}" if bare else f"{num}/({den})"

    def __repr__(self):
        return f"QRationalFunction({self})"


def _homogeneous(a: zp.ZPoly, p: int, s: int) -> int:
    """``s**deg(a) * a(p/s)`` in integer arithmetic."""
    if not a:
        return 0
    acc = a[-1]
    spow = 1
    for c in reversed(a[:-1]):
        spow *= s
        acc = acc * p + c * spow
    return acc


def _normalize_content(num: zp.ZPoly, den: zp.ZPoly) -> Tuple[zp.ZPoly, zp.ZPoly]:
    if not num:
        return zp.ZERO, zp.ONE
    g = igcd(zp.content(num), zp.content(den))
    if den[-1] < 0:
        g = -g
    if g != 1:
        num = tuple(c // g for c in num)
        den = tuple(c // g for c in den)
    return num, den


def _reduce(num: zp.ZPoly, den: zp.ZPoly) -> Tuple[zp.ZPoly, zp.ZPoly]:
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return zp.ZERO, zp.ONE
    g = zp.gcd(num, den)
    if g != zp.ONE:
        num = zp.div_exact(num, g)
        den = zp.div_exact(den, g)
    return _normalize_content(num, den)


def _as_pair(x):
    if isinstance(x, QRationalFunction):
        return x._num, x._den
    if isinstance(x, QPolynomial):
        s, p = x.to_integer()
        return zp.scale(p, s.numerator), (s.denominator,)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        x = Fraction(x)
        return ((x.numerator,) if x else zp.ZERO), (x.denominator,)
    return None


def _coerce_rf(x):
    if isinstance(x, QRationalFunction):
        return x
    pair = _as_pair(x)
    if pair is None:
        return None
    return QRationalFunction._finish(*pair)
