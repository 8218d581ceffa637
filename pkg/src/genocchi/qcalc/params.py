"""Scalar backends and the q parameter.

A *scalar* is one of three native types, chosen by the backend of the q in
play:

=========  ==========================  ===========================
backend    scalar type                 q value
=========  ==========================  ===========================
exact      ``fractions.Fraction``      rational, ``0 < |q| < 1``
symbolic   ``QRationalFunction``       the indeterminate q
float      ``complex``                 complex, ``0 < |q| < 1``
=========  ==========================  ===========================

Functions that take a scalar together with a :class:`QParam` check that the
scalar belongs to the same backend and raise :class:`BackendMismatch`
otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import BackendMismatch, InvalidQ
from .polynomials import QRationalFunction

Scalar = Union[Fraction, QRationalFunction, complex]


class Backend(str, enum.Enum):
    EXACT = "exact"
    SYMBOLIC = "symbolic"
    FLOAT = "float"


@dataclass(frozen=True)
class QParam:
    """The deformation parameter q together with its backend.

    Use the constructors :meth:`exact`, :meth:`symbolic` and :meth:`complex`;
    they reject q = 0 and |q| >= 1.  ``formal`` marks a parameter built by
    :meth:`reciprocal`, which steps outside the disc on purpose (closed forms
    are rational in q, so evaluating them at 1/q is still meaningful).
    """

    backend: Backend
    value: Scalar
    formal: bool = False

    @classmethod
    def exact(cls, q) -> "QParam":
        q = Fraction(q)
        if q == 0 or abs(q) >= 1:
            raise InvalidQ(f"need 0 < |q| < 1, got q = {q}")
        return cls(Backend.EXACT, q)

    @classmethod
    def symbolic(cls) -> "QParam":
        return cls(Backend.SYMBOLIC, QRationalFunction.q())

    @classmethod
    def complex(cls, q) -> "QParam":
        q = complex(q)
        if q == 0 or abs(q) >= 1:
            raise InvalidQ(f"need 0 < |q| < 1, got q = {q}")
        return cls(Backend.FLOAT, q)

    @classmethod
    def parse(cls, text: str | None, backend: str | Backend = Backend.EXACT) -> "QParam":
        """Build from CLI-style input: ``"p/q"`` for exact, ``"a+bi"`` for float."""
        backend = Backend(backend)
        if backend is Backend.SYMBOLIC:
            return cls.symbolic()
        if text is None:
            raise InvalidQ(f"backend {backend.value!r} needs a value for q")
        if backend is Backend.EXACT:
            try:
                value = Fraction(text)
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidQ(f"cannot read rational q from {text!r}") from exc
            return cls.exact(value)
        try:
            value = complex(text.replace(" ", "").replace("i", "j"))
        except ValueError as exc:
            raise InvalidQ(f"cannot read complex q from {text!r}") from exc
        return cls.complex(value)

    @property
    def is_exact(self) -> bool:
        return self.backend is not Backend.FLOAT

    def reciprocal(self) -> "QParam":
        return QParam(self.backend, 1 / self.value, formal=True)

    def power_base(self, k: int) -> "QParam":
        """The parameter q**k, used as the base of q**k-analogues."""
        if k < 1:
            raise ValueError("base exponent must be positive")
        return QParam(self.backend, self.value ** k, formal=self.formal)

    # -- scalar helpers -----------------------------------------------------

    @property
    def one(self) -> Scalar:
        return self.const(1)

    @property
    def zero(self) -> Scalar:
        return self.const(0)

    def const(self, c) -> Scalar:
        """Embed an integer, rational or (float backend only) complex constant."""
        if self.backend is Backend.EXACT:
            return Fraction(c)
        if self.backend is Backend.SYMBOLIC:
            return QRationalFunction(Fraction(c))
        return complex(c)

    def pow(self, k) -> Scalar:
        """q**k; negative integers give exact reciprocals in exact backends."""
        if self.backend is Backend.SYMBOLIC:
            if not isinstance(k, int):
                raise ValueError(f"symbolic q needs an integer exponent, got {k!r}")
            e = self.value.monomial_exponent()
            if e is not None:
                return QRationalFunction.monomial(e * k)
            return self.value ** k
        if self.backend is Backend.EXACT:
            if not isinstance(k, int):
                raise ValueError(f"exact q needs an integer exponent, got {k!r}")
            return self.value ** k
        return self.value ** k

    def check(self, x) -> Scalar:
        """Return ``x`` as a scalar of this backend or raise BackendMismatch."""
        if isinstance(x, bool):
            raise BackendMismatch("booleans are not scalars")
        if self.backend is Backend.EXACT:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
        elif self.backend is Backend.SYMBOLIC:
            if isinstance(x, QRationalFunction):
                return x
            if isinstance(x, (int, Fraction)):
                return QRationalFunction(x)
        elif isinstance(x, (int, float, complex)) and not isinstance(x, Fraction):
            return complex(x)
        raise BackendMismatch(f"{type(x).__name__} value does not belong to the {self.backend.value} backend")

    def __str__(self):
        if self.backend is Backend.SYMBOLIC:
            return "q" if not self.formal else str(self.value)
        return str(self.value)
