"""Exact q-arithmetic: rational functions in q, backends, q-analogues."""

from .functions import (
    gauss_binom,
    inv_pochhammer_series,
    q_binom_expand,
    q_bracket,
    q_factorial,
    q_pochhammer_neg,
    ratfunc_limit_at_one,
)
from .params import Backend, QParam, Scalar
from .polynomials import QPolynomial, QRationalFunction

__all__ = [
    "Backend",
    "QParam",
    "QPolynomial",
    "QRationalFunction",
    "Scalar",
    "gauss_binom",
    "inv_pochhammer_series",
    "q_binom_expand",
    "q_bracket",
    "q_factorial",
    "q_pochhammer_neg",
    "ratfunc_limit_at_one",
]
