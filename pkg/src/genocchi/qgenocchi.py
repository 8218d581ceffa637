"""Higher-order generalized q-Genocchi values and their identities.

All values are *normalized*: for order ``r`` and index ``n`` the object
computed is ``g_n = G_{n+r} / (C(n+r, r) * r!)``.  Three families share one
building block.  With

    phi(e) = sum_{a=0}^{d-1} chi(a) (-1)^a q^(e*a) / (1 + q^(d*e))

the closed forms read

    g_n = 2^r / (1-q)^n * sum_{l=0}^{n} C(n, l) (-q^x)^l * P_l

where ``P_l`` is ``phi(l)^r`` (plain order r), ``prod_j phi(h-j+l)`` for
the (h, r) family and ``prod_i phi(l*w_i)`` for Barnes weights ``w``.  The
defining series diverge termwise for |q| < 1; these closed forms are their
Abel sums, and :mod:`genocchi.oracle` recomputes them numerically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Optional, Tuple

import numpy as np

from . import classical
from .characters import DirichletCharacter, value as chi_value
from .errors import (
    DenominatorVanishes,
    NonConvergentInnerSum,
    NonIntegerWeightInExactBackend,
    NonRealCharacterInExactBackend,
    WeightCount,
)
from .oracle import SummationEstimate, abel_sum_1d
from .qcalc import Backend, QParam, QRationalFunction, Scalar

DEFAULT_TOL = 1e-9


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


@dataclass(frozen=True)
class QGenocchiParams:
    """Parameters of one normalized value.

    ``h`` selects the (h, r) family and ``weights`` the Barnes family; with
    neither, the plain order-r family is meant.  Exact and symbolic backends
    need integer ``x`` (negative values are allowed: q^x stays rational).
    """

    n: int
    r: int
    chi: DirichletCharacter
    q: QParam
    x: object = 0
    h: Optional[int] = None
    weights: Optional[Tuple] = None

    def __post_init__(self):
        if not _is_int(self.n) or self.n < 0:
            raise ValueError(f"n must be a nonnegative integer, got {self.n!r}")
        if not _is_int(self.r) or self.r < 1:
            raise ValueError(f"order r must be a positive integer, got {self.r!r}")
        if self.h is not None and not _is_int(self.h):
            raise ValueError(f"h must be an integer, got {self.h!r}")
        if self.h is not None and self.weights is not None:
            raise ValueError("give either h or weights, not both")
        exact = self.q.is_exact
        if exact and not self.chi.is_real:
            raise NonRealCharacterInExactBackend(
                f"character mod {self.chi.modulus} is not real; use the float backend")
        if exact:
            if isinstance(self.x, Fraction) and self.x.denominator == 1:
                object.__setattr__(self, "x", int(self.x))
            if not _is_int(self.x):
                raise ValueError(f"x must be an integer in the {self.q.backend.value} backend")
        if self.weights is not None:
            w = tuple(self.weights)
            if len(w) != self.r:
                raise WeightCount(f"expected {self.r} weights, got {len(w)}")
            if any(not v > 0 for v in w):
                raise ValueError(f"weights must be positive, got {', '.join(map(str, w))}")
            if exact:
                if any(not (_is_int(v) or (isinstance(v, Fraction) and v.denominator == 1))
                       for v in w):
                    raise NonIntegerWeightInExactBackend(
                        f"exact backends need integer weights, got {', '.join(map(str, w))}")
                w = tuple(int(v) for v in w)
            object.__setattr__(self, "weights", w)

    @property
    def d(self) -> int:
        return self.chi.modulus

    @property
    def family(self) -> str:
        if self.weights is not None:
            return "barnes"
        return "hr" if self.h is not None else "r"

    def replace(self, **changes) -> "QGenocchiParams":
        fields = dict(n=self.n, r=self.r, chi=self.chi, q=self.q, x=self.x,
                      h=self.h, weights=self.weights)
        fields.update(changes)
        return QGenocchiParams(**fields)

    def to_json(self) -> dict:
        out = {"n": self.n, "r": self.r, "d": self.d, "chi": self.chi.label(),
               "x": _json_number(self.x), "q": str(self.q)}
        if self.h is not None:
            out["h"] = self.h
        if self.weights is not None:
            out["w"] = [_json_number(v) for v in self.weights]
        return out


def _json_number(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else str(v)
    return v


@dataclass(frozen=True)
class NormalizedGenocchiValue:
    g: Scalar
    params: QGenocchiParams

    @property
    def factor(self) -> int:
        p = self.params
        return comb(p.n + p.r, p.r) * factorial(p.r)

    @property
    def unnormalized(self) -> Scalar:
        """G_{n+r} = g * C(n+r, r) * r!."""
        return self.g * self.factor

    @classmethod
    def from_unnormalized(cls, G: Scalar, params: QGenocchiParams) -> "NormalizedGenocchiValue":
        return cls(G / (comb(params.n + params.r, params.r) * factorial(params.r)), params)


def unnormalized_value(index: int, params: QGenocchiParams) -> Scalar:
    """G_index of the family described by ``params`` (its ``n`` is ignored).

    Indices below the order are zero; this is not computed, it is the shape
    of the normalized representation, which starts at index r.
    """
    if index < 0:
        raise ValueError("index must be >= 0")
    if index < params.r:
        return params.q.zero
    return evaluate(params.replace(n=index - params.r)).unnormalized


# -- closed forms -------------------------------------------------------------


def _power(q: QParam, k) -> Scalar:
    if q.backend is Backend.FLOAT:
        return q.value ** k
    return q.pow(int(k))


def _is_zero(v) -> bool:
    if isinstance(v, QRationalFunction):
        return v.is_zero()
    return v == 0


@lru_cache(maxsize=None)
def _phi(chi: DirichletCharacter, q: QParam, e) -> Scalar:
    d = chi.modulus
    den = q.one + _power(q, d * e)
    if _is_zero(den):
        raise DenominatorVanishes(f"1 + q^{d * e} vanishes at q = {q}")
    num = q.zero
    for a in range(d):
        c = chi_value(chi, a, q.backend)
        if not _is_zero(c):
            num = num + c * (-1) ** a * _power(q, e * a)
    return num / den


def _product_factor(p: QGenocchiParams, l: int) -> Scalar:
    if p.family == "r":
        return _phi(p.chi, p.q, l) ** p.r
    acc = p.q.one
    if p.family == "hr":
        for j in range(1, p.r + 1):
            acc = acc * _phi(p.chi, p.q, p.h - j + l)
    else:
        for w in p.weights:
            acc = acc * _phi(p.chi, p.q, l * w)
    return acc


@lru_cache(maxsize=None)
def _closed_form(p: QGenocchiParams) -> Scalar:
    q = p.q
    qx = _power(q, p.x)
    total = q.zero
    qxl = q.one
    for l in range(p.n + 1):
        total = total + _product_factor(p, l) * (qxl * (comb(p.n, l) * (-1) ** l))
        qxl = qxl * qx
    scale = q.one - q.value
    return total * 2 ** p.r / scale ** p.n


def evaluate(params: QGenocchiParams) -> NormalizedGenocchiValue:
    """Dispatch on the family described by ``params``."""
    return NormalizedGenocchiValue(_closed_form(params), params)


def q_genocchi_r(params: QGenocchiParams) -> NormalizedGenocchiValue:
    """Plain order-r family (every a-sum weight equal to 1)."""
    if params.family != "r":
        raise ValueError("q_genocchi_r takes parameters without h and weights")
    return evaluate(params)


def q_genocchi_hr(params: QGenocchiParams) -> NormalizedGenocchiValue:
    """The (h, r) family.

    Its denominator is ``prod_{j=1}^{r} (1 + q^{d(h-j+l)})``, the product
    ``(-q^{d(h-r+l)}; q^d)_r`` in base ``q^d``; this is what summing the
    defining series over residue classes mod d produces.
    """
    if params.family != "hr":
        raise ValueError("q_genocchi_hr needs parameters with h")
    return evaluate(params)


def barnes_q_genocchi(params: QGenocchiParams) -> NormalizedGenocchiValue:
    if params.family != "barnes":
        raise ValueError("barnes_q_genocchi needs parameters with weights")
    return evaluate(params)


def order_zero(n: int, x, q: QParam) -> Scalar:
    """The r = 0 member of the (h, r) family: an empty product, so [x]_q^n."""
    return ((q.one - _power(q, x)) / (q.one - q.value)) ** n


# -- series route -------------------------------------------------------------


def _complex_chi(chi: DirichletCharacter) -> np.ndarray:
    return np.array([complex(chi_value(chi, a, Backend.FLOAT)) for a in range(chi.modulus)])


def _residue_weights(p: QGenocchiParams, qc: complex) -> np.ndarray:
    """W[s] = sum over a_1..a_r in [0, d) with sum s of prod chi(a_j) (-1)^a_j q^((h-j) a_j)."""
    chi = _complex_chi(p.chi)
    signs = (-1.0) ** np.arange(p.d)
    W = np.array([1 + 0j])
    for j in range(1, p.r + 1):
        factor = chi * signs * qc ** ((p.h - j) * np.arange(p.d))
        W = np.convolve(W, factor)
    return W


def q_genocchi_hr_series(params: QGenocchiParams, M: int = 200, K: int = 5) -> SummationEstimate:
    """The (h, r) value from its single-index series over m.

    The m-th term is ``2^r C(m+r-1, m)_{q^d} (-1)^m q^{d(h-r)m}`` times the
    residue sum ``sum_a prod chi(a_j) q^{(h-j)a_j} (-1)^{sum a} [x+sum a+dm]_q^n``.
    For h > r the series converges geometrically and is summed through
    ``m = M``; the residual is the geometric tail bound.  For h = r the terms
    stay bounded and the series is Abel-summed.  For h < r the terms grow
    like q^{-d(r-h)m}, so no Abel sum at s -> 1 exists and
    NonConvergentInnerSum is raised.
    """
    p = params
    if p.family != "hr":
        raise ValueError("the series route needs parameters with h")
    if M < 0:
        raise ValueError("truncation order must be >= 0")
    qc = complex(p.q.value)
    qd = qc ** p.d
    W = _residue_weights(p, qc)
    svals = np.arange(len(W))
    x = complex(p.x) if p.q.backend is Backend.FLOAT else p.x

    def terms(m):
        m = np.asarray(m)
        binom = np.ones(m.shape, dtype=complex)
        for i in range(1, p.r):
            binom = binom * (1 - qd ** (m + i)) / (1 - qd ** i)
        bracket = (1 - qc ** (x + svals[None, :] + p.d * m[:, None])) / (1 - qc)
        residue = (W[None, :] * bracket ** p.n).sum(axis=1)
        return 2 ** p.r * binom * (-1.0) ** m * qd ** ((p.h - p.r) * m) * residue

    if p.h > p.r:
        t = terms(np.arange(M + 1))
        rho = abs(qd) ** (p.h - p.r)
        # C(m+r-1, m)_{q^d} grows by at most (m+r)/(m+1) per step.
        growth = rho * (M + p.r) / (M + 1)
        tail = abs(t[-1]) * growth / (1 - growth) if growth < 1 else float("inf")
        return SummationEstimate(complex(t.sum()), 0, float(tail))
    if p.h == p.r:
        return abel_sum_1d(terms, K)
    raise NonConvergentInnerSum(
        f"h = {p.h} < r = {p.r}: series terms grow geometrically, no Abel sum exists")


# -- verdicts -----------------------------------------------------------------


def format_scalar(v) -> str:
    if isinstance(v, complex):
        return repr(v)
    return str(v)


@dataclass(frozen=True)
class Verdict:
    identity: str
    params: dict
    backend: str
    status: str
    lhs: str
    rhs: str
    abs_diff: Optional[str]
    notes: Tuple[str, ...] = field(default=())
    asserted: bool = True

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    @property
    def counts_as_failure(self) -> bool:
        return self.asserted and not self.passed

    def to_json(self) -> dict:
        out = {"identity": self.identity, "params": self.params, "backend": self.backend,
               "status": self.status, "lhs": self.lhs, "rhs": self.rhs,
               "abs_diff": self.abs_diff}
        if self.notes:
            out["notes"] = list(self.notes)
        if not self.asserted:
            out["asserted"] = False
        return out


def compare(identity: str, params: dict, q: QParam, lhs, rhs, tol: float = DEFAULT_TOL,
            notes: Tuple[str, ...] = ()) -> Verdict:
    """Exact equality in exact backends, |lhs - rhs| <= tol * max(1, |rhs|) in float."""
    backend = q.backend.value
    if q.backend is Backend.FLOAT:
        diff = abs(complex(lhs) - complex(rhs))
        ok = diff <= tol * max(1.0, abs(complex(rhs)))
        return Verdict(identity, params, backend, "tol-pass" if ok else "fail",
                       format_scalar(lhs), format_scalar(rhs), repr(diff), notes)
    ok = lhs == rhs
    diff = None
    if not ok and isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        diff = str(abs(lhs - rhs))
    return Verdict(identity, params, backend, "exact-pass" if ok else "fail",
                   format_scalar(lhs), format_scalar(rhs), diff, notes)


def _hr(n, r, h, chi, x, q) -> Scalar:
    return _closed_form(QGenocchiParams(n=n, r=r, chi=chi, q=q, x=x, h=h))


def _hr_or_zero_order(n, r, h, chi, x, q) -> Scalar:
    return order_zero(n, x, q) if r == 0 else _hr(n, r, h, chi, x, q)


def _check_params(n, r, h, chi, x, q) -> dict:
    out = {"n": n, "r": r}
    if h is not None:
        out["h"] = h
    out.update({"d": chi.modulus, "chi": chi.label(), "x": _json_number(x), "q": str(q)})
    return out


def check_distribution(n: int, r: int, h: int, chi: DirichletCharacter, x, q: QParam,
                       tol: float = DEFAULT_TOL) -> Verdict:
    """q^{d(h-1)} g^{(h,r)}_n(x+d) + g^{(h,r)}_n(x) = 2 sum_l chi(l)(-1)^l g^{(h-1,r-1)}_n(x).

    The right side is taken at the same argument x for every residue l.
    At r = 1 the order-0 value is [x]_q^n (see :func:`order_zero`).
    """
    d = chi.modulus
    lhs = _power(q, d * (h - 1)) * _hr(n, r, h, chi, x + d, q) + _hr(n, r, h, chi, x, q)
    inner = _hr_or_zero_order(n, r - 1, h - 1, chi, x, q)
    rhs = q.zero
    for l in range(d):
        c = chi_value(chi, l, q.backend)
        if not _is_zero(c):
            rhs = rhs + c * (-1) ** l * inner
    rhs = rhs * 2
    notes = ("order-0 convention [x]_q^n on the right side",) if r == 1 else ()
    return compare("distribution", _check_params(n, r, h, chi, x, q), q, lhs, rhs, tol, notes)


def check_residue_distribution(n: int, r: int, h: int, chi: DirichletCharacter, x,
                               q: QParam, tol: float = DEFAULT_TOL) -> Verdict:
    """q^{d(h-1)} g(x+d) + g(x) = 2 sum_l chi(l)(-1)^l q^{(h-1)l} g^{(h-1,r-1)}_n(x+l).

    Splitting the first summation index by its residue l mod d shifts the
    argument by l and carries the weight q^{(h-1)l}; for d = 1 this is the
    same statement as :func:`check_distribution`.
    """
    d = chi.modulus
    lhs = _power(q, d * (h - 1)) * _hr(n, r, h, chi, x + d, q) + _hr(n, r, h, chi, x, q)
    rhs = q.zero
    for l in range(d):
        c = chi_value(chi, l, q.backend)
        if not _is_zero(c):
            rhs = rhs + c * (-1) ** l * _power(q, (h - 1) * l) * _hr_or_zero_order(
                n, r - 1, h - 1, chi, x + l, q)
    rhs = rhs * 2
    notes = ("order-0 convention [x]_q^n on the right side",) if r == 1 else ()
    return compare("residue-distribution", _check_params(n, r, h, chi, x, q), q, lhs, rhs,
                   tol, notes)


def check_shift(n: int, r: int, h: int, chi: DirichletCharacter, x, q: QParam,
                tol: float = DEFAULT_TOL) -> Verdict:
    """q^x g^{(h+1,r)}_n(x) = (q-1) g'_{n+1}(x) + g^{(h,r)}_n(x).

    ``g'_{n+1} = G^{(h,r)}_{n+r+1}(x) / (C(n+r+1, r) r!)``, which is the
    normalized value at index n+1.
    """
    lhs = _power(q, x) * _hr(n, r, h + 1, chi, x, q)
    G_next = _hr(n + 1, r, h, chi, x, q) * (comb(n + r + 1, r) * factorial(r))
    g_prime = G_next / (comb(n + r + 1, r) * factorial(r))
    rhs = (q.value - q.one) * g_prime + _hr(n, r, h, chi, x, q)
    return compare("shift", _check_params(n, r, h, chi, x, q), q, lhs, rhs, tol)


def check_symmetry(n: int, r: int, chi: DirichletCharacter, x, q: QParam,
                   tol: float = DEFAULT_TOL) -> Verdict:
    """g^{(r,r)}_{1/q}(r-x) = (-1)^n q^{n+C(r,2)} g^{(r,r)}_q(x).

    The left side is the same closed form evaluated at the reciprocal
    parameter.  At x = r this is the specialization relating the value at
    argument 0 under 1/q to the value at argument r under q.
    """
    if q.is_exact and not 0 <= x <= r:
        raise ValueError("exact symmetry checks need 0 <= x <= r")
    lhs = _hr(n, r, r, chi, r - x, q.reciprocal())
    rhs = (-1) ** n * _power(q, n + comb(r, 2)) * _hr(n, r, r, chi, x, q)
    name = "symmetry-x=r" if x == r else "symmetry"
    return compare(name, _check_params(n, r, r, chi, x, q), q, lhs, rhs, tol)


def check_reflection(n: int, r: int, h: int, chi: DirichletCharacter, x, q: QParam,
                     tol: float = DEFAULT_TOL) -> Verdict:
    """Behaviour of g^{(h,r)} under q -> 1/q, for every h and d.

    For d > 1, chi(0) = 0 and reindexing a -> d - a gives
    phi_{1/q}(e) = -chi(-1) phi_q(e), hence

        g_{1/q}(x) = (-1)^n q^n (-chi(-1))^r g_q(-x).

    For d = 1 the a = 0 term survives and phi_{1/q}(e) = q^e phi_q(e), hence

        g_{1/q}(x) = (-1)^n q^{n + rh - C(r+1, 2)} g_q(r - x),

    which at h = r is the statement checked by :func:`check_symmetry`.
    """
    lhs = _hr(n, r, h, chi, x, q.reciprocal())
    if chi.modulus == 1:
        rhs = (-1) ** n * _power(q, n + r * h - comb(r + 1, 2)) * _hr(n, r, h, chi, r - x, q)
    else:
        sign = -chi_value(chi, -1, q.backend)
        rhs = (-1) ** n * _power(q, n) * sign ** r * _hr(n, r, h, chi, -x, q)
    return compare("reflection", _check_params(n, r, h, chi, x, q), q, lhs, rhs, tol)


def classical_limit(n: int, r: int, chi: DirichletCharacter, x: int = 0) -> Verdict:
    """lim_{q->1} C(n+r,r) r! g_n(x) against the classical generalized value."""
    q = QParam.symbolic()
    g = _closed_form(QGenocchiParams(n=n, r=r, chi=chi, q=q, x=x))
    lhs = (g * (comb(n + r, r) * factorial(r))).limit_at_one()
    rhs = classical.generalized_genocchi(n + r, r, chi, x)
    params = {"n": n, "r": r, "d": chi.modulus, "chi": chi.label(), "x": x, "q": "q->1"}
    return compare("limit", params, q, lhs, rhs)
