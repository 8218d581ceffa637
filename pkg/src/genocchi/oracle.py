"""Abel summation of divergent series with Richardson extrapolation.

``A(s) = sum_m a_m s^m`` is evaluated at ``s = 1 - 2**-j`` for
``j = j0 .. j0+K`` and extrapolated to ``s -> 1`` in powers of ``1 - s``.
Series whose terms have already died out at the truncation order are summed
directly instead (``extrapolation_levels`` is then 0).
Multi-index series use the joint weight ``s**(m_1 + ... + m_r)``, so the
lattice is summed shell by shell (shell ``M`` = all indices with total
``M``) and the shell sums are shared between the different ``s``.

Term callables are vectorised: they receive numpy integer arrays (one per
index, broadcastable against each other) and return an array of values.
"""

from __future__ import annotations

import math
from math import comb
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DimensionTooLarge, NonConvergentInnerSum

MAX_TERMS = 10 ** 6
MAX_DIMENSION = 3
_ROW_BLOCK = 256


@dataclass(frozen=True)
class SummationEstimate:
    value: complex
    extrapolation_levels: int
    residual: float

    def __post_init__(self):
        if not self.residual >= 0:
            raise ValueError("residual must be non-negative")


def _values(term, args, shape, components):
    out = np.asarray(term(*args))
    if out.dtype.kind not in "fc":
        out = out.astype(float)
    full = shape if components is None else shape + (components,)
    return np.broadcast_to(out, full)


def _shells_2d(term, M: int, components) -> np.ndarray:
    """Shell sums of a two-index term, one block of m_1 rows at a time.

    Row i of a block (m_1 = start + i) is written into a scratch buffer
    shifted right by i, so that column c collects m_1 + m_2 = start + c and
    a plain column sum yields the shell sums.
    """
    count = 1 if components is None else components
    shells = np.zeros((count, M + 1), dtype=complex)
    m2 = np.arange(M + 1)[None, :]
    for start in range(0, M + 1, _ROW_BLOCK):
        stop = min(start + _ROW_BLOCK, M + 1)
        B, W = stop - start, M + 1 - start
        m1 = np.arange(start, stop)[:, None]
        vals = _values(term, (m1, m2[:, :W]), (B, W), components)
        # component axis first, so every component is one contiguous plane
        vals = vals[None] if components is None else np.moveaxis(vals, -1, 0)
        scratch = np.zeros((count, B, W + B), dtype=vals.dtype)
        st = scratch.strides
        skew = np.lib.stride_tricks.as_strided(
            scratch, shape=vals.shape, strides=(st[0], st[1] + st[2], st[2]))
        skew[...] = vals
        shells[:, start:] += scratch.sum(axis=1)[:, :W]
    return shells.T if components is not None else shells[0]


def _shell_sums(r: int, term: Callable, M: int, components=None) -> np.ndarray:
    """S(T) = sum of term over the indices with m_1 + ... + m_r = T, T <= M."""
    if r == 1:
        m = np.arange(M + 1)
        return _values(term, (m,), m.shape, components).astype(complex)
    if r == 2:
        return _shells_2d(term, M, components)
    extra = () if components is None else (components,)
    shells = np.zeros((M + 1,) + extra, dtype=complex)
    for m1 in range(M + 1):
        inner = _shells_2d(lambda a, b, m1=m1: term(m1, a, b), M - m1, components)
        shells[m1:] += inner
    return shells


def _richardson(values):
    """Eliminate powers of h = 1 - s for h halving at each level."""
    table = [list(values)]
    for k in range(1, len(values)):
        prev = table[-1]
        factor = 2 ** k - 1
        table.append([prev[i] + (prev[i] - prev[i - 1]) / factor for i in range(1, len(prev))])
    diagonal = [row[-1] for row in table]
    return diagonal


def _truncation_order(r: int, h_min: float, tol: float) -> int:
    # s^M (M+1)^(r-1) < tol at the smallest 1 - s, plus a margin
    L = math.log(1 / tol)
    return int(math.ceil((L + (r - 1) * math.log(L / h_min)) / h_min)) + 16


def _abel(shells_upto: Callable[[int], np.ndarray], r: int, K: int, j0: int, tol: float,
          max_terms: int, components=None):
    """Weight shared shell sums by s**M, then extrapolate s -> 1."""
    if K < 1:
        raise ValueError("need at least one extrapolation level")
    hs = [2.0 ** -j for j in range(j0, j0 + K + 1)]
    M = _truncation_order(r, hs[-1], tol)
    while True:
        if M > max_terms:
            raise NonConvergentInnerSum(
                f"Abel sum needs more than {max_terms} shells at s = {1 - hs[-1]}")
        shells = shells_upto(M)
        if components is None:
            shells = shells[:, None]
        m = np.arange(M + 1)[:, None]
        sums = []
        converged = True
        for h in hs:
            weighted = shells * (1 - h) ** m
            total = weighted.sum(axis=0)
            scale = np.maximum(np.abs(total), np.abs(weighted).max(axis=0))
            tail = np.abs(weighted[-max(M // 20, 8):]).max(axis=0)
            if np.any(tail > tol * np.maximum(scale, 1e-300)):
                converged = False
                break
            sums.append(total)
        if converged:
            break
        M *= 2
    # A series that already converges at s = 1 has its ordinary sum as Abel
    # sum; summing it directly avoids the extrapolation error.
    direct = shells.sum(axis=0)
    size = np.abs(shells)
    tail = size[-max(M // 20, 8):].max(axis=0)
    scale = np.maximum(np.abs(direct), size.max(axis=0))
    estimates = []
    for c in range(shells.shape[1]):
        if tail[c] <= tol * max(scale[c], 1e-300):
            estimates.append(SummationEstimate(complex(direct[c]), 0, float(tail[c] * M)))
            continue
        diag = _richardson([complex(v[c]) for v in sums])
        estimates.append(SummationEstimate(complex(diag[-1]), K, float(abs(diag[-1] - diag[-2]))))
    return estimates[0] if components is None else estimates


def abel_sum_1d(terms: Callable, K: int = 5, *, j0: int = 3, tol: float = 1e-15,
                max_terms: int = MAX_TERMS, components: int | None = None):
    """Abel sum of ``sum_m terms(m)`` (``terms`` takes a numpy array of m).

    With ``components=k`` the callable returns a trailing axis of length k
    and a list of k estimates comes back.
    """
    return _abel(lambda M: _shell_sums(1, terms, M, components), 1, K, j0, tol, max_terms,
                 components)


def abel_sum_multi(r: int, term: Callable, K: int = 5, M_cap: int = MAX_TERMS, *,
                   j0: int = 3, tol: float = 1e-15, components: int | None = None):
    """Abel sum over the r-fold lattice with weight s**(m_1+...+m_r)."""
    if r < 1:
        raise ValueError("dimension must be >= 1")
    if r > MAX_DIMENSION:
        raise DimensionTooLarge(f"r = {r} exceeds the oracle limit of {MAX_DIMENSION}")
    return _abel(lambda M: _shell_sums(r, term, M, components), r, K, j0, tol, M_cap,
                 components)


def _convolve(arrays, M: int) -> np.ndarray:
    """Coefficients 0..M of the product of the polynomials sum_m a[m] s^m."""
    size = len(arrays) * (M + 1)
    nfft = 1 << (size - 1).bit_length()
    acc = np.ones(nfft // 2 + 1, dtype=complex) if all(
        np.isrealobj(a) for a in arrays) else np.ones(nfft, dtype=complex)
    if acc.size == nfft // 2 + 1:
        for a in arrays:
            acc = acc * np.fft.rfft(a, nfft)
        return np.fft.irfft(acc, nfft)[: M + 1]
    for a in arrays:
        acc = acc * np.fft.fft(a, nfft)
    return np.fft.ifft(acc)[: M + 1]


def abel_sum_separable(r: int, products, K: int = 5, *, j0: int = 3, tol: float = 1e-15,
                       max_terms: int = MAX_TERMS):
    """Abel sum of a lattice term that is a finite sum of products.

    ``products`` is a list of ``(coefficients, factors)``: ``factors`` holds
    r one-index callables and ``coefficients`` a vector (one entry per
    output component).  The lattice term is
    ``sum_k coefficients_k[c] * prod_i factors_k[i](m_i)``.  The weight
    s**(m_1+...+m_r) makes the shell sums of a product a convolution, so the
    r-fold sum costs a few FFTs instead of M**r term evaluations; the values
    are the same lattice sums as :func:`abel_sum_multi` would form.
    """
    if r < 1:
        raise ValueError("dimension must be >= 1")
    products = [(np.atleast_1d(np.asarray(c)), f) for c, f in products]
    components = len(products[0][0])
    if any(len(f) != r for _, f in products):
        raise ValueError(f"every product needs {r} factors")

    def shells_upto(M):
        m = np.arange(M + 1)
        out = np.zeros((M + 1, components), dtype=complex)
        for coef, factors in products:
            conv = _convolve([np.asarray(f(m)) for f in factors], M)
            out += conv[:, None] * coef[None, :]
        return out

    return _abel(shells_upto, r, K, j0, tol, max_terms, components)


class _PowerTable:
    """base**(step*m) for integer m, extended on demand."""

    def __init__(self, base, step):
        self.base, self.step = base, step
        self.table = np.empty(0, dtype=type(base))

    def __getitem__(self, m):
        top = int(np.max(m)) + 1 if np.size(m) else 0
        if top > len(self.table):
            size = max(top, 2 * len(self.table))
            self.table = self.base ** (self.step * np.arange(size))
        return self.table[m]


def genocchi_series(chi, q: complex, r: int, n_max: int, x=0, weights=None,
                    K: int = 5, j0: int = 3, method: str = "separable") -> list:
    """Abel estimates of the normalized order-r series for n = 0..n_max.

    The series is ``2^r sum_{m_1..m_r >= 0} prod chi(m_i) (-1)^{m_i}
    [x + sum w_i m_i]_q^n`` (all ``w_i = 1`` unless ``weights`` is given),
    summed with the joint weight s**(m_1+...+m_r).

    ``method="lattice"`` evaluates the term on every lattice point.
    ``method="separable"`` expands ``(1 - q^(x + w.m))^n`` binomially, which
    turns the term into n+1 products of one-index factors; the shell sums are
    then convolutions.  Both sum the same lattice and agree to rounding.
    """
    weights = tuple(weights) if weights is not None else (1,) * r
    if len(weights) != r:
        raise ValueError(f"expected {r} weights, got {len(weights)}")
    q = complex(q)
    d = chi.modulus
    vals = [complex(chi(a)) if not chi.is_real else chi(a) for a in range(d)]
    real = chi.is_real and q.imag == 0
    dtype = float if real else complex
    qv = q.real if real else q
    # (-1)^m chi(m) has period 2d because d is odd.
    signed = np.array([vals[a % d] * (-1) ** a for a in range(2 * d)], dtype=dtype)
    qx = qv ** x
    count = n_max + 1

    if method == "separable":
        products = []
        for j in range(count):
            coef = np.array([2 ** r * comb(n, j) * (-qx) ** j / (1 - qv) ** n if j <= n else 0
                             for n in range(count)])
            factors = [lambda m, w=w, j=j: signed[m % (2 * d)] * qv ** (j * w * m)
                       for w in weights]
            products.append((coef, factors))
        return abel_sum_separable(r, products, K, j0=j0)
    if method != "lattice":
        raise ValueError(f"unknown summation method {method!r}")

    tables = [_PowerTable(qv, w) for w in weights]

    def term(*ms):
        prod = qx
        coef = 2 ** r
        for m, tab in zip(ms, tables):
            prod = prod * tab[m]
            coef = coef * signed[np.asarray(m) % (2 * d)]
        base = (1 - prod) / (1 - qv)
        base, coef = np.broadcast_arrays(base, coef)
        out = np.empty((count,) + base.shape, dtype=dtype)
        out[0] = coef
        for k in range(1, count):
            np.multiply(out[k - 1], base, out=out[k])
        return np.moveaxis(out, 0, -1)

    if r == 1:
        return abel_sum_1d(term, K, j0=j0, components=count)
    return abel_sum_multi(r, term, K, j0=j0, components=count)
