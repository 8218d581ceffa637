"""Dense univariate polynomials over the integers.

A polynomial is a tuple of Python ints, lowest power first, with no trailing
zeros; the zero polynomial is ``()``.  Everything here is a plain function so
the rational-function layer can stay thin.

Large products and divisibility tests go through Kronecker substitution
(packing coefficients into one big integer) because CPython's big-int
multiplication is far faster than a Python-level double loop.  GCDs use the
heuristic evaluation method first and fall back to a primitive
pseudo-remainder sequence.
"""

from __future__ import annotations

from math import gcd as igcd
from typing import Optional, Sequence, Tuple

ZPoly = Tuple[int, ...]

ZERO: ZPoly = ()
ONE: ZPoly = (1,)

_KRONECKER_MIN = 24
_HEU_ATTEMPTS = 6


def trim(coeffs: Sequence[int]) -> ZPoly:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def degree(a: ZPoly) -> int:
    return len(a) - 1


def order(a: ZPoly) -> int:
    """Index of the lowest nonzero coefficient (``-1`` for zero)."""
    for i, c in enumerate(a):
        if c:
            return i
    return -1


def monomial(k: int, c: int = 1) -> ZPoly:
    return (0,) * k + (c,) if c else ZERO


def add(a: ZPoly, b: ZPoly) -> ZPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def neg(a: ZPoly) -> ZPoly:
    return tuple(-c for c in a)


def sub(a: ZPoly, b: ZPoly) -> ZPoly:
    return add(a, neg(b))


def scale(a: ZPoly, c: int) -> ZPoly:
    if c == 0:
        return ZERO
    return tuple(c * x for x in a)


def shift(a: ZPoly, k: int) -> ZPoly:
    """Multiply by ``q**k`` (``k >= 0``)."""
    if not a or k == 0:
        return a
    return (0,) * k + a


def content(a: ZPoly) -> int:
    g = 0
    for c in a:
        g = igcd(g, c)
        if g == 1:
            break
    return g


def primitive(a: ZPoly) -> Tuple[int, ZPoly]:
    """Split ``a`` as ``c * p`` with ``p`` primitive and ``lc(p) > 0``."""
    if not a:
        return 0, ZERO
    c = content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return 1, a
    return c, tuple(x // c for x in a)


def max_norm(a: ZPoly) -> int:
    return max((abs(c) for c in a), default=0)


# -- Kronecker substitution -------------------------------------------------


def _pack(a: ZPoly, nbytes: int) -> int:
    """Evaluate ``a`` at ``2**(8*nbytes)``."""
    try:
        pos = b"".join((c if c > 0 else 0).to_bytes(nbytes, "little") for c in a)
        negs = b"".join((-c if c < 0 else 0).to_bytes(nbytes, "little") for c in a)
    except OverflowError:
        bits = 8 * nbytes
        acc = 0
        for c in reversed(a):
            acc = (acc << bits) + c
        return acc
    return int.from_bytes(pos, "little") - int.from_bytes(negs, "little")


def _unpack(value: int, nbytes: int, length: int) -> ZPoly:
    """Balanced base-``2**(8*nbytes)`` digits of ``value`` (inverse of _pack)."""
    half = 1 << (8 * nbytes - 1)
    bias = int.from_bytes(half.to_bytes(nbytes, "little") * length, "little")
    shifted = value + bias
    if shifted < 0 or shifted.bit_length() > 8 * nbytes * length:
        raise OverflowError("value does not fit the requested digit count")
    raw = shifted.to_bytes(nbytes * length, "little")
    return trim([
        int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") - half
        for i in range(length)
    ])


def _digit_bytes(bound: int) -> int:
    """Bytes per digit so that coefficients ``|c| <= bound`` unpack safely."""
    return (bound.bit_length() + 2 + 7) // 8


def mul(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return ZERO
    if len(a) == 1:
        return scale(b, a[0])
    if len(b) == 1:
        return scale(a, b[0])
    if min(len(a), len(b)) < _KRONECKER_MIN:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return trim(out)
    bound = min(len(a), len(b)) * max_norm(a) * max_norm(b)
    nb = _digit_bytes(bound)
    return _unpack(_pack(a, nb) * _pack(b, nb), nb, len(a) + len(b) - 1)


def power(a: ZPoly, k: int) -> ZPoly:
    result = ONE
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


# -- division ---------------------------------------------------------------


def _long_div_exact(a: ZPoly, b: ZPoly) -> Optional[ZPoly]:
    rem = list(a)
    lb = b[-1]
    db = len(b) - 1
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        qc, r = divmod(c, lb)
        if r:
            return None
        quot[i - db] = qc
        for j in range(db + 1):
            rem[i - db + j] -= qc * b[j]
    if any(rem[:db]):
        return None
    return trim(quot)


def div_exact(a: ZPoly, b: ZPoly) -> Optional[ZPoly]:
    """Return ``a / b`` if ``b`` divides ``a`` in Z[q], else ``None``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ZERO
    if len(b) > len(a):
        return None
    if len(b) == 1:
        c = b[0]
        if any(x % c for x in a):
            return None
        return tuple(x // c for x in a)
    lo = order(b)
    if lo:
        if order(a) < lo:
            return None
        a, b = a[lo:], b[lo:]
        if len(b) == 1:
            return div_exact(a, b)
    if len(b) >= _KRONECKER_MIN:
        # Optimistic digit width; the product check makes a wrong guess harmless.
        nb = _digit_bytes(max(max_norm(a) * len(a), max_norm(b)) + 1) + 1
        qa, r = divmod(_pack(a, nb), _pack(b, nb))
        if r:
            # b | a in Z[q] forces b(X) | a(X) at X = 2**(8*nb).
            return None
        try:
            cand = _unpack(qa, nb, len(a) - len(b) + 2)
        except OverflowError:
            cand = None
        if cand is not None and mul(cand, b) == a:
            return cand
    return _long_div_exact(a, b)


def pseudo_rem(a: ZPoly, b: ZPoly) -> ZPoly:
    """Pseudo-remainder prem(a, b) = lc(b)**(deg a - deg b + 1) * a mod b."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    steps = len(a) - len(b) + 1
    if steps <= 0:
        return a
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        rem = [lb * x for x in rem]
        if c:
            for j in range(db + 1):
                rem[i - db + j] -= c * b[j]
        rem.pop()
    return trim(rem)


# -- gcd --------------------------------------------------------------------


def gcd_prs(a: ZPoly, b: ZPoly) -> ZPoly:
    """Primitive gcd via the primitive pseudo-remainder sequence."""
    _, a = primitive(a)
    _, b = primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a = b
        b = primitive(r)[1] if r else ZERO
    return primitive(a)[1]


def _gcd_heuristic(a: ZPoly, b: ZPoly) -> Optional[ZPoly]:
    nb = _digit_bytes(2 * min(max_norm(a), max_norm(b)) + 2)
    for _ in range(_HEU_ATTEMPTS):
        h = igcd(_pack(a, nb), _pack(b, nb))
        length = h.bit_length() // (8 * nb) + 2
        try:
            cand = primitive(_unpack(h, nb, length))[1]
        except OverflowError:
            cand = None
        if cand and div_exact(a, cand) is not None and div_exact(b, cand) is not None:
            return cand
        nb = nb + nb // 2 + 1
    return None


def gcd(a: ZPoly, b: ZPoly) -> ZPoly:
    """Primitive gcd of ``a`` and ``b`` with positive leading coefficient."""
    if not a:
        return primitive(b)[1] if b else ZERO
    if not b:
        return primitive(a)[1]
    oa, ob = order(a), order(b)
    low = min(oa, ob)
    a, b = primitive(a[oa:])[1], primitive(b[ob:])[1]
    if len(a) == 1 or len(b) == 1:
        return monomial(low)
    if a == b:
        return shift(a, low)
    g = _gcd_heuristic(a, b)
    if g is None:
        g = gcd_prs(a, b)
    return shift(g, low)


def evaluate(a: ZPoly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def reverse(a: ZPoly) -> ZPoly:
    """``q**deg(a) * a(1/q)``."""
    return trim(a[::-1])
