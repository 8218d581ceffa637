"""Dirichlet characters modulo an odd integer.

A character is stored as its value table over residues ``0..d-1``.  Each
nonzero value is a root of unity, kept exactly as a *turn* ``t`` in
``[0, 1)`` (the value is ``exp(2*pi*i*t)``), so real characters are exactly
those whose turns are all ``0`` or ``1/2``.
"""

from __future__ import annotations

import cmath
import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import (
    CharacterError,
    NonRealCharacterInExactBackend,
    NotMultiplicative,
    SupportViolation,
    WrongLength,
)
from .qcalc import Backend, QRationalFunction

MAX_ENUMERATE_MODULUS = 1000

Turn = Optional[Fraction]  # None encodes the value 0


@dataclass(frozen=True)
class RootOfUnity:
    """The value exp(2*pi*i*k/m), with ``k`` reduced mod ``m``."""

    k: int
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("root-of-unity order must be >= 1")
        t = Fraction(self.k, self.m) % 1
        object.__setattr__(self, "k", t.numerator)
        object.__setattr__(self, "m", t.denominator)

    @property
    def turn(self) -> Fraction:
        return Fraction(self.k, self.m)

    def __complex__(self):
        return _turn_to_complex(self.turn)


CharacterValue = Union[int, RootOfUnity]


def _turn_to_complex(t: Fraction) -> complex:
    # Quarter turns come out exact so that i is 1j, not 6e-17+1j.
    quarter = {Fraction(0): 1 + 0j, Fraction(1, 4): 1j,
               Fraction(1, 2): -1 + 0j, Fraction(3, 4): -1j}
    if t in quarter:
        return quarter[t]
    return cmath.rect(1.0, 2 * math.pi * float(t))


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a | n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("Jacobi symbol needs odd n > 0")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _factor(n: int) -> List[Tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def euler_phi(n: int) -> int:
    result = n
    for p, _ in _factor(n):
        result -= result // p
    return result


def _check_modulus(d: int) -> None:
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise CharacterError(f"modulus must be a positive integer, got {d!r}")
    if d % 2 == 0:
        raise CharacterError(f"modulus must be odd, got {d}")


def _parse_value(v) -> Tuple[int, Fraction]:
    """Return ``(magnitude, turn)`` for a table entry."""
    if isinstance(v, RootOfUnity):
        return 1, v.turn
    if isinstance(v, (list, tuple)):
        if len(v) != 2:
            raise CharacterError(f"root of unity must be [k, m], got {v!r}")
        return 1, RootOfUnity(int(v[0]), int(v[1])).turn
    if isinstance(v, int) and not isinstance(v, bool):
        if v == 0:
            return 0, Fraction(0)
        return abs(v), Fraction(0 if v > 0 else 1, 2)
    raise CharacterError(f"cannot read character value {v!r}")


@dataclass(frozen=True)
class DirichletCharacter:
    """A completely multiplicative, d-periodic map Z -> roots of unity and 0."""

    modulus: int
    turns: Tuple[Turn, ...]
    kind: str = field(default="table", compare=False)

    @cached_property
    def is_real(self) -> bool:
        return all(t is None or t.denominator <= 2 for t in self.turns)

    @cached_property
    def order(self) -> int:
        return math.lcm(*(t.denominator for t in self.turns if t is not None))

    @property
    def is_principal(self) -> bool:
        return all(t is None or t == 0 for t in self.turns)

    def turn(self, a: int) -> Turn:
        return self.turns[a % self.modulus]

    def __call__(self, a: int) -> CharacterValue:
        t = self.turn(a)
        if t is None:
            return 0
        if self.is_real:
            return 1 if t == 0 else -1
        return RootOfUnity(t.numerator, t.denominator)

    def exact(self, a: int) -> int:
        """Value in {-1, 0, 1}; only for real characters."""
        if not self.is_real:
            raise NonRealCharacterInExactBackend(
                f"character mod {self.modulus} of order {self.order} is not real")
        t = self.turn(a)
        return 0 if t is None else (1 if t == 0 else -1)

    def value(self, a: int, backend: Union[Backend, str] = Backend.EXACT):
        return value(self, a, backend)

    def table(self) -> List[CharacterValue]:
        return [self(a) for a in range(self.modulus)]

    def to_json(self) -> dict:
        vals = [0 if t is None else [t.numerator, t.denominator] for t in self.turns]
        return {"modulus": self.modulus, "kind": self.kind, "values": vals}

    def label(self) -> str:
        if self.kind in ("principal", "quadratic"):
            return f"{self.kind}({self.modulus})"
        return f"table({self.modulus}:{','.join(_turn_label(t) for t in self.turns)})"


def _turn_label(t: Turn) -> str:
    return "0" if t is None else f"{t.numerator}/{t.denominator}"


def value(chi: DirichletCharacter, a: int, backend: Union[Backend, str] = Backend.EXACT):
    """chi(a) as a scalar of the requested backend."""
    backend = Backend(backend)
    if backend is Backend.FLOAT:
        t = chi.turn(a)
        return 0j if t is None else _turn_to_complex(t)
    v = chi.exact(a)
    if backend is Backend.EXACT:
        return Fraction(v)
    return QRationalFunction(v)


def principal(d: int) -> DirichletCharacter:
    _check_modulus(d)
    turns = tuple(Fraction(0) if math.gcd(a, d) == 1 else None for a in range(d))
    return DirichletCharacter(d, turns, "principal")


def quadratic(d: int) -> DirichletCharacter:
    """The real character a -> (a | d)."""
    _check_modulus(d)
    if d == 1:
        raise CharacterError("quadratic character needs d >= 3; use principal(1)")
    turns = []
    for a in range(d):
        j = jacobi(a, d)
        turns.append(None if j == 0 else Fraction(0 if j == 1 else 1, 2))
    return DirichletCharacter(d, tuple(turns), "quadratic")


def from_table(d: int, values: Sequence, kind: str = "table") -> DirichletCharacter:
    """Validate a value table (support, chi(1) = 1, multiplicativity)."""
    _check_modulus(d)
    if len(values) != d:
        raise WrongLength(f"expected {d} values, got {len(values)}", (len(values),))
    parsed = [_parse_value(v) for v in values]
    for a, (mag, _) in enumerate(parsed):
        unit = math.gcd(a, d) == 1
        if unit and mag == 0:
            raise SupportViolation(f"chi({a}) = 0 but gcd({a}, {d}) = 1", (a,))
        if not unit and mag != 0:
            raise SupportViolation(f"chi({a}) != 0 but gcd({a}, {d}) > 1", (a,))
    if parsed[1 % d] != (1, Fraction(0)):
        raise NotMultiplicative(f"chi(1) must be 1", (1, 1))
    for a in range(d):
        for b in range(a, d):
            ma, ta = parsed[a]
            mb, tb = parsed[b]
            mc, tc = parsed[(a * b) % d]
            prod_mag = ma * mb
            if prod_mag != mc or (mc and (ta + tb - tc) % 1 != 0):
                raise NotMultiplicative(
                    f"chi({a})*chi({b}) != chi({(a * b) % d}) mod {d}", (a, b))
    turns = tuple(None if mag == 0 else t % 1 for mag, t in parsed)
    return DirichletCharacter(d, turns, kind)


def _cyclic_factor(p: int, e: int):
    """Generator of (Z/p^e)^* and its discrete-log table."""
    n = p ** e
    phi = n - n // p
    for g in range(2, n + 1):
        if math.gcd(g, n) != 1:
            continue
        logs = {}
        x = 1
        for k in range(phi):
            if x in logs:
                break
            logs[x] = k
            x = x * g % n
        if len(logs) == phi:
            return n, phi, logs
    raise AssertionError(f"no generator found mod {n}")


def enumerate_characters(d: int) -> List[DirichletCharacter]:
    """All phi(d) characters mod ``d`` via the cyclic decomposition of (Z/d)^*."""
    _check_modulus(d)
    if d > MAX_ENUMERATE_MODULUS:
        raise CharacterError(f"enumeration is limited to d <= {MAX_ENUMERATE_MODULUS}")
    if d == 1:
        return [principal(1)]
    factors = [_cyclic_factor(p, e) for p, e in _factor(d)]
    chars = []
    for ks in itertools.product(*(range(phi) for _, phi, _ in factors)):
        turns = []
        for a in range(d):
            if math.gcd(a, d) != 1:
                turns.append(None)
                continue
            t = sum((Fraction(k * logs[a % n], phi) for k, (n, phi, logs) in zip(ks, factors)),
                    Fraction(0))
            turns.append(t % 1)
        kind = "principal" if not any(ks) else "table"
        chars.append(DirichletCharacter(d, tuple(turns), kind))
    return chars


def from_json(data: dict) -> DirichletCharacter:
    """Parse the character-file schema ``{"modulus", "kind", "values"}``."""
    try:
        d = data["modulus"]
        kind = data.get("kind", "table")
    except (KeyError, TypeError, AttributeError) as exc:
        raise CharacterError(f"malformed character description: {exc}") from exc
    if kind == "principal" and "values" not in data:
        return principal(d)
    if kind == "quadratic" and "values" not in data:
        return quadratic(d)
    if kind not in ("principal", "quadratic", "table"):
        raise CharacterError(f"unknown character kind {kind!r}")
    if "values" not in data:
        raise CharacterError("table character needs a 'values' list")
    chi = from_table(d, data["values"], kind)
    if kind == "principal" and chi != principal(d):
        raise CharacterError(f"values do not describe the principal character mod {d}")
    if kind == "quadratic" and chi != quadratic(d):
        raise CharacterError(f"values do not describe the quadratic character mod {d}")
    return chi


def load(path: Union[str, Path]) -> DirichletCharacter:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise CharacterError(f"{path}: not valid JSON ({exc})") from exc
    return from_json(data)


def character_sum(chi: DirichletCharacter) -> complex:
    """Sum of chi over a complete residue system (phi(d) or 0)."""
    return sum((complex(chi(a)) if not chi.is_real else chi(a) for a in range(chi.modulus)), 0)


def real_characters(d: int) -> Iterable[DirichletCharacter]:
    return [c for c in enumerate_characters(d) if c.is_real]
