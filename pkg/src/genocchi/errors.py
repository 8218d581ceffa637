"""Exception types shared across the package."""

from __future__ import annotations


class GenocchiError(Exception):
    """Base class for every error raised by this package."""


class InvalidQ(GenocchiError, ValueError):
    """q outside the open punctured unit disc."""


class BackendMismatch(GenocchiError, TypeError):
    """Two operands live in different scalar backends."""


class PoleAtOne(GenocchiError, ZeroDivisionError):
    """A reduced rational function has a pole at q = 1."""


class DenominatorVanishes(GenocchiError, ZeroDivisionError):
    """A closed-form denominator evaluates to zero at the chosen q."""


class NonRealCharacterInExactBackend(GenocchiError, ValueError):
    """A character with non-real values was used in an exact backend."""


class CharacterError(GenocchiError, ValueError):
    """A character table failed validation.

    ``residues`` names the offending residue (or pair of residues).
    """

    def __init__(self, message: str, residues: tuple = ()):
        super().__init__(message)
        self.residues = residues


class WrongLength(CharacterError):
    pass


class SupportViolation(CharacterError):
    pass


class NotMultiplicative(CharacterError):
    pass


class WeightCount(GenocchiError, ValueError):
    pass


class NonIntegerWeightInExactBackend(GenocchiError, ValueError):
    pass


class NonConvergentInnerSum(GenocchiError, RuntimeError):
    pass


class DimensionTooLarge(GenocchiError, ValueError):
    pass


class GuardExceeded(GenocchiError, ValueError):
    """The requested grid would run past the configured work limit."""
