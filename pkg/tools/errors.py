"""
Exception hierarchy for the Γ-semigroup toolkit.

Every error raised on purpose by the algebra, the verifier or the file readers
derives from GammaAlgebraError, so callers (the CLI in particular) can catch
one type and report it.
"""

from typing import Optional, Sequence


class GammaAlgebraError(ValueError):
    """Base class for all toolkit errors."""


class StructureShapeError(GammaAlgebraError):
    """Cayley table has the wrong shape or entries outside the carrier."""

    def __init__(self, message: str, coordinates: Sequence[tuple] = ()):
        super().__init__(message)
        # (x, γ, y) of every out-of-range entry, empty for shape errors
        self.coordinates = [tuple(c) for c in coordinates]


class StructureMismatchError(GammaAlgebraError):
    """Operands are bound to different Γ-semigroups (or to different Γ)."""


class EmptySubsetError(GammaAlgebraError):
    """An ideal predicate was applied to ∅ or to a fuzzy subset with empty support."""


class GuardExceededError(GammaAlgebraError):
    """An exhaustive enumeration would exceed its configured guard."""


class InvalidGradeError(GammaAlgebraError):
    """A membership grade is unparsable or outside [0, 1]."""


class NotSurjectiveError(GammaAlgebraError):
    """Pushforward was requested along a homomorphism that is not onto."""


class FileFormatError(GammaAlgebraError):
    """An instance, fuzzy subset or homomorphism file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
