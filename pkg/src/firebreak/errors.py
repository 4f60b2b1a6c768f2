"""Exception types raised by the simulation engine."""


class FirebreakError(Exception):
    """Base class for all engine errors."""


class NonAlignedBoundaryError(FirebreakError, ValueError):
    """The protected-region edge does not fall on a grid line."""


class InvalidResolutionError(FirebreakError, ValueError):
    """Grid resolution too coarse to host interior and boundary nodes."""


class NotOnBoundaryError(FirebreakError, IndexError):
    """Node index does not lie on the protected-region boundary."""


class InteriorIndexError(FirebreakError, IndexError):
    """Node index is not an interior node of the finite-difference scheme."""


class DegenerateDenominatorError(FirebreakError, ValueError):
    """A ghost-node closure denominator 1 + delta*l is not positive."""


class NegativeDiscriminantError(FirebreakError, ValueError):
    """Depressed cubic discriminant is negative (requires p >= 0)."""


class NumericalBlowupError(FirebreakError, FloatingPointError):
    """Temperature field exceeded the blowup guard or became non-finite."""

    def __init__(self, message: str, step_index: int | None = None):
        super().__init__(message)
        self.step_index = step_index


class ScenarioParseError(FirebreakError, ValueError):
    """Scenario document is syntactically malformed or has unknown keys."""


class ScenarioValidationError(FirebreakError, ValueError):
    """Scenario document violates an invariant of a configured quantity."""


class UnknownPresetError(FirebreakError, KeyError):
    """Requested preset name is not registered."""
