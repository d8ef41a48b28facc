"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: ``InvalidInputError`` -> 1,
``NumericalRejection`` -> 2, anything else -> 3.
"""


class GravitonError(Exception):
    """Base class for all errors raised by the package."""


class InvalidInputError(GravitonError, ValueError):
    """An argument violates a documented precondition."""


class NumericalRejection(GravitonError):
    """A computation was refused for numerical or geometric reasons."""


class DegenerateGermError(NumericalRejection):
    """The germ never smooths the singularity (all coefficients vanish)."""


class RootCollisionError(NumericalRejection):
    """Roots collide on the continuation loop; retry with a smaller radius."""

    def __init__(self, message, suggested_radius=None):
        super().__init__(message)
        self.suggested_radius = suggested_radius


class VanishingSeriesError(NumericalRejection):
    """The parameter series vanishes to the available truncation order."""


class CenterEvaluationError(NumericalRejection):
    """Evaluation requested at (or too close to) a Gibbons-Hawking center."""


class GaugeSingularityError(NumericalRejection):
    """Evaluation point lies on a Dirac string of the chosen gauge."""

    def __init__(self, message):
        super().__init__(message + " (move the string: pick another string_direction)")
