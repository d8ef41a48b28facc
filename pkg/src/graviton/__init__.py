"""Smoothing germs, ADE walls and Gibbons-Hawking instanton geometry."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CenterEvaluationError,
    DegenerateGermError,
    GaugeSingularityError,
    GravitonError,
    InvalidInputError,
    NumericalRejection,
    RootCollisionError,
    VanishingSeriesError,
)
