"""Degree envelopes, geometric generating degrees, reducedness and smoothness."""

from app.services.envelope.analyzer import (
    EnvelopeAnalyzer,
    classify_envelope,
    envelope_equals,
    envelope_profile,
    geometric_generating_degrees,
)
from app.services.envelope.schemes import (
    Reducedness,
    characteristic_polynomial,
    curve_smoothness,
    finite_reducedness,
    multiplication_matrix,
)

__all__ = [
    "EnvelopeAnalyzer",
    "Reducedness",
    "classify_envelope",
    "envelope_equals",
    "envelope_profile",
    "geometric_generating_degrees",
    "finite_reducedness",
    "curve_smoothness",
    "characteristic_polynomial",
    "multiplication_matrix",
]
