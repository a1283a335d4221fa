"""Shared failure types for the certification pipeline."""

from .interval import IntervalError


class CertificationError(Exception):
    """Base class for certification-pipeline failures (distinct from
    kernel-level IntervalError, which signals arithmetic misuse)."""


class PotentialError(CertificationError):
    """Invalid potential description."""


class SpectralConditionError(CertificationError):
    """The spectral parameter is not verifiably below the spectrum
    (sup of the parameter box reaches min inf V, or the multiplier
    equation has no verifiable solution > 1)."""


class DegenerateParameterError(CertificationError):
    """A closed-form denominator or eigenvector candidate could not be
    bounded away from zero; the parameter box is indeterminate."""


class StepSizeError(CertificationError):
    """Validated step remainder could not be verified even at the
    minimum step size."""


class ConfigError(CertificationError):
    """Malformed run configuration; message names the offending field."""


__all__ = [
    "CertificationError",
    "PotentialError",
    "SpectralConditionError",
    "DegenerateParameterError",
    "StepSizeError",
    "ConfigError",
    "IntervalError",
]
