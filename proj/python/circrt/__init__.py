"""Exact tools for circular repetition thresholds."""

from ._core import (
    CertificateFormatError,
    beta_prefix,
    bracketed_factor,
    build_w,
    carpi_parameters,
    certify,
    exponent,
    find_repetition,
    gamma,
    is_free,
    max_exponent_factor,
    phi,
    search,
    verify_construction,
)

__all__ = [
    "CertificateFormatError",
    "beta_prefix",
    "bracketed_factor",
    "build_w",
    "carpi_parameters",
    "certify",
    "exponent",
    "find_repetition",
    "gamma",
    "is_free",
    "max_exponent_factor",
    "phi",
    "search",
    "verify_construction",
]
