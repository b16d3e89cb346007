"""Chromatic symmetric functions of unit interval orders.

UIOs are passed as their 1-based ``next`` vectors, e.g. ``[3, 4, 4]``.
Polynomials in the vertex variables come back as lists of
``{"exps": [[index, exp], ...], "coeff": c}`` terms.
"""

from ._chroma import (
    ChromaError,
    chromatic,
    convert,
    covering_corrects_count,
    elementary_g,
    enumerate_corrects,
    enumerate_uios,
    is_correct,
    partitions,
    positivity_report,
    power_g,
    power_via_corrects,
    scan,
    schur_g,
    schur_via_lgv,
    sinks,
    suites,
    uio_family,
    verify,
)

__all__ = [
    "ChromaError",
    "chromatic",
    "convert",
    "covering_corrects_count",
    "elementary_g",
    "enumerate_corrects",
    "enumerate_uios",
    "is_correct",
    "partitions",
    "positivity_report",
    "power_g",
    "power_via_corrects",
    "scan",
    "schur_g",
    "schur_via_lgv",
    "sinks",
    "suites",
    "uio_family",
    "verify",
]
