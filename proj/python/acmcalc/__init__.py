"""Chern-class arithmetic for ACM bundles on hypersurfaces in P^4.

Invariants are tuples ``(k, c1, c2, c3)``; rational results are
``fractions.Fraction``.
"""

from ._core import (
    AcmError,
    c2_interval,
    c3_from_acm,
    chi_bundle,
    chi_line_bundle,
    coverage,
    decompose,
    enumerate_acm,
    extend_rank2,
    extensions,
    genus_from_acm,
    genus_general,
    genus_r4,
    run_cli,
    selfcheck,
    twist,
)

__all__ = [
    "AcmError",
    "c2_interval",
    "c3_from_acm",
    "chi_bundle",
    "chi_line_bundle",
    "coverage",
    "decompose",
    "enumerate_acm",
    "extend_rank2",
    "extensions",
    "genus_from_acm",
    "genus_general",
    "genus_r4",
    "run_cli",
    "selfcheck",
    "twist",
]
