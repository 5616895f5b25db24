"""Zeta function evaluation, zero location and Riemann-sphere tools."""

from ._core import (
    DomainError,
    Error,
    PoleError,
    ZeroRecord,
    build_zeta_hat,
    chordal_distance,
    completed_zeta,
    count_zeros_rectangle,
    criterion_ratio,
    digamma,
    eta,
    even_zeta_rational,
    functional_factor,
    gamma,
    log_gamma,
    scan_zeros,
    stereo_lift,
    stereo_project,
    stieltjes_gamma,
    z_real,
    zeta,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "Error",
    "PoleError",
    "ZeroRecord",
    "build_zeta_hat",
    "chordal_distance",
    "completed_zeta",
    "count_zeros_rectangle",
    "criterion_ratio",
    "digamma",
    "eta",
    "even_zeta_rational",
    "functional_factor",
    "gamma",
    "log_gamma",
    "scan_zeros",
    "stereo_lift",
    "stereo_project",
    "stieltjes_gamma",
    "z_real",
    "zeta",
]
