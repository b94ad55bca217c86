"""Gamma-function inequalities and L_p-ball section volumes.

Interval-certified Gamma inequalities, closed-form convex-geometry
quantities for B_p^n and p-sum bodies, and reproducible Monte Carlo
section-volume oracles, with a CLI (``gammasect``) on top.
"""

from .interval import Interval, IntervalDomainError, iexp, ilog, ipow, isqrt
from .specfun import (
    DEFAULT_CONFIG,
    DomainError,
    QuadratureInconclusive,
    RangeError,
    StirlingConfig,
    digamma_interval,
    digamma_ref,
    digamma_upper,
    gamma_pow,
    gamma_pow_interval,
    log_gamma1p_interval,
    log_gamma_interval,
    log_gamma_ref,
    log_gamma_stirling,
    log_gamma_stirling_interval,
    mu,
    mu_interval,
    p3,
    p3_interval,
    trigamma_envelope,
)
from .geometry import (
    InnerNorm,
    PBall,
    PSumBody,
    diagonal_section_ratio,
    ellipsoid_lower_bound,
    hensley_lower_bound,
    isotropy_constant_sq,
    log_unit_ball_volume,
    log_volume,
    log_volume_psum,
    low_p_constant,
    meyer_pajor_factor,
    volume,
    volume_psum,
)
from .sections import (
    SectionEstimate,
    Subspace,
    axis_subspace,
    diagonal_subspace,
    haar_subspace,
    min_section_scan,
    section_volume_mc,
    section_volume_mc_psum,
)
from .certify import (
    CATALOG_IDS,
    Certificate,
    InequalityCase,
    Status,
    catalog,
    certify_box,
    g_func,
    log_g,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "CATALOG_IDS",
    "Certificate",
    "DEFAULT_CONFIG",
    "DomainError",
    "InequalityCase",
    "InnerNorm",
    "Interval",
    "IntervalDomainError",
    "PBall",
    "PSumBody",
    "QuadratureInconclusive",
    "RangeError",
    "SectionEstimate",
    "Status",
    "StirlingConfig",
    "Subspace",
    "axis_subspace",
    "catalog",
    "certify_box",
    "diagonal_section_ratio",
    "diagonal_subspace",
    "digamma_interval",
    "digamma_ref",
    "digamma_upper",
    "ellipsoid_lower_bound",
    "g_func",
    "gamma_pow",
    "gamma_pow_interval",
    "haar_subspace",
    "hensley_lower_bound",
    "iexp",
    "ilog",
    "ipow",
    "isotropy_constant_sq",
    "isqrt",
    "log_g",
    "log_gamma1p_interval",
    "log_gamma_interval",
    "log_gamma_ref",
    "log_gamma_stirling",
    "log_gamma_stirling_interval",
    "log_unit_ball_volume",
    "log_volume",
    "log_volume_psum",
    "low_p_constant",
    "meyer_pajor_factor",
    "min_section_scan",
    "mu",
    "mu_interval",
    "p3",
    "p3_interval",
    "section_volume_mc",
    "section_volume_mc_psum",
    "trigamma_envelope",
    "verify_all",
    "volume",
    "volume_psum",
]
