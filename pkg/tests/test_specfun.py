"""Oracle and property tests for the special-function layer.

mpmath serves as the ground truth for log-Gamma, digamma and trigamma; the
Stirling route and the Lanczos reference are validated independently and
against each other, and every interval enclosure is checked to contain the
mpmath value.
"""

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammasect.interval import Interval
from gammasect.specfun import (
    DEFAULT_CONFIG,
    P3_SUP,
    DomainError,
    QuadratureInconclusive,
    RangeError,
    StirlingConfig,
    _psi_bounds,
    _ref_err,
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

mpmath.mp.dps = 40
RNG = np.random.default_rng(701)

MU_1 = 1.0 - 0.5 * math.log(2.0 * math.pi)  # forced by Gamma(2) = 1


# ---------------------------------------------------------------------------
# p3
# ---------------------------------------------------------------------------


def test_p3_zeros_and_periodicity():
    assert p3(0.0) == 0.0
    assert p3(1.0) == 0.0
    assert p3(0.5) == pytest.approx(0.0, abs=1e-16)
    assert p3(2.25) == pytest.approx(p3(0.25), abs=1e-15)


def test_p3_sup_via_dense_scan():
    t = np.linspace(0.0, 1.0, 10**6)
    vals = ((t - 1.5) * t + 0.5) * t
    m = float(np.max(np.abs(vals)))
    assert m <= 0.05  # the coarse 1/20 bound
    assert m == pytest.approx(P3_SUP, rel=1e-10)


def test_p3_domain():
    with pytest.raises(DomainError):
        p3(-0.1)


def test_p3_interval_contains_point_values():
    for lo, width in [(0.0, 0.3), (0.4, 0.05), (1.7, 0.6), (3.0, 2.0)]:
        box = Interval(lo, lo + width)
        enc = p3_interval(box)
        for t in np.linspace(lo, lo + width, 97):
            assert enc.lo <= p3(float(t)) <= enc.hi


# ---------------------------------------------------------------------------
# mu / Stirling
# ---------------------------------------------------------------------------


def test_mu_at_1_closed_form():
    assert abs(mu(1.0) - MU_1) <= 1e-12


def test_mu_monotone_decreasing_positive():
    xs = np.linspace(1.0, 200.0, 1000)
    vals = [mu(float(x)) for x in xs]
    assert all(v > 0.0 for v in vals)
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_mu_doubling_sequence_decreasing():
    vals = [mu(float(x)) for x in (1, 2, 4, 8, 16)]
    assert vals == sorted(vals, reverse=True)
    assert all(v > 0 for v in vals)


def test_mu_upper_bound_from_p3():
    for x in (1.0, 2.5, 7.0, 33.0, 150.0):
        assert mu(x) <= 1.0 / (12.0 * x) + (1.0 / 60.0) / (2.0 * x * x)


def test_mu_inconclusive_carries_achieved_bound():
    cfg = StirlingConfig(quad_tol=1e-13, max_periods=10)
    with pytest.raises(QuadratureInconclusive) as exc:
        mu(0.01, cfg)
    assert exc.value.achieved_bound > 1e-13


def test_mu_interval_contains_point_values():
    for lo, hi in [(0.7, 0.9), (1.0, 1.5), (10.0, 12.0), (90.0, 100.0)]:
        enc = mu_interval(Interval(lo, hi))
        for x in np.linspace(lo, hi, 41):
            assert enc.lo <= mu(float(x)) <= enc.hi


def test_log_gamma_stirling_anchors():
    assert abs(log_gamma_stirling(1.0)) <= 1e-12
    assert log_gamma_stirling(5.0) == pytest.approx(math.log(120.0), abs=1e-12)
    assert log_gamma_stirling(0.5) == pytest.approx(
        math.log(math.sqrt(math.pi) / 2.0), abs=1e-12
    )


def test_stirling_vs_reference_1000_points():
    xs = np.logspace(math.log10(0.5), 2.0, 1000)
    worst = max(
        abs(log_gamma_stirling(float(x)) - log_gamma_ref(1.0 + float(x)))
        for x in xs
    )
    assert worst <= 1e-10


def test_stirling_interval_contains_truth():
    for lo, hi in [(0.5, 0.6), (1.0, 2.0), (40.0, 41.0)]:
        enc = log_gamma_stirling_interval(Interval(lo, hi))
        for x in np.linspace(lo, hi, 21):
            truth = float(mpmath.loggamma(1.0 + float(x)))
            assert enc.lo <= truth <= enc.hi


# ---------------------------------------------------------------------------
# reference log-Gamma
# ---------------------------------------------------------------------------


def test_log_gamma_ref_anchors():
    assert abs(log_gamma_ref(2.0)) <= 1e-14
    assert log_gamma_ref(11.0) == pytest.approx(math.log(3628800.0), rel=1e-13)
    assert log_gamma_ref(0.5) == pytest.approx(
        0.5 * math.log(math.pi), rel=1e-13
    )


def test_log_gamma_ref_recurrence():
    zs = np.exp(RNG.uniform(math.log(0.1), math.log(500.0), size=1000))
    for z in zs:
        z = float(z)
        lhs = log_gamma_ref(z + 1.0) - log_gamma_ref(z)
        assert lhs == pytest.approx(math.log(z), rel=1e-12, abs=1e-12)


def test_log_gamma_ref_error_bound_vs_mpmath():
    """The interval layer widens by _ref_err; the true Lanczos error must
    sit well inside that bound."""
    zs = np.exp(RNG.uniform(math.log(0.1), math.log(1e4), size=400))
    for z in zs:
        z = float(z)
        truth = float(mpmath.loggamma(z))
        err = abs(log_gamma_ref(z) - truth)
        assert err <= 0.1 * _ref_err(truth)


def test_log_gamma_ref_array_path_matches_scalar():
    zs = np.exp(RNG.uniform(math.log(0.2), math.log(800.0), size=256))
    arr = log_gamma_ref(zs)
    for z, v in zip(zs, arr):
        assert float(v) == pytest.approx(log_gamma_ref(float(z)), rel=1e-15)


def test_log_gamma_ref_domain():
    with pytest.raises(DomainError):
        log_gamma_ref(0.0)
    with pytest.raises(DomainError):
        log_gamma_ref(-3.0)


@given(st.floats(min_value=0.02, max_value=900.0), st.floats(min_value=0.0, max_value=1.0))
@settings(max_examples=300, deadline=None)
def test_log_gamma_interval_contains_truth(lo, width):
    enc = log_gamma_interval(Interval(lo, lo + width))
    for z in (lo, lo + 0.5 * width, lo + width):
        truth = float(mpmath.loggamma(z))
        assert enc.lo <= truth <= enc.hi


def test_log_gamma_interval_straddles_minimum():
    enc = log_gamma_interval(Interval(1.2, 1.8))
    # the interior minimum of log Gamma must be inside
    argmin = 1.4616321449683623
    assert enc.lo <= float(mpmath.loggamma(argmin)) <= enc.hi


def test_log_gamma1p_shift():
    enc = log_gamma1p_interval(Interval(3.0, 3.0))
    assert enc.lo <= math.log(6.0) <= enc.hi


# ---------------------------------------------------------------------------
# digamma / trigamma
# ---------------------------------------------------------------------------


def test_digamma_upper_anchors():
    euler = float(mpmath.euler)
    assert digamma_upper(1.0) == pytest.approx(
        math.log(2.0) - 0.25 - 1.0 / 48.0 + 1.0 / 1920.0, abs=1e-15
    )
    assert digamma_upper(1.0) > 1.0 - euler  # psi(2) = 1 - gamma
    assert digamma_upper(0.0) > -euler  # psi(1) = -gamma


def test_digamma_upper_dominance_grid():
    xs = np.linspace(-0.9 + 1e-9, 100.0, 10**4)
    for x in xs:
        x = float(x)
        assert digamma_upper(x) > digamma_ref(1.0 + x)


def test_digamma_ref_vs_mpmath():
    zs = np.exp(RNG.uniform(math.log(0.1), math.log(200.0), size=300))
    for z in zs:
        z = float(z)
        assert digamma_ref(z) == pytest.approx(
            float(mpmath.digamma(z)), rel=1e-11, abs=1e-11
        )


def test_psi_bounds_bracket_mpmath():
    zs = np.exp(RNG.uniform(math.log(0.05), math.log(500.0), size=500))
    for z in zs:
        z = float(z)
        lo, hi = _psi_bounds(z)
        truth = float(mpmath.digamma(z))
        assert lo <= truth <= hi
        assert hi - lo <= 1e-4 * (1.0 + abs(truth))


def test_digamma_interval_contains_truth():
    for lo, hi in [(0.3, 0.4), (1.0, 1.0), (2.0, 5.0), (80.0, 81.0)]:
        enc = digamma_interval(Interval(lo, hi))
        for z in np.linspace(lo, hi, 17):
            assert enc.lo <= float(mpmath.digamma(float(z))) <= enc.hi


def test_trigamma_envelope_identities():
    lo, hi = trigamma_envelope(1.0)
    assert lo <= math.pi**2 / 6.0 <= hi
    lo, hi = trigamma_envelope(2.0)
    assert lo <= math.pi**2 / 6.0 - 1.0 <= hi
    for z in (0.5, 1.0, 3.7, 40.0):
        lo, hi = trigamma_envelope(z)
        assert hi - lo == pytest.approx(1.0 / (30.0 * z**5), rel=1e-12)


def test_trigamma_envelope_brackets_finite_difference():
    zs = np.linspace(0.5, 50.0, 1000)
    h = 1e-5
    for z in zs:
        z = float(z)
        fd = (digamma_ref(z + h) - digamma_ref(z - h)) / (2.0 * h)
        fd_err = 2e-7  # h^2 truncation plus oracle noise / h
        lo, hi = trigamma_envelope(z)
        assert lo - fd_err <= fd <= hi + fd_err


# ---------------------------------------------------------------------------
# gamma_pow
# ---------------------------------------------------------------------------


def test_gamma_pow_anchors():
    assert gamma_pow(2.0, 1.0) == pytest.approx(2.0, rel=1e-12)
    # equality case of the quadratic upper bound at x = 2
    assert gamma_pow(2.0, 2.0 / 2.0) == pytest.approx(3.0 * 4.0 / 6.0, rel=1e-12)
    assert gamma_pow(4.0, 0.5) == pytest.approx(math.sqrt(24.0), rel=1e-12)


def test_gamma_pow_overflow():
    with pytest.raises(RangeError):
        gamma_pow(170.0, 10.0)


def test_gamma_pow_interval_contains_point():
    for x, e in [(2.0, 1.0), (4.0, 0.5), (10.0, -2.0)]:
        enc = gamma_pow_interval(Interval(x, x), e)
        assert enc.lo <= gamma_pow(x, e) <= enc.hi


def test_default_config_values():
    assert DEFAULT_CONFIG.quad_tol == 1e-13
    assert DEFAULT_CONFIG.max_periods == 10**6
    with pytest.raises(DomainError):
        StirlingConfig(quad_tol=0.0)
