"""Certification engine tests: catalog integrity, point/interval
consistency, soundness sampling, mutation sensitivity, determinism."""

import json
import math

import numpy as np
import pytest

from gammasect.certify import (
    CATALOG_IDS,
    EQUALITY_TOL,
    Status,
    catalog,
    certify_box,
    g_func,
    log_g,
    verify_all,
)
from gammasect.interval import Interval
from gammasect.specfun import DomainError

RNG = np.random.default_rng(4242)


def _case(case_id, **kwargs):
    for c in catalog(**kwargs):
        if c.id == case_id:
            return c
    raise KeyError(case_id)


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


def test_catalog_has_exactly_the_16_ids():
    ids = sorted(c.id for c in catalog())
    assert ids == sorted(CATALOG_IDS)
    assert len(ids) == 16


def test_equality_points_are_equalities():
    for case in catalog():
        for pt in case.equality_points:
            gap = case.gap(pt)
            assert abs(gap) <= EQUALITY_TOL * case.scale(pt)


def test_p11_1_equality_at_2():
    case = _case("P1.1-1")
    assert abs(case.gap((2.0,))) <= 1e-12


def test_p12_equality_at_1_2():
    # Gamma(3)^2/Gamma(5) = 1/6 = Gamma(2)^3/Gamma(4)
    case = _case("P1.2")
    assert abs(case.gap((1.0, 2.0))) <= 1e-12


def test_point_inside_interval_of_degenerate_box():
    for case in catalog():
        if case.kind != "box":
            continue
        pts = []
        for _ in range(60):
            pt = []
            for ax in case.axes:
                if ax.integer:
                    pt.append(float(RNG.integers(int(ax.lo), int(ax.hi) + 1)))
                else:
                    pt.append(float(RNG.uniform(ax.lo, ax.hi)))
            if case.constraints is None or case.constraints(*pt):
                pts.append(pt)
        for pt in pts:
            iv = case.gap_interval([Interval.point(v) for v in pt])
            g = case.gap(pt)
            slack = 1e-11 * case.scale(pt)
            assert iv.lo - slack <= g <= iv.hi + slack


def test_gradient_encloses_finite_difference():
    h = 1e-6
    for case in catalog():
        if case.gap_gradient_fn is None:
            continue
        for _ in range(20):
            pt = []
            for ax in case.axes:
                if ax.integer:
                    pt.append(float(RNG.integers(int(ax.lo), int(ax.hi) + 1)))
                else:
                    pt.append(float(RNG.uniform(ax.lo + h, ax.hi - h)))
            if case.constraints is not None and not case.constraints(*pt):
                continue
            grads = case.gap_gradient_fn(*[Interval.point(v) for v in pt])
            for i, g in enumerate(grads):
                if g is None:
                    assert case.axes[i].integer
                    continue
                up = list(pt)
                dn = list(pt)
                up[i] += h
                dn[i] -= h
                fd = (case.gap(up) - case.gap(dn)) / (2.0 * h)
                tol = 1e-6 * (1.0 + abs(fd)) + 1e-7 * case.scale(pt) / h * 0
                assert g.lo - 2e-6 * (1 + abs(fd)) <= fd <= g.hi + 2e-6 * (1 + abs(fd)), (
                    case.id,
                    pt,
                    i,
                )


# ---------------------------------------------------------------------------
# g_func
# ---------------------------------------------------------------------------


def test_g_at_x_1_is_1():
    for y in (2.0, 5.0, 17.3):
        assert g_func(1.0, y) == pytest.approx(1.0, rel=1e-12)


def test_g_half_2_closed_form():
    assert g_func(0.5, 2.0) == pytest.approx(2.0 / math.sqrt(math.pi), rel=1e-12)


def test_g_monotonicity_samples():
    ys = np.arange(2.0, 51.0)
    dec = [g_func(2.0, float(y)) for y in ys]
    inc = [g_func(0.7, float(y)) for y in ys]
    assert all(a >= b - 1e-14 for a, b in zip(dec, dec[1:]))
    assert all(a <= b + 1e-14 for a, b in zip(inc, inc[1:]))


def test_g_consistent_with_log_g():
    for x, y in [(0.5, 2.0), (3.0, 7.0), (50.0, 2.0), (100.0, 100.0)]:
        assert g_func(x, y) == pytest.approx(math.exp(log_g(x, y)), rel=1e-13)


# ---------------------------------------------------------------------------
# certify_box
# ---------------------------------------------------------------------------


def test_certify_small_boxes():
    assert certify_box(_case("P1.1-4"), box=[(1.0, 10.0)]).status is Status.CERTIFIED
    assert certify_box(_case("P1.1-1"), box=[(2.0, 3.0)]).status is Status.CERTIFIED


def test_certify_rejects_box_outside_case():
    with pytest.raises(DomainError):
        certify_box(_case("P1.1-1"), box=[(1.0, 3.0)])


def test_degenerate_equality_box_is_inconclusive():
    cert = certify_box(_case("P1.1-1", mutate={"P1.1-1": 1e-15}), box=[(2.0, 2.0)])
    assert cert.status is not Status.COUNTEREXAMPLE
    # the zero-width equality point can never be certified strictly
    assert cert.status in (Status.INCONCLUSIVE, Status.CERTIFIED)


def test_mutated_constant_is_caught():
    cert = certify_box(_case("P1.1-1", mutate={"P1.1-1": -1.0 / 7.0 * 6.0 + 0.0}))
    # 1/6 -> 1/7 is mutate = 7/6 - 1 applied adversely; use the direct form
    case = _case("P1.1-1", mutate={"P1.1-1": (6.0 / 7.0) - 1.0})
    cert = certify_box(case, box=[(2.0, 3.0)])
    assert cert.status is Status.COUNTEREXAMPLE
    assert case.gap(cert.witness) < 0.0


@pytest.mark.parametrize("case_id,target", [
    ("P1.1-1", (2.0,)),
    ("P1.2", (1.0, 2.0)),
])
def test_mutation_sensitivity_tight_cases(case_id, target):
    case = _case(case_id, mutate={case_id: -1e-3})
    cert = certify_box(case)
    assert cert.status is Status.COUNTEREXAMPLE
    assert max(abs(w - t) for w, t in zip(cert.witness, target)) <= 1e-2
    assert case.gap(cert.witness) < 0.0


def test_soundness_certified_boxes_by_sampling():
    for case_id, box in [
        ("P1.1-1", [(2.1, 50.0)]),
        ("P1.4", [(2.5, 30.0)]),
        ("P1.2", [(0.5, 0.9), (2.5, 20.0)]),
    ]:
        case = _case(case_id)
        cert = certify_box(case, box=box)
        assert cert.status is Status.CERTIFIED
        pts = np.column_stack(
            [RNG.uniform(lo, hi, size=2000) for lo, hi in box]
        )
        for pt in pts:
            assert case.gap([float(v) for v in pt]) >= 0.0


def test_verify_all_defaults_all_certified():
    certs = verify_all()
    assert len(certs) == 16
    assert [c.case_id for c in certs] == sorted(CATALOG_IDS)
    assert all(c.status is Status.CERTIFIED for c in certs)


def test_verify_all_smaller_caps_still_certified():
    certs = verify_all(x_max=2.5, y_max=10.0, n_max=10)
    assert all(c.status is Status.CERTIFIED for c in certs)


def test_verify_all_unknown_case():
    with pytest.raises(DomainError):
        verify_all(cases=["nope"])


def test_verify_all_reports_deterministic():
    a = [c.to_dict() for c in verify_all(cases=["P1.1-1", "P2.2-aux", "R1/Eq.(7)"])]
    b = [c.to_dict() for c in verify_all(cases=["P1.1-1", "P2.2-aux", "R1/Eq.(7)"])]
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_adverse_mutation_breaks_every_case():
    """A large adverse perturbation must leave no case CERTIFIED.

    30% covers even the slackest constants (P1.1-4 and P2.2-aux have a
    few percent of headroom); the tight cases are separately checked at
    1e-3 above.
    """
    certs = verify_all(
        x_max=20.0, y_max=20.0, n_max=12, mutate=-0.3, depth_limit=12,
        grid_fallback=64,
    )
    assert all(c.status is not Status.CERTIFIED for c in certs)
