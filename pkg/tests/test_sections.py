"""Monte Carlo section-volume oracle tests: determinism, exact special
sections, and agreement with the closed-form geometry layer."""

import math
import os

import numpy as np
import pytest

from gammasect.geometry import (
    InnerNorm,
    PBall,
    PSumBody,
    diagonal_section_ratio,
    log_volume,
    volume,
    volume_psum,
)
from gammasect.sections import (
    Subspace,
    axis_subspace,
    diagonal_subspace,
    haar_subspace,
    min_section_scan,
    section_volume_mc,
    section_volume_mc_psum,
)
from gammasect.specfun import DomainError

E = InnerNorm.EUCLIDEAN


def test_subspace_validation():
    with pytest.raises(DomainError):
        Subspace(n=3, k=0, basis=np.zeros((0, 3)))
    with pytest.raises(DomainError):
        Subspace(n=3, k=2, basis=np.ones((2, 3)))  # not orthonormal
    with pytest.raises(DomainError):
        Subspace(n=3, k=2, basis=np.eye(3))  # wrong shape


def test_haar_subspace_deterministic_and_orthonormal():
    a = haar_subspace(7, 3, seed=11)
    b = haar_subspace(7, 3, seed=11)
    assert np.array_equal(a.basis, b.basis)
    c = haar_subspace(7, 3, seed=12)
    assert not np.array_equal(a.basis, c.basis)
    for seed in range(50):
        sub = haar_subspace(6, 4, seed=seed)
        gram = sub.basis @ sub.basis.T
        assert float(np.max(np.abs(gram - np.eye(4)))) <= 1e-12


def test_haar_full_dim_is_orthogonal_matrix():
    sub = haar_subspace(4, 4, seed=5)
    assert np.allclose(sub.basis @ sub.basis.T, np.eye(4), atol=1e-12)


def test_axis_section_is_exact_segment():
    # E = span{e1}: the section of any B_p^n is [-1, 1], r == 1 identically
    for p in (0.5, 1.0, 2.0):
        est = section_volume_mc(PBall(3, p), axis_subspace(3, 1), 10**4, seed=1)
        assert est.value == pytest.approx(2.0, abs=1e-12)
        assert est.std_error == pytest.approx(0.0, abs=1e-12)


def test_coordinate_plane_section_of_b1():
    est = section_volume_mc(PBall(3, 1.0), axis_subspace(3, 2), 2 * 10**5, seed=2)
    assert est.value == pytest.approx(2.0, abs=4 * est.std_error + 1e-9)


def test_diagonal_section_matches_closed_form():
    for n in (2, 4, 6):
        for p in (0.5, 1.0, 1.5):
            ball = PBall(n, p)
            est = section_volume_mc(ball, diagonal_subspace(n, 1), 10**4, seed=3)
            expect = diagonal_section_ratio(ball) * math.exp(log_volume(ball) / n)
            # a 1-dim section of a symmetric body is a segment: the only
            # variance is rounding noise in the gauge evaluation
            assert est.std_error <= 1e-8
            assert est.value == pytest.approx(expect, rel=1e-10)


def test_full_dim_reproduces_volume():
    for n, p in [(2, 1.0), (3, 1.5), (4, 0.5)]:
        ball = PBall(n, p)
        est = section_volume_mc(ball, axis_subspace(n, n), 4 * 10**5, seed=4)
        assert abs(est.value - volume(ball)) <= 4.0 * est.std_error


def test_seed_determinism_bit_identical():
    ball = PBall(5, 1.3)
    sub = haar_subspace(5, 2, seed=9)
    a = section_volume_mc(ball, sub, 10**5, seed=77)
    b = section_volume_mc(ball, sub, 10**5, seed=77)
    assert a == b
    c = section_volume_mc(ball, sub, 10**5, seed=78)
    assert c.value != a.value


def test_thread_count_does_not_change_results(monkeypatch):
    ball = PBall(4, 0.8)
    sub = haar_subspace(4, 2, seed=21)
    monkeypatch.setenv("GAMMASECT_THREADS", "1")
    a = section_volume_mc(ball, sub, 3 * 10**5, seed=5)
    monkeypatch.setenv("GAMMASECT_THREADS", "7")
    b = section_volume_mc(ball, sub, 3 * 10**5, seed=5)
    assert a == b


def test_rotation_invariance_within_noise():
    ball = PBall(4, 1.5)
    sub = haar_subspace(4, 2, seed=31)
    rng = np.random.default_rng(8)
    q, _ = np.linalg.qr(rng.standard_normal((2, 2)))
    rotated = Subspace(n=4, k=2, basis=q @ sub.basis)
    a = section_volume_mc(ball, sub, 10**6, seed=6)
    b = section_volume_mc(ball, rotated, 10**6, seed=7)
    assert abs(a.value - b.value) <= 4.0 * math.hypot(a.std_error, b.std_error)


def test_psum_factor_plane_section():
    body = PSumBody(parts=((2, E), (2, E)), p=1.0)
    est = section_volume_mc_psum(body, axis_subspace(4, 2), 10**4, seed=11)
    # restricted to one factor the gauge is the euclidean norm: disc, zero
    # variance
    assert est.value == pytest.approx(math.pi, rel=1e-10)
    assert est.std_error <= 1e-10


def test_psum_full_dim_matches_volume():
    body = PSumBody(parts=((2, E), (2, E)), p=1.0)
    est = section_volume_mc_psum(body, axis_subspace(4, 4), 4 * 10**5, seed=12)
    assert abs(est.value - volume_psum(body)) <= 4.0 * est.std_error
    assert volume_psum(body) == pytest.approx(math.pi**2 / 6.0, rel=1e-12)


def test_psum_p2_sections_are_spherical():
    body = PSumBody(parts=((2, E), (3, E)), p=2.0)
    sub = haar_subspace(5, 3, seed=41)
    est = section_volume_mc_psum(body, sub, 10**4, seed=13)
    assert est.value == pytest.approx(volume(PBall(3, 2.0)), rel=1e-10)


def test_min_section_scan_b2_is_flat():
    best, sub = min_section_scan(PBall(4, 2.0), k=2, trials=5, samples=10**4, seed=17)
    assert best.value == pytest.approx(math.pi, rel=1e-9)
    assert sub.k == 2


def test_min_section_scan_includes_canonical_subspaces():
    # for B_1^3 and k=1 the diagonal direction is the strict minimum
    best, sub = min_section_scan(PBall(3, 1.0), k=1, trials=3, samples=10**4, seed=19)
    expect = diagonal_section_ratio(PBall(3, 1.0)) * math.exp(
        log_volume(PBall(3, 1.0)) / 3
    )
    assert best.value <= expect + 1e-9


def test_sample_and_trial_validation():
    with pytest.raises(DomainError):
        section_volume_mc(PBall(3, 1.0), axis_subspace(3, 1), 10, seed=1)
    with pytest.raises(DomainError):
        min_section_scan(PBall(3, 1.0), k=1, trials=0, samples=10**4, seed=1)
    with pytest.raises(DomainError):
        section_volume_mc(PBall(4, 1.0), axis_subspace(3, 1), 10**4, seed=1)
