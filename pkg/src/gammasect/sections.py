"""Monte Carlo estimation of central section volumes of B_p^n and p-sum
bodies via the star-body radial identity

    |E cap K|_k = |B_2^k| * E_theta[ r(theta)^k ],

with theta uniform on the unit sphere of E and r the radial function of K
restricted to E.  Sampling is chunked over counter-based (Philox) streams
keyed by (seed, stream, chunk), so estimates are bit-reproducible
regardless of worker count.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .geometry import InnerNorm, PBall, PSumBody, log_unit_ball_volume
from .specfun import DomainError

_CHUNK = 1 << 16
_ORTHO_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Subspace:
    """k-dimensional subspace of R^n given by rows of an orthonormal basis."""

    n: int
    k: int
    basis: np.ndarray  # shape (k, n), rows orthonormal

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.n:
            raise DomainError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if self.basis.shape != (self.k, self.n):
            raise DomainError(
                f"basis shape {self.basis.shape} != ({self.k}, {self.n})"
            )
        gram = self.basis @ self.basis.T
        if float(np.max(np.abs(gram - np.eye(self.k)))) > _ORTHO_TOL:
            raise DomainError("basis rows are not orthonormal")


@dataclass(frozen=True)
class SectionEstimate:
    value: float
    std_error: float
    samples: int
    seed: int


def _philox(seed: int, stream: int, chunk: int) -> np.random.Generator:
    key = ((seed & 0xFFFFFFFFFFFFFFFF) << 64) | ((stream & 0xFFFFFFFF) << 32) | (
        chunk & 0xFFFFFFFF
    )
    return np.random.Generator(np.random.Philox(key=key))


def _threads() -> int:
    env = os.environ.get("GAMMASECT_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def haar_subspace(n: int, k: int, seed: int) -> Subspace:
    """Haar-random k-dimensional subspace: QR of a Gaussian matrix with the
    R-diagonal sign fix; deterministic for a fixed seed."""
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    for attempt in range(5):
        rng = _philox(seed, 0xA5A5, attempt)
        g = rng.standard_normal((n, k))
        q, r = np.linalg.qr(g)
        d = np.diag(r)
        if np.any(d == 0.0):
            continue
        q = q * np.sign(d)[None, :]
        basis = np.ascontiguousarray(q.T)
        gram = basis @ basis.T
        if float(np.max(np.abs(gram - np.eye(k)))) <= _ORTHO_TOL:
            return Subspace(n=n, k=k, basis=basis)
    raise DomainError(f"could not draw a rank-{k} Gaussian matrix in 5 attempts")


def axis_subspace(n: int, k: int) -> Subspace:
    """Span of the first k coordinate axes."""
    return Subspace(n=n, k=k, basis=np.eye(k, n))


def diagonal_subspace(n: int, k: int) -> Subspace:
    """Canonical 'diagonal' subspace: the normalized all-ones direction
    completed by orthonormalized coordinate axes."""
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    if k == n:
        return Subspace(n=n, k=k, basis=np.eye(n))
    vecs = np.zeros((k, n))
    vecs[0] = 1.0 / math.sqrt(n)
    for i in range(1, k):
        v = np.zeros(n)
        v[i - 1] = 1.0
        for j in range(i):
            v -= (v @ vecs[j]) * vecs[j]
        vecs[i] = v / np.linalg.norm(v)
    return Subspace(n=n, k=k, basis=vecs)


def _log_gauge_pball(points: np.ndarray, p: float) -> np.ndarray:
    """log ||x||_p rowwise, stable for p < 1 (max-factored)."""
    a = np.abs(points)
    m = np.max(a, axis=1)
    # points are unit vectors of the subspace mapped isometrically into
    # R^n, so m > 0 always
    s = np.sum((a / m[:, None]) ** p, axis=1)
    return np.log(m) + np.log(s) / p


def _part_log_norms(points: np.ndarray, body: PSumBody) -> np.ndarray:
    logs = np.empty((points.shape[0], len(body.parts)))
    off = 0
    for j, (dim, norm) in enumerate(body.parts):
        block = points[:, off : off + dim]
        if norm is InnerNorm.EUCLIDEAN:
            v = np.linalg.norm(block, axis=1)
        else:
            v = np.sum(np.abs(block), axis=1)
        with np.errstate(divide="ignore"):
            logs[:, j] = np.log(v)
        off += dim
    return logs


def _log_gauge_psum(points: np.ndarray, body: PSumBody) -> np.ndarray:
    """log of the p-sum gauge (sum_i ||x_i||^p)^(1/p), max-factored."""
    logs = _part_log_norms(points, body)
    m = np.max(logs, axis=1)
    s = np.sum(np.exp((logs - m[:, None]) * body.p), axis=1)
    return m + np.log(s) / body.p


def _chunk_moments(body, E: Subspace, m: int, seed: int, stream: int, chunk: int):
    rng = _philox(seed, stream, chunk)
    z = rng.standard_normal((m, E.k))
    norms = np.linalg.norm(z, axis=1)
    norms[norms == 0.0] = 1.0
    theta = z / norms[:, None]
    pts = theta @ E.basis
    if isinstance(body, PBall):
        log_gauge = _log_gauge_pball(pts, body.p)
    else:
        log_gauge = _log_gauge_psum(pts, body)
    vals = np.exp(-E.k * log_gauge)  # r(theta)^k
    return float(np.sum(vals)), float(np.sum(vals * vals))


def _section_volume_mc(
    body,
    E: Subspace,
    samples: int,
    seed: int,
    stream: int = 0,
    antithetic: bool = True,
) -> SectionEstimate:
    if samples < 1000:
        raise DomainError(f"samples must be >= 1000, got {samples}")
    if isinstance(body, PBall):
        if body.n != E.n:
            raise DomainError(f"ambient dims differ: body {body.n}, subspace {E.n}")
    elif body.dim != E.n:
        raise DomainError(f"ambient dims differ: body {body.dim}, subspace {E.n}")

    # the integrand is even, so each drawn theta stands for the pair
    # {theta, -theta}; the pair member is free but not independent, so the
    # std error uses the number of unique draws
    m_unique = (samples + 1) // 2 if antithetic else samples
    chunks = [(i, min(_CHUNK, m_unique - i * _CHUNK)) for i in range((m_unique + _CHUNK - 1) // _CHUNK)]

    workers = _threads()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            moments = list(
                pool.map(
                    lambda c: _chunk_moments(body, E, c[1], seed, stream, c[0]),
                    chunks,
                )
            )
    else:
        moments = [_chunk_moments(body, E, m, seed, stream, i) for i, m in chunks]

    # merge in chunk order with compensated summation: independent of the
    # worker count
    total = math.fsum(s for s, _ in moments)
    total_sq = math.fsum(q for _, q in moments)

    scale = math.exp(log_unit_ball_volume(E.k))
    mean = total / m_unique
    var = max(0.0, total_sq / m_unique - mean * mean)
    if m_unique > 1:
        var *= m_unique / (m_unique - 1)
    std_err = scale * math.sqrt(var / m_unique)
    reported = 2 * m_unique if antithetic else m_unique
    return SectionEstimate(
        value=scale * mean, std_error=std_err, samples=reported, seed=seed
    )


def section_volume_mc(
    ball: PBall,
    E: Subspace,
    samples: int,
    seed: int,
    antithetic: bool = True,
) -> SectionEstimate:
    """Unbiased estimate of |E cap B_p^n|_k with its standard error."""
    return _section_volume_mc(ball, E, samples, seed, antithetic=antithetic)


def section_volume_mc_psum(
    body: PSumBody,
    E: Subspace,
    samples: int,
    seed: int,
    antithetic: bool = True,
) -> SectionEstimate:
    """Same radial identity with the p-sum gauge in place of ||.||_p."""
    return _section_volume_mc(body, E, samples, seed, antithetic=antithetic)


def min_section_scan(
    body,
    k: int,
    trials: int,
    samples: int,
    seed: int,
) -> tuple[SectionEstimate, Subspace]:
    """Minimum section estimate over Haar-random subspaces plus the
    axis-aligned and diagonal canonical subspaces (always included)."""
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    n = body.n if isinstance(body, PBall) else body.dim
    subspaces = [axis_subspace(n, k), diagonal_subspace(n, k)]
    for t in range(trials):
        subspaces.append(haar_subspace(n, k, seed=(seed << 20) | t))

    best: SectionEstimate | None = None
    best_sub: Subspace | None = None
    for idx, sub in enumerate(subspaces):
        est = _section_volume_mc(body, sub, samples, seed, stream=idx + 1)
        if best is None or est.value < best.value:
            best, best_sub = est, sub
    assert best is not None and best_sub is not None
    return best, best_sub
