"""Closed-form convex-geometry quantities for B_p^n and p-sums of balls.

All Gamma quotients are evaluated as differences of the reference
log-Gamma so dimensions up to n/p ~ 1000 stay finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .specfun import DomainError, RangeError, log_gamma_ref


@dataclass(frozen=True)
class PBall:
    """The unit ball of the p-(quasi)norm in R^n."""

    n: int
    p: float

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"PBall needs n >= 1, got {self.n}")
        if not self.p > 0.0:
            raise DomainError(f"PBall needs p > 0, got {self.p}")


class InnerNorm(Enum):
    EUCLIDEAN = "euclidean"
    ELL1 = "ell1"


@dataclass(frozen=True)
class PSumBody:
    """p-sum of inner-norm balls: {(x_1..x_m) : sum ||x_i||^p <= 1}."""

    parts: tuple[tuple[int, InnerNorm], ...]
    p: float

    def __post_init__(self) -> None:
        if not self.parts:
            raise DomainError("PSumBody needs at least one part")
        for dim, norm in self.parts:
            if dim < 1:
                raise DomainError(f"inner dimension must be >= 1, got {dim}")
            if not isinstance(norm, InnerNorm):
                raise DomainError(f"unsupported inner norm: {norm!r}")
        if not 0.0 < self.p <= 2.0:
            raise DomainError(f"PSumBody needs p in (0, 2], got {self.p}")

    @property
    def dim(self) -> int:
        return sum(d for d, _ in self.parts)


def _exp_checked(logv: float, what: str) -> float:
    if logv > 700.0:
        raise RangeError(f"{what} overflows: log value {logv:.3g}")
    return math.exp(logv)


def log_unit_ball_volume(k: int, p: float = 2.0) -> float:
    """log |B_p^k| = k log(2 Gamma(1+1/p)) - log Gamma(1+k/p)."""
    if k < 1:
        raise DomainError(f"dimension must be >= 1, got {k}")
    return k * (math.log(2.0) + log_gamma_ref(1.0 + 1.0 / p)) - log_gamma_ref(
        1.0 + k / p
    )


def log_volume(ball: PBall) -> float:
    return log_unit_ball_volume(ball.n, ball.p)


def volume(ball: PBall) -> float:
    """|B_p^n| = (2 Gamma(1+1/p))^n / Gamma(1+n/p)."""
    return _exp_checked(log_volume(ball), "volume")


def _log_inner_volume(dim: int, norm: InnerNorm) -> float:
    if norm is InnerNorm.EUCLIDEAN:
        return log_unit_ball_volume(dim, 2.0)
    return log_unit_ball_volume(dim, 1.0)


def log_volume_psum(body: PSumBody) -> float:
    """Fold-wise p-sum volume:
    |K1 (+)_p K2| = |K1||K2| Gamma(1+n1/p)Gamma(1+n2/p)/Gamma(1+(n1+n2)/p).
    """
    p = body.p
    total = 0.0
    acc_dim = 0
    for dim, norm in body.parts:
        total += _log_inner_volume(dim, norm)
        if acc_dim:
            total += (
                log_gamma_ref(1.0 + acc_dim / p)
                + log_gamma_ref(1.0 + dim / p)
                - log_gamma_ref(1.0 + (acc_dim + dim) / p)
            )
        acc_dim += dim
    return total


def volume_psum(body: PSumBody) -> float:
    return _exp_checked(log_volume_psum(body), "volume_psum")


def isotropy_constant_sq(ball: PBall) -> float:
    """L^2 of B_p^n:
    Gamma(1+3/p) Gamma(1+n/p)^(1+2/n) / (12 Gamma(1+(n+2)/p) Gamma(1+1/p)^3).
    """
    n, p = ball.n, ball.p
    logv = (
        log_gamma_ref(1.0 + 3.0 / p)
        + (1.0 + 2.0 / n) * log_gamma_ref(1.0 + n / p)
        - math.log(12.0)
        - log_gamma_ref(1.0 + (n + 2.0) / p)
        - 3.0 * log_gamma_ref(1.0 + 1.0 / p)
    )
    return _exp_checked(logv, "isotropy_constant_sq")


def hensley_lower_bound(ball: PBall) -> float:
    """(1/sqrt(12)) |B_p^n|^((n-1)/n) / L: a lower bound for every central
    hyperplane section volume of B_p^n."""
    if ball.n < 2:
        raise DomainError("hensley_lower_bound needs n >= 2")
    logv = (
        -0.5 * math.log(12.0)
        + (ball.n - 1) / ball.n * log_volume(ball)
        - 0.5 * math.log(isotropy_constant_sq(ball))
    )
    return _exp_checked(logv, "hensley_lower_bound")


def ellipsoid_lower_bound(ball: PBall, k: int) -> float:
    """n^(1/2-1/p) |B_2^k|^(1/k): the inscribed-ellipsoid lower bound for
    |E cap B_p^n|^(1/k) over k-dimensional subspaces, valid for 1<=p<=2."""
    if not 1.0 <= ball.p <= 2.0:
        raise DomainError(f"ellipsoid bound needs p in [1, 2], got {ball.p}")
    if not 1 <= k <= ball.n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={ball.n}")
    logv = (0.5 - 1.0 / ball.p) * math.log(ball.n) + log_unit_ball_volume(k) / k
    return _exp_checked(logv, "ellipsoid_lower_bound")


def meyer_pajor_factor(ball: PBall) -> float:
    """n^(1-1/p): |E cap B_p^n| >= n^(1-1/p) |E cap B_1^n| for 0 < p <= 1.
    Combinator used in place of the ellipsoid route when p < 1."""
    if not 0.0 < ball.p <= 1.0:
        raise DomainError(f"Meyer-Pajor comparison needs p in (0, 1], got {ball.p}")
    return math.exp((1.0 - 1.0 / ball.p) * math.log(ball.n))


def log_low_p_constant(p: float) -> float:
    if not 0.0 < p <= 1.0:
        raise DomainError(f"low_p_constant needs p in (0, 1], got {p}")
    return 1.0 - 1.0 / p - log_gamma_ref(1.0 + 1.0 / p) - math.log(p) / p


def low_p_constant(p: float) -> float:
    """e^(1-1/p) / (Gamma(1+1/p) p^(1/p)), in (0, 1]; equals 1 at p = 1.
    Underflows gracefully to 0.0 for extreme p."""
    logv = log_low_p_constant(p)
    if logv < -745.0:
        return 0.0
    return math.exp(logv)


def log_diagonal_section_ratio(ball: PBall) -> float:
    n, p = ball.n, ball.p
    return (
        (0.5 - 1.0 / p) * math.log(n)
        + log_gamma_ref(1.0 + n / p) / n
        - log_gamma_ref(1.0 + 1.0 / p)
    )


def diagonal_section_ratio(ball: PBall) -> float:
    """|B_p^n cap E_0|_1 / |B_p^n|^(1/n) for the diagonal line
    E_0 = span{(1,..,1)}: n^(1/2-1/p) Gamma(1+n/p)^(1/n) / Gamma(1+1/p)."""
    return _exp_checked(log_diagonal_section_ratio(ball), "diagonal_section_ratio")
