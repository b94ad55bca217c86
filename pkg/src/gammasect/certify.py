"""Catalog of the Gamma-function and section-volume inequalities as gap
functions, plus an engine that certifies their sign on compact parameter
boxes.

Conventions: every claim is written as gap = lhs - rhs >= 0 with both
sides in log space.  Continuous axes are certified by interval evaluation
with adaptive bisection; integer axes are enumerated exhaustively;
monotonicity claims are checked as first-difference sign conditions on
explicit grids.  Known equality points (where gap = 0 exactly) are carved
out of the box by a small margin, certified strictly outside it, and
confirmed as equalities at the point itself.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Callable, Mapping, Sequence

import numpy as np

from .interval import Interval, IntervalDomainError, _down2, _up2, ilog
from .specfun import (
    DEFAULT_CONFIG,
    DomainError,
    digamma_interval,
    log_gamma1p_interval,
    log_gamma_interval,
    log_gamma_ref,
    mu,
    mu_interval,
)

EQUALITY_TOL = 1e-9  # |gap| <= EQUALITY_TOL * (1 + |lhs| + |rhs|) is equality
EQUALITY_DELTA = 1e-6  # half-width of the carved neighborhood around equalities
_POINT_ERR = 1e-12  # per-unit-scale double evaluation noise of a gap


class Status(Enum):
    CERTIFIED = "CERTIFIED"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class Axis:
    name: str
    lo: float
    hi: float
    integer: bool = False


@dataclass
class InequalityCase:
    """One claim: identifier, gap evaluators, parameter box, constraints."""

    id: str
    source: str
    axes: tuple[Axis, ...]
    gap_parts: Callable[..., tuple[float, float]]  # point -> (lhs, rhs) logs
    gap_interval_fn: Callable[..., Interval] | None = None
    # optional rigorous gradient enclosures (one per axis, None on integer
    # axes); when present the engine uses the mean-value form, which kills
    # the dependency blow-up of the naive interval evaluation
    gap_gradient_fn: Callable[..., tuple[Interval | None, ...]] | None = None
    constraints: Callable[..., bool] | None = None
    equality_points: tuple[tuple[float, ...], ...] = ()
    kind: str = "box"  # "box" | "grid"
    grid_families: Callable[[], list["GridFamily"]] | None = None

    def gap(self, point: Sequence[float]) -> float:
        lhs, rhs = self.gap_parts(*point)
        return lhs - rhs

    def scale(self, point: Sequence[float]) -> float:
        lhs, rhs = self.gap_parts(*point)
        return 1.0 + abs(lhs) + abs(rhs)

    def gap_interval(self, box: Sequence[Interval]) -> Interval:
        assert self.gap_interval_fn is not None
        return self.gap_interval_fn(*box)


@dataclass
class GridFamily:
    """A vector of grid points of one monotone-difference family."""

    points: list[tuple[float, ...]]
    lhs: np.ndarray
    rhs: np.ndarray
    interval_at: Callable[[int], Interval]


@dataclass
class Certificate:
    case_id: str
    status: Status
    witness: tuple[float, ...] | None = None
    unresolved: list[tuple[tuple[float, float], ...]] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    wall_time: float = 0.0  # kept out of serialized reports for determinism

    def to_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "status": self.status.value,
            "witness": list(self.witness) if self.witness is not None else None,
            "unresolved": [[list(iv) for iv in box] for box in self.unresolved],
            "stats": self.stats,
        }


def _const_log(c: float) -> Interval:
    v = math.log(c)
    return Interval(_down2(v), _up2(v))


def _iv(x: float) -> Interval:
    return Interval(x, x)


_LG32 = log_gamma_ref(1.5)  # log Gamma(3/2)
_ONE = Interval(1.0, 1.0)
_HALF = Interval(0.5, 0.5)


def _psi1p(z: Interval) -> Interval:
    """Enclosure of psi(1+z)."""
    return digamma_interval(_ONE + z)


def log_g(x: float, y: float) -> float:
    """log of g(x, y) = (y / Gamma(1+y)^(1/y)) * Gamma(1+xy)^(1/y) / (y^x Gamma(1+x))."""
    return (
        (1.0 - x) * math.log(y)
        - log_gamma_ref(1.0 + y) / y
        + log_gamma_ref(1.0 + x * y) / y
        - log_gamma_ref(1.0 + x)
    )


def g_func(x: float, y: float) -> float:
    """The two-variable monotone ratio itself (relative error ~1e-13)."""
    v = log_g(x, y)
    if abs(v) > 700.0:
        raise OverflowError(f"g_func overflows: log value {v:.3g}")
    return math.exp(v)


def _log_g_interval(x: Interval, y: Interval) -> Interval:
    return (
        (Interval(1.0, 1.0) - x) * ilog(y)
        - log_gamma1p_interval(y) / y
        + log_gamma1p_interval(x * y) / y
        - log_gamma1p_interval(x)
    )


def _log_a(n: float, p: float) -> float:
    """log of the section-constant sequence n^(1-1/p) Gamma(1+n/p)^(1/n) /
    ((n!)^(1/n) Gamma(1+1/p))."""
    return (
        (1.0 - 1.0 / p) * math.log(n)
        + log_gamma_ref(1.0 + n / p) / n
        - log_gamma_ref(n + 1.0) / n
        - log_gamma_ref(1.0 + 1.0 / p)
    )


def _log_a_interval(n: float, p: Interval) -> Interval:
    pinv = Interval(1.0, 1.0) / p
    ni = _iv(float(n))
    return (
        (Interval(1.0, 1.0) - pinv) * ilog(ni)
        + log_gamma_interval(Interval(1.0, 1.0) + ni * pinv) / ni
        - log_gamma_interval(ni + Interval(1.0, 1.0)) / ni
        - log_gamma_interval(Interval(1.0, 1.0) + pinv)
    )


def _log_a_limit(p: float) -> float:
    return 1.0 - 1.0 / p - log_gamma_ref(1.0 + 1.0 / p) - math.log(p) / p


def _log_a_limit_interval(p: Interval) -> Interval:
    pinv = Interval(1.0, 1.0) / p
    return (
        Interval(1.0, 1.0)
        - pinv
        - log_gamma_interval(Interval(1.0, 1.0) + pinv)
        - pinv * ilog(p)
    )


def _grid(lo: float, hi: float, step: float) -> np.ndarray:
    m = int(round((hi - lo) / step))
    return lo + step * np.arange(m + 1)


def _lg1p(z):
    return log_gamma_ref(1.0 + z)


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


def catalog(
    x_max: float = 100.0,
    y_max: float = 100.0,
    n_max: int = 60,
    mutate: float | Mapping[str, float] = 0.0,
) -> list[InequalityCase]:
    """All sixteen inequality/monotonicity claims.

    ``mutate`` perturbs each selected case's constant by the given relative
    amount; negative values are adverse (they weaken the provable side).
    """

    def mut(case_id: str) -> float:
        if isinstance(mutate, Mapping):
            return float(mutate.get(case_id, 0.0))
        return float(mutate)

    cases: list[InequalityCase] = []

    # ---- P1.1: bounds on Gamma(1+x)^(2/x) ---------------------------------
    def upper_quadratic(case_id, source, c0, lo, hi, eq_pts):
        c = c0 * (1.0 + mut(case_id))
        lc = math.log(c)
        lci = _const_log(c)
        return InequalityCase(
            id=case_id,
            source=source,
            axes=(Axis("x", lo, hi),),
            gap_parts=lambda x: (
                0.5 * x * (lc + math.log(x + 1.0) + math.log(x + 2.0)),
                _lg1p(x),
            ),
            gap_interval_fn=lambda X: _HALF
            * X
            * (lci + ilog(X + 1.0) + ilog(X + 2.0))
            - log_gamma1p_interval(X),
            gap_gradient_fn=lambda X: (
                _HALF * (lci + ilog(X + 1.0) + ilog(X + 2.0))
                + _HALF * X * (_ONE / (X + 1.0) + _ONE / (X + 2.0))
                - _psi1p(X),
            ),
            equality_points=eq_pts if mut(case_id) == 0.0 else (),
        )

    cases.append(
        upper_quadratic(
            "P1.1-1",
            "Gamma(1+x)^(2/x) <= (1/6)(x+1)(x+2) on [2, x_max]",
            1.0 / 6.0,
            2.0,
            x_max,
            ((2.0,),),
        )
    )
    cases.append(
        upper_quadratic(
            "P1.1-2",
            "Gamma(1+x)^(2/x) <= (4/23)(x+1)(x+2) on [1, 2]",
            4.0 / 23.0,
            1.0,
            2.0,
            (),
        )
    )

    c113 = (2.0 / (math.pi * math.sqrt(23.0))) / (1.0 + mut("P1.1-3"))
    lc113 = math.log(c113)
    lc113i = _const_log(c113)
    cases.append(
        InequalityCase(
            id="P1.1-3",
            source="Gamma(1+x)^(2/x) >= (2/(pi sqrt(23))) x sqrt((x+3)(x+7)) on [5, x_max]",
            axes=(Axis("x", 5.0, x_max),),
            gap_parts=lambda x: (
                _lg1p(x),
                0.5
                * x
                * (
                    lc113
                    + math.log(x)
                    + 0.5 * (math.log(x + 3.0) + math.log(x + 7.0))
                ),
            ),
            gap_interval_fn=lambda X: log_gamma1p_interval(X)
            - _HALF
            * X
            * (
                lc113i
                + ilog(X)
                + _HALF * (ilog(X + 3.0) + ilog(X + 7.0))
            ),
            gap_gradient_fn=lambda X: (
                _psi1p(X)
                - _HALF
                * (lc113i + ilog(X) + _HALF * (ilog(X + 3.0) + ilog(X + 7.0)))
                - _HALF
                * X
                * (_ONE / X + _HALF * (_ONE / (X + 3.0) + _ONE / (X + 7.0))),
            ),
        )
    )

    lc114 = -2.0 - math.log1p(mut("P1.1-4"))
    lc114i = Interval(_down2(lc114), _up2(lc114))
    cases.append(
        InequalityCase(
            id="P1.1-4",
            source="Gamma(1+x)^(2/x) >= (1/e^2)(x+1)(x+2) on [1, x_max]",
            axes=(Axis("x", 1.0, x_max),),
            gap_parts=lambda x: (
                _lg1p(x),
                0.5 * x * (lc114 + math.log(x + 1.0) + math.log(x + 2.0)),
            ),
            gap_interval_fn=lambda X: log_gamma1p_interval(X)
            - _HALF * X * (lc114i + ilog(X + 1.0) + ilog(X + 2.0)),
            gap_gradient_fn=lambda X: (
                _psi1p(X)
                - _HALF * (lc114i + ilog(X + 1.0) + ilog(X + 2.0))
                - _HALF * X * (_ONE / (X + 1.0) + _ONE / (X + 2.0)),
            ),
        )
    )

    # ---- P1.2: the two-parameter Gamma-ratio inequality --------------------
    m12 = math.log1p(mut("P1.2"))
    m12i = Interval(_down2(m12), _up2(m12))
    cases.append(
        InequalityCase(
            id="P1.2",
            source="Gamma(1+xy)^(1+2/y)/Gamma(1+(y+2)x) <= Gamma(1+x)^3/Gamma(1+3x)",
            axes=(Axis("x", 0.5, 1.0), Axis("y", 2.0, y_max)),
            gap_parts=lambda x, y: (
                3.0 * _lg1p(x) - _lg1p(3.0 * x) + m12,
                (1.0 + 2.0 / y) * _lg1p(x * y) - _lg1p((y + 2.0) * x),
            ),
            gap_interval_fn=lambda X, Y: (
                Interval(3.0, 3.0) * log_gamma1p_interval(X)
                - log_gamma1p_interval(Interval(3.0, 3.0) * X)
                + m12i
            )
            - (
                (Interval(1.0, 1.0) + Interval(2.0, 2.0) / Y)
                * log_gamma1p_interval(X * Y)
                - log_gamma1p_interval((Y + 2.0) * X)
            ),
            gap_gradient_fn=lambda X, Y: (
                Interval(3.0, 3.0) * (_psi1p(X) - _psi1p(Interval(3.0, 3.0) * X))
                + (Y + 2.0) * (_psi1p((Y + 2.0) * X) - _psi1p(X * Y)),
                Interval(2.0, 2.0) / (Y * Y) * log_gamma1p_interval(X * Y)
                - (_ONE + Interval(2.0, 2.0) / Y) * X * _psi1p(X * Y)
                + X * _psi1p((Y + 2.0) * X),
            ),
            equality_points=((1.0, 2.0),) if mut("P1.2") == 0.0 else (),
        )
    )

    # ---- P1.3: monotonicity of g on grids ----------------------------------
    m131 = math.log1p(mut("P1.3-1"))

    def families_131() -> list[GridFamily]:
        ys = [y for y in (2.0, 2.5, 3.0, 4.0, 5.0, 7.0, 10.0, 15.0, 20.0, 30.0, 50.0, 75.0, 100.0) if y <= y_max]
        if ys[-1] < y_max:
            ys.append(y_max)
        xs = _grid(0.5, x_max, 0.01)
        out = []
        for y in ys:
            vals = (
                (1.0 - xs) * math.log(y)
                - log_gamma_ref(1.0 + y) / y
                + log_gamma_ref(1.0 + xs * y) / y
                - log_gamma_ref(1.0 + xs)
            )
            pts = [(float(xs[j]), float(xs[j + 1]), y) for j in range(len(xs) - 1)]
            out.append(
                GridFamily(
                    points=pts,
                    lhs=vals[:-1] + m131,
                    rhs=vals[1:],
                    interval_at=lambda j, y=y, xs=xs: _log_g_interval(
                        _iv(float(xs[j])), _iv(y)
                    )
                    - _log_g_interval(_iv(float(xs[j + 1])), _iv(y))
                    + Interval(_down2(m131), _up2(m131)),
                )
            )
        return out

    cases.append(
        InequalityCase(
            id="P1.3-1",
            source="g(., y) non increasing on [1/2, x_max] for fixed y >= 2",
            axes=(Axis("x", 0.5, x_max), Axis("y", 2.0, y_max)),
            gap_parts=lambda x0, x1, y: (log_g(x0, y) + m131, log_g(x1, y)),
            kind="grid",
            grid_families=families_131,
        )
    )

    m132 = math.log1p(mut("P1.3-2"))

    def families_132() -> list[GridFamily]:
        xs_up = [0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95, 1.0]
        xs_down = [x for x in (1.0, 1.5, 2.0, 3.0, 5.0, 7.0, 10.0, 20.0, 50.0, 100.0) if x <= x_max]
        ys = _grid(2.0, y_max, 0.01)
        out = []
        for xlist, decreasing in ((xs_down, True), (xs_up, False)):
            for x in xlist:
                vals = (
                    (1.0 - x) * np.log(ys)
                    - log_gamma_ref(1.0 + ys) / ys
                    + log_gamma_ref(1.0 + x * ys) / ys
                    - log_gamma_ref(1.0 + x)
                )
                if decreasing:
                    lhs, rhs = vals[:-1] + m132, vals[1:]
                    pts = [(x, float(ys[j]), float(ys[j + 1])) for j in range(len(ys) - 1)]
                else:
                    lhs, rhs = vals[1:] + m132, vals[:-1]
                    pts = [(x, float(ys[j + 1]), float(ys[j])) for j in range(len(ys) - 1)]
                out.append(
                    GridFamily(
                        points=pts,
                        lhs=lhs,
                        rhs=rhs,
                        interval_at=lambda j, x=x, ys=ys, dec=decreasing: (
                            _log_g_interval(_iv(x), _iv(float(ys[j])))
                            - _log_g_interval(_iv(x), _iv(float(ys[j + 1])))
                            if dec
                            else _log_g_interval(_iv(x), _iv(float(ys[j + 1])))
                            - _log_g_interval(_iv(x), _iv(float(ys[j])))
                        )
                        + Interval(_down2(m132), _up2(m132)),
                    )
                )
        return out

    cases.append(
        InequalityCase(
            id="P1.3-2",
            source="g(x, .) non increasing for x >= 1, non decreasing for 1/2 <= x <= 1",
            axes=(Axis("x", 0.5, x_max), Axis("y", 2.0, y_max)),
            gap_parts=lambda x, y0, y1: (log_g(x, y0) + m132, log_g(x, y1)),
            kind="grid",
            grid_families=families_132,
        )
    )

    # ---- P1.4 and its proof inequalities -----------------------------------
    m14 = math.log1p(mut("P1.4"))
    m14i = Interval(_down2(m14), _up2(m14))

    def parts_p14(x: float) -> tuple[float, float]:
        return (
            _lg1p(2.0 * x) + 2.0 * _lg1p(0.5 * x) + m14,
            x * math.log(2.0)
            + 2.0 * _lg1p(x)
            + (2.0 * x / (2.0 * x - 1.0)) * _lg1p(0.5 * (2.0 * x - 1.0)),
        )

    def interval_p14(X: Interval) -> Interval:
        two_x = Interval(2.0, 2.0) * X
        return (
            log_gamma1p_interval(two_x)
            + Interval(2.0, 2.0) * log_gamma1p_interval(Interval(0.5, 0.5) * X)
            + m14i
        ) - (
            X * _const_log(2.0)
            + Interval(2.0, 2.0) * log_gamma1p_interval(X)
            + (two_x / (two_x - 1.0))
            * log_gamma1p_interval(Interval(0.5, 0.5) * (two_x - 1.0))
        )

    def gradient_p14(X: Interval) -> tuple[Interval]:
        two_x = Interval(2.0, 2.0) * X
        denom = two_x - 1.0
        u = _HALF * denom  # (2x-1)/2
        return (
            Interval(2.0, 2.0) * _psi1p(two_x)
            + _psi1p(_HALF * X)
            - _const_log(2.0)
            - Interval(2.0, 2.0) * _psi1p(X)
            + Interval(2.0, 2.0) / (denom * denom) * log_gamma1p_interval(u)
            - (two_x / denom) * _psi1p(u),
        )

    cases.append(
        InequalityCase(
            id="P1.4",
            source="Gamma(1+2x)Gamma(1+x/2)^2 >= 2^x Gamma(1+x)^2 Gamma(1+(2x-1)/2)^(2x/(2x-1))",
            axes=(Axis("x", 2.5, x_max),),
            gap_parts=parts_p14,
            gap_interval_fn=interval_p14,
            gap_gradient_fn=gradient_p14,
        )
    )

    m14a = math.log1p(mut("P1.4-a"))
    m14ai = Interval(_down2(m14a), _up2(m14a))
    cases.append(
        InequalityCase(
            id="P1.4-a",
            source="(x/(x-1/2))^(x+1/2) >= sqrt(2) ((2x-1) pi)^(1/(4x-2))",
            axes=(Axis("x", 2.5, x_max),),
            gap_parts=lambda x: (
                (x + 0.5) * (math.log(x) - math.log(x - 0.5)) + m14a,
                0.5 * math.log(2.0)
                + math.log((2.0 * x - 1.0) * math.pi) / (4.0 * x - 2.0),
            ),
            gap_interval_fn=lambda X: (
                (X + 0.5) * (ilog(X) - ilog(X - 0.5)) + m14ai
            )
            - (
                _const_log(math.sqrt(2.0))
                + ilog((Interval(2.0, 2.0) * X - 1.0) * math.pi)
                / (Interval(4.0, 4.0) * X - 2.0)
            ),
            gap_gradient_fn=lambda X: (
                ilog(X)
                - ilog(X - 0.5)
                + (X + 0.5) * (_ONE / X - _ONE / (X - 0.5))
                - (
                    Interval(4.0, 4.0)
                    - Interval(4.0, 4.0)
                    * ilog((Interval(2.0, 2.0) * X - 1.0) * math.pi)
                )
                / (
                    (Interval(4.0, 4.0) * X - 2.0)
                    * (Interval(4.0, 4.0) * X - 2.0)
                ),
            ),
        )
    )

    m14b = math.log1p(mut("P1.4-b"))
    m14bi = Interval(_down2(m14b), _up2(m14b))

    def parts_p14b(x: float) -> tuple[float, float]:
        comb = (
            2.0 * mu(x)
            + (2.0 * x / (2.0 * x - 1.0)) * mu(0.5 * (2.0 * x - 1.0))
            - mu(2.0 * x)
            - 2.0 * mu(0.5 * x)
        )
        return (m14b, comb)

    def interval_p14b(X: Interval) -> Interval:
        two_x = Interval(2.0, 2.0) * X
        comb = (
            Interval(2.0, 2.0) * mu_interval(X)
            + (two_x / (two_x - 1.0))
            * mu_interval(Interval(0.5, 0.5) * (two_x - 1.0))
            - mu_interval(two_x)
            - Interval(2.0, 2.0) * mu_interval(Interval(0.5, 0.5) * X)
        )
        return m14bi - comb

    cases.append(
        InequalityCase(
            id="P1.4-b",
            source="2 mu(x) + (2x/(2x-1)) mu((2x-1)/2) - mu(2x) - 2 mu(x/2) <= 0",
            axes=(Axis("x", 2.5, x_max),),
            gap_parts=parts_p14b,
            gap_interval_fn=interval_p14b,
        )
    )

    # ---- Section 2 reductions ----------------------------------------------
    m21 = math.log1p(mut("P2.1-core"))
    m21i = Interval(_down2(m21), _up2(m21))
    cases.append(
        InequalityCase(
            id="P2.1-core",
            source="Gamma(1+3/p)Gamma(1+n/p)^(1+2/n) <= Gamma(1+(n+2)/p)Gamma(1+1/p)^3",
            axes=(Axis("p", 1.0, 2.0), Axis("n", 2, n_max, integer=True)),
            gap_parts=lambda p, n: (
                _lg1p((n + 2.0) / p) + 3.0 * _lg1p(1.0 / p) + m21,
                _lg1p(3.0 / p) + (1.0 + 2.0 / n) * _lg1p(n / p),
            ),
            gap_interval_fn=lambda P, N: (
                log_gamma1p_interval((N + 2.0) / P)
                + Interval(3.0, 3.0) * log_gamma1p_interval(Interval(1.0, 1.0) / P)
                + m21i
            )
            - (
                log_gamma1p_interval(Interval(3.0, 3.0) / P)
                + (Interval(1.0, 1.0) + Interval(2.0, 2.0) / N)
                * log_gamma1p_interval(N / P)
            ),
            gap_gradient_fn=lambda P, N: (
                (_ONE / (P * P))
                * (
                    (N + 2.0) * (_psi1p(N / P) - _psi1p((N + 2.0) / P))
                    + Interval(3.0, 3.0)
                    * (_psi1p(Interval(3.0, 3.0) / P) - _psi1p(_ONE / P))
                ),
                None,
            ),
            equality_points=((1.0, 2.0),) if mut("P2.1-core") == 0.0 else (),
        )
    )

    m22 = math.log1p(mut("P2.2/Eq.(5)"))
    m22i = Interval(_down2(m22), _up2(m22))
    cases.append(
        InequalityCase(
            id="P2.2/Eq.(5)",
            source="Gamma(n/p+1)^(1/n)/(n^(1/p)Gamma(1/p+1)) >= Gamma(k/2+1)^(1/k)/(n^(1/2)Gamma(3/2))",
            axes=(
                Axis("p", 1.0, 2.0),
                Axis("n", 5, n_max, integer=True),
                Axis("k", 1, max(1, (n_max - 1) // 2), integer=True),
            ),
            constraints=lambda p, n, k: k <= (n - 1) / 2,
            gap_parts=lambda p, n, k: (
                _lg1p(n / p) / n - math.log(n) / p - _lg1p(1.0 / p) + m22,
                _lg1p(0.5 * k) / k - 0.5 * math.log(n) - _LG32,
            ),
            gap_interval_fn=lambda P, N, K: (
                log_gamma1p_interval(N / P) / N
                - ilog(N) / P
                - log_gamma1p_interval(Interval(1.0, 1.0) / P)
                + m22i
            )
            - (
                log_gamma1p_interval(Interval(0.5, 0.5) * K) / K
                - Interval(0.5, 0.5) * ilog(N)
                - log_gamma_interval(Interval(1.5, 1.5))
            ),
            gap_gradient_fn=lambda P, N, K: (
                (_ONE / (P * P)) * (_psi1p(_ONE / P) - _psi1p(N / P) + ilog(N)),
                None,
                None,
            ),
        )
    )

    c22aux = (4.0 / (23.0 * math.pi**2)) / (1.0 + mut("P2.2-aux"))
    lc22aux = math.log(c22aux)
    lc22auxi = _const_log(c22aux)
    cases.append(
        InequalityCase(
            id="P2.2-aux",
            source="Gamma(1+n)^(4/n) >= (4/(23 pi^2)) n^2 (n+3)(n+7), integer n >= 5",
            axes=(Axis("n", 5, n_max, integer=True),),
            gap_parts=lambda n: (
                4.0 * _lg1p(float(n)) / n,
                lc22aux
                + 2.0 * math.log(n)
                + math.log(n + 3.0)
                + math.log(n + 7.0),
            ),
            gap_interval_fn=lambda N: Interval(4.0, 4.0)
            * log_gamma1p_interval(N)
            / N
            - (
                lc22auxi
                + Interval(2.0, 2.0) * ilog(N)
                + ilog(N + 3.0)
                + ilog(N + 7.0)
            ),
        )
    )

    mr1 = math.log1p(mut("R1/Eq.(7)"))
    mr1i = Interval(_down2(mr1), _up2(mr1))
    cases.append(
        InequalityCase(
            id="R1/Eq.(7)",
            source="n^(1/2) Gamma(1+n/2)^(1/n) >= Gamma(3/2) Gamma(n+1)^(1/n), integer n >= 1",
            axes=(Axis("n", 1, n_max, integer=True),),
            gap_parts=lambda n: (
                0.5 * math.log(n) + _lg1p(0.5 * n) / n + mr1,
                _LG32 + _lg1p(float(n)) / n,
            ),
            gap_interval_fn=lambda N: (
                Interval(0.5, 0.5) * ilog(N)
                + log_gamma1p_interval(Interval(0.5, 0.5) * N) / N
                + mr1i
            )
            - (log_gamma_interval(Interval(1.5, 1.5)) + log_gamma1p_interval(N) / N),
            equality_points=((1.0,),) if mut("R1/Eq.(7)") == 0.0 else (),
        )
    )

    m24 = math.log1p(mut("P2.4-core"))
    m24i = Interval(_down2(m24), _up2(m24))
    cases.append(
        InequalityCase(
            id="P2.4-core",
            source="Gamma(1+2n)Gamma(1+n/2)^2 >= 2^n Gamma(1+n)^2 Gamma(1+(2n-1)/2)^(2n/(2n-1)), integer n >= 2",
            axes=(Axis("n", 2, n_max, integer=True),),
            gap_parts=lambda n: (
                _lg1p(2.0 * n) + 2.0 * _lg1p(0.5 * n) + m24,
                n * math.log(2.0)
                + 2.0 * _lg1p(float(n))
                + (2.0 * n / (2.0 * n - 1.0)) * _lg1p(0.5 * (2.0 * n - 1.0)),
            ),
            gap_interval_fn=lambda N: (
                log_gamma1p_interval(Interval(2.0, 2.0) * N)
                + Interval(2.0, 2.0)
                * log_gamma1p_interval(Interval(0.5, 0.5) * N)
                + m24i
            )
            - (
                N * _const_log(2.0)
                + Interval(2.0, 2.0) * log_gamma1p_interval(N)
                + (
                    Interval(2.0, 2.0)
                    * N
                    / (Interval(2.0, 2.0) * N - 1.0)
                )
                * log_gamma1p_interval(
                    Interval(0.5, 0.5) * (Interval(2.0, 2.0) * N - 1.0)
                )
            ),
        )
    )

    # ---- P2.5: the low-p constant sequence ---------------------------------
    m25 = math.log1p(mut("P2.5-const"))
    m25i = Interval(_down2(m25), _up2(m25))

    def families_25() -> list[GridFamily]:
        ps = _grid(0.01, 1.0, 0.01)
        ns = np.arange(1, n_max + 1, dtype=float)
        out = []
        for p in ps:
            p = float(p)
            vals = (
                (1.0 - 1.0 / p) * np.log(ns)
                + log_gamma_ref(1.0 + ns / p) / ns
                - log_gamma_ref(ns + 1.0) / ns
                - log_gamma_ref(1.0 + 1.0 / p)
            )
            limit = _log_a_limit(p)
            pts_diff = [(float(ns[j]), float(ns[j + 1]), p) for j in range(len(ns) - 1)]
            out.append(
                GridFamily(
                    points=pts_diff,
                    lhs=vals[:-1] + m25,
                    rhs=vals[1:],
                    interval_at=lambda j, p=p, ns=ns: _log_a_interval(
                        float(ns[j]), _iv(p)
                    )
                    - _log_a_interval(float(ns[j + 1]), _iv(p))
                    + m25i,
                )
            )
            pts_lim = [(float(n), p) for n in ns]
            out.append(
                GridFamily(
                    points=pts_lim,
                    lhs=vals + m25,
                    rhs=np.full_like(vals, limit),
                    interval_at=lambda j, p=p, ns=ns: _log_a_interval(
                        float(ns[j]), _iv(p)
                    )
                    - _log_a_limit_interval(_iv(p))
                    + m25i,
                )
            )
        return out

    cases.append(
        InequalityCase(
            id="P2.5-const",
            source="n^(1-1/p)Gamma(1+n/p)^(1/n)/((n!)^(1/n)Gamma(1+1/p)) non increasing, >= its limit",
            axes=(Axis("n", 1, n_max, integer=True), Axis("p", 0.01, 1.0)),
            gap_parts=lambda n, p: (_log_a(n, p) + m25, _log_a_limit(p)),
            kind="grid",
            grid_families=families_25,
        )
    )

    return cases


CATALOG_IDS = (
    "P1.1-1",
    "P1.1-2",
    "P1.1-3",
    "P1.1-4",
    "P1.2",
    "P1.3-1",
    "P1.3-2",
    "P1.4",
    "P1.4-a",
    "P1.4-b",
    "P2.1-core",
    "P2.2/Eq.(5)",
    "P2.2-aux",
    "P2.4-core",
    "P2.5-const",
    "R1/Eq.(7)",
)


# ---------------------------------------------------------------------------
# engine
# ---------------------------------------------------------------------------


def _subtract_neighborhood(
    rect: list[tuple[float, float]], pt: list[float], delta: float
) -> list[list[tuple[float, float]]]:
    """Axis-sweep decomposition of rect minus the open delta-box around pt."""
    for (lo, hi), c in zip(rect, pt):
        if c + delta <= lo or c - delta >= hi:
            return [rect]
    pieces: list[list[tuple[float, float]]] = []
    core = list(rect)
    for i, ((lo, hi), c) in enumerate(zip(rect, pt)):
        a, b = max(lo, c - delta), min(hi, c + delta)
        if lo < a:
            pieces.append(core[:i] + [(lo, a)] + core[i + 1 :])
        if b < hi:
            pieces.append(core[:i] + [(b, hi)] + core[i + 1 :])
        core[i] = (a, b)
    return pieces


def _probe_points(rect: list[tuple[float, float]]) -> list[list[float]]:
    mids = [[0.5 * (lo + hi) for lo, hi in rect]]
    corners = [list(c) for c in product(*[(lo, hi) for lo, hi in rect])]
    return mids + corners


def _check_equality_point(case: InequalityCase, point: list[float]):
    gap = case.gap(point)
    tol = EQUALITY_TOL * case.scale(point)
    if gap < -tol:
        return Status.COUNTEREXAMPLE, tuple(point)
    if gap > tol:
        # the declared equality is actually strict here; nothing to excuse
        return Status.CERTIFIED, None
    return Status.CERTIFIED, None


def _certify_grid(case: InequalityCase, grid_fallback: int) -> Certificate:
    assert case.grid_families is not None
    t0 = time.perf_counter()
    points_checked = 0
    interval_confirms = 0
    equalities = 0
    unresolved_pts: list[tuple[float, ...]] = []
    for fam in case.grid_families():
        gap = fam.lhs - fam.rhs
        scale = 1.0 + np.abs(fam.lhs) + np.abs(fam.rhs)
        points_checked += gap.size
        margin = 1e-8 + 1e-11 * scale
        suspect = np.flatnonzero(gap <= margin)
        for j in suspect:
            j = int(j)
            sc = float(scale[j])
            gj = float(gap[j])
            if gj < -EQUALITY_TOL * sc:
                return Certificate(
                    case_id=case.id,
                    status=Status.COUNTEREXAMPLE,
                    witness=fam.points[j],
                    stats={"points": points_checked},
                    wall_time=time.perf_counter() - t0,
                )
            try:
                iv = fam.interval_at(j)
            except (IntervalDomainError, DomainError):
                unresolved_pts.append(fam.points[j])
                continue
            interval_confirms += 1
            if iv.lo > 0.0:
                continue
            if abs(gj) <= EQUALITY_TOL * sc:
                equalities += 1
                continue
            unresolved_pts.append(fam.points[j])
    status = Status.CERTIFIED if not unresolved_pts else Status.INCONCLUSIVE
    unresolved = [tuple((c, c) for c in p) for p in unresolved_pts]
    return Certificate(
        case_id=case.id,
        status=status,
        unresolved=unresolved,
        stats={
            "points": points_checked,
            "interval_confirms": interval_confirms,
            "equalities": equalities,
        },
        wall_time=time.perf_counter() - t0,
    )


def certify_box(
    case: InequalityCase,
    box: Sequence[tuple[float, float]] | None = None,
    depth_limit: int = 40,
    grid_fallback: int = 2048,
) -> Certificate:
    """Certify gap >= 0 for one case on (a sub-box of) its parameter box."""
    if depth_limit < 1:
        raise DomainError("depth_limit must be >= 1")
    if case.kind == "grid":
        return _certify_grid(case, grid_fallback)

    t0 = time.perf_counter()
    if box is None:
        box = [(ax.lo, ax.hi) for ax in case.axes]
        if any(ax.lo > ax.hi for ax in case.axes):
            # caps truncated the case's box to nothing: vacuously certified
            return Certificate(
                case_id=case.id,
                status=Status.CERTIFIED,
                stats={"boxes": 0, "max_depth": 0, "empty": True},
                wall_time=time.perf_counter() - t0,
            )
    box = [tuple(map(float, b)) for b in box]
    for (lo, hi), ax in zip(box, case.axes):
        if lo < ax.lo or hi > ax.hi or lo > hi:
            raise DomainError(f"box {box} outside case box for {case.id}")

    int_idx = [i for i, ax in enumerate(case.axes) if ax.integer]
    cont_idx = [i for i, ax in enumerate(case.axes) if not ax.integer]
    boxes_examined = 0
    max_depth = 0
    unresolved: list[tuple[tuple[float, float], ...]] = []

    def full_point(assign: dict[int, float], cont_pt: list[float]) -> list[float]:
        pt = [0.0] * len(case.axes)
        for i, v in assign.items():
            pt[i] = v
        for i, v in zip(cont_idx, cont_pt):
            pt[i] = v
        return pt

    def full_box(assign: dict[int, float], rect: list[tuple[float, float]]):
        ivs: list[Interval] = [Interval(0, 0)] * len(case.axes)
        for i, v in assign.items():
            ivs[i] = Interval(v, v)
        for i, (lo, hi) in zip(cont_idx, rect):
            ivs[i] = Interval(lo, hi)
        return ivs

    # enumerate integer assignments
    int_values = []
    for i in int_idx:
        lo, hi = box[i]
        int_values.append([float(v) for v in range(math.ceil(lo), math.floor(hi) + 1)])
    assignments = [dict(zip(int_idx, combo)) for combo in product(*int_values)]

    orig_width = {i: max(box[i][1] - box[i][0], 1e-300) for i in cont_idx}

    for assign in assignments:
        if case.constraints is not None:
            probe = full_point(assign, [0.5 * (box[i][0] + box[i][1]) for i in cont_idx])
            if not case.constraints(*probe):
                continue

        rect0 = [box[i] for i in cont_idx]
        # carve equality neighborhoods matching this integer assignment
        rects = [rect0]
        eq_to_check: list[list[float]] = []
        for eq in case.equality_points:
            if any(abs(eq[i] - assign[i]) > 1e-12 for i in int_idx):
                continue
            eq_cont = [eq[i] for i in cont_idx]
            # only relevant when the equality point lies in the requested box
            if not all(
                lo - EQUALITY_DELTA <= c <= hi + EQUALITY_DELTA
                for (lo, hi), c in zip(rect0, eq_cont)
            ):
                continue
            if cont_idx:
                rects = [
                    piece
                    for r in rects
                    for piece in _subtract_neighborhood(r, eq_cont, EQUALITY_DELTA)
                ]
            else:
                rects = []
            eq_to_check.append(list(eq))

        for eq in eq_to_check:
            status, witness = _check_equality_point(case, eq)
            if status is Status.COUNTEREXAMPLE:
                return Certificate(
                    case_id=case.id,
                    status=status,
                    witness=witness,
                    stats={"boxes": boxes_examined, "max_depth": max_depth},
                    wall_time=time.perf_counter() - t0,
                )

        if not cont_idx:
            # pure integer point: certify the degenerate box directly
            boxes_examined += 1
            ivs = full_box(assign, [])
            iv = case.gap_interval(ivs)
            if iv.lo > 0.0:
                continue
            if any(
                all(abs(eq[i] - assign[i]) <= 1e-12 for i in int_idx)
                for eq in case.equality_points
            ):
                continue  # verified equality point above
            pt = full_point(assign, [])
            g = case.gap(pt)
            sc = case.scale(pt)
            if g < -EQUALITY_TOL * sc:
                return Certificate(
                    case_id=case.id,
                    status=Status.COUNTEREXAMPLE,
                    witness=tuple(pt),
                    stats={"boxes": boxes_examined, "max_depth": max_depth},
                    wall_time=time.perf_counter() - t0,
                )
            if abs(g) <= EQUALITY_TOL * sc:
                continue  # equality within tolerance
            unresolved.append(tuple((v, v) for v in pt))
            continue

        stack = [(r, 0) for r in reversed(rects)]
        while stack:
            rect, depth = stack.pop()
            boxes_examined += 1
            max_depth = max(max_depth, depth)
            try:
                iv = _leaf_enclosure(case, full_box(assign, rect), cont_idx, rect)
            except (IntervalDomainError, DomainError):
                unresolved.append(tuple(_as_full_rect(case, assign, cont_idx, rect)))
                continue
            if iv.lo > 0.0:
                continue
            # falsification probes
            for cp in _probe_points(rect):
                pt = full_point(assign, cp)
                g = case.gap(pt)
                sc = case.scale(pt)
                if g < -max(EQUALITY_TOL * sc, 10.0 * _POINT_ERR * sc):
                    return Certificate(
                        case_id=case.id,
                        status=Status.COUNTEREXAMPLE,
                        witness=tuple(pt),
                        stats={"boxes": boxes_examined, "max_depth": max_depth},
                        wall_time=time.perf_counter() - t0,
                    )
            widths = [
                (hi - lo) / orig_width[i] for (lo, hi), i in zip(rect, cont_idx)
            ]
            if depth >= depth_limit or max(widths) <= 0.0:
                unresolved.append(tuple(_as_full_rect(case, assign, cont_idx, rect)))
                continue
            split = widths.index(max(widths))
            lo, hi = rect[split]
            mid = 0.5 * (lo + hi)
            left = list(rect)
            right = list(rect)
            left[split] = (lo, mid)
            right[split] = (mid, hi)
            stack.append((right, depth + 1))
            stack.append((left, depth + 1))

    status = Status.CERTIFIED
    if unresolved:
        status = Status.INCONCLUSIVE
        witness = _grid_scan(case, unresolved, grid_fallback)
        if witness is not None:
            return Certificate(
                case_id=case.id,
                status=Status.COUNTEREXAMPLE,
                witness=witness,
                unresolved=unresolved,
                stats={"boxes": boxes_examined, "max_depth": max_depth},
                wall_time=time.perf_counter() - t0,
            )
    return Certificate(
        case_id=case.id,
        status=status,
        unresolved=unresolved,
        stats={"boxes": boxes_examined, "max_depth": max_depth},
        wall_time=time.perf_counter() - t0,
    )


def _leaf_enclosure(
    case: InequalityCase,
    ivs: list[Interval],
    cont_idx: list[int],
    rect: list[tuple[float, float]],
) -> Interval:
    """Enclosure of the gap over one box.

    With gradient enclosures available this is the mean-value (centered)
    form gap(m) + sum_i grad_i(box) * (X_i - m_i), whose overestimation
    shrinks linearly with the box instead of stalling at the dependency
    width of the naive evaluation.
    """
    if case.gap_gradient_fn is None or not cont_idx:
        return case.gap_interval(ivs)
    mid_ivs = list(ivs)
    mids = []
    for i, (lo, hi) in zip(cont_idx, rect):
        m = 0.5 * (lo + hi)
        mid_ivs[i] = Interval(m, m)
        mids.append(m)
    enc = case.gap_interval(mid_ivs)
    grads = case.gap_gradient_fn(*ivs)
    for i, (lo, hi), m in zip(cont_idx, rect, mids):
        gi = grads[i]
        assert gi is not None, f"missing gradient for continuous axis {i}"
        if lo < hi:
            enc = enc + gi * Interval(lo - m, hi - m)
    return enc


def _as_full_rect(case, assign, cont_idx, rect):
    out = []
    j = 0
    for i in range(len(case.axes)):
        if i in assign:
            out.append((assign[i], assign[i]))
        else:
            out.append(rect[j])
            j += 1
    return out


def _grid_scan(
    case: InequalityCase,
    rects: list[tuple[tuple[float, float], ...]],
    grid_fallback: int,
) -> tuple[float, ...] | None:
    """Dense point scan of unresolved boxes; can only produce a witness,
    never a certificate."""
    if grid_fallback < 1:
        return None
    for rect in rects:
        cont = [i for i, (lo, hi) in enumerate(rect) if hi > lo]
        # cap the total number of scan points per box
        per_axis = grid_fallback if len(cont) <= 1 else min(
            grid_fallback, max(2, int(65536 ** (1.0 / len(cont))))
        )
        axes_pts = []
        for i, (lo, hi) in enumerate(rect):
            if hi > lo:
                axes_pts.append(list(np.linspace(lo, hi, per_axis)))
            else:
                axes_pts.append([lo])
        for combo in product(*axes_pts):
            pt = list(map(float, combo))
            if case.constraints is not None and not case.constraints(*pt):
                continue
            g = case.gap(pt)
            sc = case.scale(pt)
            if g < -EQUALITY_TOL * sc:
                return tuple(pt)
    return None


def verify_all(
    x_max: float = 100.0,
    y_max: float = 100.0,
    n_max: int = 60,
    depth_limit: int = 40,
    grid_fallback: int = 2048,
    cases: Sequence[str] | None = None,
    mutate: float | Mapping[str, float] = 0.0,
) -> list[Certificate]:
    """Run certify_box on every catalog case (or a selected subset),
    deterministically ordered by case id."""
    if x_max <= 0 or y_max <= 0 or n_max <= 0:
        raise DomainError("caps must be positive")
    selected = catalog(x_max=x_max, y_max=y_max, n_max=n_max, mutate=mutate)
    if cases is not None:
        wanted = set(cases)
        unknown = wanted - {c.id for c in selected}
        if unknown:
            raise DomainError(f"unknown case ids: {sorted(unknown)}")
        selected = [c for c in selected if c.id in wanted]
    selected.sort(key=lambda c: c.id)
    return [
        certify_box(c, depth_limit=depth_limit, grid_fallback=grid_fallback)
        for c in selected
    ]
