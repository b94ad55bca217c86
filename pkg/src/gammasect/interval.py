"""Outward-rounded interval arithmetic.

Closed intervals [lo, hi] of doubles with inclusion-isotone arithmetic:
every result interval contains the exact real result for any choice of
points in the operands.  Directed rounding is realized by error-free
transformations (TwoSum / Dekker TwoProduct) where possible, falling back
to one-ulp outward stepping; elementary functions (exp, log) use the libm
kernel widened by two ulps.
"""

from __future__ import annotations

import math


class IntervalDomainError(ValueError):
    """Operand outside the mathematical domain of an interval operation."""


_SPLIT = 134217729.0  # 2**27 + 1, Veltkamp splitting constant
_MAXF = math.nextafter(math.inf, 0.0)


def _down(x: float) -> float:
    if x == math.inf:
        return _MAXF
    if x == -math.inf:
        return -math.inf
    return math.nextafter(x, -math.inf)


def _up(x: float) -> float:
    if x == -math.inf:
        return -_MAXF
    if x == math.inf:
        return math.inf
    return math.nextafter(x, math.inf)


def _two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    c = _SPLIT * a
    ah = c - (c - a)
    al = a - ah
    c = _SPLIT * b
    bh = c - (c - b)
    bl = b - bh
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def _prod_safe(a: float, b: float) -> bool:
    # Veltkamp splitting is exact only away from over/underflow.
    return (
        abs(a) < 1e150
        and abs(b) < 1e150
        and (a == 0.0 or b == 0.0 or abs(a * b) > 1e-290)
    )


def _add_down(a: float, b: float) -> float:
    s, e = _two_sum(a, b)
    if not math.isfinite(s):
        return _down(s) if s == math.inf else s
    return s if e >= 0.0 else _down(s)


def _add_up(a: float, b: float) -> float:
    s, e = _two_sum(a, b)
    if not math.isfinite(s):
        return _up(s) if s == -math.inf else s
    return s if e <= 0.0 else _up(s)


def _mul_down(a: float, b: float) -> float:
    if not _prod_safe(a, b):
        return _down(a * b)
    p, e = _two_prod(a, b)
    if not math.isfinite(p):
        return _down(p) if p == math.inf else p
    return p if e >= 0.0 else _down(p)


def _mul_up(a: float, b: float) -> float:
    if not _prod_safe(a, b):
        return _up(a * b)
    p, e = _two_prod(a, b)
    if not math.isfinite(p):
        return _up(p) if p == -math.inf else p
    return p if e <= 0.0 else _up(p)


def _div_residual(a: float, b: float, q: float) -> float | None:
    # a - q*b, exact when TwoProduct is applicable; None when unsure.
    if not _prod_safe(q, b):
        return None
    p, e = _two_prod(q, b)
    if not math.isfinite(p):
        return None
    d = a - p
    if not math.isfinite(d):
        return None
    return d - e


def _div_down(a: float, b: float) -> float:
    q = a / b
    if not math.isfinite(q):
        return _down(q) if q == math.inf else q
    r = _div_residual(a, b, q)
    if r is None:
        return _down(q)
    # true quotient = q + r/b
    return q if r * b >= 0.0 else _down(q)


def _div_up(a: float, b: float) -> float:
    q = a / b
    if not math.isfinite(q):
        return _up(q) if q == -math.inf else q
    r = _div_residual(a, b, q)
    if r is None:
        return _up(q)
    return q if r * b <= 0.0 else _up(q)


class Interval:
    """Closed interval [lo, hi]; construction with lo > hi is an error.

    Treated as immutable by convention (a plain __slots__ class is used
    instead of a frozen dataclass: interval arithmetic is on the hot path
    of the certification engine).
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float) -> None:
        if not lo <= hi:  # also rejects NaN endpoints
            raise IntervalDomainError(f"bad interval endpoints: [{lo}, {hi}]")
        self.lo = float(lo)
        self.hi = float(hi)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Interval)
            and self.lo == other.lo
            and self.hi == other.hi
        )

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    @staticmethod
    def point(x: float) -> "Interval":
        return Interval(x, x)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        m = 0.5 * (self.lo + self.hi)
        if not math.isfinite(m):
            m = 0.5 * self.lo + 0.5 * self.hi
        return m

    def __contains__(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __add__(self, other) -> "Interval":
        o = _coerce(other)
        return Interval(_add_down(self.lo, o.lo), _add_up(self.hi, o.hi))

    __radd__ = __add__

    def __sub__(self, other) -> "Interval":
        o = _coerce(other)
        return Interval(_add_down(self.lo, -o.hi), _add_up(self.hi, -o.lo))

    def __rsub__(self, other) -> "Interval":
        return _coerce(other) - self

    def __mul__(self, other) -> "Interval":
        o = _coerce(other)
        lo = min(
            _mul_down(self.lo, o.lo),
            _mul_down(self.lo, o.hi),
            _mul_down(self.hi, o.lo),
            _mul_down(self.hi, o.hi),
        )
        hi = max(
            _mul_up(self.lo, o.lo),
            _mul_up(self.lo, o.hi),
            _mul_up(self.hi, o.lo),
            _mul_up(self.hi, o.hi),
        )
        return Interval(lo, hi)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Interval":
        o = _coerce(other)
        if o.lo <= 0.0 <= o.hi:
            raise IntervalDomainError(f"division by interval containing zero: {o}")
        lo = min(
            _div_down(self.lo, o.lo),
            _div_down(self.lo, o.hi),
            _div_down(self.hi, o.lo),
            _div_down(self.hi, o.hi),
        )
        hi = max(
            _div_up(self.lo, o.lo),
            _div_up(self.lo, o.hi),
            _div_up(self.hi, o.lo),
            _div_up(self.hi, o.hi),
        )
        return Interval(lo, hi)

    def __rtruediv__(self, other) -> "Interval":
        return _coerce(other) / self

    def __repr__(self) -> str:
        return f"[{self.lo!r}, {self.hi!r}]"


def _coerce(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval(float(x), float(x))


def _down2(x: float) -> float:
    return _down(_down(x))


def _up2(x: float) -> float:
    return _up(_up(x))


def iexp(a: Interval) -> Interval:
    """Enclosure of exp over the interval (monotone, 2-ulp widened kernel)."""
    lo = _down2(math.exp(a.lo)) if a.lo > -math.inf else 0.0
    lo = max(lo, 0.0)
    try:
        hi = _up2(math.exp(a.hi))
    except OverflowError:
        hi = math.inf
    return Interval(lo, hi)


def ilog(a: Interval) -> Interval:
    """Enclosure of log over a strictly positive interval."""
    if a.lo <= 0.0:
        raise IntervalDomainError(f"log of non-positive interval: {a}")
    return Interval(_down2(math.log(a.lo)), _up2(math.log(a.hi)))


def isqrt(a: Interval) -> Interval:
    """Enclosure of sqrt over a nonnegative interval."""
    if a.lo < 0.0:
        raise IntervalDomainError(f"sqrt of negative interval: {a}")
    lo = _sqrt_down(a.lo)
    hi = _sqrt_up(a.hi)
    return Interval(max(lo, 0.0), hi)


def _sqrt_down(x: float) -> float:
    s = math.sqrt(x)
    if not _prod_safe(s, s):
        return _down(s)
    p, e = _two_prod(s, s)
    r = (x - p) - e
    return s if r >= 0.0 else _down(s)


def _sqrt_up(x: float) -> float:
    s = math.sqrt(x)
    if not _prod_safe(s, s):
        return _up(s)
    p, e = _two_prod(s, s)
    r = (x - p) - e
    return s if r <= 0.0 else _up(s)


def ipow(a: Interval, e) -> Interval:
    """Enclosure of a**e for a.lo > 0 and a real or interval exponent."""
    if a.lo <= 0.0:
        raise IntervalDomainError(f"pow with non-positive base interval: {a}")
    return iexp(_coerce(e) * ilog(a))
