"""Exact rational interval primitives shared by the certified modules.

Everything here is Fraction-in, Fraction-out. No floats. Each enclosure
carries its own validity: an interval [lo, hi] is only ever produced together
with the reason it contains the target value (series tail bound, integer root
bracketing), so downstream comparisons of lo/hi endpoints are certificates,
not approximations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "RatInterval",
    "LogEnclosure",
    "inth_root",
    "nth_root_enclosure",
    "log_enclosure",
    "log_interval",
    "interval_gap",
    "decimal_str",
]

_DEFAULT_LOG_WIDTH = Fraction(1, 10**12)


@dataclass(frozen=True)
class RatInterval:
    """Closed rational interval [lo, hi]."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if not (isinstance(self.lo, Fraction) and isinstance(self.hi, Fraction)):
            object.__setattr__(self, "lo", Fraction(self.lo))
            object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: {self.lo} > {self.hi}")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def encloses(self, other: "RatInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __add__(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(self.lo - other.hi, self.hi - other.lo)

    def scale(self, c: Fraction) -> "RatInterval":
        # multiplication by an exact rational, sign-aware
        c = Fraction(c)
        if c >= 0:
            return RatInterval(self.lo * c, self.hi * c)
        return RatInterval(self.hi * c, self.lo * c)

    def div_positive(self, other: "RatInterval") -> "RatInterval":
        # self / other for other strictly positive; outward by construction
        if other.lo <= 0:
            raise DomainError("division requires a strictly positive interval")
        if self.lo >= 0:
            return RatInterval(self.lo / other.hi, self.hi / other.lo)
        if self.hi <= 0:
            return RatInterval(self.lo / other.lo, self.hi / other.hi)
        return RatInterval(self.lo / other.lo, self.hi / other.lo)

    @staticmethod
    def imax(a: "RatInterval", b: "RatInterval") -> "RatInterval":
        return RatInterval(max(a.lo, b.lo), max(a.hi, b.hi))

    @staticmethod
    def point(x) -> "RatInterval":
        x = Fraction(x)
        return RatInterval(x, x)


@dataclass(frozen=True)
class LogEnclosure:
    """Certified natural-log enclosure: lo <= log(argument) <= hi."""

    argument: Fraction
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def interval(self) -> RatInterval:
        return RatInterval(self.lo, self.hi)


def inth_root(x: int, n: int) -> int:
    """floor(x ** (1/n)) for integers x >= 0, n >= 1, exactly."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if x < 0:
        raise ValueError("x must be >= 0")
    if x == 0:
        return 0
    if n == 1:
        return x
    r = 1 << ((x.bit_length() + n - 1) // n)
    while True:
        nr = ((n - 1) * r + x // r ** (n - 1)) // n
        if nr >= r:
            break
        r = nr
    while r**n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


def nth_root_enclosure(q, n: int, bits: int = 48) -> RatInterval:
    """Rational [a, b] with a**n <= q <= b**n and b - a <= 2**-bits.

    For irrational roots both bounds are strict; if q is an exact n-th power
    of a dyadic rational the interval degenerates to the exact point.
    """
    q = Fraction(q)
    if q < 0:
        raise DomainError("nth_root_enclosure requires q >= 0")
    scaled = q.numerator << (n * bits)
    t = inth_root(scaled // q.denominator, n)
    den = 1 << bits
    if t**n * q.denominator == scaled:
        return RatInterval.point(Fraction(t, den))
    return RatInterval(Fraction(t, den), Fraction(t + 1, den))


def _atanh_core(r: Fraction, width: Fraction) -> RatInterval:
    # log r for r in [3/4, 3/2) via log r = 2 atanh(u), u = (r-1)/(r+1),
    # |u| <= 1/5 here. Partial sum plus a geometric tail bound gives the
    # two-sided certificate regardless of the sign of u.
    u = (r - 1) / (r + 1)
    u2 = u * u
    s = Fraction(0)
    upow = u
    j = 0
    one_minus = 1 - u2
    while True:
        s += upow / (2 * j + 1)
        j += 1
        upow *= u2
        tail = abs(upow) / ((2 * j + 1) * one_minus)
        if 2 * tail <= width / 2:
            return RatInterval(2 * s - 2 * tail, 2 * s + 2 * tail)


_LOG2_CACHE: RatInterval | None = None


def _log2_interval() -> RatInterval:
    global _LOG2_CACHE
    if _LOG2_CACHE is None:
        # log 2 = 2 atanh(1/3); cached far tighter than any requested width
        _LOG2_CACHE = _atanh_core(Fraction(2), Fraction(1, 10**40))
    return _LOG2_CACHE


def log_enclosure(q, width=_DEFAULT_LOG_WIDTH) -> LogEnclosure:
    """Certified enclosure of log(q) for rational q > 0, of width <= width.

    Argument reduction q = 2**k * r with r in [3/4, 3/2), then the atanh
    series for log r with an explicit tail bound. The log 2 enclosure is
    cached at width 1e-40, so the k * log2 contribution is negligible
    against any practical width request.
    """
    q = Fraction(q)
    if q <= 0:
        raise DomainError("log_enclosure requires q > 0")
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    k = 0
    r = q
    three_half = Fraction(3, 2)
    three_quarter = Fraction(3, 4)
    while r >= three_half:
        r /= 2
        k += 1
    while r < three_quarter:
        r *= 2
        k -= 1
    core = _atanh_core(r, width)
    if k == 0:
        total = core
    else:
        total = core + _log2_interval().scale(k)
    return LogEnclosure(argument=q, lo=total.lo, hi=total.hi)


def log_interval(iv: RatInterval, width=_DEFAULT_LOG_WIDTH) -> RatInterval:
    """Enclosure of {log x : x in iv} for a positive rational interval."""
    if iv.lo <= 0:
        raise DomainError("log_interval requires a positive interval")
    lo = log_enclosure(iv.lo, width)
    if iv.hi == iv.lo:
        return lo.interval
    hi = log_enclosure(iv.hi, width)
    return RatInterval(lo.lo, hi.hi)


def interval_gap(a: RatInterval, b: RatInterval) -> Fraction:
    """Separation between two intervals; 0 exactly when they overlap."""
    return max(Fraction(0), a.lo - b.hi, b.lo - a.hi)


def decimal_str(x: Fraction, digits: int = 30, rounding: str = "floor") -> str:
    """Decimal rendering with directed rounding, for enclosure endpoints.

    rounding="floor" rounds toward -inf, "ceil" toward +inf, so a printed
    (lo floor, hi ceil) pair is still a valid enclosure in decimal form.
    """
    x = Fraction(x)
    scale = 10**digits
    n = x.numerator * scale
    d = x.denominator
    if rounding == "floor":
        q = n // d
    elif rounding == "ceil":
        q = -((-n) // d)
    else:
        raise ValueError("rounding must be 'floor' or 'ceil'")
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q, scale)
    return f"{sign}{whole}.{frac:0{digits}d}"
