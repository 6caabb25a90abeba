"""Closed-form inequality machinery: the congruence-subgroup counting
constant, the two-branch lower bound, the omega and kappa constants that
calibrate the sandwich, and the sandwich-table generator itself.

Every numeric output is an exact rational endpoint of a certified enclosure.
Lower bounds always ship their lo endpoint, upper bounds their hi endpoint,
so rounding error can only make published claims weaker, never wrong.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .enclosures import (
    LogEnclosure,
    RatInterval,
    decimal_str,
    log_enclosure,
    nth_root_enclosure,
)
from .errors import AlphaOutOfRange, DomainError, RangeError
from .families import CoverBoundReport, cover_upper_bound

__all__ = [
    "BoundRow",
    "LogEnclosure",
    "OmegaConstants",
    "KappaReport",
    "SandwichReport",
    "theta",
    "count_sl2_z3",
    "thm34_lower",
    "omega_constants",
    "kappa_upper_constant",
    "log_uniform_sample",
    "sandwich_table",
    "SANDWICH_CSV_HEADER",
]

SANDWICH_CSV_HEADER = ("g", "n", "lower_lo", "upper_hi", "lower_source", "upper_source")

LOWER_SOURCE = "congruence-two-branch-min"
UPPER_SOURCE = "balanced-cover-root"
NO_UPPER_SOURCE = "none (below construction threshold)"


def theta(g: int) -> int:
    """Order of the symplectic group over the field with three elements,
    3**(g*g) * prod(3**(2i) - 1), as an exact integer.

    This is the index of the kernel of the mod-3 homology action, assuming
    the action surjects onto the full symplectic group (standard; recorded
    as an assumption in the README). g = 1 is cross-checked against brute
    enumeration by count_sl2_z3.
    """
    if g < 1:
        raise DomainError("theta requires g >= 1")
    out = 3 ** (g * g)
    for i in range(1, g + 1):
        out *= 3 ** (2 * i) - 1
    return out


def count_sl2_z3() -> int:
    """Exhaustive count of 2x2 matrices over Z/3 with determinant 1.

    Independent oracle for theta(1); 81 candidates, no shortcuts.
    """
    count = 0
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    if (a * d - b * c) % 3 == 1:
                        count += 1
    return count


def thm34_lower(g: int, n: int, alpha: int) -> Fraction:
    """Certified lower bound: lo of the interval minimum of the two branches
    log(2)/(alpha*(12g-12)) and log(18g+6n-18)/(2*alpha*(18g+6n-18)).

    alpha is the congruence-cover degree parameter; passing alpha = theta(g)
    gives the universal worst case.
    """
    if g < 2:
        raise DomainError("thm34_lower requires g >= 2")
    if n < 0:
        raise DomainError("thm34_lower requires n >= 0")
    if not isinstance(alpha, int) or not 1 <= alpha <= theta(g):
        raise AlphaOutOfRange(f"alpha must be an integer in [1, theta({g})]")
    branch1 = log_enclosure(2).interval.scale(Fraction(1, alpha * (12 * g - 12)))
    x = 18 * g + 6 * n - 18
    branch2 = log_enclosure(x).interval.scale(Fraction(1, 2 * alpha * x))
    return min(branch1.lo, branch2.lo)


@dataclass(frozen=True)
class OmegaConstants:
    g: int
    alpha: int
    omega_prime: RatInterval
    omega: RatInterval

    def to_json_dict(self) -> dict:
        return {
            "g": self.g,
            "alpha": self.alpha,
            "omega_prime_lo": decimal_str(self.omega_prime.lo, rounding="floor"),
            "omega_prime_hi": decimal_str(self.omega_prime.hi, rounding="ceil"),
            "omega_lo": decimal_str(self.omega.lo, rounding="floor"),
            "omega_hi": decimal_str(self.omega.hi, rounding="ceil"),
        }


def omega_constants(g: int, alpha: int) -> OmegaConstants:
    """The two calibration constants for the lower half of the sandwich.

    omega_prime = alpha*(12g-12) * log(3) / (3*log(2)); omega is the interval
    maximum of omega_prime, 48*alpha, and
    48*alpha*(g-1)*log(3)/(3*log(24*(g-1))). Every term is linear in alpha.
    """
    if g < 2:
        raise DomainError("omega_constants requires g >= 2")
    if not isinstance(alpha, int) or alpha < 1:
        raise DomainError("alpha must be an integer >= 1")
    log2 = log_enclosure(2).interval
    log3 = log_enclosure(3).interval
    omega_prime = log3.div_positive(log2.scale(3)).scale(alpha * (12 * g - 12))
    term2 = RatInterval.point(48 * alpha)
    log24g = log_enclosure(24 * (g - 1)).interval
    term3 = log3.div_positive(log24g.scale(3)).scale(48 * alpha * (g - 1))
    omega = RatInterval.imax(RatInterval.imax(omega_prime, term2), term3)
    return OmegaConstants(g=g, alpha=alpha, omega_prime=omega_prime, omega=omega)


@dataclass(frozen=True)
class KappaReport:
    g: int
    n_lo: int
    n_hi: int
    kappa_prime: Fraction
    attained_at: int
    kappa_double_prime: None
    note: str

    def to_json_dict(self) -> dict:
        return {
            "g": self.g,
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "kappa_prime": decimal_str(self.kappa_prime, rounding="ceil"),
            "attained_at": self.attained_at,
            "kappa_double_prime": None,
            "note": self.note,
        }


def kappa_upper_constant(g: int, n_range: tuple[int, int]) -> KappaReport:
    """Smallest certified kappa' with 3*log(m(n))/m(n) <= kappa' * log(n)/n
    for every integer n in n_range, hence also bounding the certified cover
    value, which sits below that closed form.

    Computed as the pointwise maximum over the whole integer range of the
    outward ratio hi(3 log m / m) * n / lo(log n); no monotonicity shortcut
    is assumed. The small-n patch constant kappa'' needs true minimal
    dilatations and is reported as symbolic-only (None)."""
    if g < 2:
        raise DomainError("kappa_upper_constant requires g >= 2")
    n_lo, n_hi = n_range
    threshold = 6 * (2 * g + 1) + 1
    if n_lo < threshold:
        raise RangeError(f"n_range must start at or above {threshold} for g={g}")
    if n_hi < n_lo:
        raise RangeError("empty n_range")
    log_m_cache: dict[int, Fraction] = {}
    best = Fraction(0)
    best_n = n_lo
    for n in range(n_lo, n_hi + 1):
        m = (n - 1) // (2 * g + 1) - 1
        hi_3logm_over_m = log_m_cache.get(m)
        if hi_3logm_over_m is None:
            hi_3logm_over_m = log_enclosure(m).hi * 3 / m
            log_m_cache[m] = hi_3logm_over_m
        ratio = hi_3logm_over_m * n / log_enclosure(n).lo
        if ratio > best:
            best = ratio
            best_n = n
    return KappaReport(
        g=g,
        n_lo=n_lo,
        n_hi=n_hi,
        kappa_prime=best,
        attained_at=best_n,
        kappa_double_prime=None,
        note="small-n patch constant requires true minimal dilatations; symbolic only",
    )


@dataclass(frozen=True)
class BoundRow:
    g: int
    n: int
    lower: Fraction
    upper: Fraction | None
    lower_source: str
    upper_source: str

    def csv_row(self) -> tuple:
        return (
            self.g,
            self.n,
            decimal_str(self.lower, rounding="floor"),
            "" if self.upper is None else decimal_str(self.upper, rounding="ceil"),
            self.lower_source,
            self.upper_source,
        )

    def to_json_dict(self) -> dict:
        return {
            "g": self.g,
            "n": self.n,
            "lower_lo": decimal_str(self.lower, rounding="floor"),
            "upper_hi": None if self.upper is None else decimal_str(self.upper, rounding="ceil"),
            "lower_source": self.lower_source,
            "upper_source": self.upper_source,
        }


@dataclass(frozen=True)
class SandwichReport:
    g: int
    alpha: int
    rows: tuple[BoundRow, ...]
    omega: RatInterval
    kappa_prime: Fraction | None

    def to_json_dict(self) -> dict:
        return {
            "g": self.g,
            "alpha": self.alpha,
            "omega_hi": decimal_str(self.omega.hi, rounding="ceil"),
            "kappa_prime": None
            if self.kappa_prime is None
            else decimal_str(self.kappa_prime, rounding="ceil"),
            "rows": [row.to_json_dict() for row in self.rows],
        }


def log_uniform_sample(n_lo: int, n_hi: int, count: int) -> tuple[int, ...]:
    """At least `count` distinct integers spread geometrically over
    [n_lo, n_hi], endpoints included, fully deterministic (no floats)."""
    if n_lo < 1 or n_hi < n_lo:
        raise DomainError("need 1 <= n_lo <= n_hi")
    span = n_hi - n_lo + 1
    if count > span:
        raise DomainError(f"cannot pick {count} distinct integers from {span}")
    if n_lo == n_hi:
        return (n_lo,)
    t = max(count, 2)
    while True:
        if t >= 4 * span:
            return tuple(range(n_lo, n_hi + 1))
        ratio = nth_root_enclosure(Fraction(n_hi, n_lo), t - 1, bits=32).hi
        points = {n_lo, n_hi}
        x = Fraction(n_lo)
        for _ in range(t - 1):
            x *= ratio
            points.add(min(int(x), n_hi))
        if len(points) >= count:
            return tuple(sorted(points))
        t *= 2


def sandwich_table(
    g: int,
    n_lo: int,
    n_hi: int,
    sample: int | None = None,
) -> SandwichReport:
    """Per-n certified lower and upper bounds, with the calibration claims
    checked on every row.

    lower = thm34_lower(g, n, theta(g)); upper = the certified cover value
    where the construction applies (n above its threshold), None below it.
    Each applicable row asserts lower < upper, lower >= lo(log n)/(omega_hi*n),
    and upper <= kappa' * hi(log n)/n; a failure is re-raised tagged with n.
    """
    if g < 2:
        raise DomainError("sandwich_table requires g >= 2")
    if n_lo < 3 or n_hi < n_lo:
        raise DomainError("need 3 <= n_lo <= n_hi")
    alpha = theta(g)
    threshold = 6 * (2 * g + 1) + 1
    ns = (
        tuple(range(n_lo, n_hi + 1))
        if sample is None
        else log_uniform_sample(n_lo, n_hi, sample)
    )
    omega = omega_constants(g, alpha).omega
    kappa: Fraction | None = None
    upper_lo_range = max(threshold, n_lo)
    if n_hi >= upper_lo_range:
        kappa = kappa_upper_constant(g, (upper_lo_range, n_hi)).kappa_prime
    cover_cache: dict[int, CoverBoundReport] = {}
    rows = []
    for n in ns:
        try:
            lower = thm34_lower(g, n, alpha)
            logn = log_enclosure(n)
            if lower < logn.lo / (omega.hi * n):
                raise AssertionError("lower bound fell below its omega calibration")
            if n >= threshold:
                # the certified upper value depends on n only through m,
                # so one root isolation per distinct m serves every row
                m = (n - 1) // (2 * g + 1) - 1
                rep = cover_cache.get(m)
                if rep is None:
                    rep = cover_upper_bound(g, n)
                    cover_cache[m] = rep
                upper = rep.log_root.hi
                if not lower < upper:
                    raise AssertionError("lower bound not strictly below upper bound")
                if kappa is not None and not upper <= kappa * logn.hi / n:
                    raise AssertionError("upper bound exceeded its kappa calibration")
                rows.append(
                    BoundRow(
                        g=g,
                        n=n,
                        lower=lower,
                        upper=upper,
                        lower_source=LOWER_SOURCE,
                        upper_source=UPPER_SOURCE,
                    )
                )
            else:
                rows.append(
                    BoundRow(
                        g=g,
                        n=n,
                        lower=lower,
                        upper=None,
                        lower_source=LOWER_SOURCE,
                        upper_source=NO_UPPER_SOURCE,
                    )
                )
        except Exception as exc:
            raise type(exc)(f"n={n}: {exc}") from exc
    return SandwichReport(g=g, alpha=alpha, rows=tuple(rows), omega=omega, kappa_prime=kappa)
