"""Explicit families with certified dilatation bounds.

Two generators live here. The branched-cover family turns (genus, marked
points) into the balanced polynomial index m and certifies the log of its
largest root against two closed-form ceilings. The marked-torus family
builds the 2n x 2n transition matrix whose printed template is pinned by
five hard constraints (explicit boundary rows, the shift-by-2 band, max row
sum 11, max column sum 9, irreducibility); verify_torus_bounds re-checks
those constraints on every instance rather than trusting the generator.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .dilpoly import RootEnclosure, build_Tm, largest_root, m_cubed_root_enclosure
from .enclosures import (
    RatInterval,
    decimal_str,
    log_enclosure,
    log_interval,
    nth_root_enclosure,
)
from .errors import DomainError, ValidationFailed
from .intmatrix import IntMatrix, is_irreducible

__all__ = [
    "CoverFamilySpec",
    "CoverBoundReport",
    "TorusMatrixSpec",
    "TorusBoundsReport",
    "ReferenceBound",
    "ReferenceBoundsReport",
    "cover_upper_bound",
    "torus_matrix",
    "verify_torus_bounds",
    "penner_hk_reference_bounds",
    "COVER_CSV_HEADER",
]

COVER_CSV_HEADER = ("g", "n", "m", "c", "certified_log_root_hi", "closed_form_bound")


@dataclass(frozen=True)
class CoverFamilySpec:
    """Parameters of the branched-cover construction.

    n splits as (2g+1)(m+1) + 1 + c with 0 <= c <= 2g; the c leftover marked
    points ride along without increasing the dilatation, so the bound is a
    function of m alone.
    """

    g: int
    n: int

    def __post_init__(self) -> None:
        if self.g < 2:
            raise DomainError("cover family requires genus >= 2")
        if self.n < 6 * (2 * self.g + 1) + 1:
            raise DomainError(
                f"cover family requires n >= {6 * (2 * self.g + 1) + 1} for g={self.g}"
            )

    @property
    def m(self) -> int:
        return (self.n - 1) // (2 * self.g + 1) - 1

    @property
    def c(self) -> int:
        return self.n - (2 * self.g + 1) * (self.m + 1) - 1

    def check_reconstruction(self) -> bool:
        ok = self.n == (2 * self.g + 1) * (self.m + 1) + 1 + self.c
        return ok and 0 <= self.c <= 2 * self.g and self.m >= 5


@dataclass(frozen=True)
class CoverBoundReport:
    g: int
    n: int
    m: int
    c: int
    root: RootEnclosure
    log_root: RatInterval
    closed_form_m: RatInterval  # 3 log(m) / m
    closed_form_n: RatInterval  # 3 log(q) / q at q = (n - 4g - 3)/(2g + 1)

    @property
    def upper(self) -> Fraction:
        """The certified upper bound on the log-dilatation: hi of log root."""
        return self.log_root.hi

    def to_json_dict(self) -> dict:
        return {
            "g": self.g,
            "n": self.n,
            "m": self.m,
            "c": self.c,
            "root": self.root.to_json_dict(),
            "log_root_lo": decimal_str(self.log_root.lo, rounding="floor"),
            "log_root_hi": decimal_str(self.log_root.hi, rounding="ceil"),
            "closed_form_m_hi": decimal_str(self.closed_form_m.hi, rounding="ceil"),
            "closed_form_n_hi": decimal_str(self.closed_form_n.hi, rounding="ceil"),
        }

    def csv_row(self) -> tuple:
        return (
            self.g,
            self.n,
            self.m,
            self.c,
            decimal_str(self.log_root.hi, rounding="ceil"),
            decimal_str(self.closed_form_m.hi, rounding="ceil"),
        )


def cover_upper_bound(g: int, n: int) -> CoverBoundReport:
    """Certified upper bound on the least log-dilatation with g handles and
    n marked points, from the balanced polynomial of index m.

    The certificate chain: the largest root of T_m sits below m**(3/m)
    (checked exactly), so log of the root enclosure upper-bounds the family's
    log-dilatation, and that in turn must fall under both closed forms
    3 log(m)/m and 3 log(q)/q, q = (n-4g-3)/(2g+1). Both comparisons are
    asserted endpoint-to-endpoint before the report is returned.
    """
    spec = CoverFamilySpec(g=g, n=n)
    m, c = spec.m, spec.c
    if not spec.check_reconstruction():
        raise AssertionError(f"parameter reconstruction failed for g={g}, n={n}")
    mp = m_cubed_root_enclosure(m)
    root = largest_root(build_Tm(m), search_hi=mp.hi + 1)
    log_root = log_interval(root.interval)
    logm = log_enclosure(m).interval
    closed_m = logm.scale(Fraction(3, m))
    q = Fraction(n - 4 * g - 3, 2 * g + 1)
    logq = log_enclosure(q).interval
    closed_n = logq.scale(3).div_positive(RatInterval.point(q))
    if not log_root.hi <= closed_m.lo:
        raise AssertionError(f"certified log root exceeds 3 log(m)/m at g={g}, n={n}")
    if not log_root.hi <= closed_n.lo:
        raise AssertionError(f"certified log root exceeds the n-form ceiling at g={g}, n={n}")
    return CoverBoundReport(
        g=g,
        n=n,
        m=m,
        c=c,
        root=root,
        log_root=log_root,
        closed_form_m=closed_m,
        closed_form_n=closed_n,
    )


@dataclass(frozen=True)
class TorusMatrixSpec:
    n: int
    matrix: IntMatrix

    def __post_init__(self) -> None:
        if self.n < 5:
            raise DomainError("torus family matrix is defined for n >= 5")
        if self.matrix.k != 2 * self.n:
            raise ValueError(f"matrix must be {2 * self.n}x{2 * self.n}")


def torus_matrix(n: int) -> TorusMatrixSpec:
    """The 2n x 2n transition matrix of the marked-torus family, n >= 5.

    Layout (rows and columns 1-based): band pairs j = 1..n-1 put
      row 2j-1: 1 at columns 2j-1, 2j, 2j+2
      row 2j:   1,1,1,3 at columns 2j-3..2j and 1 at column 2j+2  (j >= 2)
    and four rows carry the wrap-around terms instead of the plain band:
      row 2    : 1@1  2@2  1@4  1@(2n-1)
      row 2n-1 : 1@1  2@2  1@4  2@(2n-1) 1@(2n)
      row 2n   : 1@1  2@2  1@4  1@(2n-3) 1@(2n-2) 2@(2n-1) 3@(2n)
    """
    if n < 5:
        raise DomainError("torus family matrix is defined for n >= 5")
    k = 2 * n
    rows = [[0] * k for _ in range(k)]

    def put(r: int, c: int, v: int) -> None:
        rows[r - 1][c - 1] = v

    for j in range(1, n):
        r = 2 * j - 1
        put(r, 2 * j - 1, 1)
        put(r, 2 * j, 1)
        put(r, 2 * j + 2, 1)
        if j >= 2:
            r = 2 * j
            put(r, 2 * j - 3, 1)
            put(r, 2 * j - 2, 1)
            put(r, 2 * j - 1, 1)
            put(r, 2 * j, 3)
            put(r, 2 * j + 2, 1)
    put(2, 1, 1)
    put(2, 2, 2)
    put(2, 4, 1)
    put(2, k - 1, 1)
    put(k - 1, 1, 1)
    put(k - 1, 2, 2)
    put(k - 1, 4, 1)
    put(k - 1, k - 1, 2)
    put(k - 1, k, 1)
    put(k, 1, 1)
    put(k, 2, 2)
    put(k, 4, 1)
    put(k, k - 3, 1)
    put(k, k - 2, 1)
    put(k, k - 1, 2)
    put(k, k, 3)
    return TorusMatrixSpec(n=n, matrix=IntMatrix.from_rows(rows))


@dataclass(frozen=True)
class TorusBoundsReport:
    n: int
    max_col_sum: int
    max_row_sum: int
    irreducible: bool
    log_dil_bound: Fraction  # hi of log(11)/n
    sharper_log_bound: Fraction  # hi of log(9)/n, from the column sums

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "max_col_sum": self.max_col_sum,
            "max_row_sum": self.max_row_sum,
            "irreducible": self.irreducible,
            "log_dil_bound": decimal_str(self.log_dil_bound, rounding="ceil"),
            "sharper_log_bound": decimal_str(self.sharper_log_bound, rounding="ceil"),
        }


def verify_torus_bounds(spec: TorusMatrixSpec) -> TorusBoundsReport:
    """Re-check the validation contract of the torus reconstruction.

    Requires max column sum exactly 9, max row sum exactly 11, and
    irreducibility; any miss raises ValidationFailed naming every failed
    claim. The returned log bounds divide certified log enclosures of 11
    (row route) and 9 (column route, strictly sharper) by n.
    """
    m = spec.matrix
    max_col = max(m.col_sums())
    max_row = max(m.row_sums())
    irr = is_irreducible(m)
    failures = []
    if max_col != 9:
        failures.append(f"max column sum is {max_col}, expected 9")
    if max_row != 11:
        failures.append(f"max row sum is {max_row}, expected 11")
    if not irr:
        failures.append("matrix is not irreducible")
    if failures:
        raise ValidationFailed("; ".join(failures))
    return TorusBoundsReport(
        n=spec.n,
        max_col_sum=max_col,
        max_row_sum=max_row,
        irreducible=irr,
        log_dil_bound=log_enclosure(11).hi / spec.n,
        sharper_log_bound=log_enclosure(9).hi / spec.n,
    )


@dataclass(frozen=True)
class ReferenceBound:
    name: str
    kind: str  # "lower" or "upper"
    lo: Fraction
    hi: Fraction

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "lo": decimal_str(self.lo, rounding="floor"),
            "hi": decimal_str(self.hi, rounding="ceil"),
        }


@dataclass(frozen=True)
class ReferenceBoundsReport:
    g: int
    n: int
    bounds: tuple[ReferenceBound, ...]
    omitted: tuple[tuple[str, str], ...]

    def to_json_dict(self) -> dict:
        return {
            "g": self.g,
            "n": self.n,
            "bounds": [b.to_json_dict() for b in self.bounds],
            "omitted": [{"name": name, "reason": reason} for name, reason in self.omitted],
        }


def penner_hk_reference_bounds(g: int, n: int) -> ReferenceBoundsReport:
    """Every applicable classical reference bound at (g, n), as certified
    enclosures; inapplicable ones are listed with the reason instead of
    being silently dropped."""
    if g < 0 or n < 0:
        raise DomainError("g and n must be >= 0")
    bounds: list[ReferenceBound] = []
    omitted: list[tuple[str, str]] = []

    den = 12 * g - 12 + 4 * n
    if den > 0:
        iv = log_enclosure(2).interval.scale(Fraction(1, den))
        bounds.append(ReferenceBound("penner-lower", "lower", iv.lo, iv.hi))
    else:
        omitted.append(("penner-lower", "needs 12g - 12 + 4n > 0"))

    if n == 0 and g >= 2:
        lo_iv = log_enclosure(2).interval.scale(Fraction(1, 12 * g - 12))
        hi_iv = log_enclosure(11).interval.scale(Fraction(1, g))
        bounds.append(ReferenceBound("closed-surface-lower", "lower", lo_iv.lo, lo_iv.hi))
        bounds.append(ReferenceBound("closed-surface-upper", "upper", hi_iv.lo, hi_iv.hi))
    else:
        omitted.append(("closed-surface-band", "needs n = 0 and g >= 2"))

    if g == 0 and n >= 4:
        s3 = nth_root_enclosure(3, 2)
        log_arg = log_interval(RatInterval(2 + s3.lo, 2 + s3.hi))
        strong = log_arg.scale(Fraction(1, (n - 2) // 2))
        bounds.append(ReferenceBound("sphere-upper", "upper", strong.lo, strong.hi))
        weak = log_arg.scale(Fraction(2, n - 3))
        bounds.append(ReferenceBound("sphere-upper-weak", "upper", weak.lo, weak.hi))
    else:
        omitted.append(("sphere-upper", "needs g = 0 and n >= 4"))

    if g == 1 and n >= 2 and n % 2 == 0:
        iv = log_enclosure(11).interval.scale(Fraction(2, n))
        bounds.append(ReferenceBound("marked-torus-upper", "upper", iv.lo, iv.hi))
    else:
        omitted.append(("marked-torus-upper", "needs g = 1 and an even n >= 2"))

    return ReferenceBoundsReport(g=g, n=n, bounds=tuple(bounds), omitted=tuple(omitted))


def cover_csv_text(reports) -> str:
    """CSV text (header + rows) for a sequence of CoverBoundReport."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COVER_CSV_HEADER)
    for rep in reports:
        writer.writerow(rep.csv_row())
    return buf.getvalue()
