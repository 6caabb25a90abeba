"""Integer polynomials, certified largest-root enclosures, and the
stretch-factor bound family T.

Two independent root routes live here on purpose:

* `largest_root` is the production path: rightmost-sign-change bisection with
  a 64-point positivity mesh above the bracket as the maximality certificate.
* The Sturm-chain machinery (`char_poly`, `count_real_roots_above`,
  `isolate_largest_real_root`, `compare_largest_roots`) is the exact oracle
  route, used to cross-check spectral enclosures and to decide mu(A) <= mu(B)
  with no floating point and no mesh caveat.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .enclosures import RatInterval, decimal_str, log_enclosure, nth_root_enclosure
from .errors import DomainError, NoSignChange
from .intmatrix import IntMatrix

__all__ = [
    "IntPoly",
    "RootEnclosure",
    "LrootReport",
    "build_T",
    "build_Tm",
    "largest_root",
    "m_cubed_root_enclosure",
    "verify_lroot",
    "char_poly",
    "count_real_roots_above",
    "isolate_largest_real_root",
    "compare_largest_roots",
    "mu_compare",
]

DEFAULT_ROOT_REL_WIDTH = Fraction(1, 10**10)
MESH_POINTS = 64


@dataclass(frozen=True)
class IntPoly:
    """Sparse integer polynomial: sorted tuple of (exponent, coefficient)."""

    coeffs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen = {}
        for e, c in self.coeffs:
            if not (isinstance(e, int) and isinstance(c, int)):
                raise ValueError("exponents and coefficients must be int")
            if e < 0:
                raise ValueError("exponents must be >= 0")
            if c == 0:
                continue
            if e in seen:
                raise ValueError(f"duplicate exponent {e}")
            seen[e] = c
        object.__setattr__(self, "coeffs", tuple(sorted(seen.items())))

    @staticmethod
    def from_dict(d: dict) -> "IntPoly":
        acc: dict[int, int] = {}
        for e, c in d.items():
            e = int(e)
            c = int(c)
            acc[e] = acc.get(e, 0) + c
        return IntPoly(tuple(acc.items()))

    @property
    def degree(self) -> int:
        return self.coeffs[-1][0] if self.coeffs else -1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1][1] if self.coeffs else 0

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        d = self.degree
        if d < 0:
            return Fraction(0)
        num = sum(c * p**e * q ** (d - e) for e, c in self.coeffs)
        return Fraction(num, q**d)

    def sign_at(self, x) -> int:
        """Exact sign of p(x) at a rational point, via integer arithmetic."""
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        d = self.degree
        if d < 0:
            return 0
        num = sum(c * p**e * q ** (d - e) for e, c in self.coeffs)
        return (num > 0) - (num < 0)

    def to_json_dict(self) -> dict:
        return {"coeffs": {str(e): str(c) for e, c in self.coeffs}}


@dataclass(frozen=True)
class RootEnclosure:
    """Bracket lo < root < hi with recorded endpoint signs, plus the mesh
    certificate that p > 0 between hi and the search bound."""

    lo: Fraction
    hi: Fraction
    sign_lo: int
    sign_hi: int

    @property
    def interval(self) -> RatInterval:
        return RatInterval(self.lo, self.hi)

    def to_json_dict(self) -> dict:
        return {
            "lo_decimal": decimal_str(self.lo, rounding="floor"),
            "lo_num": str(self.lo.numerator),
            "lo_den": str(self.lo.denominator),
            "hi_decimal": decimal_str(self.hi, rounding="ceil"),
            "hi_num": str(self.hi.numerator),
            "hi_den": str(self.hi.denominator),
            "sign_lo": self.sign_lo,
            "sign_hi": self.sign_hi,
        }


@dataclass(frozen=True)
class LrootReport:
    m: int
    bound_holds: bool
    ineq1: bool
    ineq2: bool
    ineq3: bool
    root: RootEnclosure
    m_power_enclosure: RatInterval  # certified enclosure of m**(3/m)


def build_T(s: int, t: int) -> IntPoly:
    """(x-1)x^(s+t+1) - 2(x^(s+1) + x^(t+1)) - (x-1), for s, t >= 1.

    Symmetric in (s, t); value at 1 is -4 identically.
    """
    if s < 1 or t < 1:
        raise DomainError("build_T requires s >= 1 and t >= 1")
    acc: dict[int, int] = {}

    def add(e: int, c: int) -> None:
        acc[e] = acc.get(e, 0) + c

    add(s + t + 2, 1)
    add(s + t + 1, -1)
    add(s + 1, -2)
    add(t + 1, -2)
    add(1, -1)
    add(0, 1)
    return IntPoly(tuple(acc.items()))


def build_Tm(m: int) -> IntPoly:
    """Balanced member T_m = T(floor(m/2), ceil(m/2)), m >= 2."""
    if m < 2:
        raise DomainError("build_Tm requires m >= 2")
    return build_T(m // 2, (m + 1) // 2)


def _nonroot_point(p: IntPoly, lo: Fraction, hi: Fraction) -> tuple[Fraction, int]:
    """A point strictly inside (lo, hi) where p does not vanish, with its sign."""
    span = hi - lo
    for num, den in ((1, 2), (3, 7), (5, 9), (4, 13), (9, 17), (11, 23), (13, 31)):
        x = lo + span * Fraction(num, den)
        s = p.sign_at(x)
        if s != 0:
            return x, s
    raise NoSignChange("could not find a non-root sample point; interval saturated with roots")


def largest_root(
    p: IntPoly,
    search_hi,
    rel_width: Fraction = DEFAULT_ROOT_REL_WIDTH,
) -> RootEnclosure:
    """Rightmost sign-change bracket for p on [1, search_hi].

    Preconditions: positive leading coefficient, p(1) < 0, p(search_hi) > 0
    (else NoSignChange, the caller must enlarge). Bisection keeps the bracket
    with p(lo) < 0 < p(hi); once the width target is met, p is evaluated on a
    64-point mesh between hi and search_hi. A nonpositive mesh value exposes a
    sign change further right, in which case bisection restarts there, so the
    returned bracket is the rightmost one the mesh can distinguish.
    """
    search_hi = Fraction(search_hi)
    rel_width = Fraction(rel_width)
    if p.leading_coefficient <= 0:
        raise DomainError("largest_root requires a positive leading coefficient")
    if p.sign_at(1) >= 0:
        raise DomainError("largest_root requires p(1) < 0")
    if p.sign_at(search_hi) <= 0:
        raise NoSignChange(f"p(search_hi) <= 0 at search_hi={search_hi}; enlarge search_hi")
    lo, hi = Fraction(1), search_hi
    for _restart in range(128):
        while hi - lo > rel_width * lo:
            mid, s = _nonroot_point(p, lo, hi)
            if s < 0:
                lo = mid
            else:
                hi = mid
        # maximality mesh between hi and search_hi
        dirty = None
        if search_hi > hi:
            step = (search_hi - hi) / MESH_POINTS
            for t in range(1, MESH_POINTS):
                x = hi + step * t
                if p.sign_at(x) <= 0:
                    dirty = x
                    break
        if dirty is None:
            return RootEnclosure(lo=lo, hi=hi, sign_lo=-1, sign_hi=1)
        if p.sign_at(dirty) == 0:
            raise NoSignChange("mesh hit an exact rational root; bracket not isolable")
        lo, hi = dirty, search_hi
    raise NoSignChange("mesh kept exposing sign changes; polynomial too oscillatory")


def m_cubed_root_enclosure(m: int, bits: int = 48) -> RatInterval:
    """Certified rational enclosure [a, b] with a**m < m**3 < b**m."""
    if m < 1:
        raise DomainError("m must be >= 1")
    return nth_root_enclosure(m**3, m, bits=bits)


def verify_lroot(m: int) -> LrootReport:
    """Certify that the largest root of T_m is below m**(3/m), for m >= 5,
    together with the three inequalities the bound's proof rests on.

    All checks quantify over x >= m**(3/m). (1) is transcendental and is
    checked outward at the enclosure's conservative endpoint; (2) and (3)
    attain their supremum exactly at x = m**(3/m), where the power collapses
    to an integer identity ((m^(3/m))^(-m) = m^(-3)), so they reduce to the
    exact integer tests 3*floor(m/2) >= m and m*m >= 25. At m = 5, (3) is an
    equality, which is why the endpoint is evaluated exactly rather than
    through an outward interval.
    """
    if m < 5:
        raise DomainError("verify_lroot requires m >= 5")
    mp = m_cubed_root_enclosure(m)
    root = largest_root(build_Tm(m), search_hi=mp.hi + 1)
    bound_holds = root.hi < mp.lo

    logm = log_enclosure(m)
    # (1) x - 1 > 3 log(m)/m for all x >= m^(3/m), worst case at the endpoint;
    #     and 3 log(m)/m >= 9/(2m), i.e. log m >= 3/2.
    ineq1 = (mp.lo - 1) * m > 3 * logm.hi and logm.lo >= Fraction(3, 2)
    # (2) x^(floor(m/2)-m) <= x^(ceil(m/2)-m) <= 1/m on x >= m^(3/m) > 1
    ineq2 = mp.lo > 1 and 3 * (m // 2) >= m
    # (3) x^(-m) <= 1/(25m) on x >= m^(3/m), equality at m = 5
    ineq3 = m * m >= 25
    return LrootReport(
        m=m,
        bound_holds=bound_holds,
        ineq1=ineq1,
        ineq2=ineq2,
        ineq3=ineq3,
        root=root,
        m_power_enclosure=mp,
    )


# ---------------------------------------------------------------------------
# Exact characteristic-polynomial machinery (oracle route)
# ---------------------------------------------------------------------------


def char_poly(matrix: IntMatrix) -> IntPoly:
    """Characteristic polynomial det(xI - M), exact, by Faddeev-LeVerrier."""
    k = matrix.k
    m = [[Fraction(x) for x in row] for row in matrix.entries]
    n = [[Fraction(1) if i == j else Fraction(0) for j in range(k)] for i in range(k)]
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(1)
    for i in range(1, k + 1):
        n = [
            [sum(m[r][t] * n[t][c] for t in range(k)) for c in range(k)]
            for r in range(k)
        ]
        tr = sum(n[t][t] for t in range(k))
        ci = -tr / i
        coeffs[k - i] = ci
        for t in range(k):
            n[t][t] += ci
    out = {}
    for e, c in enumerate(coeffs):
        if c != 0:
            if c.denominator != 1:
                raise AssertionError("Faddeev-LeVerrier produced a non-integer coefficient")
            out[e] = c.numerator
    return IntPoly.from_dict(out)


def _dense(p: IntPoly) -> list[Fraction]:
    if p.degree < 0:
        return []
    c = [Fraction(0)] * (p.degree + 1)
    for e, coef in p.coeffs:
        c[e] = Fraction(coef)
    return c


def _trim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _eval_dense(c: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for coef in reversed(c):
        acc = acc * x + coef
    return acc


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        factor = a[-1] / lb
        shift = len(a) - 1 - db
        for i in range(len(b)):
            a[shift + i] -= factor * b[i]
        a.pop()
        _trim(a)
        if not a:
            break
    return a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(a[:]), _trim(b[:])
    while b:
        a, b = b, _poly_rem(a, b)
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
    return a


def _derivative(c: list[Fraction]) -> list[Fraction]:
    return [c[i] * i for i in range(1, len(c))]


def _squarefree(c: list[Fraction]) -> list[Fraction]:
    g = _poly_gcd(c, _derivative(c))
    if len(g) <= 1:
        return _trim(c[:])
    # exact division c / g, one quotient coefficient per degree so zero
    # coefficients keep their place
    rem = c[:]
    dq = len(rem) - len(g)
    q = [Fraction(0)] * (dq + 1)
    for d in range(dq, -1, -1):
        coef = rem[d + len(g) - 1] / g[-1]
        q[d] = coef
        if coef:
            for i in range(len(g)):
                rem[d + i] -= coef * g[i]
    if any(rem[i] != 0 for i in range(len(g) - 1)):
        raise AssertionError("inexact division by gcd in squarefree reduction")
    return _trim(q)


def _sturm_chain(c: list[Fraction]) -> list[list[Fraction]]:
    chain = [_trim(c[:]), _trim(_derivative(c))]
    while chain[-1]:
        rem = _poly_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-x for x in rem])
    return [p for p in chain if p]


def _sign_changes(values: list[Fraction]) -> int:
    signs = [(v > 0) - (v < 0) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots_above(p: IntPoly, a: Fraction) -> int:
    """Number of distinct real roots of p strictly above the rational a.

    Requires p(a) != 0. Sturm chain of the squarefree part, compared against
    the signs at +infinity (leading coefficients).
    """
    a = Fraction(a)
    sq = _squarefree(_dense(p))
    if _eval_dense(sq, a) == 0:
        raise ValueError("count_real_roots_above requires p(a) != 0")
    chain = _sturm_chain(sq)
    at_a = _sign_changes([_eval_dense(c, a) for c in chain])
    at_inf = _sign_changes([c[-1] for c in chain])
    return at_a - at_inf


def isolate_largest_real_root(
    p: IntPoly,
    hi_bound,
    max_width=Fraction(1, 2**80),
) -> RatInterval:
    """Isolating interval for the largest real root of p.

    Requires p to have at least one real root and none above hi_bound.
    Bisection on the predicate `count_real_roots_above(c) >= 1`, refined until
    the interval contains exactly one distinct root of the squarefree part.
    """
    hi_bound = Fraction(hi_bound)
    if count_real_roots_above(p, hi_bound) != 0:
        raise DomainError("hi_bound does not dominate all real roots")
    lo = -abs(hi_bound) - 1
    total = count_real_roots_above(p, lo)
    if total < 1:
        raise DomainError("polynomial has no real root in range")
    hi = hi_bound
    n_above_lo = total
    while hi - lo > max_width or n_above_lo != 1:
        mid, _ = _nonroot_point_dense(p, lo, hi)
        n = count_real_roots_above(p, mid)
        if n >= 1:
            lo = mid
            n_above_lo = n
        else:
            hi = mid
        if hi - lo < Fraction(1, 2**4000):
            raise AssertionError("failed to isolate largest real root")
    return RatInterval(lo, hi)


def _nonroot_point_dense(p: IntPoly, lo: Fraction, hi: Fraction) -> tuple[Fraction, int]:
    span = hi - lo
    for num, den in ((1, 2), (3, 7), (5, 9), (4, 13), (9, 17), (11, 23), (13, 31)):
        x = lo + span * Fraction(num, den)
        s = p.sign_at(x)
        if s != 0:
            return x, s
    raise AssertionError("no non-root point found")


def compare_largest_roots(pa: IntPoly, pb: IntPoly, hi_a, hi_b) -> int:
    """Exact trichotomy for the largest real roots: -1, 0, or +1.

    Separation is decided by refining isolating intervals; equality is
    certified by a common root of gcd(pa, pb) inside the overlap of the two
    isolating intervals (each isolates exactly one root, so a shared root in
    the overlap is necessarily both largest roots).
    """
    ia = isolate_largest_real_root(pa, hi_a)
    ib = isolate_largest_real_root(pb, hi_b)
    for _ in range(200):
        if ia.hi < ib.lo:
            return -1
        if ib.hi < ia.lo:
            return 1
        g = _poly_gcd(_squarefree(_dense(pa)), _squarefree(_dense(pb)))
        if len(g) > 1:
            o_lo = max(ia.lo, ib.lo)
            o_hi = min(ia.hi, ib.hi)
            gp = IntPoly.from_dict(
                {e: int(c * _common_den(g)) for e, c in enumerate(g) if c != 0}
            )
            if gp.sign_at(o_lo) == 0 or gp.sign_at(o_hi) == 0:
                return 0
            if count_real_roots_above(gp, o_lo) - count_real_roots_above(gp, o_hi) >= 1:
                return 0
        ia = _halve(pa, ia)
        ib = _halve(pb, ib)
    raise AssertionError("compare_largest_roots failed to separate or certify equality")


def _common_den(g: list[Fraction]) -> int:
    from math import lcm

    d = 1
    for c in g:
        d = lcm(d, c.denominator)
    return d


def _halve(p: IntPoly, iv: RatInterval) -> RatInterval:
    mid, _ = _nonroot_point_dense(p, iv.lo, iv.hi)
    if count_real_roots_above(p, mid) >= 1:
        return RatInterval(mid, iv.hi)
    return RatInterval(iv.lo, mid)


def mu_compare(a: IntMatrix, b: IntMatrix) -> int:
    """Exact comparison of spectral radii of nonnegative matrices via their
    characteristic polynomials: -1 if mu(a) < mu(b), 0 if equal, +1 if greater."""
    pa, pb = char_poly(a), char_poly(b)
    hi_a = max(a.row_sums()) + 1
    hi_b = max(b.row_sums()) + 1
    return compare_largest_roots(pa, pb, hi_a, hi_b)
