"""Lefschetz numbers of multitwists through their symplectic homology action,
and the local fixed-point index of plane models by winding numbers.

The multitwist path is exact integer linear algebra end to end. The winding
computation is the one deliberately float-based kernel in the library: it
returns an integer degree whose correctness is guarded by the increment
check, and it is cross-checked against the sign(det(A - I)) oracle in the
test suites rather than trusted on its own.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DomainError,
    FixedPointOnCircle,
    GenusMismatch,
    IncrementTooLarge,
    NotPairwiseOrthogonal,
)

__all__ = [
    "HomologyClass",
    "SympAction",
    "LinearPlaneMap",
    "SectorRotation",
    "symp_form",
    "transvection",
    "multitwist_action",
    "multitwist_lefschetz",
    "local_index",
    "linear_index_oracle",
]


@dataclass(frozen=True)
class HomologyClass:
    """Integer vector in the basis (a_1..a_g, b_1..b_g) with <a_i, b_j> = delta_ij.

    The zero vector is allowed; it is how a separating curve enters (its twist
    acts trivially on first homology).
    """

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) == 0 or len(self.coords) % 2 != 0:
            raise ValueError("coordinates must have even positive length 2g")
        if not all(isinstance(x, int) for x in self.coords):
            raise ValueError("coordinates must be integers")
        object.__setattr__(self, "coords", tuple(self.coords))

    @property
    def g(self) -> int:
        return len(self.coords) // 2

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    @staticmethod
    def zero(g: int) -> "HomologyClass":
        return HomologyClass((0,) * (2 * g))

    @staticmethod
    def alpha(i: int, g: int) -> "HomologyClass":
        if not 1 <= i <= g:
            raise ValueError(f"alpha index {i} outside 1..{g}")
        return HomologyClass(tuple(1 if t == i - 1 else 0 for t in range(2 * g)))

    @staticmethod
    def beta(i: int, g: int) -> "HomologyClass":
        if not 1 <= i <= g:
            raise ValueError(f"beta index {i} outside 1..{g}")
        return HomologyClass(tuple(1 if t == g + i - 1 else 0 for t in range(2 * g)))


def symp_form(u: HomologyClass, v: HomologyClass) -> int:
    """The standard symplectic pairing u^T J v, exactly."""
    if u.g != v.g:
        raise GenusMismatch(f"genus mismatch: {u.g} vs {v.g}")
    g = u.g
    return sum(u.coords[t] * v.coords[g + t] - u.coords[g + t] * v.coords[t] for t in range(g))


def _form_on_vectors(u: tuple[int, ...], v: tuple[int, ...], g: int) -> int:
    return sum(u[t] * v[g + t] - u[g + t] * v[t] for t in range(g))


@dataclass(frozen=True)
class SympAction:
    """2g x 2g integer matrix preserving the standard symplectic form.

    Construction checks A^T J A = J exactly and refuses anything else, so a
    SympAction in hand is itself the certificate.
    """

    g: int
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = 2 * self.g
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ValueError(f"matrix must be {n}x{n}")
        if not all(isinstance(x, int) for row in self.matrix for x in row):
            raise ValueError("matrix entries must be integers")
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in self.matrix))
        cols = list(zip(*self.matrix))
        for a in range(n):
            for b in range(n):
                want = 0
                if b == a + self.g:
                    want = 1
                elif a == b + self.g:
                    want = -1
                if _form_on_vectors(cols[a], cols[b], self.g) != want:
                    raise ValueError("matrix does not preserve the symplectic form")

    @staticmethod
    def identity(g: int) -> "SympAction":
        n = 2 * g
        return SympAction(g, tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n)))

    @property
    def trace(self) -> int:
        return sum(self.matrix[t][t] for t in range(2 * self.g))

    def __matmul__(self, other: "SympAction") -> "SympAction":
        if self.g != other.g:
            raise GenusMismatch(f"genus mismatch: {self.g} vs {other.g}")
        n = 2 * self.g
        cols = list(zip(*other.matrix))
        prod = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.matrix
        )
        return SympAction(self.g, prod)

    def apply(self, v: HomologyClass) -> HomologyClass:
        if self.g != v.g:
            raise GenusMismatch(f"genus mismatch: {self.g} vs {v.g}")
        return HomologyClass(
            tuple(sum(a * b for a, b in zip(row, v.coords)) for row in self.matrix)
        )


def transvection(gamma: HomologyClass, power: int) -> SympAction:
    """The twist action v -> v + power * <v, gamma> * gamma.

    Symplectic for every integer power; the zero class and power 0 both give
    the identity.
    """
    g = gamma.g
    n = 2 * g
    cols = []
    for c in range(n):
        e = tuple(1 if t == c else 0 for t in range(n))
        pairing = _form_on_vectors(e, gamma.coords, g)
        cols.append(tuple(e[r] + power * pairing * gamma.coords[r] for r in range(n)))
    matrix = tuple(tuple(cols[c][r] for c in range(n)) for r in range(n))
    return SympAction(g, matrix)


def _check_twists(twists, g: int) -> None:
    classes = []
    for idx, (gamma, power) in enumerate(twists):
        if gamma.g != g:
            raise GenusMismatch(f"twist {idx}: class has genus {gamma.g}, expected {g}")
        if not isinstance(power, int) or power == 0:
            raise DomainError(f"twist {idx}: power must be a nonzero integer")
        classes.append(gamma)
    for a in range(len(classes)):
        for b in range(a + 1, len(classes)):
            if symp_form(classes[a], classes[b]) != 0:
                raise NotPairwiseOrthogonal(
                    f"classes {a} and {b} pair to {symp_form(classes[a], classes[b])} != 0"
                )


def multitwist_action(twists, g: int) -> SympAction:
    """Product of the transvections of a pairwise-orthogonal twist system."""
    if g < 1:
        raise DomainError("genus must be >= 1")
    _check_twists(twists, g)
    action = SympAction.identity(g)
    for gamma, power in twists:
        action = action @ transvection(gamma, power)
    return action


def multitwist_lefschetz(twists, g: int) -> int:
    """Lefschetz number of a multitwist on the closed genus-g surface.

    Degree 0 and 2 contribute a trace of 1 each, higher degrees vanish, so
    the number is 2 - trace of the product of transvections. Under the
    pairwise-orthogonality hypothesis that trace is 2g and the result is the
    Euler characteristic 2 - 2g; the hypothesis is enforced, not assumed.
    """
    return 2 - multitwist_action(twists, g).trace


# ---------------------------------------------------------------------------
# Local fixed-point index of plane models
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearPlaneMap:
    """Plane map (x, y) -> (a x + b y, c x + d y) with an isolated fixed
    point at the origin when det(A - I) != 0."""

    a: float
    b: float
    c: float
    d: float

    def apply(self, x: float, y: float) -> tuple[float, float]:
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def det_minus_identity(self) -> float:
        return (self.a - 1.0) * (self.d - 1.0) - self.b * self.c


@dataclass(frozen=True)
class SectorRotation:
    """Rotation of the plane by 2*pi*j/k."""

    j: int
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")

    def apply(self, x: float, y: float) -> tuple[float, float]:
        theta = 2.0 * math.pi * self.j / self.k
        ct, st = math.cos(theta), math.sin(theta)
        return (ct * x - st * y, st * x + ct * y)


_MAX_SAMPLES = 1 << 20


def local_index(model, samples: int = 64, radius: float = 1.0) -> int:
    """Winding number of z -> f(z) - z around a circle about the origin.

    Angle increments are accumulated sample to sample; every increment must
    stay below pi/2 or the circle is resampled twice as densely, doubling up
    to 2^20 points. The rounded total is the exact integer index of the
    isolated fixed point inside.
    """
    if samples < 4:
        raise DomainError("need at least 4 samples")
    if radius <= 0:
        raise DomainError("radius must be positive")
    n = samples
    while n <= _MAX_SAMPLES:
        angles = []
        ok = True
        for t in range(n + 1):
            theta = 2.0 * math.pi * (t % n) / n
            x = radius * math.cos(theta)
            y = radius * math.sin(theta)
            fx, fy = model.apply(x, y)
            vx, vy = fx - x, fy - y
            if math.hypot(vx, vy) < 1e-14 * radius:
                raise FixedPointOnCircle(
                    f"f(z) = z at angle {theta:.6f} on radius {radius}"
                )
            angles.append(math.atan2(vy, vx))
        total = 0.0
        for t in range(n):
            delta = angles[t + 1] - angles[t]
            while delta > math.pi:
                delta -= 2.0 * math.pi
            while delta < -math.pi:
                delta += 2.0 * math.pi
            if abs(delta) >= math.pi / 2:
                ok = False
                break
            total += delta
        if ok:
            winding = total / (2.0 * math.pi)
            rounded = round(winding)
            if abs(winding - rounded) > 0.25:
                ok = False
            else:
                return rounded
        n *= 2
    raise IncrementTooLarge(f"no sampling up to {_MAX_SAMPLES} points tamed the increments")


def linear_index_oracle(model: LinearPlaneMap) -> int:
    """Independent classical identity: for linear A with det(A - I) != 0 the
    index at the origin is the sign of det(A - I)."""
    d = model.det_minus_identity()
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0
