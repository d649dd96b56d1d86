"""Geometric predicates and constructions behind a pluggable kernel.

Two kernels are provided: a fast inexact one that snaps near-zero
determinants to zero using a relative epsilon, and an extended-precision
one that filters with a floating-point error bound and falls back to
exact rational arithmetic for the sign decision.  Constructions (ray
intersections, bisectors, projections) are evaluated in plain floats in
both modes; only predicate signs get the extended treatment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

TWO_PI = 2.0 * math.pi

# Sentinel returned by ray_intersection for colinear overlapping rays.
DEGENERATE_OVERLAP = object()


class NumericalFailure(Exception):
    """Robustness failure of an inexact run; retry with the extended kernel."""

    def __init__(self, message, cone_index=None):
        super().__init__(message)
        self.cone_index = cone_index


class InvariantError(Exception):
    """Structural corruption: indicates a bug, not a numerical problem."""


def normalize_angle(a: float) -> float:
    """Normalize an angle to [0, 2*pi)."""
    r = a % TWO_PI
    if r >= TWO_PI or r < 0.0:
        r = 0.0
    return r


@dataclass(frozen=True, slots=True)
class Point:
    """An indexed input site in the plane."""

    id: int
    x: float
    y: float


@dataclass(frozen=True, slots=True)
class DirectedLine:
    """A ray: origin plus a direction, kept both as angle and unit vector."""

    ox: float
    oy: float
    angle: float
    dx: float
    dy: float

    @classmethod
    def from_angle(cls, ox: float, oy: float, angle: float) -> "DirectedLine":
        a = normalize_angle(angle)
        return cls(ox, oy, a, math.cos(a), math.sin(a))

    @classmethod
    def from_direction(cls, ox: float, oy: float, dx: float, dy: float) -> "DirectedLine":
        return cls(ox, oy, normalize_angle(math.atan2(dy, dx)), dx, dy)


@lru_cache(maxsize=None)
def cone_directions(k: int) -> tuple:
    """Unit direction of every cone boundary ray, computed once per k.

    All algorithms must share these values so that points exactly on a
    cone boundary are classified identically everywhere.
    """
    if k <= 1:
        raise ValueError("cone count k must be > 1")
    out = []
    for j in range(k):
        a = (TWO_PI * j) / k
        out.append((math.cos(a), math.sin(a)))
    return tuple(out)


@dataclass(frozen=True, slots=True)
class ConeSpec:
    """Cone i of k: limiting angles, sweep direction and cached unit vectors."""

    k: int
    i: int
    theta_l: float
    theta_r: float
    tau: float
    dir_l: tuple       # unit vector at theta_l (canonical, shared)
    dir_r: tuple       # unit vector at theta_r
    tau_vec: tuple     # unit vector at tau

    @classmethod
    def make(cls, k: int, i: int) -> "ConeSpec":
        if k <= 1:
            raise ValueError("cone count k must be > 1")
        if not 0 <= i < k:
            raise ValueError("cone index out of range")
        theta_l = (TWO_PI * i) / k
        theta_r = (TWO_PI * (i + 1)) / k
        tau = normalize_angle((theta_l + theta_r) / 2.0 + math.pi)
        dirs = cone_directions(k)
        return cls(k, i, theta_l, normalize_angle(theta_r), tau,
                   dirs[i], dirs[(i + 1) % k], (math.cos(tau), math.sin(tau)))


@dataclass(frozen=True, slots=True)
class KernelConfig:
    """Kernel selection: mode plus the snap tolerance used in inexact mode."""

    mode: str = "inexact"
    epsilon: float = 1e-9

    def __post_init__(self):
        if self.mode not in ("inexact", "extended"):
            raise ValueError(f"unknown kernel mode: {self.mode!r}")
        if self.mode == "inexact" and not self.epsilon > 0.0:
            raise ValueError("epsilon must be positive in inexact mode")


LEFT, ON, RIGHT = 1, 0, -1

# Error-bound coefficient for the extended kernel's floating-point filter.
# A 2x2 determinant of rounded products has error below 4 ulp of the
# magnitude sum; 1e-14 leaves two orders of magnitude of headroom.
_FILTER = 1e-14


class InexactKernel:
    """Plain double predicates with relative epsilon snapping."""

    name = "inexact"

    def __init__(self, epsilon: float = 1e-9):
        self.epsilon = epsilon

    def side(self, ox, oy, dx, dy, qx, qy):
        """Side of the directed line (origin, direction): LEFT/ON/RIGHT."""
        t1 = dx * (qy - oy)
        t2 = dy * (qx - ox)
        det = t1 - t2
        if abs(det) <= self.epsilon * (abs(t1) + abs(t2)):
            return ON
        return LEFT if det > 0.0 else RIGHT

    def cmp_dist(self, px, py, ax, ay, bx, by):
        """Sign of d(p,a)^2 - d(p,b)^2 (no square roots)."""
        da = (ax - px) ** 2 + (ay - py) ** 2
        db = (bx - px) ** 2 + (by - py) ** 2
        d = da - db
        if abs(d) <= self.epsilon * (da + db):
            return 0
        return 1 if d > 0.0 else -1

    def cmp_proj(self, ax, ay, bx, by, tx, ty):
        """Sign of prj(a) - prj(b) along unit direction (tx, ty)."""
        t1 = (ax - bx) * tx
        t2 = (ay - by) * ty
        d = t1 + t2
        if abs(d) <= self.epsilon * (abs(t1) + abs(t2)):
            return 0
        return 1 if d > 0.0 else -1


class ExtendedKernel:
    """Filtered predicates: float fast path, exact rationals when in doubt."""

    name = "extended"

    # A nominal tolerance is still exposed; it only scales the queue's
    # stale-event guard (constructions stay inexact in this mode too).
    epsilon = 0.0

    def side(self, ox, oy, dx, dy, qx, qy):
        t1 = dx * (qy - oy)
        t2 = dy * (qx - ox)
        det = t1 - t2
        if abs(det) > _FILTER * (abs(t1) + abs(t2)):
            return LEFT if det > 0.0 else RIGHT
        det = Fraction(dx) * (Fraction(qy) - Fraction(oy)) \
            - Fraction(dy) * (Fraction(qx) - Fraction(ox))
        if det == 0:
            return ON
        return LEFT if det > 0 else RIGHT

    def cmp_dist(self, px, py, ax, ay, bx, by):
        da = (ax - px) ** 2 + (ay - py) ** 2
        db = (bx - px) ** 2 + (by - py) ** 2
        d = da - db
        if abs(d) > _FILTER * (da + db):
            return 1 if d > 0.0 else -1
        fpx, fpy = Fraction(px), Fraction(py)
        da = (Fraction(ax) - fpx) ** 2 + (Fraction(ay) - fpy) ** 2
        db = (Fraction(bx) - fpx) ** 2 + (Fraction(by) - fpy) ** 2
        if da == db:
            return 0
        return 1 if da > db else -1

    def cmp_proj(self, ax, ay, bx, by, tx, ty):
        t1 = (ax - bx) * tx
        t2 = (ay - by) * ty
        d = t1 + t2
        if abs(d) > _FILTER * (abs(t1) + abs(t2)):
            return 1 if d > 0.0 else -1
        d = (Fraction(ax) - Fraction(bx)) * Fraction(tx) \
            + (Fraction(ay) - Fraction(by)) * Fraction(ty)
        if d == 0:
            return 0
        return 1 if d > 0 else -1


def make_kernel(config_or_name="inexact", epsilon: float = 1e-9):
    """Build a kernel from a KernelConfig or a mode name."""
    if isinstance(config_or_name, KernelConfig):
        mode, epsilon = config_or_name.mode, config_or_name.epsilon
    else:
        mode = config_or_name
    if mode == "inexact":
        return InexactKernel(epsilon)
    if mode == "extended":
        return ExtendedKernel()
    raise ValueError(f"unknown kernel mode: {mode!r}")


def project(x: float, y: float, tau: float) -> float:
    """Projection of a point onto the sweep direction tau."""
    sx, sy = math.cos(tau), math.sin(tau)
    return (x * sx + y * sy) / (sx * sx + sy * sy)


def angle_of(px, py, qx, qy) -> float:
    """Angle of the vector from p to q, in [0, 2*pi)."""
    if px == qx and py == qy:
        raise ValueError("coincident-points")
    return normalize_angle(math.atan2(qy - py, qx - px))


def bisector(ax, ay, bx, by) -> DirectedLine:
    """Perpendicular bisector of segment ab through its midpoint."""
    if ax == bx and ay == by:
        raise ValueError("degenerate-bisector")
    mx, my = (ax + bx) / 2.0, (ay + by) / 2.0
    return DirectedLine.from_angle(mx, my, angle_of(ax, ay, bx, by) + math.pi / 2.0)


def cone_boundaries(p: Point, cone: ConeSpec):
    """The two rays delimiting cone i apexed at p, using canonical directions."""
    lx, ly = cone.dir_l
    rx, ry = cone.dir_r
    left = DirectedLine(p.x, p.y, cone.theta_l, lx, ly)
    right = DirectedLine(p.x, p.y, cone.theta_r, rx, ry)
    return left, right


def ray_intersection(r1: DirectedLine, r2: DirectedLine, kernel=None,
                     t1_max: float = math.inf, t2_max: float = math.inf):
    """Forward-forward intersection of two rays.

    Returns (x, y, t1, t2) with both parameters in [0, t_max], None when
    there is no such intersection, or DEGENERATE_OVERLAP for colinear rays
    sharing a support line (the caller decides what that means).
    """
    if kernel is None:
        kernel = _DEFAULT_KERNEL
    d1x, d1y, d2x, d2y = r1.dx, r1.dy, r2.dx, r2.dy
    wx, wy = r2.ox - r1.ox, r2.oy - r1.oy
    side_dir = kernel.side(0.0, 0.0, d1x, d1y, d2x, d2y)
    if side_dir == ON:
        if kernel.side(r1.ox, r1.oy, d1x, d1y, r2.ox, r2.oy) == ON:
            return DEGENERATE_OVERLAP
        return None
    denom = d1x * d2y - d1y * d2x
    t1 = (wx * d2y - wy * d2x) / denom
    t2 = (wx * d1y - wy * d1x) / denom
    if t1 < 0.0 or t2 < 0.0 or t1 > t1_max or t2 > t2_max:
        return None
    return (r1.ox + t1 * d1x, r1.oy + t1 * d1y, t1, t2)


_DEFAULT_KERNEL = InexactKernel()
