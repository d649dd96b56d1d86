import math
import random

import pytest

from yaograph.kernel import (
    DEGENERATE_OVERLAP,
    ConeSpec,
    DirectedLine,
    InexactKernel,
    ExtendedKernel,
    KernelConfig,
    LEFT,
    ON,
    RIGHT,
    Point,
    TWO_PI,
    angle_of,
    bisector,
    cone_boundaries,
    cone_directions,
    make_kernel,
    normalize_angle,
    project,
    ray_intersection,
)

INEXACT = InexactKernel()
EXTENDED = ExtendedKernel()


class TestProject:
    def test_axis_aligned(self):
        assert project(2.0, 5.0, 3.0 * math.pi / 2.0) == pytest.approx(-5.0)

    def test_origin_any_tau(self):
        for tau in (0.0, 1.0, 2.5, 6.0):
            assert project(0.0, 0.0, tau) == 0.0

    def test_oblique(self):
        assert project(1.0, 0.0, 7.0 * math.pi / 6.0) == pytest.approx(-math.sqrt(3) / 2)

    def test_antipodal_reverses_sign(self):
        rng = random.Random(7)
        for _ in range(200):
            x, y = rng.uniform(-5, 5), rng.uniform(-5, 5)
            tau = rng.uniform(0, TWO_PI)
            assert project(x, y, tau) == pytest.approx(-project(x, y, tau + math.pi))


class TestCompareProjection:
    def test_vertical(self):
        assert INEXACT.cmp_proj(0, 0, 0, 1, 0.0, 1.0) == -1

    def test_equal(self):
        assert INEXACT.cmp_proj(3, 4, 3, 4, 0.6, 0.8) == 0

    def test_oblique(self):
        tau = 7 * math.pi / 6
        tv = (math.cos(tau), math.sin(tau))
        assert INEXACT.cmp_proj(1, 0, 0, 1, *tv) == -1

    def test_agrees_with_project(self):
        rng = random.Random(11)
        for _ in range(2000):
            ax, ay = rng.uniform(-2, 2), rng.uniform(-2, 2)
            bx, by = rng.uniform(-2, 2), rng.uniform(-2, 2)
            tau = rng.uniform(0, TWO_PI)
            tv = (math.cos(tau), math.sin(tau))
            got = INEXACT.cmp_proj(ax, ay, bx, by, *tv)
            diff = project(ax, ay, tau) - project(bx, by, tau)
            if abs(diff) > 1e-8:
                assert got == (1 if diff > 0 else -1)


class TestCompareDistance:
    def test_simple(self):
        assert INEXACT.cmp_dist(0, 0, 1, 0, 2, 0) == -1

    def test_pythagorean_tie(self):
        assert INEXACT.cmp_dist(0, 0, 3, 4, 5, 0) == 0
        assert EXTENDED.cmp_dist(0, 0, 3, 4, 5, 0) == 0

    def test_zero_distance(self):
        assert INEXACT.cmp_dist(1, 1, 1, 1, 2, 2) == -1

    def test_antisymmetric_and_transitive(self):
        rng = random.Random(3)
        for _ in range(500):
            p = (rng.uniform(0, 1), rng.uniform(0, 1))
            a = (rng.uniform(0, 1), rng.uniform(0, 1))
            b = (rng.uniform(0, 1), rng.uniform(0, 1))
            c = (rng.uniform(0, 1), rng.uniform(0, 1))
            assert EXTENDED.cmp_dist(*p, *a, *b) == -EXTENDED.cmp_dist(*p, *b, *a)
            if EXTENDED.cmp_dist(*p, *a, *b) <= 0 and EXTENDED.cmp_dist(*p, *b, *c) <= 0:
                assert EXTENDED.cmp_dist(*p, *a, *c) <= 0


class TestSideOfLine:
    def test_left(self):
        assert INEXACT.side(0, 0, 1.0, 0.0, 1, 1) == LEFT

    def test_on(self):
        assert INEXACT.side(0, 0, 1.0, 0.0, 5, 0) == ON

    def test_right(self):
        assert INEXACT.side(0, 0, 0.0, 1.0, 1, 0) == RIGHT

    def test_reversed_direction_flips(self):
        rng = random.Random(5)
        for _ in range(500):
            ox, oy = rng.uniform(-1, 1), rng.uniform(-1, 1)
            a = rng.uniform(0, TWO_PI)
            qx, qy = rng.uniform(-1, 1), rng.uniform(-1, 1)
            s1 = EXTENDED.side(ox, oy, math.cos(a), math.sin(a), qx, qy)
            s2 = EXTENDED.side(ox, oy, -math.cos(a), -math.sin(a), qx, qy)
            assert s1 == -s2

    def test_kernels_agree_away_from_zero(self):
        rng = random.Random(13)
        for _ in range(2000):
            ox, oy = rng.uniform(-1, 1), rng.uniform(-1, 1)
            dx, dy = rng.uniform(-1, 1), rng.uniform(-1, 1)
            qx, qy = rng.uniform(-1, 1), rng.uniform(-1, 1)
            det = dx * (qy - oy) - dy * (qx - ox)
            if abs(det) > 1e-9 * (abs(dx * (qy - oy)) + abs(dy * (qx - ox)) + 1e-300):
                assert INEXACT.side(ox, oy, dx, dy, qx, qy) == \
                    EXTENDED.side(ox, oy, dx, dy, qx, qy)


class TestConeBoundaries:
    def test_k6_cone0(self):
        left, right = cone_boundaries(Point(0, 0.0, 0.0), ConeSpec.make(6, 0))
        assert left.angle == pytest.approx(0.0)
        assert right.angle == pytest.approx(math.pi / 3)

    def test_k4_cone2_offset_origin(self):
        left, right = cone_boundaries(Point(0, 2.0, 3.0), ConeSpec.make(4, 2))
        assert (left.ox, left.oy) == (2.0, 3.0)
        assert left.angle == pytest.approx(math.pi)
        assert right.angle == pytest.approx(3 * math.pi / 2)

    def test_k2_cone1_wraps(self):
        left, right = cone_boundaries(Point(0, 0.0, 0.0), ConeSpec.make(2, 1))
        assert left.angle == pytest.approx(math.pi)
        assert right.angle == pytest.approx(0.0)

    def test_directions_shared_across_calls(self):
        assert cone_directions(6) is cone_directions(6)


class TestRayIntersection:
    def test_symmetric_cross(self):
        r1 = DirectedLine.from_angle(0, 0, math.pi / 4)
        r2 = DirectedLine.from_angle(2, 0, 3 * math.pi / 4)
        hit = ray_intersection(r1, r2)
        assert hit[0] == pytest.approx(1.0) and hit[1] == pytest.approx(1.0)
        rev = ray_intersection(r2, r1)
        assert rev[0] == pytest.approx(hit[0]) and rev[1] == pytest.approx(hit[1])

    def test_parallel_none(self):
        r1 = DirectedLine.from_angle(0, 0, 0.0)
        r2 = DirectedLine.from_angle(0, 1, 0.0)
        assert ray_intersection(r1, r2) is None

    def test_vertical_drop(self):
        r1 = DirectedLine.from_angle(0, 0, 0.0)
        r2 = DirectedLine.from_angle(1, 1, 3 * math.pi / 2)
        hit = ray_intersection(r1, r2)
        assert hit[0] == pytest.approx(1.0) and hit[1] == pytest.approx(0.0, abs=1e-12)

    def test_behind_is_rejected(self):
        r1 = DirectedLine.from_angle(0, 0, 0.0)
        r2 = DirectedLine.from_angle(-1, 1, 3 * math.pi / 2)
        assert ray_intersection(r1, r2) is None

    def test_colinear_overlap_sentinel(self):
        r1 = DirectedLine.from_direction(0, 0, 1.0, 0.0)
        r2 = DirectedLine.from_direction(1, 0, 1.0, 0.0)
        assert ray_intersection(r1, r2) is DEGENERATE_OVERLAP

    def test_extent_bound_respected(self):
        r1 = DirectedLine.from_angle(0, 0, math.pi / 4)
        r2 = DirectedLine.from_angle(2, 0, 3 * math.pi / 4)
        assert ray_intersection(r1, r2, t1_max=1.0) is None


class TestBisector:
    def test_horizontal_pair(self):
        b = bisector(0, 0, 2, 0)
        assert (b.ox, b.oy) == (1.0, 0.0)
        assert b.angle == pytest.approx(math.pi / 2)

    def test_vertical_pair(self):
        b = bisector(0, 0, 0, 2)
        assert (b.ox, b.oy) == (0.0, 1.0)
        assert b.angle == pytest.approx(math.pi)

    def test_diagonal_pair(self):
        b = bisector(0, 0, 2, 2)
        assert (b.ox, b.oy) == (1.0, 1.0)
        assert b.angle == pytest.approx(3 * math.pi / 4)

    def test_degenerate_raises(self):
        with pytest.raises(ValueError, match="degenerate-bisector"):
            bisector(1, 1, 1, 1)

    def test_points_on_line_equidistant(self):
        rng = random.Random(23)
        for _ in range(200):
            ax, ay = rng.uniform(-3, 3), rng.uniform(-3, 3)
            bx, by = rng.uniform(-3, 3), rng.uniform(-3, 3)
            if (ax, ay) == (bx, by):
                continue
            b = bisector(ax, ay, bx, by)
            t = rng.uniform(-4, 4)
            qx, qy = b.ox + t * b.dx, b.oy + t * b.dy
            da = math.hypot(qx - ax, qy - ay)
            db = math.hypot(qx - bx, qy - by)
            assert da == pytest.approx(db, rel=1e-9, abs=1e-9)


class TestAngleOf:
    def test_east(self):
        assert angle_of(0, 0, 1, 0) == 0.0

    def test_southwest(self):
        assert angle_of(0, 0, -1, -1) == pytest.approx(5 * math.pi / 4)

    def test_north_offset(self):
        assert angle_of(1, 1, 1, 2) == pytest.approx(math.pi / 2)

    def test_coincident_raises(self):
        with pytest.raises(ValueError, match="coincident-points"):
            angle_of(2, 2, 2, 2)


class TestConfig:
    def test_make_kernel_modes(self):
        assert make_kernel("inexact").name == "inexact"
        assert make_kernel("extended").name == "extended"
        assert make_kernel(KernelConfig("extended")).name == "extended"

    def test_bad_mode_rejected(self):
        with pytest.raises(ValueError):
            KernelConfig(mode="wat")
        with pytest.raises(ValueError):
            make_kernel("wat")

    def test_bad_epsilon_rejected(self):
        with pytest.raises(ValueError):
            KernelConfig(epsilon=0.0)

    def test_cone_spec_invariants(self):
        c = ConeSpec.make(6, 4)
        assert c.theta_r - c.theta_l == pytest.approx(TWO_PI / 6)
        assert c.tau == pytest.approx(normalize_angle((c.theta_l + c.theta_r) / 2 + math.pi))
        with pytest.raises(ValueError):
            ConeSpec.make(1, 0)
        with pytest.raises(ValueError):
            ConeSpec.make(4, 4)
