import math
import random

import pytest

from yaograph.kernel import InexactKernel, InvariantError
from yaograph.status import Boundary, SweepStatus, default_side_of

SIDE = default_side_of(InexactKernel())


def upward_ray(x, label):
    """A boundary pointing straight up at abscissa x (label in left_apex)."""
    return Boundary(x, 0.0, 0.0, 1.0, math.pi / 2, "B", label, label)


def labels(status):
    return [b.left_apex for b in status.boundaries()]


def build(seq):
    """Build a status holding the given labels, left to right."""
    st = SweepStatus()
    anchor = None
    for i in range(0, len(seq) - 1, 2):
        a, b = st.insert_pair_after(anchor, upward_ray(0, seq[i]), upward_ray(0, seq[i + 1]))
        anchor = b
    if len(seq) % 2:
        # odd length: append a pair then drop the trailing leaf via replace
        a, b = st.insert_pair_after(anchor, upward_ray(0, seq[-1]), upward_ray(0, "_tmp"))
        prev = a
        st.replace_pair(prev, b, upward_ray(0, seq[-1]))
    return st


class TestPairedInsert:
    def test_into_empty(self):
        st = SweepStatus()
        st.insert_pair_after(None, upward_ray(0, "B1"), upward_ray(0, "B2"))
        assert labels(st) == ["B1", "B2"]
        assert st.validate() == []

    def test_between_existing(self):
        st = SweepStatus()
        a, d = st.insert_pair_after(None, upward_ray(0, "A"), upward_ray(0, "D"))
        st.insert_pair_after(a, upward_ray(0, "B"), upward_ray(0, "C"))
        assert labels(st) == ["A", "B", "C", "D"]
        assert st.validate() == []

    def test_at_front(self):
        st = SweepStatus()
        st.insert_pair_after(None, upward_ray(0, "C"), upward_ray(0, "D"))
        st.insert_pair_after(None, upward_ray(0, "A"), upward_ray(0, "B"))
        assert labels(st) == ["A", "B", "C", "D"]
        assert st.validate() == []

    def test_random_inserts_match_reference_list(self):
        rng = random.Random(42)
        st = SweepStatus()
        ref = []
        nodes = []
        for i in range(10_000):
            la, lb = f"a{i}", f"b{i}"
            if not ref:
                pos = 0
                anchor = None
            else:
                pos = rng.randrange(len(ref) + 1)
                anchor = nodes[pos - 1] if pos > 0 else None
            na, nb = st.insert_pair_after(anchor, upward_ray(0, la), upward_ray(0, lb))
            ref[pos:pos] = [la, lb]
            nodes[pos:pos] = [na, nb]
        assert labels(st) == ref
        assert st.validate() == []


class TestReplacePair:
    def test_middle(self):
        st = build(["A", "B", "C", "D"])
        nodes = list(st.leaves())
        st.replace_pair(nodes[1], nodes[2], upward_ray(0, "X"))
        assert labels(st) == ["A", "X", "D"]
        assert st.validate() == []

    def test_whole_status(self):
        st = build(["B", "C"])
        nodes = list(st.leaves())
        st.replace_pair(nodes[0], nodes[1], upward_ray(0, "X"))
        assert labels(st) == ["X"]
        assert st.validate() == []

    def test_non_adjacent_rejected(self):
        st = build(["A", "B", "C", "D"])
        nodes = list(st.leaves())
        with pytest.raises(InvariantError):
            st.replace_pair(nodes[0], nodes[2], upward_ray(0, "X"))

    def test_neighbors_rewired(self):
        st = build(["A", "B", "C", "D"])
        nodes = list(st.leaves())
        x = st.replace_pair(nodes[1], nodes[2], upward_ray(0, "X"))
        assert nodes[0].nxt is x
        assert nodes[3].prev is x
        assert x.prev is nodes[0] and x.nxt is nodes[3]

    def test_random_interleaving_vs_reference(self):
        rng = random.Random(7)
        st = SweepStatus()
        ref = []
        nodes = []
        ops = 0
        rotations_budget_ops = 0
        for _ in range(4000):
            do_insert = not ref or len(ref) < 4 or rng.random() < 0.55
            if do_insert:
                la, lb = f"a{ops}", f"b{ops}"
                pos = rng.randrange(len(ref) + 1) if ref else 0
                anchor = nodes[pos - 1] if pos > 0 else None
                na, nb = st.insert_pair_after(anchor, upward_ray(0, la), upward_ray(0, lb))
                ref[pos:pos] = [la, lb]
                nodes[pos:pos] = [na, nb]
            else:
                pos = rng.randrange(len(ref) - 1)
                lx = f"x{ops}"
                kept = st.replace_pair(nodes[pos], nodes[pos + 1], upward_ray(0, lx))
                ref[pos:pos + 2] = [lx]
                nodes[pos:pos + 2] = [kept]
            ops += 1
            rotations_budget_ops += 1
            if ops % 500 == 0:
                assert labels(st) == ref
                assert st.validate() == []
        assert labels(st) == ref
        assert st.validate() == []
        assert st.rotations <= 3 * rotations_budget_ops

    def test_height_stays_within_avl_bound(self):
        rng = random.Random(99)
        st = SweepStatus()
        nodes = []
        for i in range(3000):
            pos = rng.randrange(len(nodes) + 1) if nodes else 0
            anchor = nodes[pos - 1] if pos > 0 else None
            na, nb = st.insert_pair_after(anchor, upward_ray(0, i), upward_ray(0, -i))
            nodes[pos:pos] = [na, nb]
            if i % 100 == 0:
                assert st.height() <= 1.44 * math.log2(st.size + 2)
        assert st.height() <= 1.44 * math.log2(st.size + 2)


class TestSwapGeometry:
    def composite(self):
        b = Boundary(0.0, 0.0, 0.0, 1.0, math.pi / 2, "B", "Ra", "Rb",
                     t_max=2.0, pending=(0.0, 2.0, 1.0, 0.0, 0.0))
        return b

    def test_swap_applies_pending(self):
        st = SweepStatus()
        a, b = st.insert_pair_after(None, self.composite(), upward_ray(5, "N"))
        st.swap_geometry(a)
        assert (a.boundary.ox, a.boundary.oy) == (0.0, 2.0)
        assert (a.boundary.dx, a.boundary.dy) == (1.0, 0.0)
        assert a.boundary.pending is None
        assert a.boundary.t_max == math.inf

    def test_swap_preserves_neighbors_and_order(self):
        st = build(["A", "B", "C"])
        nodes = list(st.leaves())
        nodes[1].boundary.pending = (1.0, 1.0, 0.0, 1.0, math.pi / 2)
        before = (nodes[1].prev, nodes[1].nxt)
        st.swap_geometry(nodes[1])
        assert (nodes[1].prev, nodes[1].nxt) == before
        assert st.validate() == []

    def test_swap_without_pending_rejected(self):
        st = build(["A", "B"])
        with pytest.raises(InvariantError):
            st.swap_geometry(st.head)


class TestFindRegion:
    def make(self, xs):
        """Upward rays in list order; consistent order is decreasing x."""
        st = SweepStatus()
        anchor = None
        for i in range(0, len(xs), 2):
            a, b = st.insert_pair_after(
                anchor, upward_ray(xs[i], xs[i]), upward_ray(xs[i + 1], xs[i + 1]))
            anchor = b
        return st

    def linear_scan(self, st, qx, qy):
        from yaograph.kernel import RIGHT
        right = None
        for leaf in st.leaves():
            if SIDE(leaf.boundary, qx, qy) == RIGHT:
                right = leaf
                break
        left = right.prev if right is not None else st.tail
        return left, right

    def test_empty(self):
        st = SweepStatus()
        assert st.find_region(0.5, 1.0, SIDE) == (None, None)

    def test_single_pair(self):
        st = self.make([4.0, 2.0])
        l, r = st.find_region(3.0, 1.0, SIDE)
        assert l.boundary.ox == 4.0 and r.boundary.ox == 2.0
        l, r = st.find_region(5.0, 1.0, SIDE)
        assert l is None and r.boundary.ox == 4.0
        l, r = st.find_region(1.0, 1.0, SIDE)
        assert l.boundary.ox == 2.0 and r is None

    def test_matches_linear_scan_randomized(self):
        rng = random.Random(31)
        for trial in range(300):
            m = rng.randrange(1, 30)
            xs = sorted(rng.sample(range(-1000, 1000), 2 * m), reverse=True)
            st = self.make([float(x) for x in xs])
            for _ in range(10):
                qx = rng.uniform(-1100, 1100)
                want = self.linear_scan(st, qx, 1.0)
                got = st.find_region(qx, 1.0, SIDE)
                assert got == want

    def test_on_boundary_resolves_left(self):
        # a query exactly on a ray continues past it (left inclusion)
        st = self.make([4.0, 2.0])
        l, r = st.find_region(4.0, 1.0, SIDE)
        assert l.boundary.ox == 4.0 and r.boundary.ox == 2.0


class TestValidate:
    def test_fresh_big_build_passes(self):
        rng = random.Random(1)
        st = SweepStatus()
        nodes = []
        for i in range(1000):
            pos = rng.randrange(len(nodes) + 1) if nodes else 0
            anchor = nodes[pos - 1] if pos > 0 else None
            na, nb = st.insert_pair_after(anchor, upward_ray(0, i), upward_ray(1, i))
            nodes[pos:pos] = [na, nb]
        assert st.validate() == []

    def test_corruption_detected(self):
        st = build(["A", "B", "C", "D"])
        st.root.height += 1
        report = st.validate()
        assert any("height" in p for p in report)

    def test_empty_passes(self):
        assert SweepStatus().validate() == []
