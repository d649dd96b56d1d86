"""The O(n log n) sweepline construction of the Yao graph, one pass per cone.

Orientation conventions used throughout (self-consistent and verified
against the naive oracle):

* The sweep processes points by increasing projection onto the direction
  tau (opposite the cone's internal bisector), so every point's cone
  points into the already-swept half-plane.
* The status list is ordered so that a region search walks it for the
  first boundary having the query strictly on its clockwise side
  ("right", negative cross product).  A query exactly on a boundary ray
  continues past it, which realizes the cone's left-boundary inclusion.
* A processed point p contributes the pair [ray(theta_L + pi),
  ray(theta_R + pi)] in that list order.
* When two adjacent boundaries meet, the surviving region apexes are
  a (list-left) and b (list-right), and any bisector-shaped continuation
  runs along rot90cw(b - a), which always points ahead of the front.

Boundary determination at a merge point v is reduced to one rule: the
apex closer to v owns the vanishing wedge, so the new boundary follows
the wedge edge farther from that apex until it crosses the (a, b)
perpendicular-bisector line at w, where a deletion event later swaps the
geometry to the bisector ray.  No crossing means the edge ray itself is
the boundary; equal distances mean the bisector ray starts at v itself.
This reproduces the case analysis driven by counting bisector/edge-ray
intersections, and stays defined when a merge involves bisector-type
boundaries.

Cones of width pi (k = 2) are special: the pair rays are parallel to the
front and cannot separate later points, so an input landing in a finite
region directly inserts the perpendicular-bisector boundary against the
region's apex (or, when the two points are aligned with the sweep
direction, takes over the region label).  Ties in the input order are
broken so that a point is processed after the points it can see along
its cone's closed boundary.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .analysis import YaoGraph
from .events import INTERSECTION, EventQueue
from .kernel import (
    ConeSpec,
    InvariantError,
    LEFT,
    NumericalFailure,
    ON,
    RIGHT,
    TWO_PI,
    make_kernel,
    normalize_angle,
)
from .pointsets import validate_points
from .status import INFINITE, Boundary, SweepStatus, default_side_of

_MISSING = object()


@dataclass
class PassStats:
    """Instrumentation of one sweepline pass."""

    cone_index: int
    n_input: int = 0
    n_intersection: int = 0
    n_deletion: int = 0
    max_dynamic_queue: int = 0
    max_sweepline_size: int = 0
    kernel: str = ""
    fallback: bool = False
    wall_ns: int = 0

    def total_events(self):
        return self.n_input + self.n_intersection + self.n_deletion


class IntersectionCache:
    """Memo of boundary-pair intersections keyed by the pair's leaf ids.

    Entries are dropped whenever a boundary leaves the structure or its
    geometry changes; a query is only legal for currently adjacent pairs.
    ``param_tol`` absorbs construction noise in the forwardness test of
    the ray parameters: crossings an epsilon behind a ray origin are
    taken at the origin (the queue's stale guard still rejects genuinely
    backward events).
    """

    def __init__(self, kernel, param_tol=0.0):
        self._kernel = kernel
        self._map = {}
        self._partners = {}
        self._param_tol = param_tol

    def query(self, left, right):
        if left.nxt is not right:
            raise InvariantError("intersection cache queried for a non-adjacent pair")
        a, b = left.uid, right.uid
        key = (a, b) if a < b else (b, a)
        hit = self._map.get(key, _MISSING)
        if hit is not _MISSING:
            return hit
        res = self._compute(left.boundary, right.boundary)
        self._map[key] = res
        self._partners.setdefault(a, set()).add(b)
        self._partners.setdefault(b, set()).add(a)
        return res

    def invalidate(self, leaf):
        a = leaf.uid
        for b in self._partners.pop(a, ()):
            key = (a, b) if a < b else (b, a)
            self._map.pop(key, None)
            peers = self._partners.get(b)
            if peers is not None:
                peers.discard(a)

    def _compute(self, b1, b2):
        # An event exists only where the left boundary overtakes the right
        # one across the advancing front, i.e. their directions turn
        # clockwise.  Parallel rays (including colinear overlaps) and
        # diverging rays sharing a point produce no event.
        if self._kernel.side(0.0, 0.0, b1.dx, b1.dy, b2.dx, b2.dy) != RIGHT:
            return None
        denom = b1.dx * b2.dy - b1.dy * b2.dx
        wx = b2.ox - b1.ox
        wy = b2.oy - b1.oy
        t = (wx * b2.dy - wy * b2.dx) / denom
        s = (wx * b1.dy - wy * b1.dx) / denom
        tol = self._param_tol
        if t < -tol or s < -tol or t > b1.t_max + tol or s > b2.t_max + tol:
            return None
        if t < 0.0:
            t = 0.0
        return (b1.ox + t * b1.dx, b1.oy + t * b1.dy)


def run_cone_pass(xs, ys, cone: ConeSpec, kernel):
    """One sweep over the points for one cone.

    Returns (edges, stats) where edges are (source, target) pairs.
    Raises NumericalFailure when the inexact kernel produces an
    inconsistent structure, so the caller can retry with exact predicates.
    """
    t_start = time.perf_counter_ns()
    n = len(xs)
    k = cone.k
    stats = PassStats(cone.i, kernel=kernel.name)
    edges = []
    if n == 0:
        stats.wall_ns = time.perf_counter_ns() - t_start
        return edges, stats

    tvx, tvy = cone.tau_vec
    ulx, uly = cone.dir_l
    urx, ury = cone.dir_r
    rlx, rly = -ulx, -uly            # direction of the theta_L + pi ray
    rrx, rry = -urx, -ury            # direction of the theta_R + pi ray
    ang_l = normalize_angle(cone.theta_l + math.pi)
    ang_r = normalize_angle(cone.theta_r + math.pi)

    prjs = xs * tvx + ys * tvy
    if k == 2:
        # ties must present a point after everything it sees along the
        # closed cone boundary (direction theta_L), so order ties by
        # decreasing projection onto that direction
        sec = -(xs * ulx + ys * uly)
        order = np.lexsort((ys, xs, sec, prjs))
    else:
        order = np.lexsort((ys, xs, prjs))

    eps = getattr(kernel, "epsilon", 0.0) or 1e-12
    diag = math.hypot(float(xs.max() - xs.min()), float(ys.max() - ys.min()))
    tol = max(eps, 1e-12) * max(diag, 1.0)

    queue = EventQueue(xs, ys, prjs, order, tol=tol)
    status = SweepStatus()
    side_of = default_side_of(kernel, xs, ys)
    cache = IntersectionCache(kernel, param_tol=tol)
    cmp_dist = kernel.cmp_dist
    kside = kernel.side

    # ------------------------------------------------------------------
    # event bookkeeping

    def drop_pair_event(leaf):
        ev = leaf.pair_event
        if ev is not None:
            queue.remove(ev)
            leaf.pair_event = None

    def add_pair_event(leaf):
        right = leaf.nxt
        if right is None:
            return
        res = cache.query(leaf, right)
        if res is None:
            return
        x, y = res
        leaf.pair_event = queue.push_intersection(x * tvx + y * tvy, x, y, leaf, right)

    def drop_deletion_event(leaf):
        ev = leaf.deletion_event
        if ev is not None:
            queue.remove(ev)
            leaf.deletion_event = None

    # ------------------------------------------------------------------
    # boundary determination at a merge point

    def bisector_dir(ax, ay, bx, by):
        # rot90cw(b - a): points ahead of the front for list-ordered apexes
        dx, dy = by - ay, -(bx - ax)
        norm = math.hypot(dx, dy)
        return dx / norm, dy / norm

    def determine_boundary(vx, vy, a_apex, b_apex, dying_l, dying_r):
        """Shape of the boundary replacing a merged pair at v.

        When both dying boundaries are bisector rays, v lies on the
        (a, b) bisector by construction; the distance predicate cannot be
        trusted to detect that on v's inexactly constructed coordinates.
        A cone-edge result extends the same-kind dying boundary's
        supporting line, so it inherits that anchor.
        """
        if a_apex is INFINITE and b_apex is INFINITE:
            raise InvariantError("merge with both outer regions infinite")
        if a_apex is INFINITE:
            anchor = (dying_r.ax, dying_r.ay) if dying_r.kind == "L" else None
            return Boundary(vx, vy, rlx, rly, ang_l, "L", INFINITE, b_apex,
                            anchor=anchor)
        if b_apex is INFINITE:
            anchor = (dying_l.ax, dying_l.ay) if dying_l.kind == "R" else None
            return Boundary(vx, vy, rrx, rry, ang_r, "R", a_apex, INFINITE,
                            anchor=anchor)
        ax, ay = xs[a_apex], ys[a_apex]
        bx, by = xs[b_apex], ys[b_apex]
        if dying_l.kind == "B" and dying_r.kind == "B":
            cmp = 0
        else:
            cmp = cmp_dist(vx, vy, ax, ay, bx, by)
        if cmp == 0:
            dx, dy = bisector_dir(ax, ay, bx, by)
            return Boundary(vx, vy, dx, dy, normalize_angle(math.atan2(dy, dx)),
                            "B", a_apex, b_apex)
        if cmp < 0:
            edx, edy, eang, ekind = rrx, rry, ang_r, "R"
            anchor = (dying_l.ax, dying_l.ay) if dying_l.kind == "R" else None
        else:
            edx, edy, eang, ekind = rlx, rly, ang_l, "L"
            anchor = (dying_r.ax, dying_r.ay) if dying_r.kind == "L" else None
        # The edge ray crosses the (a, b) bisector line ahead of v exactly
        # when sign(e . (b - a)) is opposite to the distance comparison.
        # That predicate involves only input coordinates, so the topology
        # stays reliable even when v is nearly equidistant and the
        # crossing parameter itself drowns in construction noise.
        abx, aby = bx - ax, by - ay
        dote = kside(0.0, 0.0, edy, -edx, abx, aby)  # sign of e . (b - a)
        if dote == ON or dote == cmp:
            return Boundary(vx, vy, edx, edy, eang, ekind, a_apex, b_apex,
                            anchor=anchor)
        d2a = (vx - ax) ** 2 + (vy - ay) ** 2
        d2b = (vx - bx) ** 2 + (vy - by) ** 2
        t = (d2b - d2a) / (2.0 * (edx * abx + edy * aby))
        if t < 0.0:
            t = 0.0
        wx_, wy_ = vx + t * edx, vy + t * edy
        bdx, bdy = bisector_dir(ax, ay, bx, by)
        pending = (wx_, wy_, bdx, bdy, normalize_angle(math.atan2(bdy, bdx)))
        return Boundary(vx, vy, edx, edy, eang, ekind, a_apex, b_apex,
                        t_max=t, pending=pending, anchor=anchor)

    # ------------------------------------------------------------------
    # event handlers

    def _cone_member(apex, px, py):
        """Is the apex inside the query point's cone (input-exact test)."""
        vx_ = xs[apex] - px
        vy_ = ys[apex] - py
        sl = kside(0.0, 0.0, ulx, uly, vx_, vy_)
        if sl == ON:
            return ulx * vx_ + uly * vy_ > 0.0
        if sl == RIGHT:
            return False
        return kside(0.0, 0.0, urx, ury, vx_, vy_) == RIGHT

    def _verified_landing(px, py, left, right):
        """Settle degenerate landings with input-coordinate predicates.

        A query sitting (up to construction noise) on several region
        boundaries at once can be scanned into a neighbor of its true
        region; the nearby region apexes are re-judged with the same
        membership and distance predicates the naive oracle uses, which
        keeps the two algorithms' answers aligned on such corners.
        """
        gaps = [(left, right)]
        node = left
        for _ in range(4):
            if node is None:
                break
            gaps.append((node.prev, node))
            node = node.prev
        node = right
        for _ in range(4):
            if node is None:
                break
            gaps.append((node, node.nxt))
            node = node.nxt
        best = None
        best_gap = gaps[0]
        for gap in gaps:
            gl, gr = gap
            if gl is not None:
                apex = gl.boundary.right_apex
            elif gr is not None:
                apex = gr.boundary.left_apex
            else:
                apex = INFINITE
            if apex is INFINITE or apex == best:
                continue
            if not _cone_member(apex, px, py):
                continue
            if best is None or cmp_dist(px, py, xs[apex], ys[apex],
                                        xs[best], ys[best]) < 0:
                best = apex
                best_gap = gap
        return best, best_gap

    def handle_input(i):
        px, py = xs[i], ys[i]
        left, right = status.find_region(px, py, side_of)
        if left is not None and side_of(left.boundary, px, py) == RIGHT:
            raise NumericalFailure("region search inconsistency (left side)")
        if right is not None and side_of(right.boundary, px, py) != RIGHT:
            raise NumericalFailure("region search inconsistency (right side)")
        if left is not None and right is not None \
                and left.boundary.right_apex != right.boundary.left_apex:
            raise InvariantError("enclosing pair disagrees on its region")
        edge_apex, (left, right) = _verified_landing(px, py, left, right)
        if edge_apex is not INFINITE:
            edges.append((i, edge_apex))
        # The structural region label of the landing gap; normally the same
        # as edge_apex but it may differ on degenerate corners, and the
        # inserted pair must stay consistent with its neighbors.
        if left is not None:
            apex = left.boundary.right_apex
        elif right is not None:
            apex = right.boundary.left_apex
        else:
            apex = INFINITE

        if k == 2 and apex is not INFINITE:
            _input_k2(i, px, py, apex, left, right)
            return

        if left is not None and left.nxt is right:
            drop_pair_event(left)
        bl = Boundary(px, py, rlx, rly, ang_l, "L", apex, i)
        br = Boundary(px, py, rrx, rry, ang_r, "R", i, apex)
        if apex is not INFINITE:
            # Cones wider than a right angle (k = 3) do not guarantee that
            # the new point's whole wedge is closer to it than to the
            # enclosing apex; the affected pair ray then runs only to the
            # (apex, p) bisector and continues as the bisector ray.
            ax, ay = xs[apex], ys[apex]
            vx_, vy_ = px - ax, py - ay
            dot_l = rlx * vx_ + rly * vy_
            if dot_l < 0.0:
                _make_composite(bl, px, py, rlx, rly, dot_l, vx_, vy_)
            else:
                dot_r = rrx * vx_ + rry * vy_
                if dot_r < 0.0:
                    _make_composite(br, px, py, rrx, rry, dot_r, -vx_, -vy_)
        node_l, node_r = status.insert_pair_after(left, bl, br)
        if bl.pending is not None:
            wx_, wy_ = bl.pending[0], bl.pending[1]
            node_l.deletion_event = queue.push_deletion(
                wx_ * tvx + wy_ * tvy, wx_, wy_, node_l)
        if br.pending is not None:
            wx_, wy_ = br.pending[0], br.pending[1]
            node_r.deletion_event = queue.push_deletion(
                wx_ * tvx + wy_ * tvy, wx_, wy_, node_r)
        if left is not None:
            add_pair_event(left)
        add_pair_event(node_r)

    def _make_composite(b, ox, oy, edx, edy, edot, sepx, sepy):
        """Bound ray ``b`` at the bisector crossing and stage the swap.

        ``(sepx, sepy)`` points from the boundary's left-region apex to
        its right-region apex; the post-swap ray is its clockwise
        perpendicular, which points ahead of the front.
        """
        t = 0.5 * (sepx * sepx + sepy * sepy) / (-edot)
        wx_, wy_ = ox + t * edx, oy + t * edy
        ddx, ddy = sepy, -sepx
        norm = math.hypot(ddx, ddy)
        ddx, ddy = ddx / norm, ddy / norm
        b.t_max = t
        b.pending = (wx_, wy_, ddx, ddy, normalize_angle(math.atan2(ddy, ddx)))

    def _k2_bis_origin(a_apex, px, py):
        """Front crossing and ahead direction of the (apex, p) bisector.

        Returns None when apex and p are aligned with the sweep, in which
        case p is closer everywhere ahead and no boundary exists.
        """
        ax, ay = xs[a_apex], ys[a_apex]
        dxp, dyp = px - ax, py - ay
        if kside(0.0, 0.0, tvx, tvy, dxp, dyp) == ON:
            return None
        d0x, d0y = -dyp, dxp
        if d0x * tvx + d0y * tvy < 0.0:
            d0x, d0y = -d0x, -d0y
        norm = math.hypot(d0x, d0y)
        d0x, d0y = d0x / norm, d0y / norm
        mx, my = (ax + px) / 2.0, (ay + py) / 2.0
        denom = ulx * d0y - uly * d0x
        t = ((mx - px) * d0y - (my - py) * d0x) / denom
        return (px + t * ulx, py + t * uly, d0x, d0y)

    def _k2_bis(ox, oy, bdx, bdy, la, ra):
        return Boundary(ox, oy, bdx, bdy,
                        normalize_angle(math.atan2(bdy, bdx)), "B", la, ra)

    def _input_k2(i, px, py, apex, left, right):
        """Width-pi cones: claim the stretch of the front closer to p.

        The cone pair rays would be front-parallel and inert, so the new
        point's region is carved directly: walk outward from the landing
        gap, swallowing every gap whose apex loses to p throughout it, and
        split the first gap on each side where the (apex, p) bisector
        meets the front inside the gap.
        """
        px_, py_ = px, py
        lsplit = rsplit = None
        go_left = go_right = True
        og = _k2_bis_origin(apex, px_, py_)
        if og is not None:
            ox, oy, bdx, bdy = og
            beyond_l = left is not None and side_of(left.boundary, ox, oy) == RIGHT
            beyond_r = right is not None and side_of(right.boundary, ox, oy) != RIGHT
            if not beyond_l and not beyond_r:
                if kside(ox, oy, bdx, bdy, px_, py_) != RIGHT:
                    lsplit = _k2_bis(ox, oy, bdx, bdy, apex, i)
                    go_left = False
                else:
                    rsplit = _k2_bis(ox, oy, bdx, bdy, i, apex)
                    go_right = False

        consumed = []
        lstop, rstop = left, right
        relabel_l = relabel_r = False
        if go_left:
            P = left
            while True:
                if P is None:
                    lstop = None
                    break
                a = P.boundary.left_apex
                if a is INFINITE:
                    lstop = P
                    relabel_l = True
                    break
                og = _k2_bis_origin(a, px_, py_)
                if og is not None:
                    ox, oy, bdx, bdy = og
                    if side_of(P.boundary, ox, oy) != RIGHT:
                        # bisector never reaches past P: P stays the edge
                        lstop = P
                        relabel_l = True
                        break
                    prev = P.prev
                    if prev is None or side_of(prev.boundary, ox, oy) != RIGHT:
                        lsplit = _k2_bis(ox, oy, bdx, bdy, a, i)
                        consumed.append(P)
                        lstop = prev
                        break
                consumed.append(P)
                P = P.prev
        if go_right:
            Q = right
            while True:
                if Q is None:
                    rstop = None
                    break
                a = Q.boundary.right_apex
                if a is INFINITE:
                    rstop = Q
                    relabel_r = True
                    break
                og = _k2_bis_origin(a, px_, py_)
                if og is not None:
                    ox, oy, bdx, bdy = og
                    if side_of(Q.boundary, ox, oy) == RIGHT:
                        rstop = Q
                        relabel_r = True
                        break
                    nxt = Q.nxt
                    if nxt is None or side_of(nxt.boundary, ox, oy) == RIGHT:
                        rsplit = _k2_bis(ox, oy, bdx, bdy, i, a)
                        consumed.append(Q)
                        rstop = nxt
                        break
                consumed.append(Q)
                Q = Q.nxt

        # structure surgery: drop events touching the claim, remove the
        # swallowed boundaries, insert the new edges, reconnect events
        if lstop is not None:
            drop_pair_event(lstop)
        for node in consumed:
            drop_pair_event(node)
            drop_deletion_event(node)
            cache.invalidate(node)
            status.remove_single(node)
        if relabel_l:
            lstop.boundary.right_apex = i
        if relabel_r:
            rstop.boundary.left_apex = i
        anchor_node = lstop
        if lsplit is not None:
            anchor_node = status.insert_single_after(anchor_node, lsplit)
        if rsplit is not None:
            anchor_node = status.insert_single_after(anchor_node, rsplit)
        if lstop is None and lsplit is None and rsplit is None and rstop is None:
            # nothing remains anywhere: represent R_p with its inert pair
            bl = Boundary(px_, py_, rlx, rly, ang_l, "L", INFINITE, i)
            br = Boundary(px_, py_, rrx, rry, ang_r, "R", i, INFINITE)
            status.insert_pair_after(None, bl, br)
            return
        node = lstop if lstop is not None else status.head
        while node is not None and node is not rstop:
            add_pair_event(node)
            node = node.nxt

    def handle_intersection(ev):
        node_l, node_r = ev.node_l, ev.node_r
        if node_l.nxt is not node_r or node_l.pair_event is not ev:
            raise InvariantError("intersection event fired for a stale pair")
        node_l.pair_event = None
        if node_l.boundary.right_apex != node_r.boundary.left_apex:
            raise InvariantError("merging pair disagrees on the middle region")
        a_apex = node_l.boundary.left_apex
        b_apex = node_r.boundary.right_apex
        prev = node_l.prev
        if prev is not None:
            drop_pair_event(prev)
        drop_pair_event(node_r)
        drop_deletion_event(node_l)
        drop_deletion_event(node_r)
        star_boundary = determine_boundary(ev.x, ev.y, a_apex, b_apex,
                                           node_l.boundary, node_r.boundary)
        cache.invalidate(node_l)
        cache.invalidate(node_r)
        star = status.replace_pair(node_l, node_r, star_boundary)
        if star_boundary.pending is not None:
            wx_, wy_ = star_boundary.pending[0], star_boundary.pending[1]
            star.deletion_event = queue.push_deletion(
                wx_ * tvx + wy_ * tvy, wx_, wy_, star)
        if prev is not None:
            add_pair_event(prev)
        add_pair_event(star)

    def handle_deletion(ev):
        leaf = ev.node_l
        if leaf.deletion_event is not ev:
            raise InvariantError("deletion event fired for a stale boundary")
        leaf.deletion_event = None
        status.swap_geometry(leaf)
        cache.invalidate(leaf)
        prev = leaf.prev
        if prev is not None:
            drop_pair_event(prev)
            add_pair_event(prev)
        drop_pair_event(leaf)
        add_pair_event(leaf)

    # ------------------------------------------------------------------
    # main loop; events after the last input point cannot contribute an
    # edge, so the pass ends there

    remaining_inputs = n
    while remaining_inputs:
        item = queue.pop()
        if item is None:
            break
        if type(item) is tuple:
            handle_input(item[1])
            remaining_inputs -= 1
        elif item.kind == INTERSECTION:
            handle_intersection(item)
        else:
            handle_deletion(item)

    stats.n_input = queue.popped_input
    stats.n_intersection = queue.popped_intersection
    stats.n_deletion = queue.popped_deletion
    stats.max_dynamic_queue = queue.max_dynamic
    stats.max_sweepline_size = status.max_size
    stats.wall_ns = time.perf_counter_ns() - t_start
    if stats.n_intersection > 2 * n or stats.n_deletion > 2 * n \
            or stats.total_events() > 5 * n:
        raise InvariantError(
            f"event count bound violated: {stats.n_input} input, "
            f"{stats.n_intersection} intersection, {stats.n_deletion} deletion "
            f"events for n={n}")
    return edges, stats


def build_yao_sweepline(points, k, kernel=None, fallback=True, threads=1):
    """Union of the k cone passes.

    With ``fallback`` enabled, a pass that fails numerically under the
    inexact kernel is retried with extended-precision predicates and its
    stats row records the kernel actually used.  Returns (graph, stats).
    """
    if k <= 1:
        raise ValueError("cone count k must be > 1")
    if kernel is None:
        kernel = make_kernel("inexact")
    validate_points(points)
    xs = np.fromiter((p.x for p in points), dtype=np.float64, count=len(points))
    ys = np.fromiter((p.y for p in points), dtype=np.float64, count=len(points))

    def one_pass(i):
        cone = ConeSpec.make(k, i)
        try:
            pass_edges, stats = run_cone_pass(xs, ys, cone, kernel)
        except NumericalFailure as exc:
            if not (fallback and kernel.name == "inexact"):
                raise NumericalFailure(str(exc), cone_index=i) from exc
            pass_edges, stats = run_cone_pass(xs, ys, cone, make_kernel("extended"))
            stats.fallback = True
        return i, pass_edges, stats

    edges = []
    all_stats = []
    if threads > 1 and k > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one_pass, range(k)))
    else:
        results = [one_pass(i) for i in range(k)]
    for i, pass_edges, stats in results:
        edges.extend((s, t, i) for s, t in pass_edges)
        all_stats.append(stats)
    graph = YaoGraph(len(points), k, edges,
                     provenance={"algorithm": "sweepline", "kernel": kernel.name})
    return graph, all_stats
