"""Quadratic competitors: the naive all-pairs algorithm and the grid algorithm.

The naive algorithm is the trusted oracle: for every ordered pair it
assigns a cone (inexact arctangent approximation corrected by side-of-line
tests against the canonical cone directions) and keeps the per-cone
distance minimum, refining near-ties with the kernel's exact comparison
and breaking genuine ties toward the smallest point id.  The grid
algorithm places points in a uniform grid and searches cells ring by
ring around each point until every cone provably cannot improve.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .analysis import YaoGraph
from .kernel import ON, RIGHT, TWO_PI, InvariantError, cone_directions
from .pointsets import validate_points

# Pairs whose fractional cone position is this close to a boundary get the
# exact side-test treatment; the arctangent error is orders smaller.
_CONE_BAND = 1e-6
# Distances within this relative band of the float minimum are re-compared
# with the kernel before an edge target is chosen.
_TIE_BAND = 1e-9


def cone_index_of(px, py, qx, qy, k, kernel):
    """Cone i with angle(p->q) in [2*pi*i/k, 2*pi*(i+1)/k), left-inclusive."""
    if px == qx and py == qy:
        raise ValueError("coincident-points")
    vx, vy = qx - px, qy - py
    ang = math.atan2(vy, vx) % TWO_PI
    i0 = int(ang * k / TWO_PI)
    if i0 >= k:
        i0 = k - 1
    dirs = cone_directions(k)
    side = kernel.side

    def member(i):
        ux, uy = dirs[i]
        sl = side(0.0, 0.0, ux, uy, vx, vy)
        if sl == ON:
            return ux * vx + uy * vy > 0.0
        if sl == RIGHT:
            return False
        wx, wy = dirs[(i + 1) % k]
        sr = side(0.0, 0.0, wx, wy, vx, vy)
        return sr == RIGHT

    for i in (i0, (i0 + 1) % k, (i0 - 1) % k):
        if member(i):
            return i
    for i in range(k):
        if member(i):
            return i
    raise InvariantError("direction belongs to no cone")


def _points_arrays(points):
    xs = np.fromiter((p.x for p in points), dtype=np.float64, count=len(points))
    ys = np.fromiter((p.y for p in points), dtype=np.float64, count=len(points))
    return xs, ys


def _refine_target(px, py, xs, ys, cand, kernel):
    """Exact winner among near-tied candidate ids (ascending order)."""
    best = int(cand[0])
    for t in cand[1:]:
        t = int(t)
        if kernel.cmp_dist(px, py, xs[t], ys[t], xs[best], ys[best]) < 0:
            best = t
    return best


def naive_yao(points, k, kernel, block_elems=8_000_000):
    """All-pairs Yao graph; the correctness baseline for everything else."""
    validate_points(points)
    n = len(points)
    prov = {"algorithm": "naive", "kernel": kernel.name}
    if n <= 1:
        return YaoGraph(n, k, [], provenance=prov)
    xs, ys = _points_arrays(points)
    edges = []
    block = max(1, block_elems // n)
    for i0 in range(0, n, block):
        i1 = min(n, i0 + block)
        dx = xs[None, :] - xs[i0:i1, None]
        dy = ys[None, :] - ys[i0:i1, None]
        d2 = dx * dx + dy * dy
        rows = np.arange(i1 - i0)
        d2[rows, np.arange(i0, i1)] = np.inf
        t = np.arctan2(dy, dx)
        np.mod(t, TWO_PI, out=t)
        t *= k / TWO_PI
        cone_f = np.floor(t)
        frac = t - cone_f
        cone = cone_f.astype(np.int64)
        np.clip(cone, 0, k - 1, out=cone)
        suspect = (frac < _CONE_BAND) | (frac > 1.0 - _CONE_BAND)
        suspect &= np.isfinite(d2)
        for a, b in zip(*np.nonzero(suspect)):
            cone[a, b] = cone_index_of(xs[i0 + a], ys[i0 + a],
                                       xs[b], ys[b], k, kernel)
        for c in range(k):
            d2c = np.where(cone == c, d2, np.inf)
            j = np.argmin(d2c, axis=1)
            dmin = d2c[rows, j]
            has = np.isfinite(dmin)
            near = d2c <= (dmin * (1.0 + _TIE_BAND))[:, None]
            cnt = near.sum(axis=1)
            for r in np.nonzero(has & (cnt == 1))[0]:
                edges.append((i0 + int(r), int(j[r]), c))
            for r in np.nonzero(has & (cnt > 1))[0]:
                cand = np.nonzero(near[r])[0]
                tgt = _refine_target(xs[i0 + r], ys[i0 + r], xs, ys, cand, kernel)
                edges.append((i0 + int(r), tgt, c))
    return YaoGraph(n, k, edges, provenance=prov)


# ----------------------------------------------------------------------
# uniform grid


@dataclass
class UniformGrid:
    minx: float
    miny: float
    cell: float          # square cell side
    m: int               # cells per side
    cells: dict          # (ix, iy) -> list of point ids
    n: int

    def cell_of(self, x, y):
        ix = int((x - self.minx) / self.cell)
        iy = int((y - self.miny) / self.cell)
        return (min(max(ix, 0), self.m - 1), min(max(iy, 0), self.m - 1))


def build_grid(points) -> UniformGrid:
    """ceil(sqrt(n)) x ceil(sqrt(n)) square cells over the bounding box.

    Placement is plain float arithmetic; a degenerate bounding box axis is
    widened by one epsilon-unit so every point still lands in a cell.
    """
    n = len(points)
    if n < 1:
        raise ValueError("grid needs at least one point")
    m = math.isqrt(n)
    if m * m < n:
        m += 1
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    eps_unit = 1e-9 * max(1.0, abs(minx), abs(maxx), abs(miny), abs(maxy))
    extent = max(maxx - minx, maxy - miny, eps_unit)
    grid = UniformGrid(minx, miny, extent / m, m, {}, n)
    for p in points:
        grid.cells.setdefault(grid.cell_of(p.x, p.y), []).append(p.id)
    return grid


def max_ring_of(grid: UniformGrid, cx, cy):
    m = grid.m
    return max(cx, m - 1 - cx, cy, m - 1 - cy)


def ring_cells(grid: UniformGrid, cx, cy, r):
    """In-grid cells at Chebyshev distance exactly r from (cx, cy).

    Enumerated clockwise starting from the cell directly above-left;
    cells outside the grid are skipped.  Ring 0 is the center itself.
    """
    m = grid.m
    if r == 0:
        if 0 <= cx < m and 0 <= cy < m:
            yield (cx, cy)
        return
    top, bottom = cy + r, cy - r
    left, right = cx - r, cx + r
    if 0 <= top < m:
        for x in range(max(left, 0), min(right, m - 1) + 1):
            yield (x, top)
    if 0 <= right < m:
        for y in range(min(top - 1, m - 1), max(bottom, 0) - 1, -1):
            yield (right, y)
    if 0 <= bottom < m:
        for x in range(min(right - 1, m - 1), max(left, 0) - 1, -1):
            yield (x, bottom)
    if 0 <= left < m:
        for y in range(max(bottom + 1, 0), min(top - 1, m - 1) + 1):
            yield (left, y)


def spiral_cells(grid: UniformGrid, center):
    """Full spiral enumeration: center cell, then ring 1, ring 2, ..."""
    cx, cy = center
    if not (0 <= cx < grid.m and 0 <= cy < grid.m):
        raise ValueError("center cell outside the grid")
    for r in range(0, max_ring_of(grid, cx, cy) + 1):
        yield from ring_cells(grid, cx, cy, r)


def _clipped_box_area(grid, cx, cy, r):
    """Number of grid cells within Chebyshev distance r of (cx, cy)."""
    w = min(cx + r, grid.m - 1) - max(cx - r, 0) + 1
    h = min(cy + r, grid.m - 1) - max(cy - r, 0) + 1
    return w * h


class _ConeBest:
    """Per-cone running nearest candidate with exact near-tie resolution."""

    __slots__ = ("k", "d2", "ids")

    def __init__(self, k):
        self.k = k
        self.d2 = [math.inf] * k
        self.ids = [-1] * k

    def offer(self, c, q, d2, px, py, xs, ys, kernel):
        b = self.d2[c]
        cur = self.ids[c]
        if cur < 0:
            self.d2[c] = d2
            self.ids[c] = q
            return
        if d2 > b * (1.0 + _TIE_BAND):
            return
        if d2 < b * (1.0 - _TIE_BAND):
            self.d2[c] = d2
            self.ids[c] = q
            return
        cmp = kernel.cmp_dist(px, py, xs[q], ys[q], xs[cur], ys[cur])
        if cmp < 0 or (cmp == 0 and q < cur):
            self.d2[c] = min(d2, b)
            self.ids[c] = q

    def settled_all(self, bound):
        d2, ids = self.d2, self.ids
        return all(ids[c] >= 0 and d2[c] <= bound for c in range(self.k))


def _grid_point_dense(pid, xs, ys, grid, k, kernel):
    """Spiral scan with per-ring settlement; good when most cells are full."""
    px, py = float(xs[pid]), float(ys[pid])
    cx, cy = grid.cell_of(px, py)
    max_ring = max_ring_of(grid, cx, cy)
    cell = grid.cell
    best = _ConeBest(k)
    visited = 0
    kf = k / TWO_PI
    cells = grid.cells
    for r in range(0, max_ring + 1):
        for ixy in ring_cells(grid, cx, cy, r):
            visited += 1
            ids = cells.get(ixy)
            if not ids:
                continue
            for q in ids:
                if q == pid:
                    continue
                qx, qy = xs[q], ys[q]
                t = (math.atan2(qy - py, qx - px) % TWO_PI) * kf
                c = int(t)
                frac = t - c
                if frac < _CONE_BAND or frac > 1.0 - _CONE_BAND or c >= k:
                    c = cone_index_of(px, py, qx, qy, k, kernel)
                d2 = (qx - px) ** 2 + (qy - py) ** 2
                best.offer(c, q, d2, px, py, xs, ys, kernel)
        if best.settled_all((r * cell) ** 2):
            break
    return best.ids, visited


def _grid_point_sparse(pid, xs, ys, grid, k, kernel, pt_ix, pt_iy):
    """Vectorized ring replay for sparse grids (most cells empty).

    Every point is a candidate; candidates are grouped by the Chebyshev
    ring of their cell and rings are replayed in order under the same
    settlement rule as the cell-by-cell scan, so both the edges and the
    visited-cell count match it exactly.
    """
    px, py = float(xs[pid]), float(ys[pid])
    cx, cy = grid.cell_of(px, py)
    max_ring = max_ring_of(grid, cx, cy)
    cell = grid.cell
    ring_q = np.maximum(np.abs(pt_ix - cx), np.abs(pt_iy - cy))
    dx = xs - px
    dy = ys - py
    d2 = dx * dx + dy * dy
    d2[pid] = np.inf
    t = np.arctan2(dy, dx)
    np.mod(t, TWO_PI, out=t)
    t *= k / TWO_PI
    cone_f = np.floor(t)
    frac = t - cone_f
    cone = cone_f.astype(np.int64)
    np.clip(cone, 0, k - 1, out=cone)
    suspect = (frac < _CONE_BAND) | (frac > 1.0 - _CONE_BAND)
    suspect[pid] = False
    for q in np.nonzero(suspect)[0]:
        cone[q] = cone_index_of(px, py, float(xs[q]), float(ys[q]), k, kernel)

    per_ring = np.full((k, max_ring + 1), np.inf)
    np.minimum.at(per_ring, (cone, np.minimum(ring_q, max_ring)), d2)
    running = np.full(k, np.inf)
    stop_ring = max_ring
    for r in range(max_ring + 1):
        np.minimum(running, per_ring[:, r], out=running)
        bound = (r * cell) ** 2
        if np.all(running <= bound):
            stop_ring = r
            break

    ids = [-1] * k
    in_range = ring_q <= stop_ring
    for c in range(k):
        if not math.isfinite(running[c]):
            continue
        cand = np.nonzero((cone == c) & in_range
                          & (d2 <= running[c] * (1.0 + _TIE_BAND)))[0]
        if len(cand) == 1:
            ids[c] = int(cand[0])
        elif len(cand) > 1:
            ids[c] = _refine_target(px, py, xs, ys, cand, kernel)
    return ids, _clipped_box_area(grid, cx, cy, stop_ring)


def grid_yao(points, k, kernel, threads=1, return_visits=False):
    """Grid-based Yao graph with the naive algorithm's edge semantics.

    Chooses between cell-by-cell spiral scanning and a vectorized ring
    replay depending on occupancy; both produce identical edges and
    visited-cell counts.  ``threads`` distributes points over a thread
    pool; the canonical output order makes the result independent of it.
    """
    validate_points(points)
    n = len(points)
    prov = {"algorithm": "grid", "kernel": kernel.name}
    if n == 0:
        graph = YaoGraph(0, k, [], provenance=prov)
        return (graph, []) if return_visits else graph
    xs, ys = _points_arrays(points)
    grid = build_grid(points)
    density = len(grid.cells) / (grid.m * grid.m)
    sparse = density < 0.10 and grid.m >= 8
    if sparse:
        pt_ix = np.empty(n, dtype=np.int64)
        pt_iy = np.empty(n, dtype=np.int64)
        for i in range(n):
            pt_ix[i], pt_iy[i] = grid.cell_of(xs[i], ys[i])

    def solve(pid):
        if sparse:
            return _grid_point_sparse(pid, xs, ys, grid, k, kernel, pt_ix, pt_iy)
        return _grid_point_dense(pid, xs, ys, grid, k, kernel)

    visits = [0] * n
    edges = []
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(solve, range(n)))
    else:
        results = [solve(pid) for pid in range(n)]
    for pid, (ids, visited) in enumerate(results):
        visits[pid] = visited
        for c, t in enumerate(ids):
            if t >= 0:
                edges.append((pid, t, c))
    graph = YaoGraph(n, k, edges, provenance=prov)
    return (graph, visits) if return_visits else graph
