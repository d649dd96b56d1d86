"""Yao graph representation, edge-set comparison and stretch verification."""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction


class IncomparableGraphs(ValueError):
    pass


@dataclass
class YaoGraph:
    """Directed cone-nearest-neighbor graph over an indexed point set."""

    n: int
    k: int
    edges: list  # (source, target, cone) tuples, canonically sorted
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        self.edges = sorted(self.edges)

    def out_map(self):
        """Map (source, cone) -> target; at most one edge per key."""
        m = {}
        for s, t, c in self.edges:
            if (s, c) in m:
                raise IncomparableGraphs(f"duplicate edge for source {s} cone {c}")
            m[(s, c)] = t
        return m


def _sq_dist_exact(points, a, b):
    pa, pb = points[a], points[b]
    return (Fraction(pa.x) - Fraction(pb.x)) ** 2 + (Fraction(pa.y) - Fraction(pb.y)) ** 2


def compare_graphs(g1: YaoGraph, g2: YaoGraph, points, kernel=None):
    """Compare two graphs modulo ties: equal target distance per (source, cone).

    Returns the list of mismatches; empty means the graphs agree.  Target
    identity may differ when the two targets are equidistant from the
    source.  Distance equality is judged by ``kernel`` when given (so a
    graph built with snapped predicates is compared under its own
    equality notion); otherwise with exact rational arithmetic.
    """
    if g1.n != g2.n or g1.k != g2.k:
        raise IncomparableGraphs(
            f"incomparable: n/k ({g1.n},{g1.k}) vs ({g2.n},{g2.k})")
    m1, m2 = g1.out_map(), g2.out_map()
    mismatches = []
    for key in sorted(set(m1) | set(m2)):
        t1, t2 = m1.get(key), m2.get(key)
        if t1 == t2:
            continue
        if t1 is None or t2 is None:
            mismatches.append((key[0], key[1], t1, t2, "edge presence differs"))
            continue
        if kernel is not None:
            s = points[key[0]]
            p1, p2 = points[t1], points[t2]
            if kernel.cmp_dist(s.x, s.y, p1.x, p1.y, p2.x, p2.y) != 0:
                mismatches.append((key[0], key[1], t1, t2,
                                   "target distance differs"))
            continue
        d1 = _sq_dist_exact(points, key[0], t1)
        d2 = _sq_dist_exact(points, key[0], t2)
        if d1 != d2:
            mismatches.append((key[0], key[1], t1, t2,
                               f"target distance differs: {float(d1)} vs {float(d2)}"))
    return mismatches


@dataclass
class StretchReport:
    max_stretch: float
    witness: tuple          # (source, target) attaining max_stretch
    bound: float | None     # 1/(1 - 2 sin(pi/k)) for k > 6, else None
    unreachable: int        # ordered pairs with no directed path
    sampled_pairs: int

    def as_dict(self):
        return {
            "max_stretch": self.max_stretch,
            "witness_source": self.witness[0],
            "witness_target": self.witness[1],
            "bound": self.bound,
            "unreachable": self.unreachable,
            "sampled_pairs": self.sampled_pairs,
        }


def stretch_bound(k: int):
    """The proven stretch bound, defined for k > 6."""
    if k <= 6:
        return None
    return 1.0 / (1.0 - 2.0 * math.sin(math.pi / k))


def _dijkstra(adj, source, n):
    dist = [math.inf] * n
    dist[source] = 0.0
    pq = [(0.0, source)]
    while pq:
        d, u = heapq.heappop(pq)
        if d > dist[u]:
            continue
        for v, w in adj[u]:
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(pq, (nd, v))
    return dist


def stretch_factor(g: YaoGraph, points, pairs="all", seed=0) -> StretchReport:
    """Maximum ratio of graph distance to Euclidean distance over point pairs.

    The graph is treated as directed with Euclidean edge weights.  With
    ``pairs="all"`` every ordered pair is checked (intended for n <= 300);
    an integer samples that many source points instead.
    """
    n = g.n
    adj = [[] for _ in range(n)]
    for s, t, _ in g.edges:
        w = math.hypot(points[s].x - points[t].x, points[s].y - points[t].y)
        adj[s].append((t, w))
    if pairs == "all":
        sources = range(n)
    else:
        rng = random.Random(seed)
        sources = sorted(rng.sample(range(n), min(int(pairs), n)))
    best = 1.0 if n > 1 else 0.0
    witness = (-1, -1)
    unreachable = 0
    sampled = 0
    for s in sources:
        dist = _dijkstra(adj, s, n)
        ps = points[s]
        for t in range(n):
            if t == s:
                continue
            sampled += 1
            if math.isinf(dist[t]):
                unreachable += 1
                continue
            d = math.hypot(ps.x - points[t].x, ps.y - points[t].y)
            ratio = dist[t] / d
            if ratio > best:
                best = ratio
                witness = (s, t)
    return StretchReport(best, witness, stretch_bound(g.k), unreachable, sampled)


def validate_graph(g: YaoGraph, points, kernel) -> list:
    """Check structural Yao graph invariants; returns violation messages."""
    from .baselines import cone_index_of  # local import avoids a module cycle

    problems = []
    seen = set()
    for s, t, c in g.edges:
        if s == t:
            problems.append(f"self-loop at {s}")
        if not 0 <= c < g.k:
            problems.append(f"cone index {c} out of range")
        if (s, c) in seen:
            problems.append(f"duplicate (source, cone) = ({s}, {c})")
        seen.add((s, c))
        ps, pt = points[s], points[t]
        got = cone_index_of(ps.x, ps.y, pt.x, pt.y, g.k, kernel)
        if got != c:
            problems.append(f"edge ({s},{t}) labeled cone {c} but lies in {got}")
    return problems
