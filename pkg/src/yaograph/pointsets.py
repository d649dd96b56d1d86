"""Point-set generators, plain-text point/edge files, stats CSV and SVG output."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .analysis import YaoGraph
from .kernel import Point

DISTRIBUTIONS = ("uniform", "gaussian", "grid", "circle")

STATS_COLUMNS = [
    "algorithm", "kernel", "distribution", "n", "k", "seed", "coneIndex",
    "nInput", "nIntersection", "nDeletion", "maxDynamicQueue",
    "maxSweeplineSize", "wallTimeNanos",
]


class ParseError(ValueError):
    pass


class DuplicateInputError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    distribution: str
    n: int
    seed: int = 0

    def __post_init__(self):
        if self.distribution not in DISTRIBUTIONS:
            raise ValueError(f"unknown distribution {self.distribution!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")


def generate(spec: GeneratorSpec) -> list:
    """Deterministic synthetic point sets; identical spec, identical points."""
    n, seed = spec.n, spec.seed
    rng = np.random.default_rng(seed)
    if spec.distribution == "uniform":
        coords = rng.random((n, 2))
    elif spec.distribution == "gaussian":
        coords = rng.normal(0.5, 0.25, size=(n, 2))
    elif spec.distribution == "grid":
        side = math.isqrt(n)
        if side * side < n:
            side += 1
        denom = float(side - 1) if side > 1 else 1.0
        coords = np.empty((n, 2))
        for p in range(n):
            i, j = divmod(p, side)
            coords[p, 0] = j / denom
            coords[p, 1] = i / denom
    else:  # circle
        angles = 2.0 * np.pi * np.arange(n) / n
        coords = np.column_stack((0.5 + 0.5 * np.cos(angles),
                                  0.5 + 0.5 * np.sin(angles)))
    return [Point(i, float(coords[i, 0]), float(coords[i, 1])) for i in range(n)]


def validate_points(points) -> None:
    """Reject non-finite coordinates and exact duplicate sites."""
    seen = {}
    for p in points:
        if not (math.isfinite(p.x) and math.isfinite(p.y)):
            raise ParseError(f"non-finite coordinate at point {p.id}")
        key = (p.x, p.y)
        if key in seen:
            raise DuplicateInputError(
                f"duplicate-input: point {p.id} repeats point {seen[key]}")
        seen[key] = p.id


def read_points(path) -> list:
    """One point per line, two whitespace-separated numbers, '#' comments."""
    points = []
    seen = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"{path}:{lineno}: expected two numbers")
            try:
                x, y = float(parts[0]), float(parts[1])
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from None
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ParseError(f"{path}:{lineno}: non-finite coordinate")
            if (x, y) in seen:
                raise DuplicateInputError(
                    f"duplicate-input: {path}:{lineno} repeats line {seen[(x, y)]}")
            seen[(x, y)] = lineno
            points.append(Point(len(points), x, y))
    return points


def write_points(points, path) -> None:
    with open(path, "w") as fh:
        for p in points:
            fh.write(f"{p.x:.17g} {p.y:.17g}\n")


def write_edges(graph: YaoGraph, path) -> None:
    """Header line "n k", then one "source target cone" line per edge."""
    with open(path, "w") as fh:
        fh.write(f"{graph.n} {graph.k}\n")
        for s, t, c in sorted(graph.edges):
            fh.write(f"{s} {t} {c}\n")


def read_edges(path) -> YaoGraph:
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise ParseError(f"{path}:1: expected header 'n k'")
        n, k = int(header[0]), int(header[1])
        edges = []
        for lineno, raw in enumerate(fh, start=2):
            line = raw.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ParseError(f"{path}:{lineno}: expected 'source target cone'")
            edges.append((int(parts[0]), int(parts[1]), int(parts[2])))
    return YaoGraph(n, k, edges, provenance={"file": str(path)})


def write_stats(rows, path) -> None:
    """Stats CSV with the fixed column set; rows are dicts."""
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=STATS_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow({c: row.get(c, "") for c in STATS_COLUMNS})


def read_stats(path) -> list:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def write_svg(points, graph, path, size=800, margin=30) -> None:
    """Static drawing: one circle per point, one arrow line per edge."""
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    span = max(maxx - minx, maxy - miny) or 1.0
    scale = (size - 2 * margin) / span

    def sx(x):
        return margin + (x - minx) * scale

    def sy(y):
        return size - margin - (y - miny) * scale

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" '
        'markerWidth="5" markerHeight="5" orient="auto-start-reverse">'
        '<path d="M 0 0 L 10 5 L 0 10 z" fill="#555"/></marker></defs>',
    ]
    if graph is not None:
        for s, t, _ in graph.edges:
            x1, y1 = sx(points[s].x), sy(points[s].y)
            x2, y2 = sx(points[t].x), sy(points[t].y)
            lines.append(
                f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                'stroke="#555" stroke-width="1" marker-end="url(#arrow)"/>')
    for p in points:
        lines.append(
            f'<circle cx="{sx(p.x):.2f}" cy="{sy(p.y):.2f}" r="3" fill="#c22"/>')
    lines.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
