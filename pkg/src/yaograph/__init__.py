"""Yao graph construction toolkit.

Three algorithms build the same directed cone-nearest-neighbor graph:
an O(n log n) sweepline (one pass per cone), a uniform-grid search and a
naive all-pairs baseline that doubles as the correctness oracle.
"""

from .analysis import (
    IncomparableGraphs,
    StretchReport,
    YaoGraph,
    compare_graphs,
    stretch_bound,
    stretch_factor,
    validate_graph,
)
from .baselines import build_grid, cone_index_of, grid_yao, naive_yao, spiral_cells
from .kernel import (
    ConeSpec,
    DirectedLine,
    InvariantError,
    KernelConfig,
    NumericalFailure,
    Point,
    make_kernel,
)
from .pointsets import (
    DuplicateInputError,
    GeneratorSpec,
    ParseError,
    generate,
    read_edges,
    read_points,
    validate_points,
    write_edges,
    write_points,
    write_stats,
    write_svg,
)
from .sweep import PassStats, build_yao_sweepline, run_cone_pass

__all__ = [
    "ConeSpec", "DirectedLine", "DuplicateInputError", "GeneratorSpec",
    "IncomparableGraphs", "InvariantError", "KernelConfig",
    "NumericalFailure", "ParseError", "PassStats", "Point", "StretchReport",
    "YaoGraph", "build_grid", "build_yao_sweepline", "compare_graphs",
    "cone_index_of", "generate", "grid_yao", "make_kernel", "naive_yao",
    "read_edges", "read_points", "run_cone_pass", "spiral_cells",
    "stretch_bound", "stretch_factor", "validate_graph", "validate_points",
    "write_edges", "write_points", "write_stats", "write_svg",
]

__version__ = "0.1.0"
