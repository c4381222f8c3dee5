"""Minimum-insertion secure paths in Voronoi diagrams.

Given a planar point set and two of its points, compute the fewest extra
sites whose insertion links the two cells by a chain of adjacent Voronoi
cells, via a generation-based wavefront over an additively weighted
(disk-site) Voronoi diagram.  Includes a BFS hop-count baseline, independent
validation oracles, instance generators, SVG/table reporting and a CLI.
"""

from .baseline import BfsResult, bfs_baseline
from .diagram import (
    Diagram,
    DiagramVertex,
    HiddenResult,
    INF,
    KIND_FRAME,
    KIND_INPUT,
    KIND_INSERTED,
    build,
)
from .errors import (
    CsvParseError,
    DegenerateInputError,
    DegenerateInsertionError,
    HiddenSiteError,
    InvalidHintError,
    NoPathError,
    NotAdjacentError,
    NotTangentError,
    TooFewInteriorError,
    TooFewPointsError,
    TooLargeError,
    UnboundedBisectorError,
    VorpathError,
)
from .geom import (
    BisectorArc,
    Disk,
    Point,
    RobustnessConfig,
    disk,
    perturb,
    tangency_point,
    tritangent_circle,
    weighted_distance,
)
from .instances import (
    Instance,
    build_frame,
    gen_hex,
    gen_random,
    load_csv,
    parse_points,
    select_endpoints,
    write_points,
)
from .render import Overlays, render_svg
from .report import ResultRow, emit_table
from .validate import (
    ChainReport,
    brute_delaunay_edges,
    one_hop_oracle,
    one_hop_reachable,
    verify_chain,
)
from .wavefront import (
    CandidateVertex,
    SecurePath,
    WavefrontTrace,
    admissible,
    initial_candidates,
    one_insertion_frontier,
    reconstruct,
    run_round,
    solve,
)

__version__ = "0.1.0"
