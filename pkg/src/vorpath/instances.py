"""Instance generation, ingestion, frame construction and endpoint selection."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from pathlib import Path as FsPath

from .diagram import Diagram
from .errors import CsvParseError, TooFewInteriorError, TooFewPointsError
from .geom import Point, RobustnessConfig, bbox_diagonal, bbox_of, splitmix64

# Fraction of the bounding box used to window endpoint candidates.  Chosen so
# that the furthest hex-lattice pairs land at the documented baseline lengths
# for sides 10 and 30.
DEFAULT_SHRINK = 0.45
DEFAULT_FRAME_POINTS = 16
DEFAULT_FRAME_MARGIN = 0.2
MIN_CSV_POINTS = 10


@dataclass
class Instance:
    points: list[Point]
    source_index: int
    target_index: int
    frame: list[Point]
    cfg: RobustnessConfig = field(default_factory=RobustnessConfig)
    name: str = ""

    def __post_init__(self):
        n = len(self.points)
        if not (0 <= self.source_index < n and 0 <= self.target_index < n):
            raise ValueError("endpoint indices out of range")
        if self.source_index == self.target_index:
            raise ValueError("endpoint indices must differ")

    def diagram(self) -> Diagram:
        return Diagram.build(self.points, self.frame, self.cfg, name=self.name)


def build_frame(points, points_per_side: int = DEFAULT_FRAME_POINTS,
                margin: float = DEFAULT_FRAME_MARGIN) -> list[Point]:
    """Evenly spaced boundary points on the bbox inflated by margin x diagonal.

    Corners are shared between sides, so the result has
    4 * (points_per_side - 1) distinct points.  Each side arches gently
    outward: dead-straight runs of sites produce circumcircles too large for
    double precision, and the tiny input perturbation alone cannot tame them.
    """
    if points_per_side < 2:
        raise ValueError("points_per_side must be >= 2")
    xmin, ymin, xmax, ymax = bbox_of(points)
    pad = margin * bbox_diagonal((xmin, ymin, xmax, ymax))
    if pad <= 0:
        raise ValueError("margin must be positive for a non-degenerate bbox")
    x0, y0, x1, y1 = xmin - pad, ymin - pad, xmax + pad, ymax + pad
    bump = 0.25 * pad
    out: list[Point] = []
    seen: set[tuple[float, float]] = set()
    m = points_per_side - 1
    for k in range(points_per_side):
        t = k / m
        arch = bump * 4.0 * t * (1.0 - t)
        for p in (Point(x0 + t * (x1 - x0), y0 - arch),
                  Point(x0 + t * (x1 - x0), y1 + arch),
                  Point(x0 - arch, y0 + t * (y1 - y0)),
                  Point(x1 + arch, y0 + t * (y1 - y0))):
            key = (p.x, p.y)
            if key not in seen:
                seen.add(key)
                out.append(p)
    return out


def _convex_hull(idx_pts: list[tuple[int, Point]]) -> list[tuple[int, Point]]:
    pts = sorted(idx_pts, key=lambda ip: (ip[1].x, ip[1].y, ip[0]))

    def cross(o, a, b):
        return (a[1].x - o[1].x) * (b[1].y - o[1].y) - (a[1].y - o[1].y) * (b[1].x - o[1].x)

    lower: list[tuple[int, Point]] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, Point]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def select_endpoints(points, shrink_factor: float = DEFAULT_SHRINK) -> tuple[int, int]:
    """Indices of the farthest point pair within the shrunken bounding box.

    The bbox is scaled by shrink_factor about its center; among points inside
    it (inclusive), the euclidean-farthest pair wins, ties going to the
    lexicographically smallest index pair.
    """
    pts = [Point(float(p[0]), float(p[1])) for p in points]
    xmin, ymin, xmax, ymax = bbox_of(pts)
    cx = (xmin + xmax) / 2.0
    cy = (ymin + ymax) / 2.0
    hx = (xmax - xmin) / 2.0 * shrink_factor
    hy = (ymax - ymin) / 2.0 * shrink_factor
    inside = [(i, p) for i, p in enumerate(pts)
              if cx - hx <= p.x <= cx + hx and cy - hy <= p.y <= cy + hy]
    if len(inside) < 2:
        raise TooFewInteriorError(
            f"only {len(inside)} points inside the shrunken bbox")
    hull = _convex_hull(inside) if len(inside) > 3 else inside
    best = -1.0
    best_pair: tuple[int, int] | None = None
    m = len(hull)
    for a in range(m):
        ia, pa = hull[a]
        for b in range(a + 1, m):
            ib, pb = hull[b]
            d2 = (pa.x - pb.x) ** 2 + (pa.y - pb.y) ** 2
            pair = (ia, ib) if ia < ib else (ib, ia)
            if d2 > best or (d2 == best and pair < best_pair):
                best = d2
                best_pair = pair
    assert best_pair is not None
    return best_pair


def _make_instance(points: list[Point], name: str,
                   cfg: RobustnessConfig | None,
                   shrink: float,
                   frame_points_per_side: int,
                   frame_margin: float) -> Instance:
    cfg = cfg or RobustnessConfig()
    frame = build_frame(points, frame_points_per_side, frame_margin)
    src, tgt = select_endpoints(points, shrink)
    return Instance(points, src, tgt, frame, cfg, name)


def gen_hex(side: int, cfg: RobustnessConfig | None = None,
            shrink: float = DEFAULT_SHRINK,
            frame_points_per_side: int = DEFAULT_FRAME_POINTS,
            frame_margin: float = DEFAULT_FRAME_MARGIN) -> Instance:
    """side x side triangular-lattice points at unit spacing.

    Every interior point has six equidistant neighbors, so the Voronoi cells
    are regular hexagons.
    """
    if side < 3:
        raise ValueError("side must be >= 3")
    h = math.sqrt(3.0) / 2.0
    points = [Point(i + (0.5 if j % 2 else 0.0), j * h)
              for j in range(side) for i in range(side)]
    return _make_instance(points, f"hex_{side:03d}", cfg, shrink,
                          frame_points_per_side, frame_margin)


def gen_random(count: int, seed: int, cfg: RobustnessConfig | None = None,
               shrink: float = DEFAULT_SHRINK,
               frame_points_per_side: int = DEFAULT_FRAME_POINTS,
               frame_margin: float = DEFAULT_FRAME_MARGIN) -> Instance:
    """count points uniform in the unit square, deterministic in seed."""
    if count < 10:
        raise ValueError("count must be >= 10")
    rng = random.Random(splitmix64(seed ^ 0x52414E44))
    points = [Point(rng.random(), rng.random()) for _ in range(count)]
    return _make_instance(points, f"rand_{count:05d}", cfg, shrink,
                          frame_points_per_side, frame_margin)


def parse_points(text: str, thin: int = 1) -> list[Point]:
    """Parse whitespace- or comma-separated x y pairs; '#' starts a comment."""
    points: list[Point] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.replace(",", " ").split()
        if len(tokens) != 2:
            raise CsvParseError(line_no, f"expected two coordinates, got {body!r}")
        try:
            x = float(tokens[0])
            y = float(tokens[1])
        except ValueError:
            raise CsvParseError(line_no, f"non-numeric coordinate in {body!r}") from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise CsvParseError(line_no, "coordinates must be finite")
        points.append(Point(x, y))
    if thin > 1:
        points = points[::thin]
    seen: set[tuple[float, float]] = set()
    unique: list[Point] = []
    for p in points:
        key = (p.x, p.y)
        if key not in seen:
            seen.add(key)
            unique.append(p)
    return unique


def load_csv(path, thin: int = 1, cfg: RobustnessConfig | None = None,
             shrink: float = DEFAULT_SHRINK,
             frame_points_per_side: int = DEFAULT_FRAME_POINTS,
             frame_margin: float = DEFAULT_FRAME_MARGIN) -> Instance:
    """Instance from a point file (see parse_points for the format)."""
    path = FsPath(path)
    points = parse_points(path.read_text(), thin=thin)
    if len(points) < MIN_CSV_POINTS:
        raise TooFewPointsError(
            f"{path}: {len(points)} points after thinning, need >= {MIN_CSV_POINTS}")
    name = path.stem if thin <= 1 else f"{path.stem}_t{thin}"
    return _make_instance(points, name, cfg, shrink,
                          frame_points_per_side, frame_margin)


def write_points(points, path, name: str = "") -> None:
    lines = []
    if name:
        lines.append(f"# {name}")
    lines.extend(f"{p[0]!r} {p[1]!r}" for p in points)
    FsPath(path).write_text("\n".join(lines) + "\n")
