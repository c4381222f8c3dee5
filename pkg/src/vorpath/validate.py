"""Independent verification of solver output.

verify_chain rebuilds a fresh diagram (different perturbation seed) from raw
coordinates and checks the claimed adjacencies combinatorially, so it shares
no state with the solver run it is judging.  The two brute-force oracles
reduce adjacency questions to one-dimensional feasibility along a bisector
line, which needs nothing from the diagram machinery at all: a candidate
point q is adjacent to a site p among points P exactly when some center x on
the (q, p) bisector satisfies |x - q| < |x - w| for every other w, and each
such constraint is linear in the position along the line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .diagram import Diagram
from .errors import DegenerateInputError, TooLargeError
from .geom import Point, RobustnessConfig, bbox_diagonal, bbox_of

_VALIDATION_SEED_SALT = 0x56414C1D
_BRUTE_CAP = 50


@dataclass
class ChainReport:
    valid: bool
    failed_link: int | None
    recomputed_adjacencies: list[bool]


def verify_chain(points, s, t, insertions, cfg: RobustnessConfig | None = None) -> ChainReport:
    """Check that inserting the given points links s to t by adjacent cells.

    Builds a zero-radius diagram over points + endpoints + insertions with a
    fresh perturbation seed and tests each consecutive pair of the chain
    s, q1, ..., qk, t for a shared cell boundary.
    """
    cfg = cfg or RobustnessConfig()
    vcfg = replace(cfg, rng_seed=cfg.rng_seed ^ _VALIDATION_SEED_SALT,
                   perturbation_magnitude=min(cfg.perturbation_magnitude, 1e-11))
    pts = [(float(p[0]), float(p[1])) for p in points]
    diag = bbox_diagonal(bbox_of(pts + [(float(s[0]), float(s[1])),
                                        (float(t[0]), float(t[1]))]))
    # an insertion landing within the robustness scale of an existing point
    # is the degenerate "secure this site" case; below that scale the two
    # cannot be told apart, so the chain runs through the site itself
    snap = 16.0 * max(cfg.tolerance, 1.0 - cfg.radius_factor) * diag
    arr = np.asarray(pts)

    def snapped(q) -> tuple[float, float]:
        qx, qy = float(q[0]), float(q[1])
        d2 = (arr[:, 0] - qx) ** 2 + (arr[:, 1] - qy) ** 2
        k = int(np.argmin(d2))
        if d2[k] <= snap * snap:
            return pts[k]
        return (qx, qy)

    coords: list[Point] = []
    index: dict[tuple[float, float], int] = {}

    def add(p) -> int:
        key = (float(p[0]), float(p[1]))
        if key not in index:
            index[key] = len(coords)
            coords.append(Point(*key))
        return index[key]

    for p in pts:
        add(p)
    chain = [add(snapped(s))] + [add(snapped(q)) for q in insertions] + [add(snapped(t))]
    chain = [c for i, c in enumerate(chain) if i == 0 or c != chain[i - 1]]
    if len(coords) < 3:
        raise DegenerateInputError("too few distinct sites to verify")
    if len(chain) == 1:
        return ChainReport(True, None, [])
    d = Diagram.build(coords, (), vcfg)
    # a link that the rebuilt diagram rejects may still be a degenerate
    # cell contact (regular grids produce exact point-touches); it passes
    # when an empty witness circle exists up to the robustness slack
    contact_tol = 64.0 * max(cfg.tolerance, 1.0 - cfg.radius_factor) * diag
    flags: list[bool] = []
    for a, b in zip(chain, chain[1:]):
        ok = b in d.neighbors(a)
        if not ok:
            ok = _witness_width(coords, a, b) >= -contact_tol
        flags.append(ok)
    valid = all(flags)
    failed = None if valid else flags.index(False)
    return ChainReport(valid, failed, flags)


def _witness_width(coords, i: int, j: int) -> float:
    """Width of the interval of circle centers through sites i and j whose
    circles contain no other site; negative means no witness by that much."""
    xi, yi = coords[i]
    xj, yj = coords[j]
    mx = (xi + xj) / 2.0
    my = (yi + yj) / 2.0
    dx = xj - xi
    dy = yj - yi
    nn = math.hypot(dx, dy)
    if nn == 0.0:
        return -math.inf
    nx = -dy / nn
    ny = dx / nn
    lo = -math.inf
    hi = math.inf
    for k, (px, py) in enumerate(coords):
        if k == i or k == j:
            continue
        a_k = 2.0 * (nx * (px - xi) + ny * (py - yi))
        b_k = ((mx - px) ** 2 + (my - py) ** 2) - ((mx - xi) ** 2 + (my - yi) ** 2)
        if a_k == 0.0:
            if b_k < 0.0:
                return -math.inf
            continue
        r = b_k / a_k
        if a_k < 0.0:
            lo = max(lo, r)
        else:
            hi = min(hi, r)
    return hi - lo


def _grid_candidates(points, grid_resolution: int, exclusion: float):
    xmin, ymin, xmax, ymax = bbox_of(points)
    xs = np.linspace(xmin, xmax, grid_resolution + 1)
    ys = np.linspace(ymin, ymax, grid_resolution + 1)
    gx, gy = np.meshgrid(xs, ys)
    qx = gx.ravel()
    qy = gy.ravel()
    keep = np.ones(qx.shape, dtype=bool)
    for (px, py) in points:
        keep &= (qx - px) ** 2 + (qy - py) ** 2 > exclusion * exclusion
    return qx[keep], qy[keep]


def _adjacency_mask(qx, qy, ax, ay, pts, skip_index, eps):
    """For each candidate q: is q adjacent to point a in the diagram of
    pts + {q}?  Vectorized 1-D feasibility along each (q, a) bisector."""
    mx = (qx + ax) / 2.0
    my = (qy + ay) / 2.0
    dx = ax - qx
    dy = ay - qy
    norm = np.hypot(dx, dy)
    norm = np.where(norm == 0.0, 1.0, norm)
    nx = -dy / norm
    ny = dx / norm
    lo = np.full(qx.shape, -np.inf)
    hi = np.full(qx.shape, np.inf)
    feasible = np.ones(qx.shape, dtype=bool)
    for k, (px, py) in enumerate(pts):
        if k == skip_index:
            continue
        a_k = 2.0 * (nx * (px - qx) + ny * (py - qy))
        b_k = ((mx - px) ** 2 + (my - py) ** 2) - ((mx - qx) ** 2 + (my - qy) ** 2)
        ratio = np.divide(b_k, a_k, out=np.zeros_like(b_k), where=a_k != 0.0)
        lo = np.where(a_k < 0.0, np.maximum(lo, ratio), lo)
        hi = np.where(a_k > 0.0, np.minimum(hi, ratio), hi)
        feasible &= ~((a_k == 0.0) & (b_k < 0.0))
    return feasible & (lo + eps < hi)


def one_hop_reachable(points, source_index: int, grid_resolution: int) -> list[bool]:
    """For every input point: can it be made adjacent to the source by one
    extra site?  Ground truth by exhaustive grid search over candidate
    locations; entry [source_index] is True by convention."""
    pts = [(float(p[0]), float(p[1])) for p in points]
    diag = bbox_diagonal(bbox_of(pts))
    cfg = RobustnessConfig()
    qx, qy = _grid_candidates(pts, grid_resolution, cfg.perturbation_magnitude * diag)
    eps = 1e-12 * diag
    sx, sy = pts[source_index]
    adj_s = _adjacency_mask(qx, qy, sx, sy, pts, source_index, eps)
    out: list[bool] = []
    for k, (px, py) in enumerate(pts):
        if k == source_index:
            out.append(True)
            continue
        adj_p = _adjacency_mask(qx, qy, px, py, pts, k, eps)
        out.append(bool(np.any(adj_s & adj_p)))
    return out


def one_hop_oracle(points, s, probe, grid_resolution: int) -> bool:
    """Whether `probe` is reachable from `s` with a single insertion.

    Brute force: every corner of a grid_resolution x grid_resolution cell
    grid over the points' bounding box is tried as the inserted location
    (skipping spots on top of existing sites); the probe is reachable iff
    some candidate is adjacent to both s and probe.  Refining the grid can
    only grow the candidate set, so a True result is stable under doubling
    the resolution.
    """
    pts = [(float(p[0]), float(p[1])) for p in points]
    s = (float(s[0]), float(s[1]))
    probe = (float(probe[0]), float(probe[1]))
    si = pts.index(s) if s in pts else -1
    pi = pts.index(probe)
    if si == pi:
        raise ValueError("probe must differ from the source")
    diag = bbox_diagonal(bbox_of(pts))
    cfg = RobustnessConfig()
    qx, qy = _grid_candidates(pts, grid_resolution, cfg.perturbation_magnitude * diag)
    eps = 1e-12 * diag
    adj_s = _adjacency_mask(qx, qy, s[0], s[1], pts, si, eps)
    adj_p = _adjacency_mask(qx, qy, probe[0], probe[1], pts, pi, eps)
    return bool(np.any(adj_s & adj_p))


def brute_delaunay_edges(points) -> set[tuple[int, int]]:
    """All Delaunay edges of a small point set by exhaustive witness search.

    Pair (i, j) is an edge iff some circle through both contains no other
    point; sliding the circle center along the (i, j) bisector makes every
    "w stays outside" condition linear in the slide parameter, so the
    witness exists iff the resulting interval has positive width.
    """
    pts = [(float(p[0]), float(p[1])) for p in points]
    n = len(pts)
    if n > _BRUTE_CAP:
        raise TooLargeError(f"brute-force oracle capped at {_BRUTE_CAP} points")
    edges: set[tuple[int, int]] = set()
    for i in range(n):
        xi, yi = pts[i]
        for j in range(i + 1, n):
            xj, yj = pts[j]
            mx = (xi + xj) / 2.0
            my = (yi + yj) / 2.0
            dx = xj - xi
            dy = yj - yi
            norm = math.hypot(dx, dy)
            if norm == 0.0:
                continue
            nx = -dy / norm
            ny = dx / norm
            lo = -math.inf
            hi = math.inf
            ok = True
            for k in range(n):
                if k == i or k == j:
                    continue
                px, py = pts[k]
                a_k = 2.0 * (nx * (px - xi) + ny * (py - yi))
                b_k = ((mx - px) ** 2 + (my - py) ** 2) - ((mx - xi) ** 2 + (my - yi) ** 2)
                if a_k == 0.0:
                    if b_k < 0.0:
                        ok = False
                        break
                    continue
                r = b_k / a_k
                if a_k < 0.0:
                    lo = max(lo, r)
                else:
                    hi = min(hi, r)
                if lo >= hi:
                    ok = False
                    break
            if ok and lo < hi:
                edges.add((i, j))
    return edges
