"""Scalar geometry kernel for disk (additively weighted) sites.

Everything in this module is a pure function over immutable values, so it is
safe to call from any number of threads.  The diagram layer keeps flat float
arrays and mostly calls the underscore variants that skip tuple wrapping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

from .errors import NotTangentError

_MASK64 = (1 << 64) - 1
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class Point(NamedTuple):
    x: float
    y: float


class Disk(NamedTuple):
    center: Point
    radius: float


def disk(x: float, y: float, r: float = 0.0) -> Disk:
    return Disk(Point(float(x), float(y)), float(r))


@dataclass(frozen=True)
class RobustnessConfig:
    """Knobs of the degeneracy-avoidance scheme.

    perturbation_magnitude and tolerance are relative to the bounding-box
    diagonal of the instance; radius_factor slightly shrinks every inserted
    disk so that exact tangencies become strict separations.
    """

    perturbation_magnitude: float = 1e-9
    radius_factor: float = 1.0 - 1e-7
    tolerance: float = 1e-9
    rng_seed: int = 0

    def __post_init__(self):
        if self.perturbation_magnitude < 0:
            raise ValueError("perturbation_magnitude must be >= 0")
        if not (0.0 < self.radius_factor <= 1.0):
            raise ValueError("radius_factor must be in (0, 1]")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be > 0")


def weighted_distance(p: Point, d: Disk) -> float:
    """Euclidean distance from p to the disk center minus the disk radius.

    Negative iff p lies strictly inside the disk.
    """
    return math.hypot(p[0] - d.center[0], p[1] - d.center[1]) - d.radius


def orient(ax: float, ay: float, bx: float, by: float, cx: float, cy: float) -> float:
    """Twice the signed area of triangle (a, b, c); > 0 for counter-clockwise."""
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def incircle(ax, ay, bx, by, cx, cy, px, py) -> float:
    """In-circumcircle determinant; > 0 iff p lies strictly inside the
    circumcircle of the counter-clockwise triangle (a, b, c).

    Works on coordinate differences, so it stays trustworthy for the huge,
    badly conditioned circumcircles of nearly collinear triples where the
    center/radius form loses every significant digit.
    """
    adx = ax - px
    ady = ay - py
    bdx = bx - px
    bdy = by - py
    cdx = cx - px
    cdy = cy - py
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    return (alift * (bdx * cdy - cdx * bdy)
            + blift * (cdx * ady - adx * cdy)
            + clift * (adx * bdy - bdx * ady))


def bbox_of(points) -> tuple[float, float, float, float]:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def bbox_diagonal(bbox: tuple[float, float, float, float]) -> float:
    return math.hypot(bbox[2] - bbox[0], bbox[3] - bbox[1])


def splitmix64(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _unit_float(h: int) -> float:
    # 53 high bits -> [0, 1)
    return (h >> 11) * (1.0 / (1 << 53))


def perturb(p: Point, cfg: RobustnessConfig, bbox_diag: float, index: int) -> Point:
    """Displace p by a deterministic pseudo-random offset.

    Each coordinate moves uniformly within +/- magnitude * bbox_diag, driven
    only by (rng_seed, index), so rebuilding an instance reproduces the exact
    same coordinates.
    """
    if bbox_diag <= 0:
        raise ValueError("bbox_diag must be > 0")
    if cfg.perturbation_magnitude == 0.0:
        return Point(p[0], p[1])
    amp = cfg.perturbation_magnitude * bbox_diag
    h = splitmix64((cfg.rng_seed & _MASK64) ^ splitmix64(index & _MASK64))
    hx = splitmix64(h)
    hy = splitmix64(h ^ 0xD1B54A32D192ED03)
    dx = (2.0 * _unit_float(hx) - 1.0) * amp
    dy = (2.0 * _unit_float(hy) - 1.0) * amp
    return Point(p[0] + dx, p[1] + dy)


def _circumcircle(ax, ay, bx, by, cx, cy):
    """Circumcenter and radius of three points, or None when collinear."""
    bx_ = bx - ax
    by_ = by - ay
    cx_ = cx - ax
    cy_ = cy - ay
    d = bx_ * cy_ - by_ * cx_
    if d == 0.0:
        return None
    b2 = bx_ * bx_ + by_ * by_
    c2 = cx_ * cx_ + cy_ * cy_
    ux = (cy_ * b2 - by_ * c2) / (2.0 * d)
    uy = (bx_ * c2 - cx_ * b2) / (2.0 * d)
    return ax + ux, ay + uy, math.hypot(ux, uy)


def _direction_cross(vx, vy, ax, ay, bx, by, cx, cy):
    """Cyclic orientation of the unit directions from v toward a, b, c.

    Positive when the three cells meeting at v appear counter-clockwise in
    the order (a, b, c); valid for overlap vertices too, where tangency
    points would flip sides.
    """
    pts = []
    for px, py in ((ax, ay), (bx, by), (cx, cy)):
        d = math.hypot(px - vx, py - vy)
        if d < 1e-300:
            return 0.0
        pts.append(((px - vx) / d, (py - vy) / d))
    (x0, y0), (x1, y1), (x2, y2) = pts
    return (x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0)


def _newton_polish(vx, vy, rho, sites, iters=3):
    """Refine (vx, vy, rho) on the system dist_i - rho - r_i = 0."""
    for _ in range(iters):
        rows = []
        fs = []
        ok = True
        for (px, py, pr) in sites:
            dx = vx - px
            dy = vy - py
            dist = math.hypot(dx, dy)
            if dist < 1e-300:
                ok = False
                break
            rows.append((dx / dist, dy / dist, -1.0))
            fs.append(dist - rho - pr)
        if not ok:
            break
        scale = max(1.0, abs(vx), abs(vy), abs(rho))
        if max(abs(f) for f in fs) <= 1e-14 * scale:
            break
        (a11, a12, a13), (a21, a22, a23), (a31, a32, a33) = rows
        det = (a11 * (a22 * a33 - a23 * a32)
               - a12 * (a21 * a33 - a23 * a31)
               + a13 * (a21 * a32 - a22 * a31))
        if abs(det) < 1e-250:
            break
        b1, b2, b3 = -fs[0], -fs[1], -fs[2]
        dx_ = (b1 * (a22 * a33 - a23 * a32)
               - a12 * (b2 * a33 - a23 * b3)
               + a13 * (b2 * a32 - a22 * b3)) / det
        dy_ = (a11 * (b2 * a33 - a23 * b3)
               - b1 * (a21 * a33 - a23 * a31)
               + a13 * (a21 * b3 - b2 * a31)) / det
        dr_ = (a11 * (a22 * b3 - b2 * a32)
               - a12 * (a21 * b3 - b2 * a31)
               + b1 * (a21 * a32 - a22 * a31)) / det
        vx += dx_
        vy += dy_
        rho += dr_
    return vx, vy, rho


def solve_vertex(ax, ay, ra, bx, by, rb, cx, cy, rc):
    """Center and clearance of the circle equally weighted-distant from three disks.

    The returned clearance can be negative when the disks mutually overlap
    (the "circle" is then tangent from inside the union).  Among the up to two
    algebraic solutions, the one whose tangency points wind counter-clockwise
    in the order (a, b, c) is returned; None when no such solution exists.
    """
    bx_ = bx - ax
    by_ = by - ay
    cx_ = cx - ax
    cy_ = cy - ay
    rb_ = rb - ra
    rc_ = rc - ra
    dd = bx_ * cy_ - by_ * cx_
    nb = math.hypot(bx_, by_)
    nc = math.hypot(cx_, cy_)
    if nb == 0.0 or nc == 0.0:
        return None
    scale = max(1.0, nb, nc, abs(ra), abs(rb), abs(rc))
    eps = 1e-12 * scale

    candidates: list[tuple[float, float, float]] = []  # (vx, vy, rho1)
    if abs(dd) <= 1e-6 * nb * nc:
        # centers (nearly) on one line: solve in the rotated frame where the
        # line is the first axis; the two mirrored solutions are candidates
        ex, ey = bx_ / nb, by_ / nb
        ub = bx_ * ex + by_ * ey
        uc = cx_ * ex + cy_ * ey
        kb = ub * ub - rb_ * rb_
        kc = uc * uc - rc_ * rc_
        den = 2.0 * (rc_ * ub - rb_ * uc)
        if den == 0.0 or ub == 0.0:
            return None
        rho1 = (kc * ub - kb * uc) / den
        x1 = (kb - 2.0 * rb_ * rho1) / (2.0 * ub)
        h2 = rho1 * rho1 - x1 * x1
        if h2 < 0.0:
            if h2 < -eps * scale:
                return None
            h2 = 0.0
        h = math.sqrt(h2)
        for sgn in (1.0, -1.0):
            candidates.append((ax + x1 * ex - sgn * h * ey,
                               ay + x1 * ey + sgn * h * ex,
                               rho1))
    else:
        kb = nb * nb - rb_ * rb_
        kc = nc * nc - rc_ * rc_
        # x = p + rho' q in the frame centered at a
        px = (cy_ * kb - by_ * kc) / (2.0 * dd)
        py = (bx_ * kc - cx_ * kb) / (2.0 * dd)
        qx = (rc_ * by_ - rb_ * cy_) / dd
        qy = (rb_ * cx_ - rc_ * bx_) / dd
        alpha = qx * qx + qy * qy - 1.0
        beta = px * qx + py * qy
        gamma = px * px + py * py
        roots = []
        if abs(alpha) < 1e-14:
            if beta != 0.0:
                roots.append(-gamma / (2.0 * beta))
        else:
            disc = beta * beta - alpha * gamma
            if disc < 0.0:
                return None
            s = math.sqrt(disc)
            qq = -(beta + math.copysign(s, beta))
            if qq != 0.0:
                roots.append(qq / alpha)
                roots.append(gamma / qq)
        for rho1 in roots:
            candidates.append((ax + px + rho1 * qx, ay + py + rho1 * qy, rho1))

    best = None
    best_cross = 0.0
    for vx, vy, rho1 in candidates:
        if not math.isfinite(rho1) or not math.isfinite(vx) or not math.isfinite(vy):
            continue
        # rho1 is the distance to a's center; all three distances must be >= 0
        if rho1 < -eps or rho1 + rb_ < -eps or rho1 + rc_ < -eps:
            continue
        cross = _direction_cross(vx, vy, ax, ay, bx, by, cx, cy)
        if cross > best_cross:
            best_cross = cross
            best = (vx, vy, rho1 - ra)
    if best is None:
        return None
    vx, vy, rho = best
    # refine only when the linear elimination lost digits
    res = abs(math.hypot(vx - ax, vy - ay) - rho - ra)
    r2 = abs(math.hypot(vx - bx, vy - by) - rho - rb)
    if r2 > res:
        res = r2
    r2 = abs(math.hypot(vx - cx, vy - cy) - rho - rc)
    if r2 > res:
        res = r2
    if res > 1e-13 * max(1.0, abs(vx), abs(vy), abs(rho)):
        vx, vy, rho = _newton_polish(vx, vy, rho,
                                     ((ax, ay, ra), (bx, by, rb), (cx, cy, rc)))
    return vx, vy, rho


def tritangent_circle(a: Disk, b: Disk, c: Disk):
    """Empty circle externally tangent to the three disks, or None.

    The defining triple of the returned circle is counter-clockwise.  Raises
    ValueError when a disk is contained in another (no diagram vertex can be
    defined by such a pair).
    """
    ds = (a, b, c)
    for i in range(3):
        for j in range(3):
            if i != j:
                di, dj = ds[i], ds[j]
                if weighted_distance(di.center, dj) <= -di.radius:
                    raise ValueError("one disk is contained in another")
    (ax, ay), ra = a.center, a.radius
    (bx, by), rb = b.center, b.radius
    (cx, cy), rc = c.center, c.radius
    if ra == rb == rc == 0.0:
        cc = _circumcircle(ax, ay, bx, by, cx, cy)
        if cc is None:
            return None
        # the unique circle; reject only if the triple is clockwise
        if orient(ax, ay, bx, by, cx, cy) <= 0.0:
            return None
        return Disk(Point(cc[0], cc[1]), cc[2])
    sol = solve_vertex(ax, ay, ra, bx, by, rb, cx, cy, rc)
    if sol is None or sol[2] < 0.0:
        return None
    return Disk(Point(sol[0], sol[1]), sol[2])


def tangency_point(a: Disk, b: Disk, tol: float | None = None) -> Point:
    """The point where two externally tangent disks touch.

    For a zero-radius disk this is its center.  Raises NotTangentError when
    the gap between the disks exceeds the tolerance.
    """
    (ax, ay), ra = a.center, a.radius
    (bx, by), rb = b.center, b.radius
    d = math.hypot(bx - ax, by - ay)
    if tol is None:
        tol = 1e-9 * max(1.0, d + ra + rb)
    if abs(d - (ra + rb)) > tol:
        raise NotTangentError(
            f"disks are not tangent: center gap {d:.17g}, radii sum {ra + rb:.17g}")
    if d == 0.0:
        return Point(ax, ay)
    t = ra / d
    return Point(ax + (bx - ax) * t, ay + (by - ay) * t)


class BisectorArc:
    """Parameterization of the weighted bisector of two disks.

    Points x on the bisector satisfy |x - ca| - ra = |x - cb| - rb; the curve
    is a hyperbola branch (a straight line for equal radii).  The parameter u
    runs over all reals; clearance_at is strictly convex in u with its
    minimum at u = 0.
    """

    __slots__ = ("mx", "my", "ex", "ey", "nx", "ny", "cf", "ah", "bh", "ra", "line")

    def __init__(self, a: Disk, b: Disk):
        (ax, ay), ra = a.center, a.radius
        (bx, by), rb = b.center, b.radius
        dx = bx - ax
        dy = by - ay
        d = math.hypot(dx, dy)
        if d == 0.0:
            raise ValueError("coincident disk centers have no bisector")
        self.mx = (ax + bx) / 2.0
        self.my = (ay + by) / 2.0
        self.ex = dx / d
        self.ey = dy / d
        self.nx = -self.ey
        self.ny = self.ex
        self.cf = d / 2.0
        self.ah = (ra - rb) / 2.0
        self.ra = ra
        if self.ah == 0.0:
            self.line = True
            self.bh = 0.0
        else:
            if abs(ra - rb) >= d:
                raise ValueError("nested disks have no bisector")
            self.line = False
            self.bh = math.sqrt(self.cf * self.cf - self.ah * self.ah)

    def point_at(self, u: float) -> Point:
        if self.line:
            return Point(self.mx + u * self.nx, self.my + u * self.ny)
        ce = self.ah * math.cosh(u)
        sn = self.bh * math.sinh(u)
        return Point(self.mx + ce * self.ex + sn * self.nx,
                     self.my + ce * self.ey + sn * self.ny)

    def clearance_at(self, u: float) -> float:
        if self.line:
            return math.hypot(u, self.cf) - self.ra
        return self.cf * math.cosh(u) + self.ah - self.ra

    def param_of(self, p) -> float:
        t = (p[0] - self.mx) * self.nx + (p[1] - self.my) * self.ny
        if self.line:
            return t
        return math.asinh(t / self.bh)


def golden_minimize(f: Callable[[float], float], lo: float, hi: float,
                    rel_tol: float = 1e-10, max_iter: int = 200) -> float:
    """Golden-section minimum of a unimodal function on [lo, hi]."""
    if lo > hi:
        lo, hi = hi, lo
    span_tol = rel_tol * max(1.0, abs(lo), abs(hi))
    a, b = lo, hi
    c = b - (b - a) * _INV_PHI
    d = a + (b - a) * _INV_PHI
    fc = f(c)
    fd = f(d)
    for _ in range(max_iter):
        if (b - a) <= span_tol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * _INV_PHI
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * _INV_PHI
            fd = f(d)
    return (a + b) / 2.0
