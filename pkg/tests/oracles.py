"""Independent numeric oracles used by the test suite.

Deliberately shares no solver code with the package beyond elementary
arithmetic: the tritangent oracle runs damped Newton on the raw tangency
equations from random starting points.
"""

from __future__ import annotations

import math
import random


def _ccw_directions(vx, vy, sites) -> float:
    ds = []
    for (px, py, _r) in sites:
        n = math.hypot(px - vx, py - vy)
        if n == 0.0:
            return 0.0
        ds.append(((px - vx) / n, (py - vy) / n))
    (x0, y0), (x1, y1), (x2, y2) = ds
    return (x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0)


def _newton_from(x, y, rho, sites, iters=60):
    fx = None
    for _ in range(iters):
        fs = []
        rows = []
        for (px, py, pr) in sites:
            dx = x - px
            dy = y - py
            dist = math.hypot(dx, dy)
            if dist < 1e-300:
                return None
            fs.append(dist - rho - pr)
            rows.append((dx / dist, dy / dist, -1.0))
        fmax = max(abs(f) for f in fs)
        scale = max(1.0, abs(x), abs(y), abs(rho))
        if fmax <= 1e-13 * scale:
            return x, y, rho, fmax
        (a11, a12, a13), (a21, a22, a23), (a31, a32, a33) = rows
        det = (a11 * (a22 * a33 - a23 * a32)
               - a12 * (a21 * a33 - a23 * a31)
               + a13 * (a21 * a32 - a22 * a31))
        if abs(det) < 1e-200:
            return None
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
        # damping: halve the step until the residual shrinks
        step = 1.0
        for _try in range(30):
            nx, ny, nr = x + step * dx_, y + step * dy_, rho + step * dr_
            nf = max(abs(math.hypot(nx - px, ny - py) - nr - pr)
                     for (px, py, pr) in sites)
            if fx is None or nf < fmax or step < 1e-6:
                x, y, rho = nx, ny, nr
                break
            step *= 0.5
        fx = fmax
    fs = [abs(math.hypot(x - px, y - py) - rho - pr) for (px, py, pr) in sites]
    return x, y, rho, max(fs)


def tritangent_oracle(a, b, c, starts=10, seed=0):
    """Counter-clockwise tritangent circle by damped Newton multistart.

    a, b, c are ((x, y), r) disks.  Returns (x, y, rho) with residual below
    1e-12 relative, or None when no start converges to a ccw solution with
    nonnegative radius.
    """
    sites = [(float(d[0][0]), float(d[0][1]), float(d[1])) for d in (a, b, c)]
    rng = random.Random(seed)
    cx = sum(s[0] for s in sites) / 3.0
    cy = sum(s[1] for s in sites) / 3.0
    span = max(max(abs(s[0] - cx), abs(s[1] - cy)) + s[2] for s in sites)
    span = max(span, 1e-9)
    best = None
    for k in range(starts):
        if k == 0:
            x0, y0 = cx, cy
        else:
            x0 = cx + (rng.random() - 0.5) * 3.0 * span
            y0 = cy + (rng.random() - 0.5) * 3.0 * span
        rho0 = max(math.hypot(x0 - s[0], y0 - s[1]) - s[2] for s in sites)
        got = _newton_from(x0, y0, rho0, sites)
        if got is None:
            continue
        x, y, rho, res = got
        scale = max(1.0, abs(x), abs(y), abs(rho))
        if res > 1e-12 * scale or rho < 0.0:
            continue
        if _ccw_directions(x, y, sites) <= 0.0:
            continue
        if best is None:
            best = (x, y, rho)
    return best
