"""SVG rendering of diagrams, traces and paths.

Cell boundaries are hyperbolic arcs; they are drawn as polylines sampled
adaptively until the curve-to-chord deviation falls under one percent of the
chord (hard cap 64 segments per arc).  Output is stable byte-for-byte for a
given diagram state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path as FsPath

from .baseline import BfsResult
from .diagram import Diagram, INF, KIND_FRAME, KIND_INPUT, KIND_INSERTED
from .geom import BisectorArc, Point
from .wavefront import SecurePath

_CANVAS = 1000.0
_MAX_DEPTH = 6  # 2**6 = 64 segments per arc
_CHORD_ERROR = 0.01

# generation ring palette, repeated as needed
_GEN_COLORS = ("#c0392b", "#d35400", "#f39c12", "#27ae60", "#16a085",
               "#2980b9", "#8e44ad", "#2c3e50")


@dataclass
class Overlays:
    path: SecurePath | None = None
    trace: bool = False
    baseline: BfsResult | None = None


def _sample_arc(arc: BisectorArc, u1: float, u2: float) -> list[Point]:
    pts = [arc.point_at(u1)]

    def rec(a: float, b: float, pa: Point, pb: Point, depth: int):
        mid = (a + b) / 2.0
        pm = arc.point_at(mid)
        chord = math.hypot(pb.x - pa.x, pb.y - pa.y)
        dev = math.hypot(pm.x - (pa.x + pb.x) / 2.0, pm.y - (pa.y + pb.y) / 2.0)
        if depth >= _MAX_DEPTH or dev <= _CHORD_ERROR * max(chord, 1e-300):
            pts.append(pb)
            return
        rec(a, mid, pa, pm, depth + 1)
        rec(mid, b, pm, pb, depth + 1)

    rec(u1, u2, pts[0], arc.point_at(u2), 0)
    return pts


def render_svg(d: Diagram, overlays: Overlays | None = None,
               path=None, width: float = _CANVAS) -> str:
    """Render the diagram (and any overlays) to an SVG 1.1 document.

    When `path` is given the document is also written to that file.
    """
    overlays = overlays or Overlays()
    xmin, ymin, xmax, ymax = d.bbox
    pad = 0.03 * d.scale
    xmin -= pad
    ymin -= pad
    xmax += pad
    ymax += pad
    span = max(xmax - xmin, ymax - ymin)
    s = width / span
    height = (ymax - ymin) * s

    def tx(p) -> str:
        return f"{(p[0] - xmin) * s:.2f},{(height - (p[1] - ymin) * s):.2f}"

    def txy(p) -> tuple[str, str]:
        return f"{(p[0] - xmin) * s:.2f}", f"{(height - (p[1] - ymin) * s):.2f}"

    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">')
    parts.append(f'<rect width="{width:.0f}" height="{height:.0f}" fill="white"/>')

    # cell boundaries: one polyline per adjacency with two finite endpoints
    parts.append('<g stroke="#9aa7b0" stroke-width="0.7" fill="none">')
    for f in d.live_faces():
        if f.is_infinite:
            continue
        for i in range(3):
            g = f.nbr[i]
            if g.is_infinite or not g.alive or g.seq < f.seq:
                continue
            a = f.cs[(i + 1) % 3]
            b = f.cs[(i + 2) % 3]
            if a == INF or b == INF:
                continue
            arc = BisectorArc(d.site_disk(a), d.site_disk(b))
            u1 = arc.param_of((f.vx, f.vy))
            u2 = arc.param_of((g.vx, g.vy))
            pts = _sample_arc(arc, u1, u2)
            parts.append('<polyline points="%s"/>' % " ".join(tx(p) for p in pts))
    parts.append('</g>')

    if overlays.trace:
        parts.append('<g fill-opacity="0.15" stroke-width="1.2">')
        for sid in range(d.site_count):
            if d.site_kind(sid) != KIND_INSERTED or not d.is_live(sid):
                continue
            gen = d.site_generation(sid)
            color = _GEN_COLORS[(gen - 1) % len(_GEN_COLORS)]
            (cx, cy), r = d.site_disk(sid)
            x, y = txy((cx, cy))
            parts.append(f'<circle cx="{x}" cy="{y}" r="{r * s:.2f}" '
                         f'fill="{color}" stroke="{color}"/>')
        parts.append('</g>')

    if overlays.baseline is not None:
        pts = [d.site_point(sid) for sid in overlays.baseline.path]
        parts.append('<polyline fill="none" stroke="#1f77b4" stroke-width="2.4" '
                     'stroke-dasharray="7,4" points="%s"/>'
                     % " ".join(tx(p) for p in pts))

    if overlays.path is not None:
        sp = overlays.path
        parts.append('<g fill="none" stroke="#d62728" stroke-width="1.0">')
        for dk in sp.disks:
            x, y = txy(dk.center)
            parts.append(f'<circle cx="{x}" cy="{y}" r="{dk.radius * s:.2f}"/>')
        parts.append('</g>')
        chain = [sp.source_point] + list(sp.tangencies) + [sp.target_point]
        parts.append('<polyline fill="none" stroke="#d62728" stroke-width="2.4" '
                     'points="%s"/>' % " ".join(tx(p) for p in chain))
        parts.append('<g fill="#d62728">')
        for p in sp.tangencies:
            x, y = txy(p)
            parts.append(f'<circle cx="{x}" cy="{y}" r="3.0"/>')
        parts.append('</g>')

    # sites on top
    parts.append('<g>')
    for sid in range(d.site_count):
        if not d.is_live(sid):
            continue
        kind = d.site_kind(sid)
        if kind == KIND_INSERTED:
            continue
        x, y = txy(d.site_point(sid))
        color = "#888888" if kind == KIND_FRAME else "#111111"
        r = 1.6 if kind == KIND_FRAME else 2.4
        parts.append(f'<circle cx="{x}" cy="{y}" r="{r}" fill="{color}"/>')
    parts.append('</g>')
    if overlays.path is not None:
        for p, color in ((overlays.path.source_point, "#2ca02c"),
                         (overlays.path.target_point, "#d62728")):
            x, y = txy(p)
            parts.append(f'<circle cx="{x}" cy="{y}" r="5.0" fill="{color}"/>')
    parts.append('</svg>')
    doc = "\n".join(parts) + "\n"
    if path is not None:
        FsPath(path).write_text(doc)
    return doc
