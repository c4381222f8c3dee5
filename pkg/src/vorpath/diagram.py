"""Incremental additively weighted Voronoi (Apollonius) structure.

The diagram is stored through its dual: a triangulation of the sites in
which every finite face corresponds to one Voronoi vertex (the empty circle
tangent to the face's three sites) and every edge to a shared cell boundary.
Insertion carves the conflict region around a seed face and re-fans it from
the new site, Bowyer-Watson style; a face is in conflict exactly when the
new disk intersects the face's clearance circle.

A Diagram instance is single-writer: mutations must be serialized by the
caller.  Read-only queries may run concurrently between mutations, and
distinct instances are fully independent.
"""

from __future__ import annotations

import math
import random
from typing import Iterator, NamedTuple

from .errors import (
    DegenerateInputError,
    DegenerateInsertionError,
    HiddenSiteError,
    InvalidHintError,
    NotAdjacentError,
    UnboundedBisectorError,
)
from .geom import (
    BisectorArc,
    Disk,
    Point,
    RobustnessConfig,
    _circumcircle,
    bbox_diagonal,
    bbox_of,
    golden_minimize,
    incircle,
    orient,
    perturb,
    solve_vertex,
    splitmix64,
)

INF = -1  # sentinel corner id for faces on the outer hull

KIND_INPUT = 0
KIND_INSERTED = 1
KIND_FRAME = 2

_WALK_LIMIT_FACTOR = 4
_RING_SEARCH_LIMIT = 64


class HiddenResult(NamedTuple):
    """Returned by insert() when the new disk owns no cell."""

    dominator: int


def _slot_of_edge(f: "Face", u: int, w: int) -> int:
    """Index of f's edge whose corners are (u, w) in that cyclic order."""
    cs = f.cs
    for j in range(3):
        if cs[(j + 1) % 3] == u and cs[(j + 2) % 3] == w:
            return j
    raise DegenerateInsertionError(f"face {cs} has no edge ({u}, {w})")


class DiagramVertex(NamedTuple):
    position: Point
    clearance: float
    defining: tuple[int, int, int]


class Face:
    """One dual triangle.  Geometry is frozen at creation; only `alive` flips."""

    __slots__ = ("cs", "nbr", "vx", "vy", "clr", "alive", "seq", "inf")

    def __init__(self, a: int, b: int, c: int, seq: int):
        self.cs = (a, b, c)
        self.nbr: list = [None, None, None]
        self.vx = 0.0
        self.vy = 0.0
        self.clr = 0.0
        self.alive = True
        self.seq = seq
        self.inf = a == INF or b == INF or c == INF

    @property
    def is_infinite(self) -> bool:
        return self.inf

    def vertex(self) -> DiagramVertex:
        return DiagramVertex(Point(self.vx, self.vy), self.clr, self.cs)

    def __repr__(self):  # debugging aid
        return f"Face{self.cs}{'' if self.alive else ' (dead)'}"


class Diagram:
    def __init__(self, cfg: RobustnessConfig, bbox, name: str = ""):
        self.cfg = cfg
        self.bbox = bbox
        self.scale = bbox_diagonal(bbox)
        self.tol_abs = cfg.tolerance * self.scale
        self.name = name
        # contacts closer than this are below what the perturbation/shrink
        # scheme can resolve; sites pressed into the structure this hard are
        # treated as absorbed
        self.thin_abs = 8.0 * max(self.tol_abs,
                                  (1.0 - cfg.radius_factor) * self.scale)
        self._x: list[float] = []
        self._y: list[float] = []
        self._r: list[float] = []
        self._kind: list[int] = []
        self._gen: list[int] = []
        self._parent: list[int | None] = []
        self._live: list[bool] = []
        self._face: list[Face | None] = []
        self._all_faces: list[Face] = []
        self._face_seq = 0
        self.hidden_events: list[tuple[int, int]] = []  # (hidden site, by site)

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def build(cls, points, frame=(), cfg: RobustnessConfig | None = None,
              name: str = "") -> "Diagram":
        """Diagram over zero-radius input points plus frame points.

        Points are perturbed per the robustness config, then inserted in a
        seeded random order, each located by walking from the previous
        insertion.  Site ids 0..len(points)-1 are the input points in the
        given order; frame points follow.
        """
        cfg = cfg or RobustnessConfig()
        raw = [Point(float(p[0]), float(p[1])) for p in points]
        fr = [Point(float(p[0]), float(p[1])) for p in frame]
        if len(raw) + len(fr) < 3:
            raise DegenerateInputError("need at least 3 sites")
        bbox = bbox_of(raw + fr)
        d = cls(cfg, bbox, name=name)
        if d.scale <= 0.0:
            raise DegenerateInputError("degenerate bounding box")
        for p in raw:
            d._append_site(p, 0.0, KIND_INPUT)
        for p in fr:
            d._append_site(p, 0.0, KIND_FRAME)
        order = list(range(len(d._x)))
        rng = random.Random(splitmix64(cfg.rng_seed ^ 0xB17D5EED))
        rng.shuffle(order)
        d._bootstrap(order)
        last = order[2]
        for sid in order[3:]:
            seed = d._find_seed(d._x[sid], d._y[sid], 0.0, last)
            if seed is None:
                raise DegenerateInputError(
                    f"could not locate site {sid} during construction")
            d._excavate_and_fill(sid, seed)
            last = sid
        return d

    def _append_site(self, p: Point, r: float, kind: int,
                     generation: int = 0, parent: int | None = None) -> int:
        sid = len(self._x)
        if kind != KIND_INSERTED:
            p = perturb(p, self.cfg, self.scale, sid)
        self._x.append(p[0])
        self._y.append(p[1])
        self._r.append(r)
        self._kind.append(kind)
        self._gen.append(generation)
        self._parent.append(parent)
        self._live.append(True)
        self._face.append(None)
        return sid

    def _bootstrap(self, order: list[int]) -> None:
        x, y = self._x, self._y
        k = 2
        while k < len(order):
            o = orient(x[order[0]], y[order[0]], x[order[1]], y[order[1]],
                       x[order[k]], y[order[k]])
            if o != 0.0:
                break
            k += 1
        else:
            raise DegenerateInputError("all sites are collinear")
        if k != 2:
            order[2], order[k] = order[k], order[2]
        a, b, c = order[0], order[1], order[2]
        if orient(x[a], y[a], x[b], y[b], x[c], y[c]) < 0.0:
            b, c = c, b
            order[1], order[2] = order[2], order[1]
        f = self._new_face(a, b, c)
        # infinite faces across each edge, reversed so the hull keeps the
        # "outside on the left of the finite directed edge" convention
        g0 = self._new_face(self._infinite_corners(c, b))
        g1 = self._new_face(self._infinite_corners(a, c))
        g2 = self._new_face(self._infinite_corners(b, a))
        self._link(f, 0, g0)   # edge (b, c)
        self._link(f, 1, g1)   # edge (c, a)
        self._link(f, 2, g2)   # edge (a, b)
        # neighboring infinite faces share (corner, INF) edges
        for gi, gj in ((g0, g1), (g1, g2), (g2, g0)):
            # gi = (u, w, INF), gj = (w', u', INF); shared corner chains them
            self._wire_infinite_pair(gi, gj)
        self._face[a] = f
        self._face[b] = f
        self._face[c] = f

    @staticmethod
    def _infinite_corners(u: int, w: int):
        return (u, w, INF)

    def _new_face(self, a, b=None, c=None) -> Face:
        if b is None:
            a, b, c = a
        f = Face(a, b, c, self._face_seq)
        self._face_seq += 1
        self._all_faces.append(f)
        self._set_vertex(f)
        return f

    def _set_vertex(self, f: Face) -> None:
        a, b, c = f.cs
        if a == INF or b == INF or c == INF:
            return
        x, y, r = self._x, self._y, self._r
        if r[a] == 0.0 and r[b] == 0.0 and r[c] == 0.0:
            cc = _circumcircle(x[a], y[a], x[b], y[b], x[c], y[c])
            if cc is None:
                raise DegenerateInsertionError(
                    f"collinear face {f.cs}: no circumcircle")
            f.vx, f.vy, f.clr = cc
            return
        sol = solve_vertex(x[a], y[a], r[a], x[b], y[b], r[b], x[c], y[c], r[c])
        if sol is None:
            # crevice faces between near-tangent disks sit below the
            # robustness resolution; their winding can come out reversed, in
            # which case the mirrored solution carries the right geometry
            sol = solve_vertex(x[a], y[a], r[a], x[c], y[c], r[c], x[b], y[b], r[b])
        if sol is None:
            raise DegenerateInsertionError(f"no tritangent circle for face {f.cs}")
        f.vx, f.vy, f.clr = sol

    @staticmethod
    def _link(f: Face, i: int, g: Face) -> None:
        f.nbr[i] = g
        u, w = f.cs[(i + 1) % 3], f.cs[(i + 2) % 3]
        for j in range(3):
            if g.cs[(j + 1) % 3] == w and g.cs[(j + 2) % 3] == u:
                g.nbr[j] = f
                return
        raise DegenerateInsertionError("faces do not share a reversed edge")

    def _wire_infinite_pair(self, gi: Face, gj: Face) -> None:
        for i in range(3):
            if gi.nbr[i] is not None:
                continue
            u, w = gi.cs[(i + 1) % 3], gi.cs[(i + 2) % 3]
            for j in range(3):
                if gj.nbr[j] is None and gj.cs[(j + 1) % 3] == w and gj.cs[(j + 2) % 3] == u:
                    gi.nbr[i] = gj
                    gj.nbr[j] = gi
                    return

    # ------------------------------------------------------------------
    # basic queries

    @property
    def site_count(self) -> int:
        return len(self._x)

    def input_sites(self) -> list[int]:
        return [s for s in range(len(self._x)) if self._kind[s] == KIND_INPUT]

    def is_live(self, s: int) -> bool:
        return self._live[s]

    def site_kind(self, s: int) -> int:
        return self._kind[s]

    def site_generation(self, s: int) -> int:
        return self._gen[s]

    def site_parent(self, s: int) -> int | None:
        return self._parent[s]

    def site_point(self, s: int) -> Point:
        return Point(self._x[s], self._y[s])

    def site_disk(self, s: int) -> Disk:
        return Disk(Point(self._x[s], self._y[s]), self._r[s])

    def weighted_distance_to(self, s: int, x: float, y: float) -> float:
        return math.hypot(self._x[s] - x, self._y[s] - y) - self._r[s]

    def live_faces(self) -> Iterator[Face]:
        for f in self._all_faces:
            if f.alive:
                yield f

    def faces_around(self, s: int) -> Iterator[Face]:
        """All faces incident to a live site, in rotation order."""
        if not self._live[s]:
            raise HiddenSiteError(f"site {s} has no cell")
        f0 = self._face[s]
        f = f0
        limit = len(self._all_faces) + 8
        for _ in range(limit):
            yield f
            i = f.cs.index(s)
            f = f.nbr[(i + 1) % 3]
            if f is f0:
                return
        raise DegenerateInsertionError(f"rotation around site {s} does not close")

    def neighbors(self, s: int) -> list[int]:
        """Sites sharing a cell boundary with s, in cyclic order."""
        out = []
        for f in self.faces_around(s):
            i = f.cs.index(s)
            nb = f.cs[(i + 1) % 3]
            if nb != INF:
                out.append(nb)
        return out

    def cell_vertices(self, s: int) -> list[DiagramVertex]:
        """Voronoi vertices of s's cell in cyclic order (finite ones only)."""
        out = []
        for f in self.faces_around(s):
            if not f.is_infinite:
                out.append(f.vertex())
        return out

    def adjacent(self, a: int, b: int) -> bool:
        return b in self.neighbors(a)

    def edges(self) -> set[tuple[int, int]]:
        """All dual (adjacency) edges between live sites."""
        out: set[tuple[int, int]] = set()
        for f in self.live_faces():
            a, b, c = f.cs
            for u, w in ((a, b), (b, c), (c, a)):
                if u != INF and w != INF:
                    out.add((u, w) if u < w else (w, u))
        return out

    # ------------------------------------------------------------------
    # point location

    def _walk(self, tx: float, ty: float, f: Face) -> Face:
        """Straight walk over the dual toward (tx, ty); stops at a face whose
        center-triangle contains the target or at an infinite face."""
        x, y = self._x, self._y
        prev = None
        limit = _WALK_LIMIT_FACTOR * (len(self._all_faces) + 16)
        for _ in range(limit):
            if f.inf:
                return f
            a, b, c = f.cs
            n0, n1, n2 = f.nbr
            if n0 is not prev:
                bx = x[b]
                by = y[b]
                if (x[c] - bx) * (ty - by) - (y[c] - by) * (tx - bx) < 0.0:
                    prev = f
                    f = n0
                    continue
            if n1 is not prev:
                cx = x[c]
                cy = y[c]
                if (x[a] - cx) * (ty - cy) - (y[a] - cy) * (tx - cx) < 0.0:
                    prev = f
                    f = n1
                    continue
            if n2 is not prev:
                ax = x[a]
                ay = y[a]
                if (x[b] - ax) * (ty - ay) - (y[b] - ay) * (tx - ax) < 0.0:
                    prev = f
                    f = n2
                    continue
            return f
        return f

    def _greedy_nearest(self, x: float, y: float, start: int) -> int:
        """Greedy descent over the adjacency graph toward the site with the
        smallest weighted distance to (x, y)."""
        cur = start
        cur_d = self.weighted_distance_to(cur, x, y)
        limit = len(self._x) + 8
        for _ in range(limit):
            best = cur
            best_d = cur_d
            f0 = self._face[cur]
            f = f0
            while True:
                i = f.cs.index(cur)
                nb = f.cs[(i + 1) % 3]
                if nb != INF:
                    d = self.weighted_distance_to(nb, x, y)
                    if d < best_d:
                        best = nb
                        best_d = d
                f = f.nbr[(i + 1) % 3]
                if f is f0:
                    break
            if best == cur:
                return cur
            cur = best
            cur_d = best_d
        return cur

    def _conflict_margin(self, f: Face, x: float, y: float, r: float) -> float:
        """How deeply the disk (x, y, r) claims f's vertex; > 0 means conflict.

        For finite faces this is clearance minus the weighted distance of the
        vertex to the disk; for infinite faces, the advantage of the disk over
        the hull pair in the direction where their bisector escapes.
        """
        cs = f.cs
        if cs[0] != INF and cs[1] != INF and cs[2] != INF:
            return f.clr - (math.hypot(f.vx - x, f.vy - y) - r)
        k = 0 if cs[0] == INF else (1 if cs[1] == INF else 2)
        p = cs[(k + 1) % 3]
        q = cs[(k + 2) % 3]
        px, py, pr = self._x[p], self._y[p], self._r[p]
        qx, qy, qr = self._x[q], self._y[q], self._r[q]
        dx = qx - px
        dy = qy - py
        d = math.hypot(dx, dy)
        if d == 0.0:
            return -math.inf
        ex, ey = dx / d, dy / d
        a = (pr - qr) / d
        if a > 1.0:
            a = 1.0
        elif a < -1.0:
            a = -1.0
        b = math.sqrt(1.0 - a * a)
        # outward direction: left of the finite directed edge p -> q
        ux = a * ex - b * ey
        uy = a * ey + b * ex
        return (ux * x + uy * y + r) - (ux * px + uy * py + pr)

    def _conflict(self, f: Face, x: float, y: float, r: float) -> bool:
        if r == 0.0:
            a, b, c = f.cs
            if a != INF and b != INF and c != INF:
                rr = self._r
                if rr[a] == 0.0 and rr[b] == 0.0 and rr[c] == 0.0:
                    # difference-based predicate: reliable even for the huge
                    # circumcircles of nearly collinear triples
                    xx, yy = self._x, self._y
                    return incircle(xx[a], yy[a], xx[b], yy[b],
                                    xx[c], yy[c], x, y) > 0.0
        return self._conflict_margin(f, x, y, r) > 0.0

    def _find_seed(self, x: float, y: float, r: float, hint_site: int) -> Face | None:
        f = self._walk(x, y, self._face[hint_site])
        if self._conflict(f, x, y, r):
            return f
        # bounded breadth-first probe around the landing face
        seen = {id(f)}
        frontier = [f]
        budget = _RING_SEARCH_LIMIT
        while frontier and budget > 0:
            g = frontier.pop(0)
            for h in g.nbr:
                if h is None or id(h) in seen:
                    continue
                seen.add(id(h))
                budget -= 1
                if self._conflict(h, x, y, r):
                    return h
                frontier.append(h)
        for g in self._all_faces:
            if g.alive and self._conflict(g, x, y, r):
                return g
        return None

    # ------------------------------------------------------------------
    # insertion

    def insert(self, disk: Disk, kind: int = KIND_INSERTED,
               hint: int | None = None, generation: int = 0,
               parent: int | None = None, seed_face: Face | None = None):
        """Insert a site; returns the new SiteId or HiddenResult.

        `hint` should name a live site expected near the new cell; `seed_face`
        may give a known conflicting face directly (the wavefront passes the
        face whose vertex is being consumed).  Zero-radius non-inserted kinds
        get the same deterministic perturbation as build().
        """
        if hint is not None and not self._live[hint]:
            raise InvalidHintError(f"hint site {hint} is not live")
        (cx, cy), r = disk.center, disk.radius
        if kind != KIND_INSERTED and self.cfg.perturbation_magnitude > 0.0:
            p = perturb(Point(cx, cy), self.cfg, self.scale, len(self._x))
            cx, cy = p
        if seed_face is not None and seed_face.alive and self._conflict(seed_face, cx, cy, r):
            sid = self._append_site(Point(cx, cy), r, kind, generation, parent)
            self._excavate_and_fill(sid, seed_face)
            return sid
        start = hint if hint is not None else self._any_live_site()
        near = self._greedy_nearest(cx, cy, start)
        wd_near = self.weighted_distance_to(near, cx, cy)
        if wd_near < -r + (self.thin_abs if r > 0.0 else 0.0):
            return HiddenResult(near)
        seed = None
        for f in self.faces_around(near):
            if self._conflict(f, cx, cy, r):
                seed = f
                break
        if seed is None:
            seed = self._find_seed(cx, cy, r, near)
        sid = self._append_site(Point(cx, cy), r, kind, generation, parent)
        if seed is None:
            # the disk destroys no vertex yet owns a cell: it claims the
            # interior of an edge (or a hull arc) of the cell containing it
            self._splice_trapped_site(near, sid)
            if not self._live[sid]:
                # not even a sliver could be carved out for it
                return HiddenResult(near)
        else:
            self._excavate_and_fill(sid, seed)
        return sid

    def _any_live_site(self) -> int:
        for s in range(len(self._x)):
            if self._live[s]:
                return s
        raise DegenerateInputError("no live sites")

    def _excavate_and_fill(self, sid: int, seed: Face, pad: float = 0.0) -> None:
        x, y, r = self._x[sid], self._y[sid], self._r[sid]
        rq = r + pad
        cavity = [seed]
        marked = {id(seed)}
        i = 0
        while i < len(cavity):
            f = cavity[i]
            i += 1
            for g in f.nbr:
                if id(g) not in marked and self._conflict(g, x, y, rq):
                    marked.add(id(g))
                    cavity.append(g)
        # walk the cavity perimeter edge by edge (the boundary may visit a
        # site more than once when cells share two arcs, so slots are chained
        # by rotation, not keyed by site)
        corner_sites: set[int] = set()
        boundary_count = 0
        start: tuple[Face, int] | None = None
        for f in cavity:
            corner_sites.update(f.cs)
            for j in range(3):
                if id(f.nbr[j]) not in marked:
                    boundary_count += 1
                    if start is None:
                        start = (f, j)
        if start is None:
            raise DegenerateInsertionError("conflict region has no boundary")
        ring: list[tuple[int, int, Face, int]] = []
        f, j = start
        for _ in range(boundary_count):
            u = f.cs[(j + 1) % 3]
            w = f.cs[(j + 2) % 3]
            g = f.nbr[j]
            gj = _slot_of_edge(g, w, u)
            ring.append((u, w, g, gj))
            # rotate around w inside the cavity to the next boundary edge
            gg, jj = f, j
            while True:
                k = (jj + 1) % 3
                h = gg.nbr[k]
                if id(h) not in marked:
                    f, j = gg, k
                    break
                t = gg.cs[(k + 2) % 3]
                jj = _slot_of_edge(h, t, w)
                gg = h
            if (f, j) == start:
                break
        if len(ring) != boundary_count:
            raise DegenerateInsertionError("conflict region boundary is not a cycle")
        new_faces = []
        for (u, w, g, gj) in ring:
            nf = self._new_face(sid, u, w)
            nf.nbr[0] = g
            g.nbr[gj] = nf
            new_faces.append(nf)
        m = len(new_faces)
        for k in range(m):
            nf = new_faces[k]
            nf.nbr[1] = new_faces[(k + 1) % m]   # across edge (w, sid)
            nf.nbr[2] = new_faces[(k - 1) % m]   # across edge (sid, u)
        for f in cavity:
            f.alive = False
        self._face[sid] = new_faces[0]
        boundary_sites = set()
        for (u, w, g, gj) in ring:
            boundary_sites.add(u)
        for k, (u, w, g, gj) in enumerate(ring):
            if u != INF:
                self._face[u] = new_faces[k]
        trapped: list[int] = []
        thin = self.thin_abs
        for s in corner_sites:
            if s == INF or s in boundary_sites:
                continue
            wd_c = math.hypot(self._x[s] - x, self._y[s] - y) - r
            if wd_c <= -self._r[s] + thin:
                # dominated, or touching within the robustness scale: the
                # surviving cell (if any) is below the resolution the scheme
                # guarantees, so the site is treated as absorbed
                self._live[s] = False
                self._face[s] = None
                self.hidden_events.append((s, sid))
            else:
                trapped.append(s)
        # sites that lost every face but keep a substantial cell wedged
        # against the new disk are re-homed inside the fan
        for s in sorted(trapped):
            self._splice_trapped_site(sid, s)

    def _splice_trapped_site(self, sid: int, m: int) -> None:
        """Re-home a live site whose every face fell inside a conflict region.

        Its surviving cell is a sliver pressed against the new disk.  If the
        sliver claims a current vertex, the standard cavity insertion puts the
        site back; otherwise it eats the interior of a single edge of the new
        cell, which is handled by an edge split (the one place where two
        cells may legitimately share two boundary arcs).
        """
        mx, my, mr = self._x[m], self._y[m], self._r[m]
        best_face = None
        best_margin = -math.inf
        for f in self.faces_around(sid):
            margin = self._conflict_margin(f, mx, my, mr)
            if margin > best_margin:
                best_margin = margin
                best_face = f
        if best_face is not None and best_margin > 0.0:
            self._excavate_and_fill(m, best_face)
            return
        # pure edge-interior case: rank the edges of the new cell by how
        # deeply the sliver invades their arcs (infinity counts: a sliver may
        # escape the hull and split the cell's unbounded arc); only the few
        # neighbors nearest the sliver can be invaded at all
        my_disk = Disk(Point(mx, my), self._r[m])
        ring: list[int] = []
        seen: set[int] = set()
        has_inf = False
        for f in self.faces_around(sid):
            i = f.cs.index(sid)
            b = f.cs[(i + 1) % 3]
            if b == INF:
                has_inf = True
            elif b != m and b not in seen:
                seen.add(b)
                ring.append(b)
        ring.sort(key=lambda b: (math.hypot(self._x[b] - mx, self._y[b] - my)
                                 - self._r[b], b))
        cands: list[tuple[float, int]] = []
        for b in ring[:6]:
            depth = self._arc_invasion(sid, b, my_disk)
            if depth is not None:
                cands.append((depth, b))
        if has_inf:
            ux = mx - self._x[sid]
            uy = my - self._y[sid]
            un = math.hypot(ux, uy)
            if un > 0.0:
                ux /= un
                uy /= un
                mine = ux * mx + uy * my + mr
                depth = -math.inf
                for s in range(len(self._x)):
                    if s != m and self._live[s]:
                        depth = max(depth, ux * self._x[s] + uy * self._y[s]
                                    + self._r[s] - mine)
                cands.append((depth, INF))
        cands.sort(key=lambda t: (t[0], t[1]))
        x, y, r = self._x, self._y, self._r
        for depth, b in cands:
            if depth >= 0.0:
                break
            if b == INF:
                self._split_edge(sid, INF, m)
                return
            both = (solve_vertex(x[b], y[b], r[b], x[sid], y[sid], r[sid],
                                 mx, my, mr) is not None
                    and solve_vertex(x[sid], y[sid], r[sid], x[b], y[b], r[b],
                                     mx, my, mr) is not None)
            if both:
                self._split_edge(sid, b, m)
                return
        # no representable sliver: the cell that remains is tangled below the
        # robustness scale, so the site is absorbed like a thin graze
        self._live[m] = False
        self._face[m] = None
        self.hidden_events.append((m, sid))

    def _arc_invasion(self, a: int, b: int, dm: Disk) -> float | None:
        """Minimum over the (a, b) edge arc of wd(x, dm) - clearance(x).

        Negative means dm's site claims part of the arc interior.  None when
        the arc cannot be assessed (unbounded or degenerate).
        """
        f1 = f2 = None
        for f in self.faces_around(a):
            i = f.cs.index(a)
            if f.cs[(i + 1) % 3] == b:
                f1 = f
            elif f.cs[(i + 2) % 3] == b:
                f2 = f
        if f1 is None or f2 is None or f1.is_infinite or f2.is_infinite:
            return None
        try:
            arc = BisectorArc(self.site_disk(a), self.site_disk(b))
        except ValueError:
            return None
        u1 = arc.param_of((f1.vx, f1.vy))
        u2 = arc.param_of((f2.vx, f2.vy))
        (mx, my), mr = dm.center, dm.radius

        def g(u: float) -> float:
            p = arc.point_at(u)
            return math.hypot(p[0] - mx, p[1] - my) - mr - arc.clearance_at(u)

        lo, hi = (u1, u2) if u1 <= u2 else (u2, u1)
        if hi - lo <= 0.0:
            return g(lo)
        samples = 9
        us = [lo + (hi - lo) * k / (samples - 1) for k in range(samples)]
        vals = [g(u) for u in us]
        kmin = vals.index(min(vals))
        best = vals[kmin]
        if best > 0.25 * (self._r[a] + self._r[b] + self.thin_abs):
            return best   # decisively clear of the arc
        a0 = us[max(0, kmin - 1)]
        a1 = us[min(samples - 1, kmin + 1)]
        u_ref = golden_minimize(g, a0, a1, rel_tol=1e-6)
        return min(best, g(u_ref))

    def _split_edge(self, a: int, b: int, m: int) -> None:
        """Give site m the interior of edge (a, b): two new sliver faces."""
        f1 = None
        for f in self.faces_around(a):
            i = f.cs.index(a)
            if f.cs[(i + 1) % 3] == b:
                f1 = f            # contains directed edge (a, b)
                break
        if f1 is None:
            raise DegenerateInsertionError(f"sites {a}, {b} share no edge")
        j1 = _slot_of_edge(f1, a, b)
        f2 = f1.nbr[j1]
        j2 = _slot_of_edge(f2, b, a)
        fa = self._new_face(b, a, m)   # neighbor of f1 across (a, b)
        fb = self._new_face(a, b, m)   # neighbor of f2 across (b, a)
        fa.nbr[2] = f1
        f1.nbr[j1] = fa
        fb.nbr[2] = f2
        f2.nbr[j2] = fb
        fa.nbr[0] = fb   # edge (a, m)
        fb.nbr[1] = fa
        fa.nbr[1] = fb   # edge (m, b)
        fb.nbr[0] = fa
        self._face[m] = fa
        self._face[a] = fa
        if b != INF:
            self._face[b] = fa

    # ------------------------------------------------------------------
    # derived geometry

    def bisector_contact_disk(self, a: int, b: int) -> Disk:
        """Disk centered on the (a, b) bisector arc, tangent to both sites,
        at the arc's minimal-clearance point."""
        if not self._live[a] or not self._live[b]:
            raise HiddenSiteError("both sites must be live")
        f1 = f2 = None
        for f in self.faces_around(a):
            i = f.cs.index(a)
            if f.cs[(i + 1) % 3] == b:
                f1 = f
            elif f.cs[(i + 2) % 3] == b:
                f2 = f
        if f1 is None or f2 is None:
            raise NotAdjacentError(f"sites {a} and {b} share no boundary")
        if f1.is_infinite or f2.is_infinite:
            raise UnboundedBisectorError(
                "shared bisector arc is unbounded; add frame points")
        arc = BisectorArc(self.site_disk(a), self.site_disk(b))
        u1 = arc.param_of((f1.vx, f1.vy))
        u2 = arc.param_of((f2.vx, f2.vy))
        u = golden_minimize(arc.clearance_at, u1, u2, rel_tol=1e-10)
        p = arc.point_at(u)
        return Disk(p, arc.clearance_at(u))


def build(points, frame=(), cfg: RobustnessConfig | None = None,
          name: str = "") -> Diagram:
    """Module-level alias for Diagram.build."""
    return Diagram.build(points, frame, cfg, name)
