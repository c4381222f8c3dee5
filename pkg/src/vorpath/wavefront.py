"""Generation-by-generation disk insertion from a source cell to a target.

Each round inserts, at every frontier vertex of the previous generation's
cells, the empty tangent circle found there (slightly shrunk), then scans the
new cells for the next round's frontier vertices.  The round number at which
the target cell is first touched equals the minimum number of point
insertions needed to connect source and target with a chain of adjacent
cells; the chain itself is read back through parent links and tangency
points.

solve() owns its Diagram exclusively while running; run separate instances in
parallel if needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Diagram, Face, HiddenResult, KIND_INPUT, KIND_INSERTED, KIND_FRAME
from .errors import NoPathError, NotAdjacentError
from .geom import Disk, Point, tangency_point

# Frontier vertices closer than this margin (x max(tolerance, shrink slack)
# x diagonal) to the current generation's disks sit on the covered-region
# boundary only because inserted radii are shrunk; treating them as interior
# reproduces the exact-arithmetic rule and stops cascades of microscopic
# disks in the tangency crevices.
RU_EXCLUSION_MARGIN = 8.0


@dataclass(slots=True)
class CandidateVertex:
    x: float
    y: float
    clearance: float
    triple: tuple[int, int, int]
    parent: int
    generation: int
    face: Face


def _position_key(x: float, y: float, margin: float) -> tuple[int, int]:
    """Quantized location used to deduplicate candidates.

    Two frontier vertices closer than the robustness margin describe the
    same disk for all practical purposes; inserting both would create
    nearly coincident sites that no finite-precision predicate can tell
    apart later.
    """
    q = margin / 4.0
    return (round(x / q), round(y / q))


@dataclass
class WavefrontTrace:
    inserted_by_round: list[list[int]] = field(default_factory=list)
    skipped_by_round: list[int] = field(default_factory=list)

    @property
    def rounds(self) -> int:
        return len(self.inserted_by_round)

    @property
    def total_inserted(self) -> int:
        return sum(len(r) for r in self.inserted_by_round)


@dataclass
class SecurePath:
    """Chain of touching disks from source to target and the points to insert.

    disks holds the generation chain in source-to-target order with the final
    contact disk last; tangencies are the cost-many points whose insertion
    creates the secure corridor.
    """

    disks: list[Disk]
    tangencies: list[Point]
    cost: int
    source: int
    target: int
    source_point: Point
    target_point: Point


def exclusion_margin(d: Diagram) -> float:
    cfg = d.cfg
    return RU_EXCLUSION_MARGIN * max(cfg.tolerance, 1.0 - cfg.radius_factor) * d.scale


def admissible(d: Diagram, face: Face, round_no: int, margin: float,
               relax_backward: bool = False) -> bool:
    """Whether a just-created cell vertex may seed a next-round insertion.

    Rejects vertices defined by frame sites, by insertions old enough to lie
    behind the front (pocket blocking), by inserted sites only, and vertices
    whose clearance is within the covered-region margin.
    """
    backward_cut = round_no - 1 if not relax_backward else round_no - 2
    any_input = False
    for s in face.cs:
        k = d.site_kind(s)
        if k == KIND_FRAME:
            return False
        if k == KIND_INSERTED:
            if d.site_generation(s) <= backward_cut:
                return False
        else:
            any_input = True
    if not any_input:
        return False
    return face.clr > margin


def initial_candidates(d: Diagram, source: int) -> list[CandidateVertex]:
    """Round-1 queue: vertices of the source cell not involving the frame."""
    margin = exclusion_margin(d)
    out: list[CandidateVertex] = []
    seen: set[tuple[int, int]] = set()
    for f in d.faces_around(source):
        if f.is_infinite:
            continue
        if any(d.site_kind(s) == KIND_FRAME for s in f.cs):
            continue
        if f.clr <= margin:
            continue
        key = _position_key(f.vx, f.vy, margin)
        if key in seen:
            continue
        seen.add(key)
        out.append(CandidateVertex(f.vx, f.vy, f.clr, f.cs, source, 1, f))
    return out


def run_round(d: Diagram, queue: list[CandidateVertex], round_no: int,
              target: int | None = None, trace: WavefrontTrace | None = None,
              relax_backward: bool = False):
    """Insert one generation of disks; returns (inserted, next_queue, hit).

    `hit` is the first inserted site found adjacent to the target (the round
    stops there), or None.  With target=None the full round always runs.
    """
    margin = exclusion_margin(d)
    factor = d.cfg.radius_factor
    inserted: list[int] = []
    skipped = 0
    next_cands: dict[tuple[int, int], CandidateVertex] = {}
    hit = None
    # candidates whose vertex did not survive to the end of the previous
    # round were superseded by re-scanned vertices and are dropped here;
    # everything still standing now goes in, even if sibling insertions
    # within this round reshape its vertex (the frozen disk still
    # contributes uncovered area to the round's region)
    live_queue = [cand for cand in queue if cand.face.alive]
    skipped += len(queue) - len(live_queue)
    for cand in live_queue:
        seed = cand.face if cand.face.alive else None
        hint = None
        if seed is None:
            for s in (cand.parent, *cand.triple):
                if s >= 0 and d.is_live(s):
                    hint = s
                    break
        ev0 = len(d.hidden_events)
        sid = d.insert(Disk(Point(cand.x, cand.y), cand.clearance * factor),
                       kind=KIND_INSERTED, hint=hint,
                       generation=round_no, parent=cand.parent,
                       seed_face=seed)
        if isinstance(sid, HiddenResult):
            skipped += 1
            continue
        inserted.append(sid)
        if target is not None:
            absorbed = any(s == target for s, _ in d.hidden_events[ev0:])
            if absorbed or target in d.neighbors(sid):
                hit = sid
                break
        for f in d.faces_around(sid):
            if f.is_infinite:
                continue
            if not admissible(d, f, round_no, margin, relax_backward):
                continue
            key = _position_key(f.vx, f.vy, margin)
            stored = next_cands.get(key)
            if stored is None or not stored.face.alive:
                next_cands[key] = CandidateVertex(
                    f.vx, f.vy, f.clr, f.cs, sid, round_no + 1, f)
    if trace is not None:
        trace.inserted_by_round.append(inserted)
        trace.skipped_by_round.append(skipped)
    return inserted, list(next_cands.values()), hit


def one_insertion_frontier(d: Diagram, source: int) -> set[int]:
    """Input sites reachable from `source` with at most one insertion.

    Runs the first wavefront round on d (which mutates it) and returns every
    input site adjacent to the source cell or to a first-generation disk,
    including sites the disks absorbed outright.
    """
    reach = {nb for nb in d.neighbors(source) if d.site_kind(nb) == KIND_INPUT}
    queue = initial_candidates(d, source)
    inserted, _, _ = run_round(d, queue, 1)
    for sid in inserted:
        if d.is_live(sid):
            for nb in d.neighbors(sid):
                if d.site_kind(nb) == KIND_INPUT:
                    reach.add(nb)
    for s, _by in d.hidden_events:
        if d.site_kind(s) == KIND_INPUT:
            reach.add(s)
    reach.discard(source)
    return reach


def reconstruct(d: Diagram, target: int, final_site: int) -> SecurePath:
    """Chain of touching disks from the source to the target cell.

    Walks parent links from the site that reached the target back to the
    first generation, appends the contact disk on the (final, target)
    bisector, and takes the tangency point of each consecutive pair as the
    points to insert.
    """
    if final_site == target or d.site_kind(final_site) != KIND_INSERTED:
        raise NotAdjacentError("final site must be an inserted wavefront disk")
    tol = 16.0 * max(d.cfg.tolerance, 1.0 - d.cfg.radius_factor) * d.scale
    if d.is_live(target):
        contact = d.bisector_contact_disk(final_site, target)
    else:
        # target absorbed by the final disk; the contact degenerates to the
        # target point itself
        contact = Disk(d.site_point(target), 0.0)
    chain: list[int] = []
    s = final_site
    while True:
        chain.append(s)
        if d.site_generation(s) == 1:
            break
        s = d.site_parent(s)
    chain.reverse()
    source = d.site_parent(chain[0])
    disks = [d.site_disk(s) for s in chain] + [contact]
    tangencies = [tangency_point(disks[i], disks[i + 1], tol)
                  for i in range(len(disks) - 1)]
    cost = d.site_generation(final_site)
    assert len(tangencies) == cost
    return SecurePath(disks, tangencies, cost, source, target,
                      d.site_point(source), d.site_point(target))


def solve(d: Diagram, source: int, target: int,
          relax_backward: bool = False) -> tuple[SecurePath, WavefrontTrace]:
    """Minimum-insertion secure path between two input sites.

    Inserts disks into d (the diagram is consumed); returns the path and the
    per-round trace.  Deterministic for a fixed robustness seed.
    """
    for s, label in ((source, "source"), (target, "target")):
        if not d.is_live(s):
            raise NoPathError(f"{label} site {s} is hidden")
        if d.site_kind(s) != KIND_INPUT:
            raise NoPathError(f"{label} site {s} is not an input site")
    if source == target:
        raise NoPathError("source and target must differ")
    trace = WavefrontTrace()
    if target in d.neighbors(source):
        path = SecurePath([], [], 0, source, target,
                          d.site_point(source), d.site_point(target))
        return path, trace
    queue = initial_candidates(d, source)
    max_rounds = len(d.input_sites())
    for round_no in range(1, max_rounds + 1):
        inserted, queue, hit = run_round(
            d, queue, round_no, target=target, trace=trace,
            relax_backward=relax_backward)
        if hit is not None:
            return reconstruct(d, target, hit), trace
        if not inserted:
            raise NoPathError("wavefront stalled before reaching the target")
    raise NoPathError("round budget exhausted before reaching the target")
