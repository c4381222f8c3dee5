import math
import random

import pytest

from vorpath.diagram import (
    Diagram,
    HiddenResult,
    KIND_FRAME,
    KIND_INPUT,
    KIND_INSERTED,
    build,
)
from vorpath.errors import DegenerateInputError, HiddenSiteError, InvalidHintError, NotAdjacentError
from vorpath.geom import Disk, Point, RobustnessConfig, disk
from vorpath.instances import build_frame
from vorpath.validate import brute_delaunay_edges


def _random_points(n, seed):
    rng = random.Random(seed)
    return [(rng.random(), rng.random()) for _ in range(n)]


def _hex_points(side):
    h = math.sqrt(3.0) / 2.0
    return [(i + (0.5 if j % 2 else 0.0), j * h)
            for j in range(side) for i in range(side)]


def check_structure(d, tol_factor=1e-6):
    """Empty-circle, symmetry and Euler invariants over the whole diagram."""
    slack = tol_factor * d.scale
    for f in d.live_faces():
        if f.is_infinite:
            continue
        for s in range(d.site_count):
            if d.is_live(s):
                assert d.weighted_distance_to(s, f.vx, f.vy) >= f.clr - slack
    for a in range(d.site_count):
        if not d.is_live(a):
            continue
        for b in d.neighbors(a):
            assert a in d.neighbors(b)
    live_sites = sum(d.is_live(s) for s in range(d.site_count))
    faces = 0
    has_horizon = False
    for f in d.live_faces():
        faces += 1
        has_horizon = has_horizon or f.is_infinite
    edges = 3 * faces // 2
    # the point at infinity is a vertex only while some cell is unbounded
    verts = live_sites + (1 if has_horizon else 0)
    assert verts - edges + faces == 2


def test_triangle_single_face():
    d = build([(0, 0), (1, 0), (0, 1)])
    finite = [f for f in d.live_faces() if not f.is_infinite]
    assert len(finite) == 1
    f = finite[0]
    assert f.vx == pytest.approx(0.5, abs=1e-6)
    assert f.vy == pytest.approx(0.5, abs=1e-6)
    for s in range(3):
        assert sorted(d.neighbors(s)) == sorted(set(range(3)) - {s})
        assert len(d.cell_vertices(s)) == 1


def test_square_two_faces():
    d = build([(0, 0), (1, 0), (1, 1), (0, 1)])
    finite = [f for f in d.live_faces() if not f.is_infinite]
    assert len(finite) == 2
    check_structure(d)


def test_build_rejects_too_few_sites():
    with pytest.raises(DegenerateInputError):
        build([(0, 0), (1, 1)])


def test_build_rejects_collinear():
    with pytest.raises(DegenerateInputError):
        build([(0, 0), (1, 0), (2, 0)], cfg=RobustnessConfig(perturbation_magnitude=0.0))


def test_hex_interior_six_neighbors_and_clearance():
    side = 10
    d = build(_hex_points(side))
    circumradius = 1.0 / math.sqrt(3.0)
    for j in range(1, side - 1):
        for i in range(1, side - 1):
            sid = j * side + i
            assert len(d.neighbors(sid)) == 6
            vs = d.cell_vertices(sid)
            assert len(vs) == 6
            for v in vs:
                assert v.clearance == pytest.approx(circumradius, abs=1e-6)


def test_hex_small_matches_brute_oracle():
    d = build(_hex_points(7))
    perturbed = [d.site_point(i) for i in range(49)]
    assert d.edges() == brute_delaunay_edges(perturbed)


@pytest.mark.parametrize("seed", range(5))
def test_random_build_matches_brute_oracle(seed):
    pts = _random_points(20, seed)
    d = build(pts, cfg=RobustnessConfig(rng_seed=seed))
    perturbed = [d.site_point(i) for i in range(20)]
    assert d.edges() == brute_delaunay_edges(perturbed)


def test_insert_dominating_disk_hides_point():
    d = build([(0, 0), (10, 0), (0, 10), (10, 10), (5, 5)])
    sid = d.insert(disk(5, 5, 3), kind=KIND_INSERTED)
    assert isinstance(sid, int)
    assert not d.is_live(4)
    assert (4, sid) in d.hidden_events
    with pytest.raises(HiddenSiteError):
        d.neighbors(4)
    check_structure(d)


def test_insert_dominated_disk_returns_hidden():
    d = build([(0, 0), (10, 0), (0, 10), (10, 10), (5, 5)])
    big = d.insert(disk(5, 5, 3), kind=KIND_INSERTED)
    res = d.insert(disk(5.2, 5.0, 0.5), kind=KIND_INSERTED)
    assert isinstance(res, HiddenResult)
    assert res.dominator == big


def test_insert_point_at_existing_location_stays_live():
    pts = _random_points(12, 3)
    d = build(pts)
    sid = d.insert(Disk(Point(*pts[4]), 0.0), kind=KIND_INPUT)
    assert isinstance(sid, int)
    assert d.is_live(sid) and d.is_live(4)
    assert len(d.neighbors(sid)) >= 2
    check_structure(d)


def test_insert_rejects_dead_hint():
    d = build([(0, 0), (10, 0), (0, 10), (10, 10), (5, 5)])
    d.insert(disk(5, 5, 3), kind=KIND_INSERTED)
    with pytest.raises(InvalidHintError):
        d.insert(disk(2, 2, 0.1), kind=KIND_INSERTED, hint=4)


@pytest.mark.parametrize("seed", range(4))
def test_insert_tritangent_disk_touches_its_triple(seed):
    pts = _random_points(30, 40 + seed)
    d = build(pts, cfg=RobustnessConfig(rng_seed=seed))
    faces = [f for f in d.live_faces() if not f.is_infinite]
    f = min(faces, key=lambda ff: ff.clr)
    triple = f.cs
    sid = d.insert(Disk(Point(f.vx, f.vy), f.clr * d.cfg.radius_factor),
                   kind=KIND_INSERTED, hint=triple[0], seed_face=f)
    assert isinstance(sid, int)
    nbrs = set(d.neighbors(sid))
    absorbed = {s for s, by in d.hidden_events if by == sid}
    for s in triple:
        assert s in nbrs or s in absorbed
    check_structure(d)


@pytest.mark.parametrize("seed", range(6))
def test_insertion_batches_keep_invariants(seed):
    pts = _random_points(40, 1000 + seed)
    d = build(pts, cfg=RobustnessConfig(rng_seed=seed))
    rng = random.Random(seed)
    for _ in range(6):
        faces = [f for f in d.live_faces() if not f.is_infinite]
        f = faces[rng.randrange(len(faces))]
        hint = next(c for c in f.cs if c >= 0)
        d.insert(Disk(Point(f.vx, f.vy), f.clr * d.cfg.radius_factor),
                 kind=KIND_INSERTED, hint=hint, seed_face=f)
    check_structure(d)


def test_hidden_state_is_consistent():
    d = build([(0, 0), (10, 0), (0, 10), (10, 10), (5, 5), (5.3, 5.2)])
    d.insert(disk(5.1, 5.1, 3), kind=KIND_INSERTED)
    slack = d.tol_abs
    for s in range(d.site_count):
        dominated = any(
            d.is_live(t) and t != s and
            d.weighted_distance_to(t, *d.site_point(s)) <= -d.site_disk(s).radius - slack
            for t in range(d.site_count))
        if dominated:
            assert not d.is_live(s)


def test_bisector_contact_two_points_with_distant_frame():
    pts = [(0.0, 0.0), (2.0, 0.0)]
    frame = build_frame(pts, points_per_side=8, margin=3.0)
    d = build(pts, frame)
    got = d.bisector_contact_disk(0, 1)
    assert got.center.x == pytest.approx(1.0, abs=1e-6)
    assert got.center.y == pytest.approx(0.0, abs=1e-6)
    assert got.radius == pytest.approx(1.0, abs=1e-6)


def test_bisector_contact_point_and_disk():
    pts = [(0.0, 0.0), (9.0, 9.0), (-9.0, 9.0), (0.0, -9.0)]
    frame = build_frame(pts, points_per_side=10, margin=1.0)
    d = build(pts, frame)
    dk = d.insert(disk(4, 0, 2), kind=KIND_INSERTED)
    got = d.bisector_contact_disk(0, dk)
    # the smallest disk tangent to the origin point and the inserted disk
    assert got.center.x == pytest.approx(1.0, abs=1e-5)
    assert got.center.y == pytest.approx(0.0, abs=1e-5)
    assert got.radius == pytest.approx(1.0, abs=1e-5)


@pytest.mark.parametrize("seed", range(4))
def test_bisector_contact_is_tangent_to_both(seed):
    pts = _random_points(25, 70 + seed)
    frame = build_frame(pts)
    d = build(pts, frame, RobustnessConfig(rng_seed=seed))
    rng = random.Random(seed)
    tried = 0
    while tried < 5:
        a = rng.randrange(25)
        nbrs = [b for b in d.neighbors(a) if d.site_kind(b) == KIND_INPUT]
        if not nbrs:
            continue
        b = nbrs[rng.randrange(len(nbrs))]
        try:
            got = d.bisector_contact_disk(a, b)
        except NotAdjacentError:
            continue
        tried += 1
        wa = d.weighted_distance_to(a, *got.center) - got.radius
        wb = d.weighted_distance_to(b, *got.center) - got.radius
        assert abs(wa) <= 1e-7 * d.scale
        assert abs(wb) <= 1e-7 * d.scale


def test_bisector_contact_requires_adjacency():
    pts = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.05), (3.0, 0.0), (1.5, 2.0), (1.5, -2.0)]
    frame = build_frame(pts)
    d = build(pts, frame)
    assert 3 not in d.neighbors(0)
    with pytest.raises(NotAdjacentError):
        d.bisector_contact_disk(0, 3)


def test_frame_sites_are_tagged():
    pts = [(0.0, 0.0), (1.0, 0.0), (0.5, 1.0)]
    frame = build_frame(pts, points_per_side=4)
    d = build(pts, frame)
    kinds = {d.site_kind(s) for s in range(3)}
    assert kinds == {KIND_INPUT}
    assert all(d.site_kind(s) == KIND_FRAME for s in range(3, d.site_count))
