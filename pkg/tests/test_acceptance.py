"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the verdict lines as
the criteria execute.  The scaling benchmark (criterion 7) is the slow one;
the full module typically needs a few minutes.
"""

import random
import statistics
import time

import pytest

from vorpath.baseline import bfs_baseline
from vorpath.cli import main
from vorpath.geom import Point, RobustnessConfig, bbox_diagonal, bbox_of, disk, tritangent_circle
from vorpath.instances import build_frame, gen_hex, gen_random, load_csv, write_points
from vorpath.diagram import build
from vorpath.validate import brute_delaunay_edges, one_hop_reachable, verify_chain
from vorpath.wavefront import one_insertion_frontier, solve

from oracles import tritangent_oracle


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"[criterion {num}] {'PASS' if ok else 'FAIL'}: {detail}")


def _run_instance(inst):
    t0 = time.perf_counter()
    d = inst.diagram()
    bfs = bfs_baseline(d, inst.source_index, inst.target_index)
    path, trace = solve(d, inst.source_index, inst.target_index)
    elapsed = time.perf_counter() - t0
    return d, bfs, path, trace, elapsed


def test_criterion_1_hex_parity():
    targets = {10: 5, 30: 18}
    results = []
    ok = True
    for side, want in targets.items():
        inst = gen_hex(side)
        d, bfs, path, trace, elapsed = _run_instance(inst)
        results.append(f"hex_{side:03d}: alg={path.cost} bfs={bfs.intermediates} "
                       f"target={want}±1 t={elapsed:.2f}s")
        ok &= path.cost == bfs.intermediates
        ok &= abs(path.cost - want) <= 1
        ok &= elapsed < 5.0
    _report(1, ok, "; ".join(results))
    assert ok, results


def test_criterion_2_random_improvement():
    t0 = time.perf_counter()
    ratios = []
    for seed in range(10):
        inst = gen_random(2000, seed)
        d, bfs, path, trace, _ = _run_instance(inst)
        assert bfs.intermediates > 0
        ratios.append(path.cost / bfs.intermediates)
    elapsed = time.perf_counter() - t0
    mean = statistics.mean(ratios)
    ok = mean <= 0.90 and elapsed < 30.0
    _report(2, ok, f"mean alg/bfs = {mean:.3f} over 10 seeds at 2000 pts "
                   f"(elapsed {elapsed:.1f}s)")
    assert ok, (mean, elapsed)


def _clustered_csv(tmp_path):
    rng = random.Random(42)
    pts = []
    for cx, cy, spread, count in ((0.2, 0.3, 0.08, 150), (0.7, 0.6, 0.12, 200),
                                  (0.45, 0.85, 0.05, 100), (0.85, 0.15, 0.1, 120)):
        for _ in range(count):
            pts.append(Point(cx + (rng.random() - 0.5) * spread * 4,
                             cy + (rng.random() - 0.5) * spread * 4))
    path = tmp_path / "clusters.txt"
    write_points(pts, path, "clusters")
    return path


def test_criterion_3_dominance_and_validity(tmp_path):
    suite = [gen_hex(10), gen_hex(30), gen_hex(60)]
    suite += [gen_random(n, 1) for n in (100, 200, 400, 1000, 2000, 4000, 8000)]
    suite.append(load_csv(_clustered_csv(tmp_path)))
    lines = []
    ok = True
    for inst in suite:
        d, bfs, path, trace, _ = _run_instance(inst)
        rep = verify_chain(inst.points, inst.points[inst.source_index],
                           inst.points[inst.target_index], path.tangencies,
                           inst.cfg)
        good = path.cost <= bfs.intermediates and rep.valid
        ok &= good
        lines.append(f"{inst.name}:{path.cost}<={bfs.intermediates},"
                     f"{'valid' if rep.valid else 'INVALID'}")
    _report(3, ok, " ".join(lines))
    assert ok, lines


def test_criterion_4_one_hop_oracle_agreement():
    agree = total = 0
    for seed in range(20):
        rng = random.Random(9000 + seed)
        pts = [Point(rng.random(), rng.random()) for _ in range(30)]
        cx = sum(p.x for p in pts) / 30
        cy = sum(p.y for p in pts) / 30
        src = min(range(30), key=lambda i: (pts[i].x - cx) ** 2 + (pts[i].y - cy) ** 2)
        # the frame sits far out so that it cannot curtail first-round reach,
        # which the frameless oracle knows nothing about
        d = build(pts, build_frame(pts, margin=0.5), RobustnessConfig(rng_seed=seed))
        frontier = one_insertion_frontier(d, src)
        oracle = one_hop_reachable(pts, src, 200)
        for i in range(30):
            if i == src:
                continue
            total += 1
            agree += oracle[i] == (i in frontier)
    rate = agree / total
    ok = rate >= 0.99
    _report(4, ok, f"round-1 frontier vs grid oracle: {agree}/{total} = {rate:.4f}")
    assert ok, rate


def test_criterion_5_zero_radius_delaunay():
    mismatches = 0
    for seed in range(50):
        rng = random.Random(2000 + seed)
        n = rng.randrange(20, 41)
        pts = [(rng.random(), rng.random()) for _ in range(n)]
        d = build(pts, cfg=RobustnessConfig(rng_seed=seed))
        perturbed = [d.site_point(i) for i in range(n)]
        if d.edges() != brute_delaunay_edges(perturbed):
            mismatches += 1
    ok = mismatches == 0
    _report(5, ok, f"50 instances of 20-40 points, {mismatches} edge-set mismatches")
    assert ok


def test_criterion_6_tritangent_accuracy():
    rng = random.Random(77)
    compared = 0
    worst = 0.0
    attempts = 0
    while compared < 1000 and attempts < 20000:
        attempts += 1
        disks = [disk(rng.random(), rng.random(), rng.random() * 0.2)
                 for _ in range(3)]
        try:
            got = tritangent_circle(*disks)
        except ValueError:
            continue
        if got is None:
            continue
        want = tritangent_oracle(*disks, starts=6, seed=attempts)
        if want is None:
            continue
        xs = [d.center.x for d in disks]
        ys = [d.center.y for d in disks]
        diag = bbox_diagonal(bbox_of(list(zip(xs, ys)))) + 2 * max(d.radius for d in disks)
        err = max(abs(got.center.x - want[0]), abs(got.center.y - want[1]),
                  abs(got.radius - want[2]))
        worst = max(worst, err / diag)
        compared += 1
    ok = compared == 1000 and worst <= 1e-9
    _report(6, ok, f"{compared} triples, worst relative error {worst:.2e}")
    assert ok, (compared, worst)


def test_criterion_7_near_linear_scaling():
    t_start = time.perf_counter()
    sizes = (8000, 16000, 32000)
    waves = {n: [] for n in sizes}
    for seed in range(5):
        for n in sizes:
            inst = gen_random(n, seed)
            d = inst.diagram()
            bfs = bfs_baseline(d, inst.source_index, inst.target_index)
            t0 = time.perf_counter()
            path, trace = solve(d, inst.source_index, inst.target_index)
            waves[n].append(time.perf_counter() - t0)
            assert path.cost <= bfs.intermediates
    med = {n: statistics.median(waves[n]) for n in sizes}
    r1 = med[16000] / med[8000]
    r2 = med[32000] / med[16000]
    total = time.perf_counter() - t_start
    ok = r1 <= 2.5 and r2 <= 2.5 and total < 300.0
    _report(7, ok, f"median wavefront {med[8000]:.2f}s/{med[16000]:.2f}s/"
                   f"{med[32000]:.2f}s, ratios {r1:.2f}, {r2:.2f}, "
                   f"total bench {total:.0f}s")
    assert ok, (med, total)


def test_criterion_8_compare_determinism(tmp_path):
    blobs = []
    for tag in ("a", "b"):
        table = tmp_path / f"table_{tag}.csv"
        prefix = tmp_path / f"fig_{tag}"
        code = main(["compare", "--random", "400", "--seed", "11",
                     "--format", "csv", "--out", str(table),
                     "--svg", str(prefix)])
        assert code == 0
        payload = [table.read_bytes()]
        for panel in ("input", "bfs", "alg", "exec"):
            payload.append((tmp_path / f"fig_{tag}_{panel}.svg").read_bytes())
        blobs.append(payload)
    ok = blobs[0] == blobs[1]
    _report(8, ok, "two compare runs produced byte-identical table and 4 SVG panels")
    assert ok
