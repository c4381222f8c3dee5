"""Command-line interface.

Subcommands: gen-hex, gen-random, solve, bfs, compare, bench, render.
All runs are deterministic for fixed flags; `compare` output (table and SVG)
is byte-reproducible, while `bench` adds wall-clock columns.
"""

from __future__ import annotations

import argparse
import sys
import time
from multiprocessing import Pool
from pathlib import Path as FsPath

from .baseline import bfs_baseline
from .errors import VorpathError
from .geom import RobustnessConfig
from .instances import (
    DEFAULT_FRAME_MARGIN,
    DEFAULT_FRAME_POINTS,
    DEFAULT_SHRINK,
    Instance,
    gen_hex,
    gen_random,
    load_csv,
    write_points,
)
from .render import Overlays, render_svg
from .report import ResultRow, emit_table
from .validate import verify_chain
from .wavefront import solve


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0,
                   help="base seed for perturbation and generators (default 0)")
    p.add_argument("--perturb", type=float, default=1e-9,
                   help="perturbation magnitude, relative to the bbox diagonal")
    p.add_argument("--radius-factor", type=float, default=1.0 - 1e-7,
                   help="shrink factor applied to inserted disk radii")
    p.add_argument("--shrink", type=float, default=DEFAULT_SHRINK,
                   help="bbox fraction used to window endpoint candidates")
    p.add_argument("--frame-points", type=int, default=DEFAULT_FRAME_POINTS,
                   help="frame points per bbox side")
    p.add_argument("--frame-margin", type=float, default=DEFAULT_FRAME_MARGIN,
                   help="frame offset as a fraction of the bbox diagonal")
    p.add_argument("--out", type=str, default=None,
                   help="output file (default: stdout)")


def _instance_flags(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", type=str, help="point file (x y per line)")
    src.add_argument("--hex", type=int, metavar="SIDE",
                     help="hex lattice instance of SIDE x SIDE points")
    src.add_argument("--random", type=int, metavar="COUNT",
                     help="uniform random instance of COUNT points")
    p.add_argument("--thin", type=int, default=1,
                   help="keep every k-th point of an input file")


def _cfg(args) -> RobustnessConfig:
    return RobustnessConfig(perturbation_magnitude=args.perturb,
                            radius_factor=args.radius_factor,
                            rng_seed=args.seed)


def _load_instance(args) -> Instance:
    cfg = _cfg(args)
    kw = dict(cfg=cfg, shrink=args.shrink,
              frame_points_per_side=args.frame_points,
              frame_margin=args.frame_margin)
    if args.input is not None:
        return load_csv(args.input, thin=args.thin, **kw)
    if args.hex is not None:
        return gen_hex(args.hex, **kw)
    return gen_random(args.random, args.seed, **kw)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        FsPath(out).write_text(text)


def _run_instance(inst: Instance, want_solve: bool = True, want_bfs: bool = True):
    t0 = time.perf_counter()
    d = inst.diagram()
    build_s = time.perf_counter() - t0
    bfs = bfs_baseline(d, inst.source_index, inst.target_index) if want_bfs else None
    path = trace = None
    wave_s = 0.0
    if want_solve:
        t1 = time.perf_counter()
        path, trace = solve(d, inst.source_index, inst.target_index)
        wave_s = time.perf_counter() - t1
    return d, bfs, path, trace, build_s, wave_s


def _result_row(inst, bfs, path, trace, build_s, wave_s) -> ResultRow:
    return ResultRow(inst.name, len(inst.points), bfs.intermediates, path.cost,
                     trace.rounds, trace.total_inserted, build_s, wave_s)


def cmd_gen_hex(args) -> int:
    inst = gen_hex(args.side, cfg=_cfg(args), shrink=args.shrink)
    write_points(inst.points, args.out or f"{inst.name}.txt", inst.name)
    return 0


def cmd_gen_random(args) -> int:
    inst = gen_random(args.count, args.seed, cfg=_cfg(args), shrink=args.shrink)
    write_points(inst.points, args.out or f"{inst.name}.txt", inst.name)
    return 0


def cmd_solve(args) -> int:
    inst = _load_instance(args)
    d, _, path, trace, build_s, wave_s = _run_instance(inst, want_bfs=False)
    lines = [
        f"instance      {inst.name} ({len(inst.points)} points)",
        f"endpoints     {inst.source_index} -> {inst.target_index}",
        f"insertions    {path.cost}",
        f"rounds        {trace.rounds}",
        f"disks placed  {trace.total_inserted}",
        f"build {build_s:.3f} s, wavefront {wave_s:.3f} s",
    ]
    if args.verify:
        rep = verify_chain(inst.points, inst.points[inst.source_index],
                           inst.points[inst.target_index], path.tangencies,
                           inst.cfg)
        lines.append(f"verified      {'valid' if rep.valid else 'INVALID'}")
        if not rep.valid:
            lines.append(f"failed link   {rep.failed_link}")
    _emit("\n".join(lines) + "\n", args.out)
    if args.svg:
        render_svg(d, Overlays(path=path, trace=True), args.svg)
    if args.verify:
        return 0 if rep.valid else 1
    return 0


def cmd_bfs(args) -> int:
    inst = _load_instance(args)
    d, bfs, _, _, build_s, _ = _run_instance(inst, want_solve=False)
    _emit(f"instance      {inst.name} ({len(inst.points)} points)\n"
          f"endpoints     {inst.source_index} -> {inst.target_index}\n"
          f"intermediates {bfs.intermediates}\n"
          f"build {build_s:.3f} s\n", args.out)
    if args.svg:
        render_svg(d, Overlays(baseline=bfs), args.svg)
    return 0


def cmd_compare(args) -> int:
    inst = _load_instance(args)
    svg_prefix = args.svg
    if svg_prefix:
        d0 = inst.diagram()
        render_svg(d0, Overlays(), f"{svg_prefix}_input.svg")
    d, bfs, path, trace, build_s, wave_s = _run_instance(inst)
    row = _result_row(inst, bfs, path, trace, build_s, wave_s)
    _emit(emit_table([row], fmt=args.format, include_timing=False), args.out)
    if svg_prefix:
        render_svg(d, Overlays(baseline=bfs), f"{svg_prefix}_bfs.svg")
        render_svg(d, Overlays(path=path), f"{svg_prefix}_alg.svg")
        render_svg(d, Overlays(trace=True), f"{svg_prefix}_exec.svg")
    return 0


def _bench_one(task) -> ResultRow:
    count, seed, flags = task
    cfg = RobustnessConfig(perturbation_magnitude=flags["perturb"],
                           radius_factor=flags["radius_factor"],
                           rng_seed=seed)
    inst = gen_random(count, seed, cfg=cfg, shrink=flags["shrink"],
                      frame_points_per_side=flags["frame_points"],
                      frame_margin=flags["frame_margin"])
    inst.name = f"rand_{count:05d}_s{seed}"
    d, bfs, path, trace, build_s, wave_s = _run_instance(inst)
    return _result_row(inst, bfs, path, trace, build_s, wave_s)


def cmd_bench(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    seeds = list(range(args.seed, args.seed + args.seeds))
    flags = dict(perturb=args.perturb, radius_factor=args.radius_factor,
                 shrink=args.shrink, frame_points=args.frame_points,
                 frame_margin=args.frame_margin)
    tasks = [(n, s, flags) for n in sizes for s in seeds]
    if args.jobs > 1:
        with Pool(args.jobs) as pool:
            rows = pool.map(_bench_one, tasks)
    else:
        rows = [_bench_one(t) for t in tasks]
    text = emit_table(rows, fmt=args.format, include_timing=True)
    medians = []
    for n in sizes:
        waves = sorted(r.wave_seconds for r in rows if r.point_count == n)
        medians.append((n, waves[len(waves) // 2]))
    summary = "".join(f"# median wavefront {n}: {m:.6f} s\n" for n, m in medians)
    _emit(text + summary, args.out)
    return 0


def cmd_render(args) -> int:
    inst = _load_instance(args)
    overlays = Overlays()
    if args.overlay:
        wanted = set(args.overlay.split(","))
        d, bfs, path, trace, _, _ = _run_instance(
            inst, want_solve=bool({"alg", "trace"} & wanted),
            want_bfs="bfs" in wanted)
        overlays = Overlays(path=path if "alg" in wanted else None,
                            trace="trace" in wanted,
                            baseline=bfs if "bfs" in wanted else None)
    else:
        d = inst.diagram()
    render_svg(d, overlays, args.svg)
    return 0


def main(argv=None) -> int:
    top = argparse.ArgumentParser(
        prog="vorpath",
        description="Minimum-insertion secure paths in Voronoi diagrams")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-hex", help="write a hex-lattice point file")
    p.add_argument("--side", type=int, required=True)
    _common_flags(p)
    p.set_defaults(fn=cmd_gen_hex)

    p = sub.add_parser("gen-random", help="write a uniform random point file")
    p.add_argument("--count", type=int, required=True)
    _common_flags(p)
    p.set_defaults(fn=cmd_gen_random)

    p = sub.add_parser("solve", help="run the insertion wavefront")
    _instance_flags(p)
    _common_flags(p)
    p.add_argument("--svg", type=str, default=None, help="write a figure here")
    p.add_argument("--verify", action="store_true",
                   help="re-check the chain on a fresh diagram")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("bfs", help="run the baseline only")
    _instance_flags(p)
    _common_flags(p)
    p.add_argument("--svg", type=str, default=None)
    p.set_defaults(fn=cmd_bfs)

    p = sub.add_parser("compare", help="baseline vs wavefront, one table row")
    _instance_flags(p)
    _common_flags(p)
    p.add_argument("--svg", type=str, default=None,
                   help="prefix for the input/bfs/alg/exec figure files")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("bench", help="timing table over random instances")
    _common_flags(p)
    p.add_argument("--sizes", type=str, default="8000,16000,32000")
    p.add_argument("--seeds", type=int, default=5, help="number of seeds per size")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("render", help="draw an instance (optionally with overlays)")
    _instance_flags(p)
    _common_flags(p)
    p.add_argument("--svg", type=str, required=True)
    p.add_argument("--overlay", type=str, default="",
                   help="comma list from: bfs, alg, trace")
    p.set_defaults(fn=cmd_render)

    args = top.parse_args(argv)
    try:
        return args.fn(args)
    except VorpathError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
