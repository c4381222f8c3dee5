"""Result rows and table emission (text and CSV)."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class ResultRow:
    name: str
    point_count: int
    bfs_length: int
    alg_length: int
    rounds: int
    inserted_count: int
    build_seconds: float = 0.0
    wave_seconds: float = 0.0

    def __post_init__(self):
        if self.alg_length > self.bfs_length:
            raise ValueError("algorithm path longer than the baseline")


_COLUMNS = ("name", "points", "bfs", "alg", "rounds", "inserted")
_TIMING = ("build_s", "wave_s")


def emit_table(rows, fmt: str = "text", include_timing: bool = True) -> str:
    """Render rows as an aligned text table or CSV.

    Timing columns are optional so that outputs meant to be byte-reproducible
    can leave wall-clock noise out.
    """
    header = _COLUMNS + (_TIMING if include_timing else ())
    body = []
    for r in rows:
        cells = [r.name, str(r.point_count), str(r.bfs_length), str(r.alg_length),
                 str(r.rounds), str(r.inserted_count)]
        if include_timing:
            cells.append(f"{r.build_seconds:.6f}")
            cells.append(f"{r.wave_seconds:.6f}")
        body.append(cells)
    if fmt == "csv":
        lines = [",".join(header)]
        lines.extend(",".join(cells) for cells in body)
        return "\n".join(lines) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown table format {fmt!r}")
    widths = [len(h) for h in header]
    for cells in body:
        for i, c in enumerate(cells):
            widths[i] = max(widths[i], len(c))
    def fmt_line(cells):
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    lines = [fmt_line(header), fmt_line(["-" * w for w in widths])]
    lines.extend(fmt_line(cells) for cells in body)
    return "\n".join(lines) + "\n"
