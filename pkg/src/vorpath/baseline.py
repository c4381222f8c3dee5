"""Hop-count baseline: BFS over the dual graph of the input sites."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .diagram import Diagram, KIND_INPUT
from .errors import NoPathError


@dataclass
class BfsResult:
    path: list[int]          # site ids from source to target
    intermediates: int       # len(path) - 2

    def __post_init__(self):
        assert self.intermediates == len(self.path) - 2


def bfs_baseline(d: Diagram, source: int, target: int) -> BfsResult:
    """Shortest hop path between two input sites through input cells only.

    Frame sites never appear on the path; neighbor lists are visited in
    ascending site id, which fixes the returned path deterministically.
    """
    for s in (source, target):
        if not d.is_live(s) or d.site_kind(s) != KIND_INPUT:
            raise NoPathError(f"site {s} is not a live input site")
    if source == target:
        raise NoPathError("source and target must differ")
    parent: dict[int, int] = {source: source}
    q = deque([source])
    while q:
        cur = q.popleft()
        for nb in sorted(d.neighbors(cur)):
            if d.site_kind(nb) != KIND_INPUT or nb in parent:
                continue
            parent[nb] = cur
            if nb == target:
                path = [nb]
                while path[-1] != source:
                    path.append(parent[path[-1]])
                path.reverse()
                return BfsResult(path, len(path) - 2)
            q.append(nb)
    raise NoPathError(f"no dual path between {source} and {target}")
