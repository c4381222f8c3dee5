import random
from collections import deque

import pytest

from vorpath.baseline import bfs_baseline
from vorpath.diagram import KIND_INPUT, build
from vorpath.errors import NoPathError
from vorpath.instances import build_frame, gen_random


def _brute_bfs_depth(d, source, target):
    dist = {source: 0}
    q = deque([source])
    while q:
        cur = q.popleft()
        for nb in d.neighbors(cur):
            if d.site_kind(nb) != KIND_INPUT or nb in dist:
                continue
            dist[nb] = dist[cur] + 1
            q.append(nb)
    return dist.get(target)


def test_adjacent_endpoints():
    pts = [(0.0, 0.0), (1.0, 0.0), (0.5, 1.1), (0.5, -1.2), (2.2, 0.6),
           (-1.4, 0.3), (1.7, -1.6), (-0.6, -1.3), (2.6, -0.9), (-1.1, 1.5)]
    d = build(pts, build_frame(pts))
    assert 1 in d.neighbors(0)
    res = bfs_baseline(d, 0, 1)
    assert res.intermediates == 0
    assert res.path == [0, 1]


def test_forced_middle():
    pts = [(0.0, 0.0), (1.0, 0.03), (2.0, 0.0), (1.0, 5.0), (1.0, -5.0),
           (-4.0, 0.2), (6.0, -0.2), (-3.0, 4.0), (5.0, 4.2), (5.2, -3.8)]
    d = build(pts, build_frame(pts))
    res = bfs_baseline(d, 0, 2)
    assert res.path == [0, 1, 2]
    assert res.intermediates == 1


@pytest.mark.parametrize("seed", range(6))
def test_matches_plain_bfs_depth(seed):
    inst = gen_random(50, 300 + seed)
    d = inst.diagram()
    res = bfs_baseline(d, inst.source_index, inst.target_index)
    depth = _brute_bfs_depth(d, inst.source_index, inst.target_index)
    assert depth is not None
    assert len(res.path) - 1 == depth
    # path really walks adjacent input cells
    for a, b in zip(res.path, res.path[1:]):
        assert b in d.neighbors(a)
        assert d.site_kind(a) == d.site_kind(b) == KIND_INPUT


@pytest.mark.parametrize("seed", range(6))
def test_symmetric_lengths(seed):
    inst = gen_random(60, 500 + seed)
    d = inst.diagram()
    fwd = bfs_baseline(d, inst.source_index, inst.target_index)
    rev = bfs_baseline(d, inst.target_index, inst.source_index)
    assert fwd.intermediates == rev.intermediates


def test_frame_never_on_path():
    inst = gen_random(100, 8)
    d = inst.diagram()
    res = bfs_baseline(d, inst.source_index, inst.target_index)
    assert all(d.site_kind(s) == KIND_INPUT for s in res.path)


def test_equal_endpoints_rejected():
    inst = gen_random(30, 1)
    d = inst.diagram()
    with pytest.raises(NoPathError):
        bfs_baseline(d, 3, 3)
