"""Small named plane graphs and helpers to build rotation systems."""
from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .embedding import PlanarEmbedding, build_embedding


def from_coordinates(points: Mapping[int, tuple[float, float]] | Sequence[tuple[float, float]],
                     edges: Iterable[tuple[int, int]]) -> PlanarEmbedding:
    """Rotation system of a straight-line drawing (neighbours sorted clockwise)."""
    pts = dict(points) if isinstance(points, Mapping) else dict(enumerate(points))
    adj: dict[int, list[int]] = {v: [] for v in pts}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)

    def clockwise(v: int) -> list[int]:
        x0, y0 = pts[v]
        return sorted(adj[v], key=lambda w: -math.atan2(pts[w][1] - y0, pts[w][0] - x0))

    return build_embedding([clockwise(v) for v in range(len(pts))])


def from_faces(n: int, faces: Iterable[Sequence[int]]) -> PlanarEmbedding:
    """Rotation system from consistently oriented face boundaries.

    A walk ``... u, v, w ...`` forces ``w`` to precede ``u`` in the clockwise
    rotation at ``v`` (the package's tracing rule).
    """
    succ: dict[int, dict[int, int]] = {v: {} for v in range(n)}
    for f in faces:
        k = len(f)
        for i in range(k):
            u, v, w = f[i - 1], f[i], f[(i + 1) % k]
            succ[v][w] = u
    rows = []
    for v in range(n):
        s = succ[v]
        if not s:
            rows.append(())
            continue
        start = min(s)
        order = [start]
        while s[order[-1]] != start:
            order.append(s[order[-1]])
        rows.append(tuple(order))
    return build_embedding(rows)


def _oriented_triangles(coords: Sequence[tuple[float, float, float]], edge_len2: float) -> list[tuple[int, ...]]:
    n = len(coords)

    def d2(a: int, b: int) -> float:
        return sum((coords[a][i] - coords[b][i]) ** 2 for i in range(3))

    adj = {(a, b) for a, b in combinations(range(n), 2) if abs(d2(a, b) - edge_len2) < 1e-9}
    faces = []
    for a, b, c in combinations(range(n), 3):
        if (a, b) in adj and (a, c) in adj and (b, c) in adj:
            pa, pb, pc = coords[a], coords[b], coords[c]
            u = [pb[i] - pa[i] for i in range(3)]
            w = [pc[i] - pa[i] for i in range(3)]
            nrm = (u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0])
            out = sum(nrm[i] * (pa[i] + pb[i] + pc[i]) for i in range(3))
            faces.append((a, b, c) if out < 0 else (a, c, b))
    return faces


def path(n: int) -> PlanarEmbedding:
    return build_embedding([[w for w in (v - 1, v + 1) if 0 <= w < n] for v in range(n)])


def cycle(n: int) -> PlanarEmbedding:
    return build_embedding([[(v + 1) % n, (v - 1) % n] for v in range(n)])


def star(leaves: int) -> PlanarEmbedding:
    return build_embedding([list(range(1, leaves + 1))] + [[0]] * leaves)


def wheel(spokes: int) -> PlanarEmbedding:
    """Hub 0 with rim 1..spokes."""
    pts = [(0.0, 0.0)] + [(math.cos(2 * math.pi * i / spokes), math.sin(2 * math.pi * i / spokes))
                          for i in range(spokes)]
    edges = [(0, i) for i in range(1, spokes + 1)]
    edges += [(i, i % spokes + 1) for i in range(1, spokes + 1)]
    return from_coordinates(pts, edges)


def complete(n: int) -> PlanarEmbedding:
    """K1..K4 (the planar complete graphs)."""
    if n == 1:
        return build_embedding([[]])
    if n == 2:
        return path(2)
    if n == 3:
        return build_embedding([[1, 2], [2, 0], [0, 1]])
    if n == 4:
        return from_coordinates([(0, 0), (0, 2), (-2, -1), (2, -1)],
                                [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    raise ValueError("K_n is planar only for n <= 4")


def four_fan() -> PlanarEmbedding:
    """Hub 0 joined to every vertex of the path 1-2-3-4-5."""
    pts = [(0, 0)] + [(math.cos(math.pi * i / 4), math.sin(math.pi * i / 4)) for i in range(5)]
    edges = [(0, i) for i in range(1, 6)] + [(i, i + 1) for i in range(1, 5)]
    return from_coordinates(pts, edges)


def cube() -> PlanarEmbedding:
    pts = [(-2, -2), (2, -2), (2, 2), (-2, 2), (-1, -1), (1, -1), (1, 1), (-1, 1)]
    edges = [(i, (i + 1) % 4) for i in range(4)] + [(4 + i, 4 + (i + 1) % 4) for i in range(4)]
    edges += [(i, i + 4) for i in range(4)]
    return from_coordinates(pts, edges)


def icosahedron() -> PlanarEmbedding:
    phi = (1 + 5 ** 0.5) / 2
    coords = []
    for a in (-1, 1):
        for b in (-phi, phi):
            coords += [(0, a, b), (a, b, 0), (b, 0, a)]
    return from_faces(12, _oriented_triangles(coords, 4.0))


NAMED = {
    "k1": lambda: complete(1),
    "p2": lambda: path(2),
    "p3": lambda: path(3),
    "k3": lambda: complete(3),
    "k4": lambda: complete(4),
    "c4": lambda: cycle(4),
    "c6": lambda: cycle(6),
    "c8": lambda: cycle(8),
    "star3": lambda: star(3),
    "cube": cube,
    "icosahedron": icosahedron,
    "fan4": four_fan,
    "wheel5": lambda: wheel(5),
}


def named(name: str) -> PlanarEmbedding:
    return NAMED[name]()
