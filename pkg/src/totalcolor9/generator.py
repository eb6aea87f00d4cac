"""Seeded random plane graphs.

A triangulation is grown from a triangle by inserting vertices into faces
chosen uniformly at random.  Edges are then deleted at random (never a
bridge), and repair passes remove an edge from every 4-fan and from every
vertex above the degree cap until neither remains.

All randomness comes from one :class:`~totalcolor9.rng.SplitMix64` stream,
so a config and seed determine the output exactly.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .embedding import PlanarEmbedding, build_embedding
from .patterns import contains_four_fan
from .rng import SplitMix64


class GenerationStalled(RuntimeError):
    """The repair loop or the degree target could not be met; try another seed."""


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    cap: int = 8
    forbid_four_fan: bool = True
    p_delete: float = 0.0
    seed: int = 0
    # when set, retry with forked streams until the maximum degree equals it
    target_max_degree: int | None = None
    attempts: int = 200

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("n must be at least 3")
        if not 0 <= self.p_delete <= 1:
            raise ValueError("p_delete must lie in [0, 1]")
        if self.target_max_degree is not None and self.target_max_degree > self.cap:
            raise ValueError("target_max_degree exceeds cap")

    def describe(self) -> str:
        s = f"n={self.n} cap={self.cap} no4fan={int(self.forbid_four_fan)} p={self.p_delete} seed={self.seed}"
        if self.target_max_degree is not None:
            s += f" delta={self.target_max_degree}"
        return s


class _Rot:
    """Mutable clockwise rotation lists."""

    def __init__(self) -> None:
        self.rows: list[list[int]] = [[1, 2], [2, 0], [0, 1]]

    def faces(self) -> list[tuple[int, int, int]]:
        """Triangular faces as dart-ordered triples, in a stable order."""
        seen = set()
        out = []
        for u, r in enumerate(self.rows):
            for v in r:
                if (u, v) in seen:
                    continue
                walk = [u]
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    rb = self.rows[b]
                    a, b = b, rb[(rb.index(a) - 1) % len(rb)]
                    walk.append(a)
                out.append(tuple(walk[:3]))
        return out

    def insert(self, face: tuple[int, int, int]) -> None:
        x = len(self.rows)
        a, b, c = face
        # at the head of dart (u, v) followed by (v, w), x goes right before u
        for u, v in ((a, b), (b, c), (c, a)):
            r = self.rows[v]
            r.insert(r.index(u), x)
        self.rows.append([a, b, c])

    def delete(self, u: int, v: int) -> None:
        self.rows[u].remove(v)
        self.rows[v].remove(u)

    def degree(self, v: int) -> int:
        return len(self.rows[v])

    def is_bridge(self, u: int, v: int) -> bool:
        seen = {u}
        q = deque([u])
        while q:
            a = q.popleft()
            for b in self.rows[a]:
                if (a, b) in ((u, v), (v, u)) or b in seen:
                    continue
                if b == v:
                    return False
                seen.add(b)
                q.append(b)
        return True

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, r in enumerate(self.rows) for v in r if u < v]

    def freeze(self) -> PlanarEmbedding:
        return build_embedding(self.rows)


def _triangulation(n: int, rng: SplitMix64) -> _Rot:
    rot = _Rot()
    # the initial triangle has two faces; each insertion adds two more
    while len(rot.rows) < n:
        rot.insert(rng.choice(rot.faces()))
    return rot


def _repair(rot: _Rot, cfg: GeneratorConfig, rng: SplitMix64) -> PlanarEmbedding:
    budget = 4 * len(rot.edges()) + 10
    while True:
        budget -= 1
        if budget < 0:
            raise GenerationStalled(f"repair did not converge ({cfg.describe()})")
        over = [v for v in range(len(rot.rows)) if rot.degree(v) > cfg.cap]
        if over:
            v = over[0]
            cands = [w for w in sorted(rot.rows[v], key=lambda w: -rot.degree(w)) if not rot.is_bridge(v, w)]
            if not cands:
                raise GenerationStalled(f"vertex {v} above cap has only bridges")
            rot.delete(v, cands[0])
            continue
        g = rot.freeze()
        if not cfg.forbid_four_fan:
            return g
        w = contains_four_fan(g)
        if w is None:
            return g
        path = [w[f"a{i}"] for i in range(1, 6)]
        # a rim edge lies on a triangle with the hub, so it is never a bridge
        i = rng.below(4)
        rot.delete(path[i], path[i + 1])


def _once(cfg: GeneratorConfig, rng: SplitMix64) -> PlanarEmbedding:
    rot = _triangulation(cfg.n, rng)
    if cfg.p_delete > 0:
        es = rot.edges()
        rng.shuffle(es)
        for u, v in es:
            if rng.random() < cfg.p_delete and not rot.is_bridge(u, v):
                rot.delete(u, v)
    return _repair(rot, cfg, rng)


def generate_planar(cfg: GeneratorConfig) -> PlanarEmbedding:
    rng = SplitMix64(cfg.seed)
    if cfg.target_max_degree is None:
        return _once(cfg, rng)
    for _ in range(cfg.attempts):
        g = _once(cfg, rng.fork())
        if g.max_degree == cfg.target_max_degree:
            return g
    raise GenerationStalled(f"no graph with maximum degree {cfg.target_max_degree} ({cfg.describe()})")
