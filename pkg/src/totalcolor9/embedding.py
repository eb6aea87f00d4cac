"""Plane graphs given by rotation systems.

A :class:`PlanarEmbedding` stores, for every vertex, the clockwise cyclic
order of its neighbours.  Faces are recovered by tracing boundary walks of
darts and the embedding is accepted only if it passes Euler's formula, so
an accepted rotation system is certified to describe a plane embedding.

Face-tracing convention (fixed for the whole package): the dart following
``(u, v)`` on a boundary walk is ``(v, w)`` where ``w`` is the neighbour
immediately *preceding* ``u`` in the clockwise rotation at ``v``.

Elements of a total coloring are plain Python values: a vertex is an
``int`` and an edge is a sorted pair ``(u, v)`` with ``u < v``.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

Edge = tuple[int, int]
Element = Union[int, Edge]
Dart = tuple[int, int]


class EmbeddingError(ValueError):
    """Base class for rejected rotation systems."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class AsymmetricAdjacency(EmbeddingError):
    pass


class LoopOrMultiEdge(EmbeddingError):
    pass


class Disconnected(EmbeddingError):
    pass


class NonPlanarEmbedding(EmbeddingError):
    pass


class UnknownVertex(EmbeddingError, KeyError):
    pass


class ParseError(EmbeddingError):
    """Malformed embedding text; ``kind`` names the failure class."""

    def __init__(self, kind: str, message: str, line: int | None = None):
        self.kind = kind
        super().__init__(f"{kind}: {message}", line)


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def is_edge(x: Element) -> bool:
    return isinstance(x, tuple)


@dataclass(frozen=True)
class FaceWalk:
    """A face as its cyclic sequence of darts."""

    darts: tuple[Dart, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        """Boundary vertices in walk order (repeats kept)."""
        return tuple(d[0] for d in self.darts)

    def is_simple(self) -> bool:
        vs = self.vertices
        return len(set(vs)) == len(vs)


@dataclass(frozen=True)
class DegreeStats:
    degree: int
    m: dict[int, int]
    n: dict[int, int]

    def m_k(self, k: int) -> int:
        return self.m.get(k, 0)

    def n_k(self, k: int) -> int:
        return self.n.get(k, 0)


@dataclass(frozen=True, eq=False)
class PlanarEmbedding:
    """Immutable connected simple plane graph.

    Build instances with :func:`build_embedding`; the constructor performs
    no validation.
    """

    rotation: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]
    faces: tuple[FaceWalk, ...]
    _dart_face: dict[Dart, int] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def vertices(self) -> range:
        return range(len(self.rotation))

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self.rotation[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.rotation[v])

    @property
    def max_degree(self) -> int:
        return max((len(r) for r in self.rotation), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(r) for r in self.rotation), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.rotation[u]

    def face_of(self, dart: Dart) -> FaceWalk:
        """Face whose boundary walk contains ``dart``."""
        return self.faces[self._dart_face[dart]]

    def face_index(self, dart: Dart) -> int:
        return self._dart_face[dart]

    def edge_faces(self, u: int, v: int) -> tuple[FaceWalk, FaceWalk]:
        """The faces on the two sides of edge ``uv`` (possibly the same)."""
        return self.face_of((u, v)), self.face_of((v, u))

    def elements(self) -> list[Element]:
        return [*self.vertices, *self.edges]

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < len(self.rotation)):
            raise UnknownVertex(f"unknown vertex {v!r}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlanarEmbedding) and self.rotation == other.rotation

    def __hash__(self) -> int:
        return hash(self.rotation)


def trace_faces(rotation: Sequence[Sequence[int]]) -> list[FaceWalk]:
    """Trace all boundary walks of a rotation system.

    Every dart lies on exactly one returned walk.  An edgeless graph on one
    vertex has a single face with an empty walk.
    """
    if isinstance(rotation, PlanarEmbedding):
        return list(rotation.faces)
    pos = [{w: i for i, w in enumerate(r)} for r in rotation]
    seen: set[Dart] = set()
    faces: list[FaceWalk] = []
    for u, r in enumerate(rotation):
        for v in r:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append((a, b))
                rb = rotation[b]
                a, b = b, rb[(pos[b][a] - 1) % len(rb)]
            faces.append(FaceWalk(tuple(walk)))
    if not faces and len(rotation) == 1:
        faces.append(FaceWalk(()))
    return faces


def build_embedding(rotation_table: Sequence[Sequence[int]] | Mapping[int, Sequence[int]]) -> PlanarEmbedding:
    """Validate a rotation system and return the traced embedding.

    ``rotation_table`` is indexed by dense 0-based vertex ids; each entry is
    the clockwise neighbour order.
    """
    if isinstance(rotation_table, Mapping):
        n = len(rotation_table)
        if sorted(rotation_table) != list(range(n)):
            raise UnknownVertex("vertex ids must be 0..n-1")
        rows = [tuple(rotation_table[i]) for i in range(n)]
    else:
        rows = [tuple(r) for r in rotation_table]
    n = len(rows)
    if n == 0:
        raise Disconnected("empty graph")
    for u, r in enumerate(rows):
        for w in r:
            if not (isinstance(w, int) and 0 <= w < n):
                raise UnknownVertex(f"vertex {u} lists unknown neighbour {w!r}")
            if w == u:
                raise LoopOrMultiEdge(f"loop at vertex {u}")
        if len(set(r)) != len(r):
            raise LoopOrMultiEdge(f"parallel edges at vertex {u}")
    nbr_sets = [set(r) for r in rows]
    for u, r in enumerate(rows):
        for w in r:
            if u not in nbr_sets[w]:
                raise AsymmetricAdjacency(f"{u} lists {w} but {w} does not list {u}")
    if not _connected(rows):
        raise Disconnected("graph is not connected")
    edges = tuple(sorted({edge_key(u, w) for u, r in enumerate(rows) for w in r}))
    faces = trace_faces(rows)
    if n - len(edges) + len(faces) != 2:
        raise NonPlanarEmbedding(
            f"Euler test failed: V-E+F = {n}-{len(edges)}+{len(faces)} != 2")
    dart_face = {d: i for i, f in enumerate(faces) for d in f.darts}
    return PlanarEmbedding(tuple(rows), edges, tuple(faces), dart_face)


def _connected(rows: Sequence[Sequence[int]]) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in rows[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(rows)


def degree_stats(g: PlanarEmbedding, v: int) -> DegreeStats:
    """``d(v)``, face-length incidences ``m_k(v)`` and neighbour degrees ``n_k(v)``.

    ``m_k`` counts boundary-walk occurrences, so a face visiting ``v`` twice
    contributes twice.
    """
    g._check(v)
    m = Counter(g.face_of((v, w)).length for w in g.rotation[v])
    nk = Counter(len(g.rotation[w]) for w in g.rotation[v])
    return DegreeStats(len(g.rotation[v]), dict(m), dict(nk))


def remove_edges(g: PlanarEmbedding, edges: Iterable[Edge]) -> PlanarEmbedding:
    """Embedding with ``edges`` deleted (must stay connected)."""
    drop = {edge_key(*e) for e in edges}
    rows = [tuple(w for w in r if edge_key(u, w) not in drop) for u, r in enumerate(g.rotation)]
    return build_embedding(rows)


@dataclass(frozen=True)
class SimpleGraph:
    """Plain simple graph with arbitrary integer vertex ids.

    Used for reduced graphs produced by surgery; it carries no embedding and
    exists only to be colored.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @classmethod
    def of(cls, g: PlanarEmbedding | SimpleGraph) -> SimpleGraph:
        return cls(tuple(g.vertices), tuple(g.edges))

    def without(self, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()) -> SimpleGraph:
        dv = set(vertices)
        de = {edge_key(*e) for e in edges}
        return SimpleGraph(
            tuple(v for v in self.vertices if v not in dv),
            tuple(e for e in self.edges if e not in de and e[0] not in dv and e[1] not in dv))

    def plus_edges(self, edges: Iterable[Edge]) -> SimpleGraph:
        new = set(self.edges)
        for e in edges:
            k = edge_key(*e)
            if k[0] == k[1] or k in new:
                raise LoopOrMultiEdge(f"cannot add edge {k}")
            new.add(k)
        return SimpleGraph(self.vertices, tuple(sorted(new)))
