"""Total colorings: representation, verification and exact search.

Works on any graph object exposing ``vertices`` (iterable of ints) and
``edges`` (sorted pairs), i.e. both :class:`~totalcolor9.embedding.PlanarEmbedding`
and :class:`~totalcolor9.embedding.SimpleGraph`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from . import kernels
from .embedding import Edge, Element, ParseError, is_edge

MAX_CHROMATIC_ELEMENTS = 60


class ColorOutOfRange(ValueError):
    pass


class InstanceTooLarge(ValueError):
    pass


class SearchLimitExceeded(RuntimeError):
    pass


@dataclass
class TotalColoring:
    """Partial map from elements to colors ``1..k``.

    Value semantics: operations that change a coloring return a copy.
    """

    k: int
    colors: dict[Element, int] = field(default_factory=dict)

    def get(self, x: Element) -> int | None:
        return self.colors.get(x)

    def __getitem__(self, x: Element) -> int:
        return self.colors[x]

    def __contains__(self, x: Element) -> bool:
        return x in self.colors

    def __len__(self) -> int:
        return len(self.colors)

    def copy(self) -> TotalColoring:
        return TotalColoring(self.k, dict(self.colors))

    def with_colors(self, updates: Mapping[Element, int | None]) -> TotalColoring:
        out = self.copy()
        for x, c in updates.items():
            if c is None:
                out.colors.pop(x, None)
            else:
                out.colors[x] = c
        return out

    def uncolored(self, elements: Iterable[Element]) -> list[Element]:
        return [x for x in elements if x not in self.colors]

    def permuted(self, perm: Mapping[int, int]) -> TotalColoring:
        return TotalColoring(self.k, {x: perm[c] for x, c in self.colors.items()})

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, TotalColoring) and self.k == other.k
                and self.colors == other.colors)


@dataclass(frozen=True)
class Violation:
    """A conflicting pair sharing a color, or an out-of-range color."""

    first: Element
    second: Element | None
    color: int

    def __str__(self) -> str:
        if self.second is None:
            return f"{_fmt(self.first)} has out-of-range color {self.color}"
        return f"{_fmt(self.first)} and {_fmt(self.second)} share color {self.color}"


def _fmt(x: Element) -> str:
    return f"e{x[0]}-{x[1]}" if is_edge(x) else f"v{x}"


def element_order(g) -> list[Element]:
    """Canonical order: vertices ascending, then edges lexicographic."""
    return [*sorted(g.vertices), *sorted(g.edges)]


def incident_edges(g) -> dict[int, list[Edge]]:
    inc: dict[int, list[Edge]] = {v: [] for v in g.vertices}
    for e in g.edges:
        inc[e[0]].append(e)
        inc[e[1]].append(e)
    return inc


def conflict_pairs(g) -> list[tuple[Element, Element]]:
    """Every unordered pair of adjacent or incident elements.

    Order: vertex-vertex pairs by edge, vertex-edge pairs by edge then
    endpoint, edge-edge pairs by shared vertex then edge order.
    """
    edges = sorted(g.edges)
    out: list[tuple[Element, Element]] = [(u, v) for u, v in edges]
    out += [(w, e) for e in edges for w in e]
    inc = incident_edges(g)
    for v in sorted(g.vertices):
        es = inc[v]
        out += [(es[i], es[j]) for i in range(len(es)) for j in range(i + 1, len(es))]
    return out


def conflict_neighbors(g) -> dict[Element, list[Element]]:
    """Adjacency of the total graph (elements that must differ)."""
    nb: dict[Element, list[Element]] = {x: [] for x in element_order(g)}
    for a, b in conflict_pairs(g):
        nb[a].append(b)
        nb[b].append(a)
    return nb


def verify_total_coloring(g, phi: TotalColoring, partial: bool = False) -> list[Violation]:
    """Violations of ``phi`` on ``g``; empty iff proper (and complete unless ``partial``).

    Raises :class:`ColorOutOfRange` for a color outside ``1..k``.  A missing
    element in non-partial mode raises ``ValueError``.
    """
    for x, c in phi.colors.items():
        if not (isinstance(c, int) and 1 <= c <= phi.k):
            raise ColorOutOfRange(f"{_fmt(x)} has color {c!r} outside 1..{phi.k}")
    if not partial:
        missing = phi.uncolored(element_order(g))
        if missing:
            raise ValueError(f"{len(missing)} uncolored elements, e.g. {_fmt(missing[0])}")
    out = []
    for a, b in conflict_pairs(g):
        ca, cb = phi.colors.get(a), phi.colors.get(b)
        if ca is not None and ca == cb:
            out.append(Violation(a, b, ca))
    return out


def is_proper(g, phi: TotalColoring, partial: bool = False) -> bool:
    try:
        return not verify_total_coloring(g, phi, partial=partial)
    except ValueError:
        return False


class ConflictIndex:
    """CSR total graph with stable element indices, reusable across solves."""

    def __init__(self, g):
        self.elements = element_order(g)
        self.index = {x: i for i, x in enumerate(self.elements)}
        nb = conflict_neighbors(g)
        indptr = [0]
        indices: list[int] = []
        for x in self.elements:
            indices += sorted(self.index[y] for y in nb[x])
            indptr.append(len(indices))
        self.indptr = indptr
        self.indices = indices

    def solve(self, k: int, partial: TotalColoring | None = None,
              node_limit: int = 0, backend=None) -> TotalColoring | None:
        init = [0] * len(self.elements)
        if partial is not None:
            for x, c in partial.colors.items():
                init[self.index[x]] = c
        symmetry = partial is None or not partial.colors
        fn = backend or kernels.dsatur_solve
        res, _nodes = fn(len(self.elements), self.indptr, self.indices, k, init,
                         symmetry, node_limit)
        if isinstance(res, int):
            raise SearchLimitExceeded(f"no answer within {node_limit} search nodes")
        if res is None:
            return None
        return TotalColoring(k, {x: res[i] for i, x in enumerate(self.elements)})


def solve(g, k: int, partial: TotalColoring | None = None, node_limit: int = 0) -> TotalColoring | None:
    """A proper total ``k``-coloring of ``g`` extending ``partial``, or ``None``.

    Deterministic: the search branches on the element with the fewest
    available colors (ties broken by canonical element order) and tries
    colors ascending.  Palette symmetry breaking is applied only when no
    partial coloring is supplied.
    """
    if k < 1:
        return None
    if partial is not None and partial.colors:
        if partial.k != k:
            partial = TotalColoring(k, dict(partial.colors))
        if verify_total_coloring(g, partial, partial=True):
            return None
    # a vertex with its incident edges is a clique of size d(v) + 1
    if max((d for d in _degrees(g).values()), default=0) + 1 > k:
        return None
    return ConflictIndex(g).solve(k, partial, node_limit)


def _degrees(g) -> dict[int, int]:
    deg = {v: 0 for v in g.vertices}
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def max_degree(g) -> int:
    return max(_degrees(g).values(), default=0)


def total_chromatic_number(g, limit: int = MAX_CHROMATIC_ELEMENTS) -> int:
    """Least ``k`` admitting a total coloring; search starts at ``Δ + 1``."""
    size = len(list(g.vertices)) + len(g.edges)
    if size > limit:
        raise InstanceTooLarge(f"|V|+|E| = {size} exceeds the desk-scale guard {limit}")
    idx = ConflictIndex(g)
    k = max_degree(g) + 1
    while idx.solve(k) is None:
        k += 1
    return k


def available_colors(g, phi: TotalColoring, x: Element, nbrs=None) -> set[int]:
    nb = nbrs[x] if nbrs is not None else _partners(g, x)
    used = {phi.colors[y] for y in nb if y in phi.colors}
    return set(range(1, phi.k + 1)) - used


def _partners(g, x: Element) -> list[Element]:
    if is_edge(x):
        u, v = x
        out: list[Element] = [u, v]
        out += [e for e in g.edges if e != x and (u in e or v in e)]
        return out
    out = []
    for e in g.edges:
        if x in e:
            out.append(e)
            out.append(e[1] if e[0] == x else e[0])
    return out


# -- file format -------------------------------------------------------------

def serialize_coloring(phi: TotalColoring) -> str:
    lines = [str(phi.k)]
    verts = sorted(x for x in phi.colors if not is_edge(x))
    edges = sorted(x for x in phi.colors if is_edge(x))
    lines += [f"v {v} {phi.colors[v]}" for v in verts]
    lines += [f"e {u} {v} {phi.colors[(u, v)]}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> TotalColoring:
    lines = text.replace("\r\n", "\n").split("\n")
    body = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip() and not ln.strip().startswith("#")]
    if not body:
        raise ParseError("Empty", "no header line")
    lineno, head = body[0]
    try:
        k = int(head)
    except ValueError:
        raise ParseError("BadHeader", f"expected palette size, got {head!r}", lineno) from None
    colors: dict[Element, int] = {}
    for lineno, ln in body[1:]:
        parts = ln.split()
        try:
            if parts[0] == "v" and len(parts) == 3:
                x: Element = int(parts[1])
                c = int(parts[2])
            elif parts[0] == "e" and len(parts) == 4:
                u, v = int(parts[1]), int(parts[2])
                if u >= v:
                    raise ParseError("EdgeOrder", f"edge endpoints must satisfy u<v: {ln!r}", lineno)
                x = (u, v)
                c = int(parts[3])
            else:
                raise ParseError("BadLine", f"cannot parse {ln!r}", lineno)
        except (ValueError, IndexError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError("BadLine", f"cannot parse {ln!r}", lineno) from None
        if x in colors:
            raise ParseError("Duplicate", f"element listed twice: {ln!r}", lineno)
        colors[x] = c
    return TotalColoring(k, colors)


def iter_colored(phi: TotalColoring) -> Iterator[tuple[Element, int]]:
    return iter(sorted(phi.colors.items(), key=lambda kv: (is_edge(kv[0]), kv[0])))


def exhaustive_colorings(g, k: int, limit: int = 8) -> Iterator[TotalColoring]:
    """Every proper total ``k``-coloring by plain enumeration of ``k^|elements|``.

    A test oracle for the search; refuses instances above ``limit`` elements.
    """
    elems = element_order(g)
    if len(elems) > limit:
        raise InstanceTooLarge(f"{len(elems)} elements exceed the enumeration guard {limit}")
    pairs = [(elems.index(a), elems.index(b)) for a, b in conflict_pairs(g)]
    for combo in itertools.product(range(1, k + 1), repeat=len(elems)):
        if all(combo[i] != combo[j] for i, j in pairs):
            yield TotalColoring(k, dict(zip(elems, combo)))
