"""Text format for rotation systems.

::

    V E
    0: 1 2
    1: 2 0
    2: 0 1

Line 1 holds the vertex and edge counts; then one line per vertex giving
its clockwise neighbour order.  UTF-8, LF line endings.
"""
from __future__ import annotations

from pathlib import Path

from .embedding import (
    AsymmetricAdjacency,
    EmbeddingError,
    ParseError,
    PlanarEmbedding,
    build_embedding,
)


def serialize_embedding(g: PlanarEmbedding) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines += [f"{v}: {' '.join(map(str, r))}".rstrip() for v, r in enumerate(g.rotation)]
    return "\n".join(lines) + "\n"


def parse_embedding(text: str) -> PlanarEmbedding:
    """Parse and validate; errors carry the offending line number."""
    lines = text.replace("\r\n", "\n").split("\n")
    numbered = [(i + 1, ln.strip()) for i, ln in enumerate(lines)]
    numbered = [(i, ln) for i, ln in numbered if ln and not ln.startswith("#")]
    if not numbered:
        raise ParseError("Empty", "no header line")
    lineno, head = numbered[0]
    try:
        nv, ne = (int(t) for t in head.split())
    except ValueError:
        raise ParseError("BadHeader", f"expected 'V E', got {head!r}", lineno) from None
    rows: dict[int, tuple[int, ...]] = {}
    where: dict[int, int] = {}
    for lineno, ln in numbered[1:]:
        if ":" not in ln:
            raise ParseError("BadLine", f"expected '<id>: neighbours', got {ln!r}", lineno)
        left, right = ln.split(":", 1)
        try:
            vid = int(left)
            nbrs = tuple(int(t) for t in right.split())
        except ValueError:
            raise ParseError("BadLine", f"non-integer token in {ln!r}", lineno) from None
        if vid in rows:
            raise ParseError("DuplicateId", f"vertex {vid} listed twice", lineno)
        rows[vid] = nbrs
        where[vid] = lineno
    if len(rows) != nv:
        raise ParseError("CountMismatch", f"header says {nv} vertices, found {len(rows)}", 1)
    if sorted(rows) != list(range(nv)):
        raise ParseError("BadIds", "vertex ids must be exactly 0..V-1")
    for v, r in rows.items():
        for w in r:
            if w in rows and v not in rows[w]:
                raise ParseError("AsymmetricAdjacency", f"{v} lists {w} but not conversely", where[v])
    half = sum(len(r) for r in rows.values())
    if half != 2 * ne:
        raise ParseError("CountMismatch", f"header says {ne} edges, rotations give {half / 2:g}", 1)
    try:
        return build_embedding(rows)
    except AsymmetricAdjacency as exc:  # pragma: no cover - caught above
        raise ParseError("AsymmetricAdjacency", str(exc)) from exc
    except EmbeddingError as exc:
        raise ParseError(type(exc).__name__, str(exc)) from exc


def load_embedding(path: str | Path) -> PlanarEmbedding:
    return parse_embedding(Path(path).read_text(encoding="utf-8"))


def save_embedding(g: PlanarEmbedding, path: str | Path) -> None:
    Path(path).write_text(serialize_embedding(g), encoding="utf-8", newline="\n")
