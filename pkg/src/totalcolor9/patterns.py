"""Configuration patterns and a small exact subgraph matcher.

A pattern is a labelled graph whose vertices carry degree constraints on
their host images (``exact:k`` for black vertices, ``min:k`` for white
ones, ``max:k`` for "k-minus" vertices) together with optional face
constraints checked against the traced faces of the host embedding.

Pattern text schema (one directive per line, ``#`` starts a comment)::

    id      cfg:4a
    vertex  v exact:8
    vertex  x min:2
    edge    v x
    face    v x t          # v,x,t bound a face of exactly this length
    edgeface u v min:5     # some face on either side of uv has length >= 5
    degsum  u v max:9      # d(u) + d(v) <= 9
    perm    x1 y1 | x2 y2  # blocks that may be exchanged when deduplicating
    alias   lem:...        # optional second name (lemma label of a figure)

Lines starting with ``##`` form the human-readable description.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from typing import Iterable, Iterator

from .embedding import PlanarEmbedding

_OPS = ("exact", "min", "max")


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class ConfigurationPattern:
    id: str
    names: tuple[str, ...]
    degree: tuple[tuple[str, str, int], ...]
    edges: tuple[tuple[str, str], ...]
    faces: tuple[tuple[str, ...], ...] = ()
    edgefaces: tuple[tuple[str, str, str, int], ...] = ()
    degsums: tuple[tuple[str, str, int], ...] = ()
    perms: tuple[tuple[tuple[str, ...], ...], ...] = ()
    description: str = ""
    alias: str = ""

    @property
    def lemma(self) -> str:
        return self.id.split("[", 1)[0]

    @cached_property
    def constraint(self) -> dict[str, tuple[str, int]]:
        return {n: (op, k) for n, op, k in self.degree}

    @cached_property
    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {n: set() for n in self.names}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def black(self) -> list[str]:
        return [n for n, op, _ in self.degree if op == "exact"]

    def validate_self(self) -> None:
        """Pattern-level invariants: simple graph, satisfiable degree constraints."""
        seen = set()
        for a, b in self.edges:
            if a == b or frozenset((a, b)) in seen:
                raise PatternError(f"{self.id}: loop or repeated edge {a}-{b}")
            seen.add(frozenset((a, b)))
        for n, (op, k) in self.constraint.items():
            if op in ("exact", "max") and len(self.adjacency[n]) > k:
                raise PatternError(f"{self.id}: {n} draws more edges than {op}:{k} allows")
        for f in self.faces:
            for a, b in zip(f, f[1:] + f[:1]):
                if b not in self.adjacency[a]:
                    raise PatternError(f"{self.id}: face {f} uses missing edge {a}-{b}")


@dataclass(frozen=True)
class MatchWitness:
    """Injective pattern-vertex -> host-vertex map plus matched faces."""

    pattern: str
    mapping: tuple[tuple[str, int], ...]
    faces: tuple[int, ...] = ()

    def __getitem__(self, name: str) -> int:
        for n, h in self.mapping:
            if n == name:
                return h
        raise KeyError(name)

    def as_dict(self) -> dict[str, int]:
        return dict(self.mapping)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(h for _, h in self.mapping)

    def __str__(self) -> str:
        body = " ".join(f"{n}={h}" for n, h in self.mapping)
        return f"{self.pattern}: {body}"


# -- parsing -----------------------------------------------------------------

def parse_pattern(text: str) -> ConfigurationPattern:
    pid = None
    names: list[str] = []
    degree: list[tuple[str, str, int]] = []
    edges: list[tuple[str, str]] = []
    faces: list[tuple[str, ...]] = []
    edgefaces: list[tuple[str, str, str, int]] = []
    degsums: list[tuple[str, str, int]] = []
    perms: list[tuple[tuple[str, ...], ...]] = []
    desc: list[str] = []
    alias = ""
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if raw.strip().startswith("##"):
            desc.append(raw.strip()[2:].strip())
        if not line:
            continue
        word, *rest = line.split()
        try:
            if word == "id":
                (pid,) = rest
            elif word == "alias":
                (alias,) = rest
            elif word == "vertex":
                name, spec = rest
                op, k = spec.split(":")
                if op not in _OPS:
                    raise PatternError(f"unknown degree constraint {op!r}")
                if name in names:
                    raise PatternError(f"vertex {name} declared twice")
                names.append(name)
                degree.append((name, op, int(k)))
            elif word == "edge":
                a, b = rest
                edges.append((a, b))
            elif word == "face":
                if len(rest) < 3:
                    raise PatternError("a face needs at least three vertices")
                faces.append(tuple(rest))
            elif word == "edgeface":
                a, b, spec = rest
                op, k = spec.split(":")
                if op not in ("min", "max"):
                    raise PatternError(f"edgeface takes min/max, not {op!r}")
                edgefaces.append((a, b, op, int(k)))
            elif word == "degsum":
                a, b, spec = rest
                op, k = spec.split(":")
                if op != "max":
                    raise PatternError("degsum only supports max")
                degsums.append((a, b, int(k)))
            elif word == "perm":
                blocks = tuple(tuple(b.split()) for b in " ".join(rest).split("|"))
                if len({len(b) for b in blocks}) != 1:
                    raise PatternError("perm blocks must have equal size")
                perms.append(blocks)
            else:
                raise PatternError(f"unknown directive {word!r}")
        except (ValueError, PatternError) as exc:
            raise PatternError(f"line {lineno}: {exc}") from None
    if pid is None:
        raise PatternError("missing 'id' line")
    known = set(names)
    used = [x for e in edges for x in e] + [x for f in faces for x in f]
    used += [x for a, b, *_ in edgefaces for x in (a, b)] + [x for a, b, _ in degsums for x in (a, b)]
    used += [x for p in perms for blk in p for x in blk]
    for x in used:
        if x not in known:
            raise PatternError(f"{pid}: undeclared vertex {x!r}")
    p = ConfigurationPattern(pid, tuple(names), tuple(degree), tuple(edges), tuple(faces),
                             tuple(edgefaces), tuple(degsums), tuple(perms), " ".join(desc), alias)
    p.validate_self()
    return p


def format_pattern(p: ConfigurationPattern) -> str:
    lines = [f"## {p.description}"] if p.description else []
    lines.append(f"id {p.id}")
    if p.alias:
        lines.append(f"alias {p.alias}")
    lines += [f"vertex {n} {op}:{k}" for n, op, k in p.degree]
    lines += [f"edge {a} {b}" for a, b in p.edges]
    lines += ["face " + " ".join(f) for f in p.faces]
    lines += [f"edgeface {a} {b} {op}:{k}" for a, b, op, k in p.edgefaces]
    lines += [f"degsum {a} {b} max:{k}" for a, b, k in p.degsums]
    lines += ["perm " + " | ".join(" ".join(b) for b in blocks) for blocks in p.perms]
    return "\n".join(lines) + "\n"


# -- constraint checks (shared by the matcher and the brute-force oracle) ----

def _deg_ok(op: str, k: int, d: int) -> bool:
    if op == "exact":
        return d == k
    if op == "min":
        return d >= k
    return d <= k


def _face_index(g: PlanarEmbedding, cycle: tuple[int, ...]) -> int | None:
    """Index of the face whose boundary is exactly ``cycle`` (either orientation)."""
    k = len(cycle)
    a, b = cycle[0], cycle[1]
    if not g.has_edge(a, b):
        return None
    fwd = g.face_index((a, b))
    f = g.faces[fwd]
    if f.length == k and f.is_simple():
        vs = f.vertices
        i = vs.index(a)
        if tuple(vs[(i + j) % k] for j in range(k)) == cycle:
            return fwd
    bwd = g.face_index((b, a))
    f = g.faces[bwd]
    if f.length == k and f.is_simple():
        vs = f.vertices
        i = vs.index(b)
        rev = (b, a) + tuple(reversed(cycle[2:]))
        if tuple(vs[(i + j) % k] for j in range(k)) == rev:
            return bwd
    return None


def _edgeface_ok(g: PlanarEmbedding, a: int, b: int, op: str, k: int) -> bool:
    if not g.has_edge(a, b):
        return False
    lens = (g.face_of((a, b)).length, g.face_of((b, a)).length)
    return any((L >= k) if op == "min" else (L <= k) for L in lens)


def check_witness(p: ConfigurationPattern, g: PlanarEmbedding, mapping: dict[str, int]) -> tuple[int, ...] | None:
    """Full validation of a complete map; returns matched face indices or ``None``."""
    if set(mapping) != set(p.names) or len(set(mapping.values())) != len(mapping):
        return None
    for n, (op, k) in p.constraint.items():
        h = mapping[n]
        if not (0 <= h < g.n) or not _deg_ok(op, k, g.degree(h)):
            return None
    for a, b in p.edges:
        if not g.has_edge(mapping[a], mapping[b]):
            return None
    for a, b, k in p.degsums:
        if g.degree(mapping[a]) + g.degree(mapping[b]) > k:
            return None
    for a, b, op, k in p.edgefaces:
        if not _edgeface_ok(g, mapping[a], mapping[b], op, k):
            return None
    found = []
    for f in p.faces:
        idx = _face_index(g, tuple(mapping[x] for x in f))
        if idx is None:
            return None
        found.append(idx)
    return tuple(found)


# -- canonical witnesses -------------------------------------------------------

def _canon_key(p: ConfigurationPattern, mapping: dict[str, int]) -> tuple:
    in_perm = {x for blocks in p.perms for blk in blocks for x in blk}
    fixed = tuple(mapping[n] for n in p.names if n not in in_perm)
    groups = tuple(tuple(sorted(tuple(mapping[x] for x in blk) for blk in blocks)) for blocks in p.perms)
    return fixed, groups


def canonical_witnesses(p: ConfigurationPattern, g: PlanarEmbedding,
                        mappings: Iterable[dict[str, int]]) -> list[MatchWitness]:
    """Collapse maps related by the pattern's declared symmetries.

    Each class is represented by its lexicographically smallest valid map
    (images listed in pattern-vertex order); output is sorted.
    """
    best: dict[tuple, tuple[int, ...]] = {}
    for m in mappings:
        key = _canon_key(p, m)
        imgs = tuple(m[n] for n in p.names)
        if key not in best or imgs < best[key]:
            best[key] = imgs
    out = []
    for imgs in sorted(best.values()):
        m = dict(zip(p.names, imgs))
        faces = check_witness(p, g, m)
        assert faces is not None
        out.append(MatchWitness(p.id, tuple(zip(p.names, imgs)), faces))
    return out


# -- backtracking matcher --------------------------------------------------------

def _search_order(p: ConfigurationPattern) -> list[str]:
    rank = {"exact": 0, "max": 1, "min": 2}

    def score(n: str) -> tuple:
        op, k = p.constraint[n]
        return (rank[op], -k if op == "exact" else 0, -len(p.adjacency[n]), p.names.index(n))

    order: list[str] = []
    placed: set[str] = set()
    while len(order) < len(p.names):
        frontier = [n for n in p.names if n not in placed and p.adjacency[n] & placed]
        pool = frontier or [n for n in p.names if n not in placed]
        nxt = min(pool, key=lambda n: (-len(p.adjacency[n] & placed),) + score(n))
        order.append(nxt)
        placed.add(nxt)
    return order


def _iter_maps(p: ConfigurationPattern, g: PlanarEmbedding) -> Iterator[dict[str, int]]:
    order = _search_order(p)
    pos = {n: i for i, n in enumerate(order)}
    earlier_nbrs = [[m for m in p.adjacency[n] if pos[m] < i] for i, n in enumerate(order)]
    deg = [len(r) for r in g.rotation]
    faces_at: dict[int, list[tuple[str, ...]]] = {}
    for f in p.faces:
        last = max(pos[x] for x in f)
        faces_at.setdefault(last, []).append(f)
    efaces_at: dict[int, list] = {}
    for ef in p.edgefaces:
        efaces_at.setdefault(max(pos[ef[0]], pos[ef[1]]), []).append(ef)
    sums_at: dict[int, list] = {}
    for s in p.degsums:
        sums_at.setdefault(max(pos[s[0]], pos[s[1]]), []).append(s)
    mapping: dict[str, int] = {}
    used: set[int] = set()

    def rec(i: int) -> Iterator[dict[str, int]]:
        if i == len(order):
            yield dict(mapping)
            return
        n = order[i]
        op, k = p.constraint[n]
        nb = earlier_nbrs[i]
        cands = g.rotation[mapping[nb[0]]] if nb else range(g.n)
        for h in cands:
            if h in used or not _deg_ok(op, k, deg[h]):
                continue
            if any(not g.has_edge(h, mapping[m]) for m in nb[1:]):
                continue
            mapping[n] = h
            ok = all(deg[mapping[a]] + deg[mapping[b]] <= s for a, b, s in sums_at.get(i, ()))
            ok = ok and all(_edgeface_ok(g, mapping[a], mapping[b], eop, ek)
                            for a, b, eop, ek in efaces_at.get(i, ()))
            ok = ok and all(_face_index(g, tuple(mapping[x] for x in f)) is not None
                            for f in faces_at.get(i, ()))
            if ok:
                used.add(h)
                yield from rec(i + 1)
                used.discard(h)
            del mapping[n]

    yield from rec(0)


def match_configuration(p: ConfigurationPattern, g: PlanarEmbedding) -> list[MatchWitness]:
    """All occurrences of ``p`` in ``g`` up to the pattern's declared symmetries."""
    return canonical_witnesses(p, g, _iter_maps(p, g))


def brute_force_matches(p: ConfigurationPattern, g: PlanarEmbedding) -> list[MatchWitness]:
    """Reference enumeration of injective maps in declaration order.

    Only unary degree filters, injectivity and pattern edges are checked
    while extending; everything else is left to :func:`check_witness` on
    the complete map.  Shares no search code with the matcher.
    """
    cands = []
    for n in p.names:
        op, k = p.constraint[n]
        cands.append([h for h in range(g.n) if _deg_ok(op, k, g.degree(h))])
    adj = p.adjacency
    back = [[j for j in range(i) if p.names[j] in adj[p.names[i]]] for i in range(len(p.names))]
    maps = []
    combo: list[int] = []

    def rec(i: int) -> None:
        if i == len(p.names):
            m = dict(zip(p.names, combo))
            if check_witness(p, g, m) is not None:
                maps.append(m)
            return
        for h in cands[i]:
            if h in combo or any(not g.has_edge(h, combo[j]) for j in back[i]):
                continue
            combo.append(h)
            rec(i + 1)
            combo.pop()

    rec(0)
    return canonical_witnesses(p, g, maps)


def revalidate(p: ConfigurationPattern, g: PlanarEmbedding, w: MatchWitness) -> bool:
    faces = check_witness(p, g, w.as_dict())
    return faces is not None and faces == w.faces


# -- 4-fan -----------------------------------------------------------------------

def contains_four_fan(g: PlanarEmbedding) -> MatchWitness | None:
    """Hub with five neighbours forming a path (subgraph, not induced)."""
    for hub in range(g.n):
        nbrs = g.rotation[hub]
        if len(nbrs) < 5:
            continue
        inside = set(nbrs)
        local = {a: [b for b in g.rotation[a] if b in inside] for a in sorted(nbrs)}
        path = _path5(local)
        if path is not None:
            return MatchWitness("fan4", (("hub", hub),) + tuple((f"a{i + 1}", x) for i, x in enumerate(path)))
    return None


def _path5(local: dict[int, list[int]]) -> list[int] | None:
    def ext(path: list[int]) -> list[int] | None:
        if len(path) == 5:
            return path
        for b in sorted(local[path[-1]]):
            if b not in path:
                r = ext(path + [b])
                if r is not None:
                    return r
        return None

    for a in local:
        r = ext([a])
        if r is not None:
            return r
    return None


# -- catalog ---------------------------------------------------------------------

CATALOG_ORDER = (
    "lem:min-deg",
    "lem:uv-10",
    "lem:8-has-one-2[distinct]",
    "lem:8-has-one-2[shared]",
    "lem:7-two-3s[adjacent]",
    "lem:7-two-3s[apart]",
    "lem:8-2and3[adjacent]",
    "lem:8-2and3[apart]",
    "lem:8-diamond3-no2",
    "lem:8-two-diamonds",
    "lem:8-233383[i=4]",
    "lem:8-233383[i=5]",
    "lem:8-233383[i=6]",
    "lem:8-233383[i=7]",
    "cfg:4a",
    "cfg:4b",
    "cfg:4c",
    "cfg:4d",
    "cfg:4e",
)


def _file_name(pid: str) -> str:
    return pid.replace(":", "_").replace("[", "_").replace("]", "").replace("=", "") + ".pat"


@dataclass
class Catalog:
    patterns: dict[str, ConfigurationPattern] = field(default_factory=dict)

    def __iter__(self) -> Iterator[ConfigurationPattern]:
        return iter(self.patterns.values())

    def __getitem__(self, pid: str) -> ConfigurationPattern:
        return self.patterns[pid]

    def __contains__(self, pid: str) -> bool:
        return pid in self.patterns

    def for_lemma(self, lemma: str) -> list[ConfigurationPattern]:
        if lemma in self.patterns:
            return [self.patterns[lemma]]
        return [p for p in self.patterns.values() if p.lemma == lemma]

    @property
    def lemmas(self) -> list[str]:
        return list(dict.fromkeys(p.lemma for p in self.patterns.values()))


_CATALOG: Catalog | None = None


def load_catalog() -> Catalog:
    global _CATALOG
    if _CATALOG is None:
        base = resources.files("totalcolor9") / "data" / "patterns"
        pats = {}
        for pid in CATALOG_ORDER:
            p = parse_pattern((base / _file_name(pid)).read_text(encoding="utf-8"))
            if p.id != pid:
                raise PatternError(f"file for {pid} declares id {p.id}")
            pats[pid] = p
        _CATALOG = Catalog(pats)
    return _CATALOG


def fan4_pattern() -> ConfigurationPattern:
    base = resources.files("totalcolor9") / "data" / "patterns"
    return parse_pattern((base / "fan4.pat").read_text(encoding="utf-8"))


def structural_violations(g: PlanarEmbedding, catalog: Catalog | None = None) -> list[tuple[str, MatchWitness]]:
    """Every catalogued structure present in ``g`` as ``(lemma-id, witness)``."""
    cat = catalog or load_catalog()
    out = []
    for p in cat:
        out += [(p.lemma, w) for w in match_configuration(p, g)]
    return out
