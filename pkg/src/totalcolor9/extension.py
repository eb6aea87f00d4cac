"""Extending a coloring of a reduced graph back to the whole graph.

The engine runs a per-lemma recoloring script against a concrete coloring.
Scripts speak in *labels*: before a script inspects anything it fixes a
frame, i.e. a permutation that sends the actual colors around the central
vertex to the canonical labels of the corresponding figure.  All reads and
writes then go through that permutation.

Moves are applied in groups ("steps").  Validity is checked once per step,
because several scripted recolorings pass through an improper intermediate
state (two swaps that only make sense together).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .coloring import TotalColoring, Violation, solve, verify_total_coloring
from .embedding import Edge, Element, PlanarEmbedding, SimpleGraph, edge_key, is_edge


class ExtensionError(RuntimeError):
    pass


class InapplicableMove(ExtensionError):
    pass


class ElementAlreadyColored(ValueError):
    pass


class NoAvailableColor(ExtensionError):
    pass


class NotSmallVertex(ValueError):
    """greedy_finish_small was handed something other than a 4-minus vertex."""


class ReducedGraphNotColorable(ExtensionError):
    pass


class ScriptError(ExtensionError):
    pass


class ScriptCaseMiss(ScriptError):
    pass


class ScriptAssumptionFailed(ScriptCaseMiss):
    """An inference the written argument takes for granted does not hold."""


class ScriptMoveInvalid(ScriptError):
    pass


class UnknownLemma(KeyError):
    pass


# -- total graph helper ----------------------------------------------------------

class TotalGraph:
    """Adjacency of elements for any graph exposing ``vertices`` and ``edges``."""

    def __init__(self, g):
        self.g = g
        self.vertices = tuple(sorted(g.vertices))
        self.edges = tuple(sorted(g.edges))
        self.edge_set = set(self.edges)
        self.adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        self.inc: dict[int, list[Edge]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            self.adj[u].append(v)
            self.adj[v].append(u)
            self.inc[u].append((u, v))
            self.inc[v].append((u, v))
        self._nbrs: dict[Element, tuple[Element, ...]] = {}

    def deg(self, v: int) -> int:
        return len(self.adj[v])

    def has(self, x: Element) -> bool:
        return x in self.edge_set if is_edge(x) else x in self.adj

    def elements(self) -> list[Element]:
        return [*self.vertices, *self.edges]

    def partners(self, x: Element) -> tuple[Element, ...]:
        got = self._nbrs.get(x)
        if got is None:
            if is_edge(x):
                u, v = x
                got = (u, v, *[e for e in self.inc[u] if e != x], *[e for e in self.inc[v] if e != x])
            else:
                got = (*self.adj[x], *self.inc[x])
            self._nbrs[x] = got
        return got


def _tg(g) -> TotalGraph:
    return g if isinstance(g, TotalGraph) else TotalGraph(g)


# -- moves -------------------------------------------------------------------------

def fmt_element(x: Element) -> str:
    return f"e:{x[0]}-{x[1]}" if is_edge(x) else f"v:{x}"


def parse_element(tok: str) -> Element:
    kind, body = tok.split(":", 1)
    if kind == "v":
        return int(body)
    if kind == "e":
        a, b = body.split("-")
        return edge_key(int(a), int(b))
    raise ValueError(f"bad element token {tok!r}")


@dataclass(frozen=True)
class Move:
    kind: str
    elements: tuple[Element, ...]
    color: int | None = None

    @staticmethod
    def assign(x: Element, c: int) -> Move:
        return Move("assign", (x,), c)

    @staticmethod
    def uncolor(*xs: Element) -> Move:
        return Move("uncolor", tuple(xs))

    @staticmethod
    def swap(a: Element, b: Element) -> Move:
        return Move("swap", (a, b))

    @staticmethod
    def alternate(chain: Sequence[Element]) -> Move:
        return Move("alternate", tuple(chain))

    def __str__(self) -> str:
        body = " ".join(fmt_element(x) for x in self.elements)
        return f"{self.kind} {body} {self.color}" if self.kind == "assign" else f"{self.kind} {body}"

    @staticmethod
    def parse(line: str) -> Move:
        kind, *toks = line.split()
        if kind == "assign":
            return Move.assign(parse_element(toks[0]), int(toks[1]))
        if kind in ("uncolor", "swap", "alternate"):
            return Move(kind, tuple(parse_element(t) for t in toks))
        raise ValueError(f"unknown move {kind!r}")


def _move_updates(phi: TotalColoring, m: Move) -> dict[Element, int | None]:
    cs = phi.colors
    if m.kind == "assign":
        if m.color is None or not 1 <= m.color <= phi.k:
            raise InapplicableMove(f"color {m.color} outside 1..{phi.k}")
        return {m.elements[0]: m.color}
    if m.kind == "uncolor":
        return {x: None for x in m.elements}
    if m.kind == "swap":
        a, b = m.elements
        if a not in cs or b not in cs:
            raise InapplicableMove("swap needs both elements colored")
        return {a: cs[b], b: cs[a]}
    if m.kind == "alternate":
        chain = m.elements
        if len(chain) < 2 or any(x not in cs for x in chain):
            raise InapplicableMove("alternate needs a colored chain of length >= 2")
        c0, c1 = cs[chain[0]], cs[chain[1]]
        if c0 == c1 or any(cs[x] != (c0 if i % 2 == 0 else c1) for i, x in enumerate(chain)):
            raise InapplicableMove("chain is not two-colored alternately")
        return {x: (c1 if i % 2 == 0 else c0) for i, x in enumerate(chain)}
    raise InapplicableMove(f"unknown move kind {m.kind!r}")


def local_violations(g, phi: TotalColoring, touched: Iterable[Element]) -> list[Violation]:
    tg = _tg(g)
    cs = phi.colors
    out = []
    seen = set()
    for x in sorted(set(touched), key=_order_key):
        c = cs.get(x)
        if c is None:
            continue
        for y in tg.partners(x):
            if cs.get(y) == c:
                pair = frozenset((x, y))
                if pair not in seen:
                    seen.add(pair)
                    out.append(Violation(x, y, c))
    return out


def _order_key(x: Element) -> tuple:
    return (1, x) if is_edge(x) else (0, (x,))


def apply_moves(g, phi: TotalColoring, moves: Sequence[Move]) -> tuple[TotalColoring, list[Violation]]:
    """Apply a group of moves and report conflicts among touched elements."""
    tg = _tg(g)
    out = phi.copy()
    touched: list[Element] = []
    for m in moves:
        for x in m.elements:
            if not tg.has(x):
                raise InapplicableMove(f"{fmt_element(x)} is not an element of the graph")
        ups = _move_updates(out, m)
        for x, c in ups.items():
            if c is None:
                out.colors.pop(x, None)
            else:
                out.colors[x] = c
        touched += ups
    return out, local_violations(tg, out, touched)


def apply_move(g, phi: TotalColoring, m: Move) -> tuple[TotalColoring, list[Violation]]:
    return apply_moves(g, phi, [m])


def available_colors(g, phi: TotalColoring, x: Element, k: int | None = None) -> set[int]:
    if x in phi.colors:
        raise ElementAlreadyColored(fmt_element(x))
    tg = _tg(g)
    used = {phi.colors[y] for y in tg.partners(x) if y in phi.colors}
    return set(range(1, (k or phi.k) + 1)) - used


def greedy_finish_small(g, phi: TotalColoring, k: int = 9) -> TotalColoring:
    """Color the remaining (4-minus) vertices, ascending id, smallest free color."""
    tg = _tg(g)
    todo = [x for x in tg.elements() if x not in phi.colors]
    for x in todo:
        if is_edge(x) or tg.deg(x) > 4:
            raise NotSmallVertex(f"{fmt_element(x)} is not a 4-minus vertex")
    out = TotalColoring(k, dict(phi.colors))
    for x in todo:
        free = available_colors(tg, out, x, k)
        if not free:
            raise NoAvailableColor(fmt_element(x))
        out.colors[x] = min(free)
    return out


# -- reductions and script context ----------------------------------------------------

@dataclass
class Reduction:
    """Reduced graph plus what to uncolor and which host elements are missing."""

    graph: SimpleGraph
    uncolor: tuple[int, ...]
    target: tuple[Element, ...]
    note: str = ""


@dataclass
class Step:
    label: str
    moves: tuple[Move, ...]


@dataclass
class ExtensionResult:
    coloring: TotalColoring
    branch: tuple[str, ...]
    steps: list[Step]
    reduced: TotalColoring

    def log_lines(self) -> list[str]:
        lines = ["branch " + "/".join(self.branch)]
        for i, st in enumerate(self.steps):
            for m in st.moves:
                lines.append(f"{i} {m}")
        return lines


class ScriptContext:
    """What a script sees: names, a label frame, reads and grouped moves."""

    MAX_RESTARTS = 3

    def __init__(self, host: TotalGraph, names: Mapping[str, int], phi: TotalColoring,
                 reduced: TotalColoring, target: Element,
                 observer: Callable[[Element], None] | None = None):
        self.host = host
        self.names = dict(names)
        self.phi = phi
        self.reduced = reduced
        self.target = target
        self.k = phi.k
        self.to_label: dict[int, int] = {c: c for c in range(1, self.k + 1)}
        self.from_label: dict[int, int] = dict(self.to_label)
        self.branch: list[str] = []
        self.steps: list[Step] = []
        self.restarts = 0
        self._observer = observer

    # names and elements
    def __getitem__(self, name: str) -> int:
        return self.names[name]

    def vx(self, a: str | int) -> int:
        return self.names[a] if isinstance(a, str) else a

    def e(self, a: str | int, b: str | int) -> Edge:
        u, w = self.vx(a), self.vx(b)
        key = edge_key(u, w)
        if key not in self.host.edge_set:
            raise ScriptAssumptionFailed(f"expected edge {a}-{b} in the host")
        return key

    def others(self, center: str | int, exclude: Iterable[str | int]) -> list[int]:
        """Neighbours of ``center`` outside ``exclude``, ascending host id."""
        ex = {self.vx(x) for x in exclude}
        return sorted(w for w in self.host.adj[self.vx(center)] if w not in ex)

    def ext(self, a: str, exclude: Iterable[str]) -> int:
        """The single neighbour of ``a`` not in ``exclude``."""
        rest = self.others(a, exclude)
        if len(rest) != 1:
            raise ScriptAssumptionFailed(f"{a} should have exactly one further neighbour")
        return rest[0]

    # reads
    def raw(self, x: Element) -> int | None:
        if self._observer is not None:
            self._observer(x)
        return self.phi.colors.get(x)

    def raw_reduced(self, x: Element) -> int:
        if self._observer is not None:
            self._observer(x)
        return self.reduced.colors[x]

    def lab(self, x: Element) -> int | None:
        c = self.raw(x)
        return None if c is None else self.to_label[c]

    def c(self, a: str | int, b: str | int) -> int | None:
        """Label currently on edge ab."""
        return self.lab(self.e(a, b))

    # frame
    def frame(self, fixed: Mapping[Element, int], pool_elements: Sequence[Element] = (),
              pool_labels: Sequence[int] = ()) -> None:
        """Fix labels: ``fixed`` element colors, then pool elements in order, leftovers last."""
        perm: dict[int, int] = {}
        used_labels: set[int] = set()

        def bind(x: Element, label: int) -> None:
            c = self.raw(x)
            if c is None:
                raise ScriptAssumptionFailed(f"{fmt_element(x)} should be colored")
            if c in perm or label in used_labels:
                raise ScriptAssumptionFailed("frame colors are not distinct")
            perm[c] = label
            used_labels.add(label)

        for x, lab in fixed.items():
            bind(x, lab)
        pool = list(pool_labels) if pool_labels else sorted(set(range(1, self.k + 1)) - used_labels)
        if len(pool_elements) > len(pool):
            raise ScriptAssumptionFailed("too many pooled elements for the frame")
        for x, lab in zip(pool_elements, pool):
            bind(x, lab)
        rest_c = sorted(set(range(1, self.k + 1)) - set(perm))
        rest_l = sorted(set(range(1, self.k + 1)) - used_labels)
        perm.update(zip(rest_c, rest_l))
        self.to_label = perm
        self.from_label = {v: k for k, v in perm.items()}

    # control
    def note(self, label: str) -> None:
        self.branch.append(label)

    def assume(self, cond: bool, what: str) -> None:
        if not cond:
            raise ScriptAssumptionFailed(what)

    def target_free(self) -> list[int]:
        """Labels available for the target edge (reads its whole neighbourhood)."""
        used = set()
        for y in self.host.partners(self.target):
            c = self.raw(y)
            if c is not None:
                used.add(c)
        return sorted(self.to_label[c] for c in set(range(1, self.k + 1)) - used)

    def direct(self) -> bool:
        """Color the target straight away if any color is free for it."""
        free = self.target_free()
        if not free:
            return False
        self.note("direct")
        self.step("direct", Move.assign(self.target, self.from_label[min(free)]))
        return True

    # moves, in labels
    def assign(self, x: Element, label: int) -> Move:
        return Move.assign(x, self.from_label[label])

    def put(self, a: str | int, b: str | int, label: int) -> Move:
        return self.assign(self.e(a, b), label)

    def finish(self, label: int) -> Move:
        return self.assign(self.target, label)

    def sw(self, a: str | int, b1: str | int, b2: str | int) -> Move:
        """Interchange the colors of a-b1 and a-b2."""
        return Move.swap(self.e(a, b1), self.e(a, b2))

    def alt(self, *path: str | int) -> Move:
        return Move.alternate([self.e(path[i], path[i + 1]) for i in range(len(path) - 1)])

    def step(self, label: str, *moves: Move) -> None:
        if self._observer is not None:
            # validity depends on the neighbourhood of every touched element
            for m in moves:
                for x in m.elements:
                    self._observer(x)
                    for y in self.host.partners(x):
                        self._observer(y)
        new, bad = apply_moves(self.host, self.phi, moves)
        if bad:
            raise ScriptMoveInvalid(f"{label}: {bad[0]}")
        self.phi = new
        self.steps.append(Step(label, tuple(moves)))

    def done(self, label: str, *moves: Move) -> None:
        """Final step of a branch; the target must end up colored."""
        self.note(label)
        self.step(label, *moves)
        if self.target not in self.phi.colors:
            raise ScriptCaseMiss(f"{label}: target left uncolored")


Script = Callable[[ScriptContext], None]


@dataclass
class LemmaScript:
    lemma: str
    patterns: tuple[str, ...]
    reduce: Callable[[TotalGraph, Mapping[str, int]], Reduction]
    run: Script
    description: str = ""


# -- the driver ---------------------------------------------------------------------

def _host_graph(g) -> TotalGraph:
    if isinstance(g, TotalGraph):
        return g
    return TotalGraph(g)


def run_extension(g, script: LemmaScript, names: Mapping[str, int], k: int = 9,
                  reduced_coloring: TotalColoring | None = None,
                  observer: Callable[[Element], None] | None = None,
                  host: TotalGraph | None = None, reduction: Reduction | None = None,
                  verify: bool = True) -> ExtensionResult:
    """Run ``script`` on ``g``.  ``verify=False`` trusts the supplied reduced
    coloring and checks the result with the local conflict scan only."""
    tg = host or _host_graph(g)
    red = reduction or script.reduce(tg, names)
    if reduced_coloring is None:
        reduced_coloring = solve(red.graph, k)
        if reduced_coloring is None:
            raise ReducedGraphNotColorable(f"{script.lemma}: reduced graph has no {k}-coloring")
    elif verify and verify_total_coloring(red.graph, reduced_coloring, partial=True):
        raise ValueError("supplied reduced coloring is not proper")
    drop = set(red.uncolor)
    phi = TotalColoring(k, {x: c for x, c in reduced_coloring.colors.items()
                            if tg.has(x) and x not in drop})
    target = red.target[0] if red.target else None
    ctx = ScriptContext(tg, names, phi, reduced_coloring, target, observer)
    script.run(ctx)
    ctx._observer = None
    try:
        final = greedy_finish_small(tg, ctx.phi, k)
    except (NotSmallVertex, NoAvailableColor) as exc:
        raise ScriptCaseMiss(f"{script.lemma}: cannot finish ({exc})") from exc
    bad = verify_total_coloring(tg.g, final) if verify else local_violations(tg, final, tg.elements())
    if bad:
        raise ScriptMoveInvalid(f"{script.lemma}: final coloring has {bad[0]}")
    return ExtensionResult(final, tuple(ctx.branch), ctx.steps, reduced_coloring)


def reduce_and_extend(g, lemma_id: str, witness, k: int = 9,
                      reduced_coloring: TotalColoring | None = None) -> TotalColoring:
    """9-total-coloring of ``g`` from a coloring of the reduced graph of ``witness``."""
    from .scripts import script_for

    names = witness.as_dict() if hasattr(witness, "as_dict") else dict(witness)
    pid = getattr(witness, "pattern", lemma_id)
    script = script_for(pid if pid else lemma_id)
    return run_extension(g, script, names, k, reduced_coloring).coloring


# -- generic bounded search --------------------------------------------------------

def _kempe_chain(tg: TotalGraph, cs: Mapping[Element, int], start: Edge, c2: int) -> list[Edge]:
    """Maximal edge path/cycle through ``start`` alternating ``cs[start]`` and ``c2``."""
    c1 = cs[start]

    def walk(prev: Edge, at: int, want: int) -> list[Edge]:
        out = []
        seen = {start}
        cur_prev, cur_at, cur_want = prev, at, want
        while True:
            nxt = [e for e in tg.inc[cur_at] if e != cur_prev and cs.get(e) == cur_want]
            if not nxt or nxt[0] in seen:
                break
            e = nxt[0]
            seen.add(e)
            out.append(e)
            cur_prev = e
            cur_at = e[0] if e[1] == cur_at else e[1]
            cur_want = c1 if cur_want == c2 else c2
        return out

    left = walk(start, start[0], c2)
    right = walk(start, start[1], c2)
    chain = list(reversed(left)) + [start] + [e for e in right if e not in left]
    return chain


def search_extension(g, phi_partial: TotalColoring, k: int | None = None, move_budget: int = 3,
                     radius: int = 2) -> TotalColoring | None:
    """Bounded search for a completion using assign/recolor/swap/alternate moves.

    Uncolored 4-minus vertices are deferred to :func:`greedy_finish_small`.
    Assignments are unbounded (they are forced on the most constrained
    element, trying colors ascending); every other move costs one unit of
    ``move_budget``.  Non-assign moves only touch elements within ``radius``
    of an uncolored element.  Candidate order: recolors, then swaps, then
    alternations, elements ascending.
    """
    tg = _tg(g)
    k = k or phi_partial.k
    start = TotalColoring(k, dict(phi_partial.colors))
    if local_violations(tg, start, list(start.colors)):
        return None
    deferred = {v for v in tg.vertices if v not in start.colors and tg.deg(v) <= 4}
    seen: dict[frozenset, int] = {}

    def near(x: Element) -> set[Element]:
        verts = set(x) if is_edge(x) else {x}
        frontier = set(verts)
        for _ in range(radius):
            frontier = {w for v in frontier for w in tg.adj[v]} - verts
            verts |= frontier
        out: set[Element] = set(verts)
        out |= {e for v in verts for e in tg.inc[v] if e[0] in verts and e[1] in verts}
        return out

    def todo(cs: Mapping[Element, int]) -> list[Element]:
        return [x for x in tg.elements() if x not in cs and x not in deferred]

    def rec(phi: TotalColoring, budget: int) -> TotalColoring | None:
        rest = todo(phi.colors)
        if not rest:
            try:
                return greedy_finish_small(tg, phi, k)
            except NoAvailableColor:
                return None
        key = frozenset(phi.colors.items())
        if seen.get(key, -1) >= budget:
            return None
        seen[key] = budget
        frees = {x: available_colors(tg, phi, x, k) for x in rest}
        x = min(rest, key=lambda y: (len(frees[y]), _order_key(y)))
        for c in sorted(frees[x]):
            phi.colors[x] = c
            got = rec(phi, budget)
            del phi.colors[x]
            if got is not None:
                return got
        if budget == 0:
            return None
        region = sorted((y for y in near(x) if y in phi.colors), key=_order_key)
        for m in _candidate_moves(tg, phi, region, x, k):
            new, bad = apply_moves(tg, phi, [m])
            if bad:
                continue
            got = rec(new, budget - 1)
            if got is not None:
                return got
        return None

    return rec(start, move_budget)


def _candidate_moves(tg: TotalGraph, phi: TotalColoring, region: list[Element], x: Element,
                     k: int) -> Iterable[Move]:
    cs = phi.colors
    rset = set(region)
    for y in region:
        own = cs[y]
        used = {cs[z] for z in tg.partners(y) if z in cs}
        for c in range(1, k + 1):
            if c != own and c not in used:
                yield Move.assign(y, c)
    for i, a in enumerate(region):
        for b in tg.partners(a):
            if b in rset and _order_key(b) > _order_key(a) and cs[a] != cs[b]:
                yield Move.swap(a, b)
    done = set()
    for e in region:
        if not is_edge(e):
            continue
        for c2 in range(1, k + 1):
            if c2 == cs[e]:
                continue
            chain = _kempe_chain(tg, cs, e, c2)
            key = (frozenset(chain), frozenset((cs[e], c2)))
            if len(chain) < 2 or key in done:
                continue
            done.add(key)
            yield Move.alternate(chain)
