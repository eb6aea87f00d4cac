"""Mechanised reducibility checks for the scripted structures.

For a fixture and its script we run ``run_extension`` against colorings of
the reduced graph (with the script's uncolored set dropped):

* **full** - every proper coloring, when a cheap lower bound on their number
  is at most ``full_limit``;
* **classes** - otherwise, an exhaustive walk over the colorings the script
  can tell apart.  The script is executed on a completion of a partial
  assignment while recording which elements it reads (including the
  neighbourhoods it relies on when validating a step).  The walk branches on
  the first recorded element that is still free; a run whose reads are all
  fixed is a leaf and stands for every coloring that agrees on those reads.
  Colors are branched up to permutation (used colors plus one fresh one),
  which is sound because the scripts only see colors through the frame.
* **samples** - seeded random colorings, half of them biased so that the
  target's neighbourhood uses many colors and the case table is actually
  exercised.  Samples run in every mode; with ``classes=False`` they are
  the only check above the enumeration limit.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .coloring import ConflictIndex, TotalColoring
from .embedding import Element, is_edge
from .extension import (
    ExtensionError,
    LemmaScript,
    TotalGraph,
    run_extension,
)
from .fixtures import Fixture
from .rng import SplitMix64
from .scripts import script_for


@dataclass
class Failure:
    colors: dict
    error: str


@dataclass
class ReducibilityReport:
    fixture: str
    pattern: str
    mode: str
    runs: int = 0
    samples: int = 0
    failures: list[Failure] = field(default_factory=list)
    branches: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return not self.failures and self.runs + self.samples > 0

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} FAILED"
        return (f"{self.fixture:24s} {self.pattern:28s} {self.mode:8s} runs={self.runs:<7d} "
                f"samples={self.samples:<4d} branches={len(self.branches):<3d} {status}")


def _domain(red_graph, drop: set[int]) -> tuple[TotalGraph, list[Element]]:
    rg = TotalGraph(red_graph)
    return rg, [x for x in rg.elements() if is_edge(x) or x not in drop]


def _lower_bound(rg: TotalGraph, dom: list[Element], k: int, cap: int) -> int:
    """Each earlier partner removes at most one color; product of what is left."""
    pos = {x: i for i, x in enumerate(dom)}
    total = 1
    for i, x in enumerate(dom):
        earlier = sum(1 for y in rg.partners(x) if pos.get(y, i) < i)
        total *= max(k - earlier, 0)
        if total > cap:
            return total
    return total


def iter_colorings(rg: TotalGraph, dom: list[Element], k: int) -> Iterator[dict[Element, int]]:
    """Every proper coloring of the elements in ``dom`` (ascending order)."""
    inside = set(dom)
    nbrs = [[y for y in rg.partners(x) if y in inside] for x in dom]
    cur: dict[Element, int] = {}

    def rec(i: int) -> Iterator[dict[Element, int]]:
        if i == len(dom):
            yield dict(cur)
            return
        x = dom[i]
        used = {cur[y] for y in nbrs[i] if y in cur}
        for c in range(1, k + 1):
            if c not in used:
                cur[x] = c
                yield from rec(i + 1)
                del cur[x]

    yield from rec(0)


def random_coloring(rg: TotalGraph, dom: list[Element], k: int, rng: SplitMix64,
                    first: Sequence[Element] = ()) -> dict[Element, int] | None:
    """Random proper coloring.

    Elements of ``first`` are colored before the rest and prefer colors not
    yet used among them, which tends to leave no color free for whatever
    they surround.
    """
    inside = set(dom)
    head = [x for x in first if x in inside]
    hset = set(head)
    order = head + [x for x in dom if x not in hset]
    cur: dict[Element, int] = {}
    budget = [20000]

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        budget[0] -= 1
        if budget[0] < 0:
            return False
        x = order[i]
        used = {cur[y] for y in rg.partners(x) if y in cur}
        cols = [c for c in range(1, k + 1) if c not in used]
        rng.shuffle(cols)
        if x in hset:
            seen = {cur[y] for y in head if y in cur}
            cols = [c for c in cols if c not in seen] + [c for c in cols if c in seen]
        for c in cols:
            cur[x] = c
            if rec(i + 1):
                return True
            del cur[x]
        return False

    return dict(cur) if rec(0) else None


class _Runner:
    def __init__(self, fx: Fixture, script: LemmaScript, k: int):
        self.fx = fx
        self.script = script
        self.k = k
        self.host = TotalGraph(fx.graph)
        self.names = {n: i for n, i in fx.names.items() if not n.startswith("_")}
        self.red = script.reduce(self.host, self.names)
        self.rg, self.dom = _domain(self.red.graph, set(self.red.uncolor))
        self.index = ConflictIndex(self.red.graph)

    def run(self, colors: dict[Element, int], observer: Callable | None = None, verify: bool = True):
        phi = TotalColoring(self.k, dict(colors))
        return run_extension(self.fx.graph, self.script, self.names, self.k, phi,
                             observer=observer, host=self.host, reduction=self.red, verify=verify)


def check_fixture(name: str, fx: Fixture, k: int = 9, samples: int = 500, seed: int = 0,
                  full_limit: int = 10 ** 6, classes: bool = True,
                  class_limit: int = 2_000_000) -> ReducibilityReport:
    """Run the fixture's script over reduced colorings.

    Above ``full_limit`` colorings the class walk runs only when
    ``classes`` is set; the seeded samples always run.
    """
    script = script_for(fx.pattern)
    r = _Runner(fx, script, k)
    bound = _lower_bound(r.rg, r.dom, k, full_limit)
    mode = "full" if bound <= full_limit else ("classes" if classes else "samples")
    report = ReducibilityReport(name, fx.pattern, mode)

    def attempt(colors: dict[Element, int], observer=None) -> None:
        try:
            res = r.run(colors, observer)
            report.branches["/".join(res.branch)] += 1
        except (ExtensionError, ValueError) as exc:
            report.failures.append(Failure(dict(colors), f"{type(exc).__name__}: {exc}"))

    if report.mode == "full":
        for cs in iter_colorings(r.rg, r.dom, k):
            attempt(cs)
            report.runs += 1
            if report.runs > full_limit:
                raise RuntimeError("lower bound was wrong")
    elif mode == "classes":
        report.runs = _walk_classes(r, k, attempt, class_limit)

    rng = SplitMix64(seed)
    target_partners = list(r.host.partners(r.red.target[0])) if r.red.target else []
    done = 0
    tries = 0
    while done < samples and tries < 20 * samples:
        tries += 1
        first = target_partners if done % 2 == 0 else []
        cs = random_coloring(r.rg, r.dom, k, rng, first)
        if cs is None:
            continue
        attempt(cs)
        done += 1
    report.samples = done
    return report


def _walk_classes(r: _Runner, k: int, attempt: Callable, limit: int) -> int:
    inside = set(r.dom)
    leaves = 0

    def rec(partial: dict[Element, int], colors: dict[Element, int] | None) -> None:
        nonlocal leaves
        if colors is None:
            comp = r.index.solve(k, TotalColoring(k, dict(partial)))
            if comp is None:
                return
            colors = {x: c for x, c in comp.colors.items() if x in inside}
        reads: list[Element] = []
        seen: set[Element] = set()

        def observe(x: Element) -> None:
            if x in inside and x not in partial and x not in seen:
                seen.add(x)
                reads.append(x)

        try:
            r.run(colors, observe, verify=False)
        except (ExtensionError, ValueError):
            pass
        if not reads:
            leaves += 1
            if leaves > limit:
                raise RuntimeError("class enumeration exceeded its limit")
            attempt(colors)
            return
        x = reads[0]
        used_here = {partial[y] for y in r.rg.partners(x) if y in partial}
        palette = sorted(set(partial.values()))
        fresh = [c for c in range(1, k + 1) if c not in palette][:1]
        for c in palette + fresh:
            if c not in used_here:
                partial[x] = c
                # the current completion still fits when it already agrees
                rec(partial, colors if colors[x] == c else None)
                del partial[x]

    rec({}, None)
    return leaves
