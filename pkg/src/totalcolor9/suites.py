"""The acceptance suites, shared by ``corpus-run`` and the test-suite.

Every suite is a pure function of its seed and sizes and returns a
:class:`SuiteResult` whose text carries no timings, so repeated runs print
byte-identical reports.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .coloring import exhaustive_colorings, solve, total_chromatic_number, verify_total_coloring
from .corpus import generated
from .discharging import apply_rules, audit, initial_charges
from .embedding import PlanarEmbedding, SimpleGraph, edge_key
from .fixtures import FIXTURE_NAMES, fixture
from .graphs import complete, from_coordinates
from .patterns import brute_force_matches, fan4_pattern, load_catalog, match_configuration
from .reducibility import check_fixture


@dataclass(frozen=True)
class SuiteResult:
    criterion: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.criterion} {self.name}: {self.detail}"


# -- small hosts for the rule arithmetic ---------------------------------------------


def padded(points: list[tuple[float, float]], edges: list[tuple[int, int]],
           degrees: list[int]) -> PlanarEmbedding:
    """Straight-line drawing with pendant leaves fanned outward until each core vertex hits its degree."""
    pts = dict(enumerate(points))
    es = list(edges)
    cx = sum(p[0] for p in points) / len(points)
    cy = sum(p[1] for p in points) / len(points)
    for v, want in enumerate(degrees):
        have = sum(v in e for e in edges)
        extra = want - have
        base = math.atan2(points[v][1] - cy, points[v][0] - cx)
        for j in range(extra):
            ang = base + (j - (extra - 1) / 2) * (1.2 / max(extra, 1))
            pts[len(pts)] = (points[v][0] + 0.3 * math.cos(ang), points[v][1] + 0.3 * math.sin(ang))
            es.append((v, len(pts) - 1))
    return from_coordinates(pts, es)


TRIANGLE = [(0.0, 0.0), (2.0, 0.0), (1.0, 1.7)]


def inner_triangle(g: PlanarEmbedding) -> int:
    """Index of the face bounded by the core triangle 0-1-2."""
    for i, f in enumerate(g.faces):
        if f.length == 3 and set(f.vertices) == {0, 1, 2}:
            return i
    raise LookupError("core triangle is not a face")


def rule_arithmetic() -> list[tuple[str, Fraction | int, Fraction | int]]:
    """(label, observed, expected) for each exact-value fixture."""
    out: list[tuple[str, Fraction | int, Fraction | int]] = []
    tri = [(0, 1), (1, 2), (0, 2)]
    for label, degs in (("(4-,6+,6+) 3-face", [3, 8, 8]), ("(4-,6+,6+) 3-face", [4, 6, 7]),
                        ("all-5+ 3-face", [5, 5, 5]), ("all-5+ 3-face", [5, 8, 6])):
        g = padded(TRIANGLE, tri, degs)
        final, _ = apply_rules(g)
        out.append((f"{label} {degs}", final[("f", inner_triangle(g))], 0))
    g = padded([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)], [(0, 1), (1, 2)], [8, 2, 8])
    final, _ = apply_rules(g)
    out.append(("2-vertex between 8-vertices", final[("v", 1)], 0))
    out.append(("total chromatic number of K4", total_chromatic_number(complete(4)), 5))
    return out


# -- small simple graphs for the solver oracle ----------------------------------------


def small_connected_graphs(max_elements: int = 8) -> list[SimpleGraph]:
    """All connected labelled graphs on 1..4 vertices with |V|+|E| at most the bound."""
    out = []
    for n in range(1, 5):
        pairs = list(combinations(range(n), 2))
        for m in range(0, len(pairs) + 1):
            if n + m > max_elements:
                break
            for es in combinations(pairs, m):
                adj = {v: set() for v in range(n)}
                for a, b in es:
                    adj[a].add(b)
                    adj[b].add(a)
                seen, stack = {0}, [0]
                while stack:
                    for w in adj[stack.pop()]:
                        if w not in seen:
                            seen.add(w)
                            stack.append(w)
                if len(seen) == n:
                    out.append(SimpleGraph(tuple(range(n)), tuple(sorted(edge_key(*e) for e in es))))
    return out


# -- the suites -----------------------------------------------------------------------


def charge_identity(seed: int, count: int = 1000) -> SuiteResult:
    corpus = generated(seed, count, 3, 40, forbid_four_fan=False, prefix="c")
    bad = []
    for e in corpus:
        init = initial_charges(e.graph)
        final, _ = apply_rules(e.graph, init)
        if init.total() != -8 or final.total() != -8:
            bad.append(e.name)
    return SuiteResult(1, "charge identity", not bad and count >= 1000,
                       f"{count} graphs, {len(bad)} with a total other than -8")


def rules_suite() -> SuiteResult:
    rows = rule_arithmetic()
    wrong = [f"{label}={obs}" for label, obs, want in rows if obs != want]
    return SuiteResult(2, "rule arithmetic", not wrong,
                       f"{len(rows)} fixtures exact" if not wrong else "mismatch: " + ", ".join(wrong))


def theorem_suite(seed: int, count: int = 200) -> SuiteResult:
    corpus = generated(seed, count, 9, 12, target_max_degree=8, prefix="t")
    bad = []
    for e in corpus:
        g = e.graph
        phi = solve(g, 9)
        if phi is None or verify_total_coloring(g, phi) or total_chromatic_number(g) < g.max_degree + 1:
            bad.append(e.name)
        elif g.max_degree != 8:
            bad.append(e.name)
    return SuiteResult(3, "theorem at desk scale", not bad and count >= 200,
                       f"{count} graphs with max degree 8 and no 4-fan, {len(bad)} failures")


def reducibility_suite(seed: int, samples: int = 500, classes: bool = False) -> SuiteResult:
    bad, modes = [], {}
    for name in FIXTURE_NAMES:
        r = check_fixture(name, fixture(name), samples=samples, seed=seed, classes=classes)
        modes[r.mode] = modes.get(r.mode, 0) + 1
        if not r.ok or r.samples < samples:
            bad.append(name)
    mix = ", ".join(f"{v} {k}" for k, v in sorted(modes.items()))
    return SuiteResult(4, "reducibility", not bad,
                       f"{len(FIXTURE_NAMES)} fixtures ({mix}), failing: {', '.join(bad) or 'none'}")


def audit_suite(seed: int, count: int = 400) -> SuiteResult:
    corpus = generated(seed, 200, 9, 12, target_max_degree=8, prefix="t")
    corpus += generated(seed + 1, count - 200, 4, 40, prefix="a")
    catalog = load_catalog()
    negative = unexplained = 0
    for e in corpus:
        r = audit(e.graph, catalog)
        negative += bool(r.negative)
        unexplained += r.verdict == "unexplained"
    ok = unexplained == 0 and negative == len(corpus)
    return SuiteResult(5, "audit property", ok,
                       f"{len(corpus)} graphs, {negative} with a negative bearer, {unexplained} unexplained")


def oracle_suite(seed: int, hosts: int = 60) -> SuiteResult:
    pats = [*load_catalog(), fan4_pattern()]
    graphs = [e.graph for e in generated(seed, hosts, 4, 10, forbid_four_fan=False, prefix="o")]
    graphs += [fixture(n).graph for n in FIXTURE_NAMES if fixture(n).graph.n <= 10]
    compared = 0
    disagree = []
    for gi, g in enumerate(graphs):
        for p in pats:
            compared += 1
            if match_configuration(p, g) != brute_force_matches(p, g):
                disagree.append(f"{p.id}@{gi}")
    small = small_connected_graphs(8)
    solver_bad = []
    for gi, g in enumerate(small):
        degs = [sum(v in e for e in g.edges) for v in g.vertices]
        for k in range(1, max(degs, default=0) + 3):
            if (solve(g, k) is not None) != any(True for _ in exhaustive_colorings(g, k)):
                solver_bad.append(f"{gi}/k={k}")
    ok = not disagree and not solver_bad
    return SuiteResult(6, "oracle equivalence", ok,
                       f"matcher {compared} pattern/host pairs, "
                       f"{len(disagree)} disagreements; solver {len(small)} graphs, {len(solver_bad)} disagreements")


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "charge": charge_identity,
    "rules": rules_suite,
    "theorem": theorem_suite,
    "reducibility": reducibility_suite,
    "audit": audit_suite,
    "oracle": oracle_suite,
}
