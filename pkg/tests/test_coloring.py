from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from totalcolor9 import kernels
from totalcolor9.coloring import (
    ColorOutOfRange,
    ConflictIndex,
    InstanceTooLarge,
    SearchLimitExceeded,
    TotalColoring,
    exhaustive_colorings,
    parse_coloring,
    serialize_coloring,
    solve,
    total_chromatic_number,
    verify_total_coloring,
)
from totalcolor9.embedding import ParseError, SimpleGraph
from totalcolor9.generator import GeneratorConfig, generate_planar
from totalcolor9.graphs import complete, cube, cycle, path, star, wheel
from totalcolor9.suites import small_connected_graphs


@pytest.mark.parametrize("g, chi", [
    (path(2), 3), (path(3), 3), (complete(3), 3), (complete(4), 5),
    (cycle(4), 4), (cycle(5), 4), (cycle(6), 3), (star(3), 4), (cube(), 4), (wheel(5), 6),
])
def test_total_chromatic_numbers(g, chi):
    assert total_chromatic_number(g) == chi


def test_k4_needs_five():
    assert solve(complete(4), 4) is None
    phi = solve(complete(4), 5)
    assert phi is not None and verify_total_coloring(complete(4), phi) == []


def test_verify_reports_conflicts():
    g = complete(3)
    phi = solve(g, 3)
    bad = phi.with_colors({0: phi[1]})
    out = verify_total_coloring(g, bad)
    assert out and all(v.color == phi[1] for v in out)


def test_verify_flags_missing_and_range():
    g = path(2)
    with pytest.raises(ValueError):
        verify_total_coloring(g, TotalColoring(3, {0: 1, 1: 2}))
    assert verify_total_coloring(g, TotalColoring(3, {0: 1, 1: 2}), partial=True) == []
    with pytest.raises(ColorOutOfRange):
        verify_total_coloring(g, TotalColoring(3, {0: 1, 1: 2, (0, 1): 4}))


def test_solve_extends_partial():
    g = cube()
    part = TotalColoring(4, {0: 4, (0, 1): 1})
    phi = solve(g, 4, part)
    assert phi is not None and phi[0] == 4 and phi[(0, 1)] == 1
    assert verify_total_coloring(g, phi) == []


def test_solve_rejects_improper_partial():
    assert solve(path(2), 3, TotalColoring(3, {0: 1, 1: 1})) is None


def test_solver_is_deterministic():
    g = wheel(5)
    assert solve(g, 6) == solve(g, 6)


@pytest.mark.parametrize("g", small_connected_graphs(8), ids=lambda g: f"{len(g.vertices)}v{len(g.edges)}e")
def test_solver_matches_enumeration(g):
    degs = [sum(v in e for e in g.edges) for v in g.vertices]
    for k in range(1, max(degs, default=0) + 3):
        sols = list(exhaustive_colorings(g, k))
        phi = solve(g, k)
        assert (phi is not None) == bool(sols)
        if phi is not None:
            assert phi in sols


def test_enumeration_guard():
    with pytest.raises(InstanceTooLarge):
        list(exhaustive_colorings(complete(4), 5))


def test_chromatic_guard():
    big = generate_planar(GeneratorConfig(40, seed=3))
    with pytest.raises(InstanceTooLarge):
        total_chromatic_number(big)


def test_coloring_format_round_trip():
    phi = solve(cube(), 4)
    text = serialize_coloring(phi)
    assert parse_coloring(text) == phi
    assert serialize_coloring(parse_coloring(text)) == text


@pytest.mark.parametrize("text, kind", [
    ("", "Empty"), ("k\n", "BadHeader"), ("3\nv 0\n", "BadLine"),
    ("3\ne 2 1 1\n", "EdgeOrder"), ("3\nv 0 1\nv 0 2\n", "Duplicate"),
])
def test_coloring_parse_errors(text, kind):
    with pytest.raises(ParseError) as ei:
        parse_coloring(text)
    assert ei.value.kind == kind


def test_simple_graph_input():
    g = SimpleGraph((0, 1, 2, 5), ((0, 1), (1, 2), (2, 5)))
    phi = solve(g, 3)
    assert phi is not None and verify_total_coloring(g, phi) == []


@pytest.mark.skipif(not kernels.compiled_available(), reason="compiled kernel not built")
@settings(max_examples=40, deadline=None)
@given(n=st.integers(4, 16), seed=st.integers(0, 2**32), extra=st.integers(0, 2))
def test_backends_agree(n, seed, extra):
    g = generate_planar(GeneratorConfig(n, seed=seed, p_delete=0.2))
    idx = ConflictIndex(g)
    k = g.max_degree + 1 + extra

    def run():
        try:
            return idx.solve(k, node_limit=5000)
        except SearchLimitExceeded:
            return "limit"

    prev = kernels.use("python")
    try:
        a = run()
        kernels.use("cython")
        b = run()
    finally:
        kernels.use(prev)
    assert a == b


def test_backend_switch_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.use("fortran")
