from __future__ import annotations

import pytest

from totalcolor9.coloring import TotalColoring, solve, verify_total_coloring
from totalcolor9.extension import (
    ElementAlreadyColored,
    InapplicableMove,
    LemmaScript,
    Move,
    NotSmallVertex,
    Reduction,
    ScriptMoveInvalid,
    TotalGraph,
    apply_moves,
    available_colors,
    fmt_element,
    greedy_finish_small,
    parse_element,
    reduce_and_extend,
    run_extension,
    search_extension,
)
from totalcolor9.embedding import SimpleGraph
from totalcolor9.fixtures import FIXTURE_NAMES, fixture
from totalcolor9.graphs import cycle, path, star
from totalcolor9.patterns import load_catalog
from totalcolor9.scripts import SCRIPTS, script_for

CAT = load_catalog()


def test_element_tokens_round_trip():
    for x in (0, 17, (2, 5)):
        assert parse_element(fmt_element(x)) == x
    assert parse_element("e:5-2") == (2, 5)
    with pytest.raises(ValueError):
        parse_element("q:1")


@pytest.mark.parametrize("m", [Move.assign((0, 1), 3), Move.uncolor(0, (0, 1)), Move.swap(1, (1, 2)),
                               Move.alternate([(0, 1), (1, 2), (2, 3)])])
def test_move_text_round_trip(m):
    assert Move.parse(str(m)) == m


def test_swap_and_conflict_report():
    g = path(3)
    phi = TotalColoring(4, {0: 1, 1: 2, 2: 1, (0, 1): 3, (1, 2): 4})
    out, bad = apply_moves(g, phi, [Move.swap(0, (0, 1))])
    assert out[0] == 3 and out[(0, 1)] == 1 and not bad
    out, bad = apply_moves(g, phi, [Move.swap(0, (1, 2))])
    assert [str(v) for v in bad] == ["e1-2 and v2 share color 1"]
    assert phi[0] == 1          # value semantics


def test_alternate_requires_two_colored_chain():
    g = path(4)
    phi = TotalColoring(5, {(0, 1): 1, (1, 2): 2, (2, 3): 1})
    out, bad = apply_moves(g, phi, [Move.alternate([(0, 1), (1, 2), (2, 3)])])
    assert [out[e] for e in [(0, 1), (1, 2), (2, 3)]] == [2, 1, 2] and not bad
    with pytest.raises(InapplicableMove):
        apply_moves(g, phi.with_colors({(2, 3): 3}), [Move.alternate([(0, 1), (1, 2), (2, 3)])])


def test_moves_on_missing_elements_rejected():
    with pytest.raises(InapplicableMove):
        apply_moves(path(2), TotalColoring(3, {}), [Move.assign((0, 5), 1)])
    with pytest.raises(InapplicableMove):
        apply_moves(path(2), TotalColoring(3, {}), [Move.assign(0, 4)])


def test_available_colors():
    g = star(3)
    phi = TotalColoring(5, {0: 1, (0, 1): 2, (0, 2): 3})
    assert available_colors(g, phi, (0, 3)) == {4, 5}
    with pytest.raises(ElementAlreadyColored):
        available_colors(g, phi, 0)


def test_greedy_finish_small():
    g = star(3)
    phi = solve(g, 4)
    partial = TotalColoring(4, {x: c for x, c in phi.colors.items() if x not in (1, 2)})
    done = greedy_finish_small(g, partial, 4)
    assert verify_total_coloring(g, done) == []
    with pytest.raises(NotSmallVertex):
        greedy_finish_small(g, TotalColoring(4, {}), 4)


def test_search_extension_completes_edge():
    g = cycle(6)
    phi = solve(g, 4)
    e = g.edges[0]
    partial = TotalColoring(4, {x: c for x, c in phi.colors.items() if x != e})
    done = search_extension(g, partial, 4)
    assert done is not None and verify_total_coloring(g, done) == []


def test_every_catalogued_pattern_has_a_script():
    for p in CAT:
        assert script_for(p.id).reduce is not None
    assert set(SCRIPTS) >= {p.id for p in CAT}


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_extends_from_solver_coloring(name):
    fx = fixture(name)
    w = fx.witness(CAT)
    phi = reduce_and_extend(fx.graph, fx.pattern, w)
    assert phi.k == 9 and verify_total_coloring(fx.graph, phi) == []


def test_invalid_script_move_is_caught():
    def reduce(tg: TotalGraph, n) -> Reduction:
        t = (n["u"], n["v"]) if n["u"] < n["v"] else (n["v"], n["u"])
        return Reduction(SimpleGraph.of(tg.g).without(edges=[t]), (), (t,))

    def run(ctx) -> None:
        # give the missing edge the color of one of its endpoints
        ctx.step("bad", Move.assign(ctx.target, ctx.raw(ctx["u"])))

    bogus = LemmaScript("lem:bogus", ("lem:bogus",), reduce, run)
    g = path(3)
    with pytest.raises(ScriptMoveInvalid):
        run_extension(g, bogus, {"u": 0, "v": 1}, k=9)


def test_log_lines_are_parsable():
    fx = fixture("cfg-4a")
    res = run_extension(fx.graph, script_for("cfg:4a"), fx.witness(CAT).as_dict())
    lines = res.log_lines()
    assert lines[0].startswith("branch ")
    for ln in lines[1:]:
        _, move = ln.split(" ", 1)
        Move.parse(move)
