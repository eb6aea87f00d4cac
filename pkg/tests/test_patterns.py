from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from totalcolor9.fixtures import FIXTURE_NAMES, fixture
from totalcolor9.generator import GeneratorConfig, generate_planar
from totalcolor9.graphs import complete, cube, four_fan, icosahedron, star, wheel
from totalcolor9.patterns import (
    CATALOG_ORDER,
    PatternError,
    brute_force_matches,
    check_witness,
    contains_four_fan,
    fan4_pattern,
    format_pattern,
    load_catalog,
    match_configuration,
    parse_pattern,
    revalidate,
    structural_violations,
)

CAT = load_catalog()


def test_catalog_order_and_round_trip():
    assert [p.id for p in CAT] == list(CATALOG_ORDER)
    for p in CAT:
        p.validate_self()
        assert parse_pattern(format_pattern(p)) == p


@pytest.mark.parametrize("text", [
    "id x\nvertex a exact:3\nvertex a min:2\n",
    "id x\nvertex a exact:1\nvertex b min:1\nvertex c min:1\nedge a b\nedge a c\n",
    "id x\nvertex a bogus:3\n",
    "id x\nvertex a min:1\nedge a z\n",
])
def test_malformed_patterns_rejected(text):
    with pytest.raises(PatternError):
        p = parse_pattern(text)
        p.validate_self()


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_realises_its_pattern(name):
    fx = fixture(name)
    w = fx.witness(CAT)
    assert revalidate(CAT[fx.pattern], fx.graph, w)
    assert w in match_configuration(CAT[fx.pattern], fx.graph)


def test_min_deg_and_uv10_on_star():
    got = {(lem, str(w)) for lem, w in structural_violations(star(3))}
    assert ("lem:min-deg", "lem:min-deg: u=1") in got
    assert sum(lem == "lem:uv-10" for lem, _ in got) == 3


def test_no_violations_on_icosahedron():
    assert structural_violations(icosahedron()) == []


def test_fan4():
    assert contains_four_fan(four_fan()) is not None
    assert contains_four_fan(icosahedron()) is not None
    assert contains_four_fan(cube()) is None
    assert contains_four_fan(complete(4)) is None
    assert contains_four_fan(wheel(5)) is not None


def test_fan4_agrees_with_pattern():
    p = fan4_pattern()
    for g in (four_fan(), icosahedron(), cube(), wheel(5), wheel(4)):
        assert (contains_four_fan(g) is not None) == bool(match_configuration(p, g))


def test_check_witness_rejects_wrong_degree():
    p = CAT["lem:min-deg"]
    assert check_witness(p, star(3), {"u": 0}) is None
    assert check_witness(p, star(3), {"u": 1}) is not None


@settings(max_examples=40, deadline=None)
@given(n=st.integers(4, 10), seed=st.integers(0, 2**32), p=st.sampled_from([0.0, 0.15, 0.3]),
       fan=st.booleans())
def test_matcher_equals_brute_force(n, seed, p, fan):
    g = generate_planar(GeneratorConfig(n, seed=seed, p_delete=p, forbid_four_fan=fan))
    for pat in [*CAT, fan4_pattern()]:
        assert match_configuration(pat, g) == brute_force_matches(pat, g)


def test_witnesses_are_sorted_and_unique():
    g = fixture("8-two-diamonds").graph
    for p in CAT:
        ws = match_configuration(p, g)
        assert ws == sorted(set(ws), key=lambda w: w.images) or len(ws) <= 1
