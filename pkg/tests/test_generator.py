from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from totalcolor9.formats import serialize_embedding
from totalcolor9.generator import GenerationStalled, GeneratorConfig, generate_planar
from totalcolor9.patterns import contains_four_fan

DATA = Path(__file__).parent / "data"


def test_golden_output():
    g = generate_planar(GeneratorConfig(12, seed=20261016))
    assert serialize_embedding(g) == (DATA / "gen_n12_seed20261016.rot").read_text()


def test_small_triangulation_is_k4():
    g = generate_planar(GeneratorConfig(4, seed=3, forbid_four_fan=False))
    assert len(g.edges) == 6 and len(g.faces) == 4
    assert all(g.degree(v) == 3 for v in g.vertices)


def test_same_seed_same_graph():
    a = generate_planar(GeneratorConfig(30, seed=7, p_delete=0.2))
    b = generate_planar(GeneratorConfig(30, seed=7, p_delete=0.2))
    c = generate_planar(GeneratorConfig(30, seed=8, p_delete=0.2))
    assert a == b and a != c


@pytest.mark.parametrize("kw", [dict(n=2), dict(n=10, p_delete=1.5), dict(n=10, cap=6, target_max_degree=8)])
def test_bad_config(kw):
    with pytest.raises(ValueError):
        GeneratorConfig(**kw)


def test_unreachable_target_stalls():
    # four vertices cannot reach degree 8
    with pytest.raises(GenerationStalled):
        generate_planar(GeneratorConfig(4, seed=1, target_max_degree=8, attempts=3))


def test_target_degree_hit():
    g = generate_planar(GeneratorConfig(12, seed=5, target_max_degree=8))
    assert g.max_degree == 8 and contains_four_fan(g) is None


@settings(max_examples=60, deadline=None)
@given(n=st.integers(3, 40), seed=st.integers(0, 2**64 - 1), p=st.sampled_from([0.0, 0.1, 0.3]),
       cap=st.integers(4, 8))
def test_invariants(n, seed, p, cap):
    g = generate_planar(GeneratorConfig(n, cap=cap, seed=seed, p_delete=p))
    assert g.n == n
    assert g.max_degree <= cap
    assert contains_four_fan(g) is None
    # Euler for a connected plane graph
    assert g.n - len(g.edges) + len(g.faces) == 2
