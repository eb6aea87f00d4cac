from __future__ import annotations

import pytest

from totalcolor9.coloring import TotalColoring, exhaustive_colorings, verify_total_coloring
from totalcolor9.embedding import SimpleGraph
from totalcolor9.extension import TotalGraph
from totalcolor9.fixtures import FIXTURE_NAMES, fixture
from totalcolor9.reducibility import _lower_bound, check_fixture, iter_colorings, random_coloring
from totalcolor9.rng import SplitMix64

# class walks that finish within a few seconds; the rest run under -m slow
QUICK_CLASSES = ["8-has-one-2-distinct", "8-has-one-2-shared", "8-has-one-2-adjacent",
                 "7-two-3s-adjacent", "7-two-3s-apart", "8-2and3-adjacent", "8-2and3-apart",
                 "8-diamond3-no2", "8-233383-i4", "cfg-4e"]
SLOW_CLASSES = ["8-two-diamonds", "8-233383-i5"]


def _small():
    g = SimpleGraph((0, 1, 2, 3), ((0, 1), (1, 2), (1, 3)))
    tg = TotalGraph(g)
    return g, tg, tg.elements()


def test_iter_colorings_matches_enumeration():
    g, tg, dom = _small()
    for k in (4, 5):
        ours = {tuple(sorted(c.items(), key=repr)) for c in iter_colorings(tg, dom, k)}
        ref = {tuple(sorted(c.colors.items(), key=repr)) for c in exhaustive_colorings(g, k)}
        assert ours == ref


def test_lower_bound_is_a_lower_bound():
    g, tg, dom = _small()
    for k in (4, 5, 6):
        assert _lower_bound(tg, dom, k, 10**9) <= sum(1 for _ in iter_colorings(tg, dom, k))


def test_random_coloring_is_proper_and_seeded():
    g = fixture("cfg-4a").graph
    tg = TotalGraph(g)
    dom = tg.elements()
    a = random_coloring(tg, dom, 9, SplitMix64(5), first=tg.partners(dom[0]))
    b = random_coloring(tg, dom, 9, SplitMix64(5), first=tg.partners(dom[0]))
    assert a == b
    assert verify_total_coloring(g, TotalColoring(9, a)) == []


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_samples_extend(name):
    r = check_fixture(name, fixture(name), samples=100, seed=1, classes=False)
    assert r.ok, [f.error for f in r.failures[:3]]
    assert r.samples == 100


@pytest.mark.parametrize("name", ["min-deg", "uv-10"])
def test_small_fixtures_are_enumerated(name):
    r = check_fixture(name, fixture(name), samples=10)
    assert r.mode == "full" and r.runs > 0 and r.ok


@pytest.mark.parametrize("name", QUICK_CLASSES)
def test_class_walk(name):
    r = check_fixture(name, fixture(name), samples=0)
    assert r.mode == "classes" and r.ok, [f.error for f in r.failures[:3]]


@pytest.mark.slow
@pytest.mark.parametrize("name", SLOW_CLASSES)
def test_class_walk_slow(name):
    r = check_fixture(name, fixture(name), samples=0)
    assert r.mode == "classes" and r.ok, [f.error for f in r.failures[:3]]
