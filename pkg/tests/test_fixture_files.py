from __future__ import annotations

from importlib import resources

import pytest

from totalcolor9.fixtures import FIXTURE_NAMES, fixture, serialize_names
from totalcolor9.formats import parse_embedding

ROOT = resources.files("totalcolor9") / "data" / "fixtures"


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_shipped_files_match_builders(name):
    fx = fixture(name)
    rot = (ROOT / f"{name}.rot").read_text()
    assert rot.splitlines()[0] == f"# {fx.pattern}"
    assert parse_embedding(rot) == fx.graph
    assert (ROOT / f"{name}.names").read_text() == serialize_names(fx)
