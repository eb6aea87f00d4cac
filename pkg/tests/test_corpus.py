from __future__ import annotations

import pytest

from totalcolor9.corpus import (
    ManifestError,
    fixture_entries,
    generated,
    manifest_text,
    read_corpus,
    sha256_text,
    write_corpus,
)


def test_round_trip(tmp_path):
    es = generated(11, 6, 5, 9) + fixture_entries()[:2]
    path = write_corpus(es, tmp_path)
    back = read_corpus(path)
    assert [(e.name, e.graph, e.provenance) for e in back] == [(e.name, e.graph, e.provenance) for e in es]
    assert manifest_text(back) == path.read_text()


def test_generated_is_seeded():
    a = manifest_text(generated(3, 5, 6, 10))
    assert a == manifest_text(generated(3, 5, 6, 10))
    assert a != manifest_text(generated(4, 5, 6, 10))
    assert [ln.split()[3] for ln in a.splitlines()] == [f"n={n}" for n in (6, 7, 8, 9, 10)]


def test_checksum_mismatch(tmp_path):
    es = generated(1, 2, 6, 6)
    path = write_corpus(es, tmp_path)
    rot = tmp_path / f"{es[0].name}.rot"
    rot.write_text(rot.read_text() + "\n")
    with pytest.raises(ManifestError, match="checksum"):
        read_corpus(path)


def test_malformed_manifest(tmp_path):
    (tmp_path / "MANIFEST").write_text("lonely\n")
    with pytest.raises(ManifestError):
        read_corpus(tmp_path / "MANIFEST")


def test_crlf_checksum():
    assert sha256_text("a\r\nb\n") == sha256_text("a\nb\n")
