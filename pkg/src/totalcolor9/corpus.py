"""Seeded corpora of generated plane graphs and their manifests.

A manifest lists one graph per line::

    <name> <sha256 of the .rot text> <provenance>

Provenance is either ``gen n=.. cap=.. ...`` or ``fixture <name>``.
Checksums are taken over the LF-normalised serialisation.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path

from .embedding import PlanarEmbedding
from .fixtures import FIXTURE_NAMES, fixture
from .formats import parse_embedding, serialize_embedding
from .generator import GeneratorConfig, generate_planar
from .rng import SplitMix64


class ManifestError(ValueError):
    pass


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    graph: PlanarEmbedding
    provenance: str

    @property
    def text(self) -> str:
        return serialize_embedding(self.graph)

    @property
    def checksum(self) -> str:
        return sha256_text(self.text)


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.replace("\r\n", "\n").encode("utf-8")).hexdigest()


def generated(seed: int, count: int, n_min: int, n_max: int, *, cap: int = 8,
              forbid_four_fan: bool = True, p_deletes: tuple[float, ...] = (0.0, 0.1, 0.25),
              target_max_degree: int | None = None, prefix: str = "g") -> list[CorpusEntry]:
    """``count`` graphs; sizes and deletion rates cycle, per-graph seeds come from one stream."""
    rng = SplitMix64(seed)
    span = n_max - n_min + 1
    out = []
    for i in range(count):
        cfg = GeneratorConfig(n=n_min + i % span, cap=cap, forbid_four_fan=forbid_four_fan,
                              p_delete=p_deletes[i % len(p_deletes)], seed=rng.next_u64(),
                              target_max_degree=target_max_degree)
        out.append(CorpusEntry(f"{prefix}{i:05d}", generate_planar(cfg), "gen " + cfg.describe()))
    return out


def fixture_entries() -> list[CorpusEntry]:
    return [CorpusEntry(f"fx-{n}", fixture(n).graph, f"fixture {n}") for n in FIXTURE_NAMES]


def manifest_text(entries: list[CorpusEntry]) -> str:
    return "".join(f"{e.name} {e.checksum} {e.provenance}\n" for e in entries)


def write_corpus(entries: list[CorpusEntry], out: str | Path) -> Path:
    d = Path(out)
    d.mkdir(parents=True, exist_ok=True)
    for e in entries:
        (d / f"{e.name}.rot").write_text(e.text, encoding="utf-8", newline="\n")
    path = d / "MANIFEST"
    path.write_text(manifest_text(entries), encoding="utf-8", newline="\n")
    return path


def read_corpus(manifest: str | Path) -> list[CorpusEntry]:
    """Load every graph listed in a manifest, verifying checksums."""
    path = Path(manifest)
    out = []
    for lineno, ln in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not ln.strip() or ln.startswith("#"):
            continue
        parts = ln.split(" ", 2)
        if len(parts) != 3:
            raise ManifestError(f"line {lineno}: expected '<name> <sha256> <provenance>'")
        name, digest, prov = parts
        text = (path.parent / f"{name}.rot").read_text(encoding="utf-8")
        if sha256_text(text) != digest:
            raise ManifestError(f"line {lineno}: checksum mismatch for {name}")
        out.append(CorpusEntry(name, parse_embedding(text), prov))
    return out
