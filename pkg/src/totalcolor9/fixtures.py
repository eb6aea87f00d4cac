"""Concrete host graphs for every scripted structure.

Each fixture is a straight-line drawing that follows the corresponding
figure: the central vertex sits at the origin, its neighbours on a fixed
octagon, and outer vertices wherever the drawing puts them.  Unnamed
vertices (leaves around the centre, far ends of black vertices) carry a
leading underscore and are not part of the witness.

White vertices whose drawn degree is below the pattern's minimum get
pendant neighbours.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .embedding import PlanarEmbedding
from .graphs import from_coordinates
from .patterns import Catalog, MatchWitness, check_witness, load_catalog

RING8 = [(1.5, .65), (1.5, -.65), (.65, -1.5), (-.65, -1.5),
         (-1.5, -.65), (-1.5, .65), (-.65, 1.5), (.65, 1.5)]


@dataclass(frozen=True)
class Fixture:
    pattern: str
    graph: PlanarEmbedding
    names: dict[str, int]

    def witness(self, catalog: Catalog | None = None) -> MatchWitness:
        cat = catalog or load_catalog()
        p = cat[self.pattern]
        mapping = {n: self.names[n] for n in p.names}
        faces = check_witness(p, self.graph, mapping)
        if faces is None:
            raise ValueError(f"fixture for {self.pattern} does not realise its pattern")
        return MatchWitness(p.id, tuple((n, mapping[n]) for n in p.names), faces)


def _build(pattern: str, points: dict[str, tuple[float, float]],
           edges: Iterable[tuple[str, str]]) -> Fixture:
    order = sorted(points, key=lambda s: (s.startswith("_"), s))
    ids = {name: i for i, name in enumerate(order)}
    g = from_coordinates({ids[n]: points[n] for n in order}, [(ids[a], ids[b]) for a, b in edges])
    return Fixture(pattern, g, ids)


def _hub(points: dict[str, tuple[float, float]], ring: list[str | None],
         extra: Iterable[tuple[str, str]], pattern: str,
         coords: list[tuple[float, float]] = RING8) -> Fixture:
    """Centre ``v`` joined to every ring slot; ``None`` slots become leaves."""
    pts = {"v": (0.0, 0.0), **points}
    edges = list(extra)
    for i, (name, xy) in enumerate(zip(ring, coords)):
        nm = name or f"_l{i}"
        pts.setdefault(nm, xy)
        edges.append(("v", nm))
    return _build(pattern, pts, edges)


def _min_deg() -> Fixture:
    return _build("lem:min-deg", {"u": (0, 0), "v": (1, 0)}, [("u", "v")])


def _uv10() -> Fixture:
    return _build("lem:uv-10", {"u": (0, 0), "v": (1, 0), "_w": (2, 0)}, [("u", "v"), ("v", "_w")])


def _has_one_2(kind: str) -> Fixture:
    if kind == "shared":
        return _hub({"y": (3, 0)}, ["x1", "x2", None, None, None, None, None, None],
                    [("x1", "y"), ("x2", "y")], "lem:8-has-one-2[shared]")
    if kind == "distinct":
        return _hub({"y1": (3, 1.3), "y2": (3, -1.3)}, ["x1", "x2", None, None, None, None, None, None],
                    [("x1", "y1"), ("x2", "y2")], "lem:8-has-one-2[distinct]")
    # y1 is itself a neighbour of v
    return _hub({"y2": (1.5, -2.6)}, ["x1", None, "x2", None, None, None, None, "y1"],
                [("x1", "y1"), ("x2", "y2")], "lem:8-has-one-2[distinct]")


RING7 = [(.75, -1.25), (-.75, -1.25), (-1.5, -.25), (-1.25, 1), (0, 1.5), (1.25, 1), (1.5, -.25)]


def _seven(kind: str) -> Fixture:
    if kind == "adjacent":
        return _hub({"_ue": (1, 2), "_we": (1.5, -2)}, ["w", None, None, None, None, "u", "x"],
                    [("x", "u"), ("x", "w"), ("u", "_ue"), ("w", "_we")],
                    "lem:7-two-3s[adjacent]", RING7)
    return _hub({"_ue": (1, 2), "_we": (2, -1.75)}, ["w", "y", None, None, None, "u", "x"],
                [("x", "u"), ("w", "y"), ("u", "_ue"), ("w", "_we")], "lem:7-two-3s[apart]", RING7)


def _two_and_three(kind: str) -> Fixture:
    if kind == "adjacent":
        return _hub({"_we": (1.85, -2)}, ["u", "x", "w", None, None, None, None, None],
                    [("u", "x"), ("x", "w"), ("w", "_we")], "lem:8-2and3[adjacent]")
    return _hub({"_we": (1.85, -2)}, ["u", "x", "w", "y", None, None, None, None],
                [("u", "x"), ("w", "y"), ("w", "_we")], "lem:8-2and3[apart]")


def _diamond_no2() -> Fixture:
    # x and y are drawn with two edges; the pattern wants three, so each gets a pendant
    return _hub({"_ue": (2.5, .65), "_xp": (2.6, -1.2), "_yp": (-1.2, -2.6)},
                ["u", "x", "w", "y", None, None, None, None],
                [("u", "_ue"), ("x", "w"), ("w", "y"), ("x", "_xp"), ("y", "_yp")],
                "lem:8-diamond3-no2")


def _two_diamonds() -> Fixture:
    return _hub({"_r": (1.7, -2)}, ["u", "y", "z", "s", "w", "p", "t", "x"],
                [("u", "y"), ("y", "z"), ("s", "w"), ("w", "p"), ("p", "t"), ("x", "u"), ("z", "_r")],
                "lem:8-two-diamonds")


def _chain(i: int) -> Fixture:
    ring: list[str | None] = ["v2", *[f"v{j}" for j in range(3, i + 1)]]
    ring += [None] * (7 - len(ring)) + ["v1"]
    pts: dict[str, tuple[float, float]] = {"_v1e": (1, 2.5)}
    edges = [("v1", "_v1e"), ("v1", "v2"), ("v2", "v3")]
    for m in range(1, i - 2):
        a, b = RING8[m], RING8[m + 1]          # slots of v_{m+2} and v_{m+3}
        pts[f"p{m}"] = (1.4 * (a[0] + b[0]), 1.4 * (a[1] + b[1]))
        edges += [(f"v{m + 2}", f"p{m}"), (f"p{m}", f"v{m + 3}")]
    return _hub(pts, ring, edges, f"lem:8-233383[i={i}]")


def _cfg(which: str) -> Fixture:
    if which == "4a":
        return _hub({"p": (2, -2)}, ["u", "z", "y", "w", "t", "x", None, None],
                    [("x", "t"), ("t", "w"), ("w", "y"), ("y", "p"), ("p", "z"), ("z", "u")], "cfg:4a")
    if which == "4b":
        return _hub({"p": (2, -2), "q": (2.6, 0)}, ["u", "z", "y", "w", "t", "x", None, "r"],
                    [("x", "t"), ("t", "w"), ("w", "y"), ("y", "p"), ("p", "z"), ("z", "q"),
                     ("q", "u"), ("u", "r")], "cfg:4b")
    if which == "4c":
        return _hub({"p": (2, -2), "_te": (-2, -1.8), "_xe": (1, 2.5)},
                    ["u", "y", "z", "w", "t", None, None, "x"],
                    [("x", "u"), ("u", "y"), ("y", "p"), ("p", "z"), ("z", "w"), ("w", "t"),
                     ("t", "_te"), ("x", "_xe")], "cfg:4c")
    if which == "4d":
        return _hub({"p": (2, -2), "_xe": (-1.6, 1.8)}, ["r", "t", "z", "y", None, "x", None, None],
                    [("r", "t"), ("t", "p"), ("p", "z"), ("z", "y"), ("x", "_xe")], "cfg:4d")
    if which == "4e":
        ring = [(1, .45), *RING8[1:]]
        return _hub({"x": (1.8, .8), "_ze": (-1.6, 1.8)}, ["u", "w", "y", None, "t", "z", None, None],
                    [("u", "x"), ("x", "w"), ("w", "y"), ("z", "t"), ("z", "_ze")], "cfg:4e", ring)
    raise KeyError(which)


_BUILDERS = {
    "min-deg": _min_deg,
    "uv-10": _uv10,
    "8-has-one-2-distinct": lambda: _has_one_2("distinct"),
    "8-has-one-2-shared": lambda: _has_one_2("shared"),
    "8-has-one-2-adjacent": lambda: _has_one_2("adjacent"),
    "7-two-3s-adjacent": lambda: _seven("adjacent"),
    "7-two-3s-apart": lambda: _seven("apart"),
    "8-2and3-adjacent": lambda: _two_and_three("adjacent"),
    "8-2and3-apart": lambda: _two_and_three("apart"),
    "8-diamond3-no2": _diamond_no2,
    "8-two-diamonds": _two_diamonds,
    **{f"8-233383-i{i}": (lambda i=i: _chain(i)) for i in range(4, 8)},
    **{f"cfg-{w}": (lambda w=w: _cfg(w)) for w in ("4a", "4b", "4c", "4d", "4e")},
}

FIXTURE_NAMES = tuple(_BUILDERS)


@lru_cache(maxsize=None)
def fixture(name: str) -> Fixture:
    return _BUILDERS[name]()


def all_fixtures() -> list[tuple[str, Fixture]]:
    return [(n, fixture(n)) for n in FIXTURE_NAMES]


def serialize_names(fx: Fixture) -> str:
    return "".join(f"{n} {i}\n" for n, i in sorted(fx.names.items(), key=lambda kv: kv[1])
                   if not n.startswith("_"))
