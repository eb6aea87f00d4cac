"""Recoloring scripts, one per catalogued structure.

Each script first tries to color the target directly.  Only when the target
is blocked does it fix the label frame of the corresponding figure and walk
the case table.  Guards are written on labels, in the order the written
arguments test them; implicit inferences go through ``ctx.assume``.

Branches tagged ``repair:`` are not in the written argument: there the
recoloring it prescribes creates a conflict, and a second swap at a
neighbouring vertex is added so that the pair of swaps frees another label.
"""
from __future__ import annotations

from typing import Mapping

from .embedding import SimpleGraph, edge_key
from .extension import (
    LemmaScript,
    Move,
    Reduction,
    ScriptAssumptionFailed,
    ScriptCaseMiss,
    ScriptContext,
    TotalGraph,
    UnknownLemma,
)

# -- reductions ----------------------------------------------------------------------


def _minus_edge(a: str, b: str, uncolor: tuple[str, ...]):
    def reduce(tg: TotalGraph, n: Mapping[str, int]) -> Reduction:
        t = edge_key(n[a], n[b])
        g = SimpleGraph.of(tg.g).without(edges=[t])
        return Reduction(g, tuple(n[x] for x in uncolor), (t,), f"G-{a}{b}")
    return reduce


def _frame8(ctx: ScriptContext, named: Mapping[str, int], skip: tuple[str, ...] = (),
            center: str = "v", vlabel: int = 8, extra: Mapping | None = None) -> None:
    """Frame around ``center``: named spokes, remaining spokes ascending, leftover last."""
    fixed = {ctx[center]: vlabel}
    fixed.update({ctx.e(center, w): lab for w, lab in named.items()})
    if extra:
        fixed.update(extra)
    used = set(fixed.values())
    rest = ctx.others(center, [*named, *skip])
    labels = sorted(set(range(1, vlabel + 1)) - used)
    ctx.frame(fixed, [ctx.e(center, w) for w in rest], labels)


# -- lem:min-deg and lem:uv-10 ------------------------------------------------------------


def _reduce_min_deg(tg: TotalGraph, n: Mapping[str, int]) -> Reduction:
    u = n["u"]
    g = SimpleGraph.of(tg.g)
    if not tg.adj[u]:
        return Reduction(g.without(vertices=[u]), (u,), (u,), "G-u")
    (v,) = tg.adj[u]
    t = edge_key(u, v)
    return Reduction(g.without(edges=[t]), (u,), (t,), "G-uv")


def _run_first_free(ctx: ScriptContext) -> None:
    if ctx.target is None or isinstance(ctx.target, int):
        ctx.note("isolated")
        return
    if not ctx.direct():
        raise ScriptCaseMiss("no free color for the edge although d(u)+d(v) <= 9")


# -- lem:8-has-one-2 ---------------------------------------------------------------


def _has_one_2_shape(tg: TotalGraph, n: Mapping[str, int]) -> dict[str, int]:
    """Resolve names: x1, x2, y1, y2, and put an adjacent far end (if any) in y1."""
    v, x1, x2 = n["v"], n["x1"], n["x2"]
    y1 = n.get("y1", n.get("y"))
    y2 = n.get("y2", n.get("y"))
    if y2 in tg.adj[v] and y1 not in tg.adj[v]:
        x1, x2, y1, y2 = x2, x1, y2, y1
    return {"v": v, "x1": x1, "x2": x2, "y1": y1, "y2": y2}


def _reduce_has_one_2(tg: TotalGraph, n: Mapping[str, int]) -> Reduction:
    s = _has_one_2_shape(tg, n)
    v, x1, x2, y1, y2 = s["v"], s["x1"], s["x2"], s["y1"], s["y2"]
    g = SimpleGraph.of(tg.g)
    if y1 in tg.adj[v]:
        t = edge_key(v, x2)
        return Reduction(g.without(edges=[t]), (x1, x2), (t,), "G-vx2")
    if y1 == y2:
        red = g.without(vertices=[x1, x2]).plus_edges([(v, y1)])
        return Reduction(red, (x1, x2), (edge_key(v, x1),), "G-x1-x2+vy")
    red = g.without(vertices=[x1, x2]).plus_edges([(v, y1), (v, y2)])
    return Reduction(red, (x1, x2), (edge_key(v, x1),), "G-x1-x2+vy1+vy2")


def _run_has_one_2(ctx: ScriptContext) -> None:
    s = _has_one_2_shape(ctx.host, ctx.names)
    ctx.names.update(s)
    v, x1, x2, y1, y2 = (s[k] for k in ("v", "x1", "x2", "y1", "y2"))
    if y1 in ctx.host.adj[v]:
        ctx.note("vy1-edge")
        if ctx.direct():
            return
        c12 = ctx.raw(ctx.e("x1", "y1"))
        c22 = ctx.raw(ctx.e("x2", "y2"))
        if c12 == c22:
            old = ctx.raw(ctx.e("v", "y1"))
            ctx.note("same")
            ctx.step("swap", ctx.sw("y1", "x1", "v"))
            ctx.done("finish", Move.assign(ctx.target, old))
        else:
            old = ctx.raw(ctx.e("v", "x1"))
            ctx.note("different")
            ctx.done("recolor", Move.assign(ctx.e("v", "x1"), c22), Move.assign(ctx.target, old))
        return
    if y1 == y2:
        ctx.note("shared")
        c = ctx.raw_reduced(edge_key(v, y1))
        ctx.step("transfer", Move.assign(ctx.e("v", "x1"), c), Move.assign(ctx.e("x2", "y1"), c))
        for a, b in (("v", "x2"), ("x1", "y1")):
            edge = ctx.e(a, b)
            used = {ctx.raw(z) for z in ctx.host.partners(edge)}
            free = sorted(set(range(1, ctx.k + 1)) - used)
            ctx.assume(bool(free), f"{a}{b} has an available color")
            ctx.step("fill", Move.assign(edge, free[0]))
        ctx.note("filled")
        return
    ctx.note("distinct")
    c1 = ctx.raw_reduced(edge_key(v, y1))
    c2 = ctx.raw_reduced(edge_key(v, y2))
    ctx.done("transfer",
             Move.assign(ctx.e("v", "x2"), c1), Move.assign(ctx.e("x1", "y1"), c1),
             Move.assign(ctx.e("v", "x1"), c2), Move.assign(ctx.e("x2", "y2"), c2))


# -- lem:7-two-3s ----------------------------------------------------------------


def _run_7_adjacent(ctx: ScriptContext) -> None:
    if ctx.direct():
        return
    uext = ctx.ext("u", ["v", "x"])
    wext = ctx.ext("w", ["v", "x"])
    _frame8(ctx, {"w": 5, "x": 6}, skip=("u",), vlabel=7,
            extra={ctx.e("u", "x"): 8, ctx.e("u", uext): 9})
    a, b = ctx.c("x", "w"), ctx.c("w", wext)
    if 9 not in (a, b):
        return ctx.done("9-free", ctx.put("v", "w", 9), ctx.finish(5))
    if b != 8:
        ctx.assume(a != 8, "a != 8")
        return ctx.done("b!=8", ctx.put("v", "w", 8), ctx.finish(5))
    ctx.assume(a == 9 and b == 8, "a = 9 and b = 8")
    ctx.step("swap xv/xu", ctx.sw("x", "v", "u"))
    ctx.done("a=9,b=8", ctx.put("v", "w", 6), ctx.finish(5))


def _run_7_apart(ctx: ScriptContext) -> None:
    if ctx.direct():
        return
    uext = ctx.ext("u", ["v", "x"])
    wext = ctx.ext("w", ["v", "y"])
    _frame8(ctx, {"w": 5, "y": 4, "x": 6}, skip=("u",), vlabel=7,
            extra={ctx.e("u", "x"): 8, ctx.e("u", uext): 9})
    a, b = ctx.c("w", wext), ctx.c("w", "y")
    if 9 not in (a, b):
        return ctx.done("9-free", ctx.put("v", "w", 9), ctx.finish(5))
    if 8 not in (a, b):
        return ctx.done("8-free", ctx.put("v", "w", 8), ctx.finish(5))
    ctx.assume({a, b} == {8, 9}, "{a,b} = {8,9}")
    ctx.step("swap xv/xu", ctx.sw("x", "v", "u"))
    ctx.done("{a,b}={8,9}", ctx.put("v", "w", 6), ctx.finish(5))


# -- lem:8-2and3 -----------------------------------------------------------------


def _run_8_2and3_adjacent(ctx: ScriptContext) -> None:
    if ctx.direct():
        return
    wext = ctx.ext("w", ["v", "x"])
    _frame8(ctx, {"x": 7, "w": 6}, skip=("u",))
    a, b = ctx.c("w", wext), ctx.c("w", "x")
    if a != 9:
        ctx.assume(b != 9, "b != 9")
        return ctx.done("a!=9", ctx.put("v", "w", 9), ctx.finish(6))
    ctx.step("swap xv/xu", ctx.sw("x", "v", "u"))
    ctx.assume(b != 7, "b != 7")
    ctx.done("a=9", ctx.put("v", "w", 7), ctx.finish(6))


def _run_8_2and3_apart(ctx: ScriptContext) -> None:
    if ctx.direct():
        return
    wext = ctx.ext("w", ["v", "y"])
    _frame8(ctx, {"x": 7, "w": 6, "y": 5}, skip=("u",))
    a, b = ctx.c("w", wext), ctx.c("w", "y")
    if 9 not in (a, b):
        return ctx.done("9-free", ctx.put("v", "w", 9), ctx.finish(6))
    if 7 not in (a, b):
        ctx.step("swap xv/xu", ctx.sw("x", "v", "u"))
        return ctx.done("7-free", ctx.put("v", "w", 7), ctx.finish(6))
    ctx.assume({a, b} == {7, 9}, "{a,b} = {7,9}")
    if b == 9:
        ctx.step("swap yv/yw", ctx.sw("y", "v", "w"))
        return ctx.done("b=9", ctx.finish(5))
    ctx.step("swap yv/yw, xv/xu", ctx.sw("y", "v", "w"), ctx.sw("x", "v", "u"))
    ctx.done("b=7", ctx.finish(5))


# -- lem:8-diamond3-no2 ----------------------------------------------------------


def _run_diamond_no2(ctx: ScriptContext) -> None:
    if ctx.direct():
        return
    _frame8(ctx, {"x": 7, "w": 6, "y": 5}, skip=("u",))
    a, b = ctx.c("x", "w"), ctx.c("y", "w")
    if 9 not in (a, b):
        return ctx.done("9-free", ctx.put("v", "w", 9), ctx.finish(6))
    # the two sides are symmetric; orient so that the 9 sits on the X side
    X, Y, lx, ly = ("x", "y", 7, 5) if a == 9 else ("y", "x", 5, 7)
    ctx.note(f"9 on {X}w")
    bY = a if X == "y" else b
    if bY != lx:
        ctx.step("swap Xv/Xw", ctx.sw(X, "v", "w"))
        return ctx.done("other!=lx", ctx.finish(lx))
    ctx.step("swap Xv/Xw, Yv/Yw", ctx.sw(X, "v", "w"), ctx.sw(Y, "v", "w"))
    ctx.done("other=lx", ctx.finish(ly))


# -- lem:8-two-diamonds -----------------------------------------------------------


def _two_diamonds_w_side(ctx: ScriptContext, e: int, f: int) -> None:
    """Shared tail of both main cases: work on the s-w-p side."""
    if 9 not in (e, f):
        return ctx.done("vw:=9", ctx.put("v", "w", 9), ctx.finish(2))
    S, P = ctx.sw("s", "w", "v"), ctx.sw("p", "v", "w")
    if f != 9:
        if f != 1:
            ctx.step("swap sw/sv", S)
            return ctx.done("e=9", ctx.finish(1))
        # repair: the lone swap at s would put 1 twice on w; swapping at p too
        # leaves w with {1,3} and frees 3 at v
        ctx.step("swap sw/sv, pw/pv", S, P)
        return ctx.done("repair:e=9,f=1", ctx.finish(3))
    if e != 3:
        ctx.step("swap pv/pw", P)
        return ctx.done("f=9", ctx.finish(3))
    # repair: symmetric to the one above, now 1 is freed at v
    ctx.step("swap pv/pw, sw/sv", P, S)
    return ctx.done("repair:f=9,e=3", ctx.finish(1))


def _run_two_diamonds(ctx: ScriptContext) -> None:
    if ctx.direct():
        return
    _frame8(ctx, {"u": 6, "y": 7, "s": 1, "w": 2, "p": 3, "t": 4, "x": 5}, skip=("z",))
    r = ctx.ext("z", ["v", "y"])
    a, b = ctx.c("u", "x"), ctx.c("u", "y")
    c, d = ctx.c("y", "z"), ctx.c("z", r)
    e, f = ctx.c("s", "w"), ctx.c("w", "p")
    ctx.assume(9 in (c, d), "9 in {c,d}")
    if c == 9:
        if d in (1, 2, 3, 4):
            if 9 not in (a, b):
                return ctx.done("c=9,d<=4,vu:=9", ctx.put("v", "u", 9), ctx.finish(6))
            ctx.assume(a == 9, "a = 9")
            if b != 5:
                ctx.step("swap xu/xv", ctx.sw("x", "u", "v"))
                return ctx.done("c=9,d<=4,a=9", ctx.finish(5))
            # repair: u would see 5 twice; swapping at y as well frees 7
            ctx.step("swap xu/xv, yu/yv", ctx.sw("x", "u", "v"), ctx.sw("y", "u", "v"))
            return ctx.done("repair:c=9,a=9,b=5", ctx.finish(7))
        ctx.note("c=9,d>=5")
        return _two_diamonds_w_side(ctx, e, f)
    if c in (1, 2, 3, 4):
        if 9 not in (a, b):
            return ctx.done("d=9,c<=4,uv:=9", ctx.put("v", "u", 9), ctx.finish(6))
        if b != 9:
            if b != 5:
                ctx.step("swap xv/xu", ctx.sw("x", "v", "u"))
                return ctx.done("d=9,c<=4,a=9", ctx.finish(5))
            ctx.step("swap xv/xu, yv/yu", ctx.sw("x", "v", "u"), ctx.sw("y", "v", "u"))
            return ctx.done("repair:d=9,a=9,b=5", ctx.finish(7))
        if a != 7:
            ctx.step("swap yv/yu", ctx.sw("y", "v", "u"))
            return ctx.done("d=9,c<=4,b=9", ctx.finish(7))
        # repair: u would see 7 twice; swapping at x as well frees 5
        ctx.step("swap yv/yu, xv/xu", ctx.sw("y", "v", "u"), ctx.sw("x", "v", "u"))
        return ctx.done("repair:d=9,b=9,a=7", ctx.finish(5))
    ctx.note("d=9,c>=5")
    return _two_diamonds_w_side(ctx, e, f)


# -- lem:8-233383 ------------------------------------------------------------------


def _reduce_233383(i: int):
    unc = ("v1",) + tuple(f"v{j}" for j in range(3, i + 1))
    return _minus_edge("v", f"v{i}", unc)


def _run_233383(i: int):
    def run(ctx: ScriptContext) -> None:
        if ctx.direct():
            return
        named = {"v1": 2, "v2": 3, **{f"v{j}": j + 1 for j in range(3, i)}}
        _frame8(ctx, named, skip=(f"v{i}",))
        path = ["v", "v2", "v3"]
        for m in range(1, i - 2):
            path += [f"p{m}", f"v{m + 3}"]
        edges = [(path[j], path[j + 1]) for j in range(len(path) - 1)]
        col = [ctx.c(a, b) for a, b in edges]
        # a black 3-vertex on the path (or v1) without 9 takes 9 on its spoke
        c1 = ctx.c("v1", ctx.ext("v1", ["v", "v2"]))
        c2 = ctx.c("v1", "v2")
        if 9 not in (c1, c2):
            return ctx.done("v1 misses 9", ctx.put("v", "v1", 9), ctx.finish(2))
        for j in range(3, i):
            pair = (col[2 * j - 5], col[2 * j - 4])
            if 9 not in pair:
                return ctx.done(f"v{j} misses 9", ctx.put("v", f"v{j}", 9), ctx.finish(j + 1))
        ctx.assume(all(col[q] == 9 for q in range(1, len(col), 2)), "odd path edges carry 9")
        ctx.assume(c1 == 9, "c1 = 9")
        swaps: list[Move] = []
        for m in range(0, i - 3):
            swaps.append(Move.swap(ctx.e(*edges[2 * m]), ctx.e(*edges[2 * m + 1])))
            if col[2 * m + 2] != 3:
                ctx.step(f"swap {m + 1} pairs", *swaps)
                return ctx.done(f"even edge {2 * m + 2} != 3", ctx.finish(3))
        ctx.step("alternate path", ctx.alt(*path))
        ctx.done("all even edges 3", ctx.put("v", "v1", 3), ctx.finish(2))
    return run


# -- cfg:4a ------------------------------------------------------------------------


def _run_4a(ctx: ScriptContext) -> None:
    if ctx.direct():
        return
    _frame8(ctx, {"u": 4, "z": 5, "y": 6, "w": 7, "x": 1}, skip=("t",))
    a, b = ctx.c("x", "t"), ctx.c("t", "w")
    c, d = ctx.c("w", "y"), ctx.c("y", "p")
    e, f = ctx.c("p", "z"), ctx.c("z", "u")
    ctx.assume(9 in (a, b), "9 in {a,b}")
    X = ctx.sw("x", "v", "t")
    W = ctx.sw("w", "v", "t")
    if a == 9:
        if b == 1:
            if 9 not in (c, d):
                return ctx.done("1.1 vy:=9", ctx.put("v", "y", 9), ctx.finish(6))
            if 9 not in (e, f):
                return ctx.done("1.1 vz:=9", ctx.put("v", "z", 9), ctx.finish(5))
            if d != 7:
                ctx.step("swap x,w", X, W)
                return ctx.done("1.1 d!=7", ctx.put("v", "y", 7), ctx.finish(6))
            if f != 7:
                ctx.assume(e != 7, "e != 7")
                ctx.step("swap x,w", X, W)
                return ctx.done("1.1 f!=7", ctx.put("v", "z", 7), ctx.finish(5))
            ctx.assume(e == 9, "e = 9")
            ctx.step("swap x,w,u", X, W, ctx.sw("u", "v", "z"))
            return ctx.done("1.1 d=f=7", ctx.finish(4))
        if b == 6:
            if 9 not in (e, f):
                return ctx.done("1.2 vz:=9", ctx.put("v", "z", 9), ctx.finish(5))
            if 1 not in (e, f):
                ctx.step("swap x", X)
                return ctx.done("1.2 1-free", ctx.put("v", "z", 1), ctx.finish(5))
            if f == 9:
                ctx.step("swap u", ctx.sw("u", "v", "z"))
                return ctx.done("1.2 f=9", ctx.finish(4))
            ctx.step("swap u,x", ctx.sw("u", "v", "z"), X)
            return ctx.done("1.2 f=1", ctx.finish(4))
        if 9 not in (c, d):
            return ctx.done("1.3 vy:=9", ctx.put("v", "y", 9), ctx.finish(6))
        if 1 not in (c, d):
            ctx.step("swap x", X)
            return ctx.done("1.3 1-free", ctx.put("v", "y", 1), ctx.finish(6))
        if c == 9:
            ctx.step("swap wv/wy", ctx.sw("w", "v", "y"))
            return ctx.done("1.3 c=9", ctx.finish(7))
        ctx.step("swap wv/wy, x", ctx.sw("w", "v", "y"), X)
        return ctx.done("1.3 c=1", ctx.finish(7))
    if a == 6:
        if 9 not in (e, f):
            return ctx.done("2.1 vz:=9", ctx.put("v", "z", 9), ctx.finish(5))
        if 7 not in (e, f):
            ctx.step("swap w", W)
            return ctx.done("2.1 7-free", ctx.put("v", "z", 7), ctx.finish(5))
        if f == 9:
            ctx.step("swap u", ctx.sw("u", "v", "z"))
            return ctx.done("2.1 f=9", ctx.finish(4))
        ctx.step("swap u,w", ctx.sw("u", "v", "z"), W)
        return ctx.done("2.1 f=7", ctx.finish(4))
    if a == 7:
        if 9 not in (c, d):
            return ctx.done("2.2 vy:=9", ctx.put("v", "y", 9), ctx.finish(6))
        if 9 not in (e, f):
            return ctx.done("2.2 vz:=9", ctx.put("v", "z", 9), ctx.finish(5))
        ctx.assume(d == 9 and f == 9, "d = f = 9")
        if e != 4:
            ctx.step("swap u", ctx.sw("u", "v", "z"))
            return ctx.done("2.2 e!=4", ctx.finish(4))
        ctx.step("swap x,w", X, W)
        return ctx.done("2.2 e=4", ctx.put("v", "z", 1), ctx.finish(5))
    if 9 not in (c, d):
        return ctx.done("2.3 vy:=9", ctx.put("v", "y", 9), ctx.finish(6))
    ctx.assume(d == 9, "d = 9")
    ctx.step("swap w", W)
    ctx.done("2.3 d=9", ctx.put("v", "y", 7), ctx.finish(6))


# -- cfg:4b ------------------------------------------------------------------------


def _run_4b(ctx: ScriptContext) -> None:
    if ctx.direct():
        return
    _frame8(ctx, {"u": 4, "z": 5, "y": 6, "w": 7, "x": 1, "r": 3}, skip=("t",))
    a, b = ctx.c("x", "t"), ctx.c("t", "w")
    c, d = ctx.c("w", "y"), ctx.c("y", "p")
    e, f = ctx.c("p", "z"), ctx.c("z", "q")
    g, h = ctx.c("u", "q"), ctx.c("u", "r")
    ctx.assume(9 in (a, b), "9 in {a,b}")
    X = ctx.sw("x", "v", "t")
    W = ctx.sw("w", "v", "t")
    R = ctx.sw("r", "v", "u")
    if a == 9:
        if b == 1:
            if 9 not in (c, d):
                return ctx.done("1.1 vy:=9", ctx.put("v", "y", 9), ctx.finish(6))
            if 9 not in (e, f):
                return ctx.done("1.1 vz:=9", ctx.put("v", "z", 9), ctx.finish(5))
            if 9 not in (g, h):
                return ctx.done("1.1 vu:=9", ctx.put("v", "u", 9), ctx.finish(4))
            if d != 7:
                ctx.step("swap x,w", X, W)
                return ctx.done("1.1 d!=7", ctx.put("v", "y", 7), ctx.finish(6))
            if f != 7:
                ctx.assume(e != 7, "e != 7")
                ctx.step("swap x,w", X, W)
                return ctx.done("1.1 f!=7", ctx.put("v", "z", 7), ctx.finish(5))
            if h != 7:
                ctx.assume(g != 7, "g != 7")
                ctx.step("swap x,w", X, W)
                return ctx.done("1.1 h!=7", ctx.put("v", "u", 7), ctx.finish(4))
            ctx.assume(g == 9, "g = 9")
            ctx.step("swap x,w,r", X, W, R)
            return ctx.done("1.1 d=f=h=7", ctx.finish(3))
        if b == 6:
            if 9 not in (g, h):
                return ctx.done("1.2 vu:=9", ctx.put("v", "u", 9), ctx.finish(4))
            if 1 not in (g, h):
                ctx.step("swap x", X)
                return ctx.done("1.2 1-free", ctx.put("v", "u", 1), ctx.finish(4))
            if h == 9:
                ctx.step("swap r", R)
                return ctx.done("1.2 h=9", ctx.finish(3))
            ctx.step("swap r,x", R, X)
            return ctx.done("1.2 h=1", ctx.finish(3))
        if 9 not in (c, d):
            return ctx.done("1.3 vy:=9", ctx.put("v", "y", 9), ctx.finish(6))
        if 1 not in (c, d):
            ctx.step("swap x", X)
            return ctx.done("1.3 1-free", ctx.put("v", "y", 1), ctx.finish(6))
        if c == 9:
            ctx.step("swap wv/wy", ctx.sw("w", "v", "y"))
            return ctx.done("1.3 c=9", ctx.finish(7))
        ctx.step("swap wv/wy, x", ctx.sw("w", "v", "y"), X)
        return ctx.done("1.3 c=1", ctx.finish(7))
    if a == 6:
        if 9 not in (g, h):
            return ctx.done("2.1 vu:=9", ctx.put("v", "u", 9), ctx.finish(4))
        if 7 not in (g, h):
            ctx.step("swap w", W)
            return ctx.done("2.1 7-free", ctx.put("v", "u", 7), ctx.finish(4))
        if h == 9:
            ctx.step("swap r", R)
            return ctx.done("2.1 h=9", ctx.finish(3))
        ctx.step("swap r,w", R, W)
        return ctx.done("2.1 h=7", ctx.finish(3))
    if 9 not in (c, d):
        return ctx.done("2.2 vy:=9", ctx.put("v", "y", 9), ctx.finish(6))
    ctx.assume(d == 9, "d = 9")
    if a != 7:
        ctx.step("swap w", W)
        return ctx.done("2.2 a!=7", ctx.put("v", "y", 7), ctx.finish(6))
    if 9 not in (e, f):
        return ctx.done("2.2 vz:=9", ctx.put("v", "z", 9), ctx.finish(5))
    if 9 not in (g, h):
        return ctx.done("2.2 vu:=9", ctx.put("v", "u", 9), ctx.finish(4))
    ctx.assume(f == 9 and h == 9, "d = f = h = 9")
    if g != 3:
        ctx.step("swap r", R)
        return ctx.done("2.2 g!=3", ctx.finish(3))
    ctx.step("swap x,w", X, W)
    ctx.done("2.2 g=3", ctx.put("v", "u", 1), ctx.finish(4))


# -- cfg:4c ------------------------------------------------------------------------


def _run_4c(ctx: ScriptContext) -> None:
    if ctx.direct():
        return
    ctx.assume(ctx.restarts <= ctx.MAX_RESTARTS, "restart loop")
    _frame8(ctx, {"u": 6, "y": 7, "w": 1, "t": 2, "x": 5}, skip=("z",))
    text = ctx.ext("t", ["v", "w"])
    xext = ctx.ext("x", ["v", "u"])
    a, b = ctx.c("t", text), ctx.c("w", "t")
    c, d = ctx.c("w", "z"), ctx.c("z", "p")
    e, f = ctx.c("y", "p"), ctx.c("u", "y")
    g, h = ctx.c("u", "x"), ctx.c("x", xext)
    ctx.assume(9 in (c, d), "9 in {c,d}")
    U = ctx.sw("u", "v", "y")
    Wz = ctx.sw("w", "v", "z")
    P = ctx.sw("p", "y", "z")
    if c == 9:
        if d == 2:
            if 9 not in (e, f):
                return ctx.done("1.1 vy:=9", ctx.put("v", "y", 9), ctx.finish(7))
            if 1 not in (e, f):
                ctx.step("swap wv/wz", Wz)
                return ctx.done("1.1 1-free", ctx.put("v", "y", 1), ctx.finish(7))
            if f == 1:
                ctx.step("swap u,w", U, Wz)
                return ctx.done("1.1 f=1", ctx.finish(6))
            ctx.step("swap u", U)
            return ctx.done("1.1 f=9", ctx.finish(6))
        if 9 not in (a, b):
            return ctx.done("1.2 vt:=9", ctx.put("v", "t", 9), ctx.finish(2))
        ctx.assume(a == 9, "a = 9")
        if d != 1:
            ctx.step("swap wv/wz", Wz)
            return ctx.done("1.2 d!=1", ctx.put("v", "t", 1), ctx.finish(2))
        if 9 not in (e, f):
            return ctx.done("1.2 vy:=9", ctx.put("v", "y", 9), ctx.finish(7))
        if e == 9:
            if f != 1:
                ctx.step("swap p,w", P, Wz)
                return ctx.done("1.2 e=9,f!=1", ctx.put("v", "t", 1), ctx.finish(2))
            ctx.step("swap u, alternate ypzwv", U, ctx.alt("y", "p", "z", "w", "v"))
            return ctx.done("1.2 e=9,f=1", ctx.finish(6))
        if e != 6:
            ctx.step("swap u", U)
            return ctx.done("1.2 f=9,e!=6", ctx.finish(6))
        ctx.step("swap w,p", Wz, P)
        return ctx.done("1.2 f=9,e=6", ctx.put("v", "t", 1), ctx.finish(2))
    if c == 5:
        if 9 not in (e, f):
            return ctx.done("2.1 vy:=9", ctx.put("v", "y", 9), ctx.finish(7))
        if 9 not in (a, b):
            return ctx.done("2.1 vt:=9", ctx.put("v", "t", 9), ctx.finish(2))
        ctx.assume(f == 9, "f = 9")
        if e != 6:
            ctx.step("swap u", U)
            return ctx.done("2.1 e!=6", ctx.finish(6))
        if 6 not in (a, b):
            ctx.step("swap u,p", U, P)
            return ctx.done("2.1 6-free", ctx.put("v", "t", 6), ctx.finish(2))
        Wt = ctx.sw("w", "v", "t")
        if b == 6:
            ctx.step("swap w,u,p", Wt, U, P)
            return ctx.done("2.1 b=6", ctx.finish(1))
        ctx.step("swap wv/wt", Wt)
        return ctx.done("2.1 b=9", ctx.finish(1))
    if c == 6:
        if 9 not in (e, f):
            return ctx.done("2.2 vy:=9", ctx.put("v", "y", 9), ctx.finish(7))
        if 9 not in (g, h):
            return ctx.done("2.2 vx:=9", ctx.put("v", "x", 9), ctx.finish(5))
        ctx.assume(f == 9 and h == 9, "f = h = 9")
        if e != 6:
            ctx.note("2.2 e!=6 -> case 1")
            ctx.step("swap u", U)
        else:
            ctx.note("2.2 e=6 -> case 1")
            ctx.step("swap u,p,w", U, P, Wz)
        ctx.restarts += 1
        return _run_4c(ctx)
    if c == 7:
        if 9 not in (g, h):
            return ctx.done("2.3 vx:=9", ctx.put("v", "x", 9), ctx.finish(5))
        if f != 9:
            ctx.assume(e != 7, "e != 7")
            ctx.step("swap p", P)
            return ctx.done("2.3 f!=9", ctx.finish(9))
        ctx.assume(h == 9, "h = 9")
        if e != 6:
            ctx.step("swap u", U)
            return ctx.done("2.3 e!=6", ctx.finish(6))
        ctx.step("swap u,p", U, P)
        return ctx.done("2.3 e=6", ctx.put("v", "x", 6), ctx.finish(5))
    if 9 not in (e, f):
        return ctx.done("2.4 vy:=9", ctx.put("v", "y", 9), ctx.finish(7))
    if 9 not in (g, h):
        return ctx.done("2.4 vx:=9", ctx.put("v", "x", 9), ctx.finish(5))
    ctx.assume(f == 9 and h == 9, "f = h = 9")
    if e != 6:
        ctx.step("swap u", U)
        return ctx.done("2.4 e!=6", ctx.finish(6))
    ctx.step("swap u,p", U, P)
    ctx.done("2.4 e=6", ctx.put("v", "x", 6), ctx.finish(5))


# -- cfg:4d ------------------------------------------------------------------------


def _run_4d(ctx: ScriptContext) -> None:
    if ctx.direct():
        return
    _frame8(ctx, {"r": 6, "t": 7, "y": 1, "x": 3}, skip=("z",))
    xext = ctx.ext("x", ["v"])
    a = ctx.c("x", xext)
    b, c = ctx.c("z", "y"), ctx.c("z", "p")
    d, e = ctx.c("t", "p"), ctx.c("r", "t")
    ctx.assume(9 in (b, c), "9 in {b,c}")
    Y = ctx.sw("y", "v", "z")
    P = ctx.sw("p", "z", "t")
    R = ctx.sw("r", "v", "t")
    if b == 9:
        if c == 3:
            if 9 not in (d, e):
                return ctx.done("1.1 vt:=9", ctx.put("v", "t", 9), ctx.finish(7))
            if 1 not in (d, e):
                ctx.step("swap y", Y)
                return ctx.done("1.1 1-free", ctx.put("v", "t", 1), ctx.finish(7))
            if e == 9:
                ctx.step("swap r", R)
                return ctx.done("1.1 e=9", ctx.finish(6))
            ctx.step("swap y,p,r", Y, P, R)
            return ctx.done("1.1 e=1", ctx.finish(6))
        if a != 9:
            return ctx.done("1.2 vx:=9", ctx.put("v", "x", 9), ctx.finish(3))
        if c != 1:
            ctx.step("swap y", Y)
            return ctx.done("1.2 c!=1", ctx.put("v", "x", 1), ctx.finish(3))
        if 9 not in (d, e):
            return ctx.done("1.2 vt:=9", ctx.put("v", "t", 9), ctx.finish(7))
        if d == 9:
            if e != 1:
                ctx.step("swap y,p", Y, P)
                return ctx.done("1.2 d=9,e!=1", ctx.put("v", "x", 1), ctx.finish(3))
            ctx.step("swap r,y,p", R, Y, P)
            return ctx.done("1.2 d=9,e=1", ctx.finish(6))
        if d != 6:
            ctx.step("swap r", R)
            return ctx.done("1.2 e=9,d!=6", ctx.finish(6))
        ctx.step("swap p,y", P, Y)
        return ctx.done("1.2 e=9,d=6", ctx.put("v", "x", 1), ctx.finish(3))
    if b == 3:
        if 9 not in (d, e):
            return ctx.done("2.2 vt:=9", ctx.put("v", "t", 9), ctx.finish(7))
        ctx.assume(e == 9, "e = 9")
        if d != 6:
            ctx.step("swap r", R)
            return ctx.done("2.2 d!=6", ctx.finish(6))
        if a != 9:
            return ctx.done("2.2 a!=9", ctx.put("v", "x", 9), ctx.put("v", "t", 3), ctx.finish(7))
        ctx.step("swap r,p", R, P)
        return ctx.done("2.2 a=9", ctx.put("v", "x", 6), ctx.put("v", "t", 3), ctx.finish(7))
    if b == 7:
        if a != 9:
            return ctx.done("2.1 vx:=9", ctx.put("v", "x", 9), ctx.finish(3))
        if e != 9:
            ctx.assume(d != 7, "d != 7")
            ctx.step("swap p", P)
            return ctx.done("2.1 e!=9", ctx.finish(9))
        if d != 6:
            ctx.step("swap r", R)
            return ctx.done("2.1 d!=6", ctx.finish(6))
        ctx.step("swap r,p", R, P)
        return ctx.done("2.1 d=6", ctx.put("v", "x", 6), ctx.finish(3))
    if a != 9:
        return ctx.done("2.3 vx:=9", ctx.put("v", "x", 9), ctx.finish(3))
    if 9 not in (d, e):
        return ctx.done("2.3 vt:=9", ctx.put("v", "t", 9), ctx.finish(7))
    ctx.assume(e == 9, "e = 9")
    if d != 6:
        ctx.step("swap r", R)
        return ctx.done("2.3 d!=6", ctx.put("v", "x", 6), ctx.finish(3))
    path = ctx.alt("v", "r", "t", "p", "z")
    if b != 6:
        ctx.step("alternate vrtpz", path)
        return ctx.done("2.3 d=6,b!=6", ctx.put("v", "x", 6), ctx.finish(3))
    ctx.step("alternate vrtpz, swap y", path, Y)
    ctx.done("2.3 d=6,b=6", ctx.put("v", "x", 1), ctx.finish(3))


# -- cfg:4e ------------------------------------------------------------------------


def _run_4e(ctx: ScriptContext) -> None:
    if ctx.direct():
        return
    _frame8(ctx, {"w": 7, "y": 6, "t": 4, "z": 3}, skip=("u",))
    zext = ctx.ext("z", ["v", "t"])
    a, b = ctx.c("w", "x"), ctx.c("w", "y")
    c, d = ctx.c("z", "t"), ctx.c("z", zext)
    if b != 9:
        return ctx.done("b!=9", ctx.put("v", "w", 9), ctx.finish(7))
    Y = ctx.sw("y", "v", "w")
    X = ctx.sw("x", "u", "w")
    T = ctx.sw("t", "v", "z")
    if a != 6:
        ctx.step("swap y", Y)
        return ctx.done("a!=6", ctx.finish(6))
    if 9 not in (c, d):
        return ctx.done("vz:=9", ctx.put("v", "z", 9), ctx.finish(3))
    if c == 9:
        if d != 4:
            ctx.step("swap t", T)
            return ctx.done("c=9,d!=4", ctx.finish(4))
        ctx.step("swap y,x", Y, X)
        return ctx.done("c=9,d=4", ctx.put("v", "z", 6), ctx.finish(3))
    ctx.step("swap y,x", Y, X)
    if c != 6:
        return ctx.done("d=9,c!=6", ctx.put("v", "z", 6), ctx.finish(3))
    ctx.step("swap t", T)
    ctx.done("d=9,c=6", ctx.finish(4))


# -- registry ---------------------------------------------------------------------------

SCRIPTS: dict[str, LemmaScript] = {}


def _register(s: LemmaScript) -> None:
    for pid in s.patterns:
        SCRIPTS[pid] = s
    SCRIPTS.setdefault(s.lemma, s)


_register(LemmaScript("lem:min-deg", ("lem:min-deg",), _reduce_min_deg, _run_first_free))
_register(LemmaScript("lem:uv-10", ("lem:uv-10",), _minus_edge("u", "v", ("u",)), _run_first_free))
_register(LemmaScript("lem:8-has-one-2", ("lem:8-has-one-2[distinct]", "lem:8-has-one-2[shared]"),
                      _reduce_has_one_2, _run_has_one_2))
_register(LemmaScript("lem:7-two-3s", ("lem:7-two-3s[adjacent]",),
                      _minus_edge("u", "v", ("u", "w")), _run_7_adjacent))
SCRIPTS["lem:7-two-3s[apart]"] = LemmaScript("lem:7-two-3s", ("lem:7-two-3s[apart]",),
                                             _minus_edge("u", "v", ("u", "w")), _run_7_apart)
_register(LemmaScript("lem:8-2and3", ("lem:8-2and3[adjacent]",),
                      _minus_edge("u", "v", ("u", "w")), _run_8_2and3_adjacent))
SCRIPTS["lem:8-2and3[apart]"] = LemmaScript("lem:8-2and3", ("lem:8-2and3[apart]",),
                                            _minus_edge("u", "v", ("u", "w")), _run_8_2and3_apart)
_register(LemmaScript("lem:8-diamond3-no2", ("lem:8-diamond3-no2",),
                      _minus_edge("u", "v", ("u", "w")), _run_diamond_no2))
_register(LemmaScript("lem:8-two-diamonds", ("lem:8-two-diamonds",),
                      _minus_edge("v", "z", ("u", "w", "z")), _run_two_diamonds))
for _i in range(4, 8):
    SCRIPTS[f"lem:8-233383[i={_i}]"] = LemmaScript(
        "lem:8-233383", (f"lem:8-233383[i={_i}]",), _reduce_233383(_i), _run_233383(_i))
_register(LemmaScript("cfg:4a", ("cfg:4a",), _minus_edge("v", "t", ("t", "y", "z")), _run_4a))
_register(LemmaScript("cfg:4b", ("cfg:4b",), _minus_edge("v", "t", ("t", "y", "z", "u")), _run_4b))
_register(LemmaScript("cfg:4c", ("cfg:4c",), _minus_edge("v", "z", ("x", "y", "z", "t")), _run_4c))
_register(LemmaScript("cfg:4d", ("cfg:4d",), _minus_edge("v", "z", ("x", "z", "t")), _run_4d))
_register(LemmaScript("cfg:4e", ("cfg:4e",), _minus_edge("v", "u", ("w", "u", "z")), _run_4e))


def script_for(pid: str) -> LemmaScript:
    try:
        return SCRIPTS[pid]
    except KeyError:
        raise UnknownLemma(pid) from None
