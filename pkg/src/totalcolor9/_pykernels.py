"""Pure-Python backtracking kernel (reference and fallback for ``_ckernels``).

The conflict graph is given in CSR form over element indices ``0..n-1``.
Both backends implement exactly the same search so that their outputs are
identical, not merely equally valid.
"""
from __future__ import annotations

import sys

BACKEND = "python"


def dsatur_solve(n, indptr, indices, k, init, symmetry, node_limit=0):
    """Find a proper coloring with colors ``1..k`` extending ``init``.

    Branching picks the uncolored element with the fewest available colors
    (ties: lowest index); colors are tried in ascending order.  With
    ``symmetry`` set, a color may only be used if every smaller color is
    already in use somewhere.  ``node_limit`` > 0 bounds the number of
    search nodes.

    Returns ``(colors, nodes)`` where ``colors`` is a list (index ``i`` holds
    the color of element ``i``) or ``None`` when no extension exists, and
    ``-1`` for ``colors`` when the node limit was hit.
    """
    color = [0] * n
    cnt = [[0] * (k + 1) for _ in range(n)]
    dom = [k] * n
    maxc = 0
    for e in range(n):
        c = init[e]
        if c:
            if c < 1 or c > k:
                return None, 0
            for j in range(indptr[e], indptr[e + 1]):
                if color[indices[j]] == c:
                    return None, 0
            color[e] = c
            if c > maxc:
                maxc = c
            for j in range(indptr[e], indptr[e + 1]):
                nb = indices[j]
                cnt[nb][c] += 1
                if cnt[nb][c] == 1:
                    dom[nb] -= 1
    for e in range(n):
        if color[e] == 0 and dom[e] == 0:
            return None, 0
    remaining = sum(1 for e in range(n) if color[e] == 0)
    state = {"nodes": 0, "maxc": maxc, "abort": False}

    def assign(e, c):
        color[e] = c
        ok = True
        for j in range(indptr[e], indptr[e + 1]):
            nb = indices[j]
            cnt[nb][c] += 1
            if cnt[nb][c] == 1:
                dom[nb] -= 1
                if dom[nb] == 0 and color[nb] == 0:
                    ok = False
        return ok

    def unassign(e, c):
        color[e] = 0
        for j in range(indptr[e], indptr[e + 1]):
            nb = indices[j]
            cnt[nb][c] -= 1
            if cnt[nb][c] == 0:
                dom[nb] += 1

    def search(left):
        if left == 0:
            return True
        state["nodes"] += 1
        if node_limit and state["nodes"] > node_limit:
            state["abort"] = True
            return False
        best = -1
        bestd = k + 1
        for e in range(n):
            if color[e] == 0 and dom[e] < bestd:
                best = e
                bestd = dom[e]
                if bestd <= 1:
                    break
        e = best
        top = k
        if symmetry and state["maxc"] + 1 < top:
            top = state["maxc"] + 1
        row = cnt[e]
        for c in range(1, top + 1):
            if row[c]:
                continue
            old = state["maxc"]
            if c > old:
                state["maxc"] = c
            if assign(e, c) and search(left - 1):
                return True
            unassign(e, c)
            state["maxc"] = old
            if state["abort"]:
                return False
        return False

    limit = sys.getrecursionlimit()
    if remaining + 100 > limit:
        sys.setrecursionlimit(remaining + 100)
    found = search(remaining)
    if state["abort"]:
        return -1, state["nodes"]
    return (color if found else None), state["nodes"]
