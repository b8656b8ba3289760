"""Acyclic and star vertex colorings: verifiers, exact search, greedy heuristic.

A proper coloring is acyclic when every two color classes induce a forest,
and a star coloring when no path on four vertices is bicolored. Exact
searches are guarded backtrackers meant for small instances; the greedy
heuristic is total and its output always verifies.
"""

from __future__ import annotations

import random

from .graphs import Graph, GuardExceeded, VertexColoring


def _is_proper(graph: Graph, coloring: VertexColoring) -> bool:
    return all(coloring[u] != coloring[v] for u, v in graph.edges)


def verify_acyclic(graph: Graph, coloring: VertexColoring) -> bool:
    """True iff the coloring is proper and every bicolored subgraph is a forest."""
    if len(coloring) != graph.n or not _is_proper(graph, coloring):
        return False
    groups = {}
    for u, v in graph.sorted_edges:
        cu, cv = coloring[u], coloring[v]
        pair = (cu, cv) if cu < cv else (cv, cu)
        groups.setdefault(pair, []).append((u, v))
    for edges in groups.values():
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in edges:
            parent.setdefault(u, u)
            parent.setdefault(v, v)
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
    return True


def verify_star(graph: Graph, coloring: VertexColoring) -> bool:
    """True iff the coloring is proper and no 4-vertex path uses only 2 colors."""
    if len(coloring) != graph.n or not _is_proper(graph, coloring):
        return False
    for b, c in graph.sorted_edges:
        for a in graph.neighbors(b):
            if a == c or coloring[a] != coloring[c]:
                continue
            for d in graph.neighbors(c):
                if d == b or d == a:
                    continue
                if coloring[d] == coloring[b]:
                    return False
    return True


def _star_safe(graph: Graph, assign: list, v: int, c: int) -> bool:
    """Would coloring v with c keep the partial coloring star-valid?

    Checks properness and every 4-vertex path through v whose other vertices
    are already colored (0 marks uncolored). Checking each path when its last
    vertex is colored covers all paths exactly once over a full run.
    """
    for u in graph.neighbors(v):
        if assign[u] == c:
            return False
    # v as an endpoint: paths v, x, y, z
    for x in graph.neighbors(v):
        cx = assign[x]
        if not cx:
            continue
        for y in graph.neighbors(x):
            if y == v or assign[y] != c:
                continue
            for z in graph.neighbors(y):
                if z == v or z == x:
                    continue
                if assign[z] == cx:
                    return False
    # v as an inner vertex: paths x, v, w, z
    for x in graph.neighbors(v):
        cx = assign[x]
        if not cx:
            continue
        for w in graph.neighbors(v):
            if w == x or assign[w] != cx:
                continue
            for z in graph.neighbors(w):
                if z == v or z == x:
                    continue
                if assign[z] == c:
                    return False
    return True


def _acyclic_safe(graph: Graph, assign: list, v: int, c: int) -> bool:
    """Would coloring v with c keep every bicolored subgraph a forest?"""
    by_color = {}
    for u in graph.neighbors(v):
        cu = assign[u]
        if cu == c:
            return False
        if cu:
            by_color.setdefault(cu, []).append(u)
    for c2, nbrs in by_color.items():
        if len(nbrs) < 2:
            continue
        # v closes a bicolored cycle iff two of these neighbors are already
        # connected inside the {c, c2} subgraph (excluding v itself)
        remaining = set(nbrs)
        while remaining:
            start = remaining.pop()
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in graph.neighbors(x):
                    if y == v or y in comp:
                        continue
                    if assign[y] in (c, c2) and assign[y]:
                        comp.add(y)
                        stack.append(y)
            hits = comp & remaining
            if hits:
                return False
            remaining -= comp
    return True


def _backtrack_coloring(graph: Graph, c_max: int, safe) -> VertexColoring | None:
    order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    assign = [0] * graph.n

    def rec(pos: int, used: int) -> bool:
        if pos == graph.n:
            return True
        v = order[pos]
        # new colors are tried in first-use order, which loses no solutions
        for c in range(1, min(used + 1, c_max) + 1):
            if safe(graph, assign, v, c):
                assign[v] = c
                if rec(pos + 1, max(used, c)):
                    return True
                assign[v] = 0
        return False

    if c_max >= 1 and rec(0, 0):
        return VertexColoring(max(assign), assign)
    return None


def exact_star_coloring(graph: Graph, c_max: int, size_guard: int = 20) -> VertexColoring | None:
    """Star coloring with at most c_max colors, or None if none exists.

    Complete backtracking search; refuses graphs larger than size_guard.
    """
    if graph.n > size_guard:
        raise GuardExceeded(f"exact star coloring guarded at n <= {size_guard}, got n={graph.n}")
    result = _backtrack_coloring(graph, c_max, _star_safe)
    if result is not None and not verify_star(graph, result):
        raise AssertionError("exact star coloring failed its own verifier")
    return result


def exact_acyclic_coloring(graph: Graph, c_max: int, size_guard: int = 20) -> VertexColoring | None:
    """Acyclic coloring with at most c_max colors, or None if none exists."""
    if graph.n > size_guard:
        raise GuardExceeded(f"exact acyclic coloring guarded at n <= {size_guard}, got n={graph.n}")
    result = _backtrack_coloring(graph, c_max, _acyclic_safe)
    if result is not None and not verify_acyclic(graph, result):
        raise AssertionError("exact acyclic coloring failed its own verifier")
    return result


def greedy_star_coloring(graph: Graph, seed: int = 0) -> VertexColoring:
    """Star coloring by greedy assignment over a degree-descending order.

    The seed shuffles tie order among equal degrees; for a fixed seed the
    result is deterministic. Each vertex takes the smallest color that keeps
    the partial coloring proper and free of bicolored 4-vertex paths, so the
    final coloring always verifies.
    """
    rng = random.Random(seed)
    order = list(range(graph.n))
    rng.shuffle(order)
    order.sort(key=lambda v: -graph.degree(v))
    assign = [0] * graph.n
    for v in order:
        c = 1
        while not _star_safe(graph, assign, v, c):
            c += 1
        assign[v] = c
    return VertexColoring(max(assign), assign)
