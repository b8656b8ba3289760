"""Immutable graph types and the shared text formats.

Vertices are dense integer ids ``0..n-1``; edges are unordered pairs stored
as ``(u, v)`` with ``u < v``; edge colors are 1-based, so a k-edge-colored
graph uses colors ``1..k``. All types are frozen after construction and can
be shared freely across threads.

Text format (UTF-8, LF newlines): first line ``n m k``, then ``m`` lines
``u v c``. Lines starting with ``#`` are comments and may appear anywhere.
Plain graph files use ``k = 1`` and ``c = 1`` throughout. Oriented graph
files append a direction flag per edge line: ``u v c >`` orients the edge
from ``u`` to ``v``, ``u v c <`` the other way.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping


class GraphFormatError(ValueError):
    """A graph text file violates the format or a type invariant."""


class GuardExceeded(RuntimeError):
    """An operation would exceed its configured size guard."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertex ids 0..n-1; no loops, no multi-edges."""

    n: int
    edges: frozenset

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge {u} {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u} {v} has an endpoint outside 0..{n - 1}")
            canon.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def _adjacency(self):
        adj = [[] for _ in range(self.n)]
        for u, v in self.sorted_edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges


@dataclass(frozen=True)
class EdgeColoredGraph:
    """A graph together with a total edge coloring into 1..k, for k >= 2."""

    graph: Graph
    k: int
    color: dict

    def __init__(self, graph: Graph, k: int, color: Mapping[tuple[int, int], int]):
        if k < 2:
            raise ValueError(f"edge palette must satisfy k >= 2, got {k}")
        canon = {}
        for (u, v), c in dict(color).items():
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise ValueError(f"edge {e[0]} {e[1]} colored twice")
            canon[e] = c
        if set(canon) != set(graph.edges):
            raise ValueError("color map must cover exactly the edge set")
        for (u, v), c in canon.items():
            if not (1 <= c <= k):
                raise ValueError(f"color {c} on edge {u} {v} outside 1..{k}")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "color", {e: canon[e] for e in sorted(canon)})

    def edge_color(self, u: int, v: int) -> int:
        return self.color[(u, v) if u < v else (v, u)]


@dataclass(frozen=True)
class OrientedGraph:
    """A graph plus one direction (tail, head) per edge."""

    graph: Graph
    direction: dict

    def __init__(self, graph: Graph, direction: Mapping[tuple[int, int], tuple[int, int]]):
        canon = {}
        for (u, v), (tail, head) in dict(direction).items():
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise ValueError(f"edge {e[0]} {e[1]} oriented twice")
            if {tail, head} != {e[0], e[1]}:
                raise ValueError(f"direction ({tail}, {head}) does not match edge {e[0]} {e[1]}")
            canon[e] = (tail, head)
        if set(canon) != set(graph.edges):
            raise ValueError("direction map must cover exactly the edge set")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "direction", {e: canon[e] for e in sorted(canon)})

    @cached_property
    def _parents(self):
        parents = [[] for _ in range(self.graph.n)]
        for e in sorted(self.direction):
            tail, head = self.direction[e]
            parents[head].append(tail)
        return tuple(tuple(sorted(p)) for p in parents)

    @cached_property
    def _children(self):
        children = [[] for _ in range(self.graph.n)]
        for e in sorted(self.direction):
            tail, head = self.direction[e]
            children[tail].append(head)
        return tuple(tuple(sorted(c)) for c in children)

    def parents(self, v: int) -> tuple[int, ...]:
        """Tails of the edges directed into v, in ascending id order."""
        return self._parents[v]

    def children(self, v: int) -> tuple[int, ...]:
        return self._children[v]

    def in_degree(self, v: int) -> int:
        return len(self._parents[v])

    @cached_property
    def max_in_degree(self) -> int:
        return max(len(p) for p in self._parents)

    def transpose(self) -> "OrientedGraph":
        flipped = {e: (head, tail) for e, (tail, head) in self.direction.items()}
        return OrientedGraph(self.graph, flipped)


@dataclass(frozen=True)
class VertexColoring:
    """Total vertex -> color map with a declared palette; colors are 1..palette."""

    palette: int
    assign: tuple

    def __init__(self, palette: int, assign: Iterable[int]):
        if palette < 1:
            raise ValueError(f"palette must be at least 1, got {palette}")
        assign = tuple(assign)
        for v, c in enumerate(assign):
            if not (1 <= c <= palette):
                raise ValueError(f"vertex {v} colored {c} outside 1..{palette}")
        object.__setattr__(self, "palette", palette)
        object.__setattr__(self, "assign", assign)

    def __getitem__(self, v: int) -> int:
        return self.assign[v]

    def __len__(self) -> int:
        return len(self.assign)


@dataclass(frozen=True)
class Homomorphism:
    """A total vertex map into a target, as a tuple indexed by source id."""

    mapping: tuple

    def __init__(self, mapping: Iterable[int]):
        object.__setattr__(self, "mapping", tuple(mapping))

    def __getitem__(self, v: int) -> int:
        return self.mapping[v]

    def __len__(self) -> int:
        return len(self.mapping)


def induced_subgraph(graph: Graph, vertices) -> Graph:
    """Subgraph induced by a nonempty vertex set, re-indexed to 0..|S|-1.

    New id i corresponds to the i-th smallest original id, so sorted(vertices)
    is the provenance map from new ids back to the originals.
    """
    kept = sorted(set(vertices))
    if not kept:
        raise ValueError("induced subgraph needs a nonempty vertex set")
    if kept[0] < 0 or kept[-1] >= graph.n:
        raise ValueError(f"vertex set contains an id outside 0..{graph.n - 1}")
    index = {v: i for i, v in enumerate(kept)}
    edges = [
        (index[u], index[v])
        for u, v in graph.sorted_edges
        if u in index and v in index
    ]
    return Graph(len(kept), edges)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def _parse_header(line: str) -> tuple[int, int, int]:
    parts = line.split()
    if len(parts) != 3:
        raise GraphFormatError(f"malformed header {line!r}, expected 'n m k'")
    try:
        n, m, k = (int(p) for p in parts)
    except ValueError:
        raise GraphFormatError(f"malformed header {line!r}, expected three integers") from None
    if n < 1:
        raise GraphFormatError(f"vertex count must be at least 1, got {n}")
    if m < 0:
        raise GraphFormatError(f"edge count must be nonnegative, got {m}")
    if k < 1:
        raise GraphFormatError(f"palette must be at least 1, got {k}")
    return n, m, k


def _parse_edge_line(line: str, want_flag: bool):
    parts = line.split()
    expected = 4 if want_flag else 3
    if len(parts) != expected:
        raise GraphFormatError(f"malformed edge line {line!r}")
    try:
        u, v, c = int(parts[0]), int(parts[1]), int(parts[2])
    except ValueError:
        raise GraphFormatError(f"malformed edge line {line!r}") from None
    flag = parts[3] if want_flag else None
    if want_flag and flag not in (">", "<"):
        raise GraphFormatError(f"direction flag must be '>' or '<' in {line!r}")
    return u, v, c, flag


def _parse_body(text: str, want_flag: bool = False):
    lines = _content_lines(text)
    if not lines:
        raise GraphFormatError("empty input, expected an 'n m k' header")
    n, m, k = _parse_header(lines[0])
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header promises {m} edge lines, found {len(lines) - 1}")
    seen = set()
    rows = []
    for line in lines[1:]:
        u, v, c, flag = _parse_edge_line(line, want_flag)
        if u == v:
            raise GraphFormatError(f"loop edge {u} {v}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge {u} {v} has an endpoint outside 0..{n - 1}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphFormatError(f"duplicate edge {e[0]} {e[1]}")
        seen.add(e)
        if not (1 <= c <= k):
            raise GraphFormatError(f"color {c} outside 1..{k}")
        rows.append((u, v, c, flag))
    return n, k, rows


def parse_edge_colored(text: str) -> EdgeColoredGraph:
    """Parse an 'n m k' header plus 'u v c' lines into a k-edge-colored graph."""
    n, k, rows = _parse_body(text)
    if k < 2:
        raise GraphFormatError(f"edge-colored graphs need k >= 2, got k={k}")
    graph = Graph(n, [(u, v) for u, v, _, _ in rows])
    color = {(min(u, v), max(u, v)): c for u, v, c, _ in rows}
    return EdgeColoredGraph(graph, k, color)


def parse_graph(text: str) -> Graph:
    """Parse a plain graph file (k = 1, all edge colors 1)."""
    n, k, rows = _parse_body(text)
    if k != 1:
        raise GraphFormatError(f"plain graph files use k = 1, got k={k}")
    return Graph(n, [(u, v) for u, v, _, _ in rows])


def parse_oriented(text: str) -> OrientedGraph:
    """Parse a plain graph file whose edge lines carry direction flags."""
    n, k, rows = _parse_body(text, want_flag=True)
    if k != 1:
        raise GraphFormatError(f"oriented graph files use k = 1, got k={k}")
    graph = Graph(n, [(u, v) for u, v, _, _ in rows])
    direction = {}
    for u, v, _, flag in rows:
        e = (u, v) if u < v else (v, u)
        direction[e] = (u, v) if flag == ">" else (v, u)
    return OrientedGraph(graph, direction)


def serialize(colored: EdgeColoredGraph) -> str:
    """Canonical text: header plus edge lines sorted lexicographically."""
    g = colored.graph
    lines = [f"{g.n} {g.m} {colored.k}"]
    lines += [f"{u} {v} {colored.color[(u, v)]}" for u, v in g.sorted_edges]
    return "\n".join(lines) + "\n"


def serialize_graph(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m} 1"]
    lines += [f"{u} {v} 1" for u, v in graph.sorted_edges]
    return "\n".join(lines) + "\n"


def serialize_oriented(oriented: OrientedGraph) -> str:
    g = oriented.graph
    lines = [f"{g.n} {g.m} 1"]
    for u, v in g.sorted_edges:
        flag = ">" if oriented.direction[(u, v)] == (u, v) else "<"
        lines.append(f"{u} {v} 1 {flag}")
    return "\n".join(lines) + "\n"


def serialize_coloring(coloring: VertexColoring) -> str:
    lines = [f"palette {coloring.palette}"]
    lines += [f"{v} {c}" for v, c in enumerate(coloring.assign)]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> VertexColoring:
    lines = _content_lines(text)
    if not lines:
        raise GraphFormatError("empty input, expected a 'palette q' header")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "palette":
        raise GraphFormatError(f"malformed coloring header {lines[0]!r}")
    try:
        palette = int(head[1])
    except ValueError:
        raise GraphFormatError(f"malformed coloring header {lines[0]!r}") from None
    entries = {}
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed coloring line {line!r}")
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"malformed coloring line {line!r}") from None
        if v in entries:
            raise GraphFormatError(f"vertex {v} colored twice")
        entries[v] = c
    n = len(entries)
    if set(entries) != set(range(n)):
        raise GraphFormatError("coloring lines must cover vertex ids 0..n-1 exactly once")
    try:
        return VertexColoring(palette, [entries[v] for v in range(n)])
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def serialize_homomorphism(hom: Homomorphism) -> str:
    return "\n".join(f"{u} {t}" for u, t in enumerate(hom.mapping)) + "\n"


def parse_homomorphism(text: str) -> Homomorphism:
    entries = {}
    for line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed homomorphism line {line!r}")
        try:
            u, t = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"malformed homomorphism line {line!r}") from None
        if u in entries:
            raise GraphFormatError(f"vertex {u} mapped twice")
        entries[u] = t
    n = len(entries)
    if set(entries) != set(range(n)):
        raise GraphFormatError("homomorphism lines must cover vertex ids 0..n-1 exactly once")
    return Homomorphism(entries[u] for u in range(n))
