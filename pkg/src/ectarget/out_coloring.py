"""Out-colorings of oriented graphs: verification and two constructions.

An out-coloring of an oriented graph satisfies three conditions:

    C1  adjacent vertices get different colors,
    C2  distinct parents of a vertex get different colors,
    C3  a vertex and each of its grandparents get different colors,

where a parent is the tail of an incoming edge and a grandparent sits two
steps back along incoming edges. Restricted to the underlying graph, every
out-coloring is a star coloring (and hence acyclic).

``build_out_coloring`` combines a star coloring of the underlying graph with
a greedy coloring of an auxiliary conflict digraph to produce an out-coloring
within a 2*d*s*s palette budget. ``out_coloring_from_universal`` goes the
other way: given any target graph that is universal for the underlying graph,
it assembles an out-coloring from homomorphism images and a small conflict
repair, within a (2d+1)*p^m budget.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .coloring import verify_star
from .graphs import EdgeColoredGraph, OrientedGraph, VertexColoring


class TargetNotUniversal(Exception):
    """A supposedly universal target admitted no homomorphism for a coloring.

    The offending edge-colored graph is attached as the witness.
    """

    def __init__(self, witness: EdgeColoredGraph):
        super().__init__(
            "target is not universal: a derived edge coloring admits no homomorphism"
        )
        self.witness = witness


@dataclass(frozen=True)
class OutColoringCertificate:
    """An out-coloring plus its declared palette budget and construction log.

    Each log entry is (rule, tail, via, head): the auxiliary edge tail -> head
    was added because of the middle vertex via. The number of entries per head
    bounds the auxiliary in-degree.
    """

    coloring: VertexColoring
    budget: int
    construction_log: tuple

    @cached_property
    def rule_counts(self) -> dict:
        counts = {}
        for rule, _, _, _ in self.construction_log:
            counts[rule] = counts.get(rule, 0) + 1
        return counts

    def aux_in_degrees(self) -> dict:
        degrees = {}
        for _, _, _, head in self.construction_log:
            degrees[head] = degrees.get(head, 0) + 1
        return degrees


def verify_out_coloring(oriented: OrientedGraph, coloring: VertexColoring) -> bool:
    """Check conditions C1, C2 and C3 directly."""
    if len(coloring) != oriented.graph.n:
        return False
    for u, v in oriented.graph.edges:
        if coloring[u] == coloring[v]:
            return False
    for v in range(oriented.graph.n):
        ps = oriented.parents(v)
        seen = set()
        for p in ps:
            if coloring[p] in seen:
                return False
            seen.add(coloring[p])
        for p in ps:
            for gp in oriented.parents(p):
                if coloring[gp] == coloring[v]:
                    return False
    return True


def verify_in_coloring(oriented: OrientedGraph, coloring: VertexColoring) -> bool:
    """Proper coloring where every bicolored 3-vertex path points at its middle.

    A coloring is an out-coloring of an oriented graph exactly when it is an
    in-coloring of the transpose.
    """
    if len(coloring) != oriented.graph.n:
        return False
    for u, v in oriented.graph.edges:
        if coloring[u] == coloring[v]:
            return False
    for mid in range(oriented.graph.n):
        nbrs = sorted(set(oriented.graph.neighbors(mid)))
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1 :]:
                if coloring[a] != coloring[b]:
                    continue
                ea = oriented.direction[(a, mid) if a < mid else (mid, a)]
                eb = oriented.direction[(b, mid) if b < mid else (mid, b)]
                if ea != (a, mid) or eb != (b, mid):
                    return False
    return True


def _degeneracy_greedy(n: int, adjacency: dict, max_colors: int) -> list:
    """Greedy coloring in reverse order of repeated minimum-degree removal.

    adjacency maps a vertex to the set of its (deduplicated, undirected)
    neighbors. Every vertex keeps at most max_colors - 1 colored neighbors at
    assignment time, which the caller guarantees via a degree bound.
    """
    degree = {v: len(adjacency.get(v, ())) for v in range(n)}
    remaining = set(range(n))
    removal = []
    while remaining:
        v = min(remaining, key=lambda x: (degree[x], x))
        removal.append(v)
        remaining.remove(v)
        for u in adjacency.get(v, ()):
            if u in remaining:
                degree[u] -= 1
    colors = [0] * n
    for v in reversed(removal):
        used = {colors[u] for u in adjacency.get(v, ()) if colors[u]}
        c = 1
        while c in used:
            c += 1
        if c > max_colors:
            raise AssertionError(f"greedy coloring exceeded {max_colors} colors")
        colors[v] = c
    return colors


def _flatten(tuples: list) -> VertexColoring:
    """Map observed color tuples to integers by lexicographic rank (1-based)."""
    ranks = {t: i + 1 for i, t in enumerate(sorted(set(tuples)))}
    return VertexColoring(len(ranks), [ranks[t] for t in tuples])


def build_out_coloring(oriented: OrientedGraph, star: VertexColoring) -> OutColoringCertificate:
    """Out-coloring from a star coloring of the underlying graph.

    Builds an auxiliary digraph on the vertex set with two rules over triples
    (b, x, a) of vertices:

        R1  a and b are distinct parents of x with equal star colors,
        R2  b is a parent of x, x is a parent of a, and the star colors of a
            and b are equal,

    each adding the edge b -> a. Star colorings admit at most d * (s - 1)
    such triples per head, so a greedy coloring of the auxiliary graph in
    degeneracy order needs at most 2*d*s colors. Pairing it with the star
    coloring yields an out-coloring within the 2*d*s*s budget.
    """
    graph = oriented.graph
    if not verify_star(graph, star):
        raise ValueError("star coloring failed verification")
    d = oriented.max_in_degree
    s = star.palette
    if d == 0:
        coloring = VertexColoring(1, [1] * graph.n)
        return OutColoringCertificate(coloring, 1, ())
    log = []
    adjacency = {v: set() for v in range(graph.n)}
    for x in range(graph.n):
        ps = oriented.parents(x)
        for b in ps:
            for a in ps:
                if a != b and star[a] == star[b]:
                    log.append(("R1", b, x, a))
                    adjacency[b].add(a)
                    adjacency[a].add(b)
        for b in ps:
            for a in oriented.children(x):
                if star[a] == star[b]:
                    log.append(("R2", b, x, a))
                    adjacency[b].add(a)
                    adjacency[a].add(b)
    in_degrees = {}
    for _, _, _, head in log:
        in_degrees[head] = in_degrees.get(head, 0) + 1
    if in_degrees and max(in_degrees.values()) > d * (s - 1):
        raise AssertionError("auxiliary digraph in-degree bound violated")
    aux_colors = _degeneracy_greedy(graph.n, adjacency, 2 * d * s)
    coloring = _flatten([(star[v], aux_colors[v]) for v in range(graph.n)])
    budget = 2 * d * s * s
    if coloring.palette > budget:
        raise AssertionError("out-coloring palette exceeded its budget")
    if not verify_out_coloring(oriented, coloring):
        raise AssertionError("constructed out-coloring failed verification")
    return OutColoringCertificate(coloring, budget, tuple(log))


def out_coloring_from_universal(
    oriented: OrientedGraph,
    target: EdgeColoredGraph,
    k: int,
    source_guard: int = 12,
    target_guard: int = 64,
) -> OutColoringCertificate:
    """Out-coloring assembled from homomorphisms into a universal target.

    Parents of each vertex are numbered in ascending id order. With
    m = max(1, ceil(log_k d)), the base-k digits of the parent numbers define
    m edge colorings of the underlying graph; a homomorphism into the target
    is found for each, and the image tuples already satisfy C1, C2 and every
    C3 pair with distinct parent numbers. The remaining conflicts (a vertex
    against the grandparent reached twice through the same parent number) form
    a digraph of in-degree at most d, repaired with a greedy 2d+1 coloring.
    The palette stays within (2d+1) * p^m for a p-vertex target.

    Raises TargetNotUniversal when one of the derived colorings admits no
    homomorphism, with that coloring as a witness.
    """
    from .universal import find_homomorphism

    if k < 2:
        raise ValueError(f"edge palette must satisfy k >= 2, got {k}")
    graph = oriented.graph
    d = oriented.max_in_degree
    p = target.graph.n
    digits = 1
    power = k
    while power < max(d, 1):
        power *= k
        digits += 1
    parent_index = {}
    for v in range(graph.n):
        for j, parent in enumerate(oriented.parents(v), start=1):
            e = (parent, v) if parent < v else (v, parent)
            parent_index[e] = j
    hom_images = []
    for i in range(1, digits + 1):
        scale = k ** (i - 1)
        color = {e: ((j - 1) // scale) % k + 1 for e, j in parent_index.items()}
        derived = EdgeColoredGraph(graph, k, color)
        hom = find_homomorphism(
            derived, target, source_guard=source_guard, target_guard=target_guard
        )
        if hom is None:
            raise TargetNotUniversal(derived)
        hom_images.append(hom.mapping)
    log = []
    conflicts = {v: set() for v in range(graph.n)}
    for w in range(graph.n):
        for a, mid in enumerate(oriented.parents(w), start=1):
            grand = oriented.parents(mid)
            if len(grand) >= a:
                u = grand[a - 1]
                log.append(("C3", u, mid, w))
                conflicts[u].add(w)
                conflicts[w].add(u)
    repair = _degeneracy_greedy(graph.n, conflicts, 2 * d + 1)
    tuples = [tuple(h[v] for h in hom_images) + (repair[v],) for v in range(graph.n)]
    coloring = _flatten(tuples)
    budget = (2 * d + 1) * p**digits
    if coloring.palette > budget:
        raise AssertionError("out-coloring palette exceeded its budget")
    if not verify_out_coloring(oriented, coloring):
        raise AssertionError("constructed out-coloring failed verification")
    return OutColoringCertificate(coloring, budget, tuple(log))


def serialize_certificate(certificate: OutColoringCertificate) -> str:
    """JSON header line with palette, budget and rule counts, then 'v c' lines."""
    header = json.dumps(
        {
            "palette": certificate.coloring.palette,
            "budget": certificate.budget,
            "rule_counts": certificate.rule_counts,
        },
        sort_keys=True,
    )
    lines = [header]
    lines += [f"{v} {c}" for v, c in enumerate(certificate.coloring.assign)]
    return "\n".join(lines) + "\n"
