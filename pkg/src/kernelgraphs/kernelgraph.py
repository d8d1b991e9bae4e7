"""Kernel graphs of transformation sets, hulls, and derived graphs.

The kernel graph joins two points exactly when no member of the semigroup
maps them to the same point. A graph equal to the kernel graph of its own
endomorphism monoid is called a hull.
"""

from __future__ import annotations

from .graphs import Graph, clique_number, complete
from .semigroup import (
    _pair_collapse_table,
    _check_generators,
    collapsible,
    min_rank_of_generators,
)
from .transform import Partition, Transformation

__all__ = [
    "KernelGraphResult",
    "kernel_graph",
    "closure_kernel_graph",
    "hull",
    "is_hull",
    "iterated_hull",
    "derived_graph",
]


class KernelGraphResult:
    """Kernel graph plus the rank data that came out of the computation."""

    __slots__ = ("graph", "min_rank", "kernels")

    def __init__(self, graph: Graph, min_rank: int | None, kernels):
        self.graph = graph
        self.min_rank = min_rank
        self.kernels = kernels

    def __repr__(self) -> str:
        return f"<KernelGraphResult n={self.graph.n} min_rank={self.min_rank}>"


def kernel_graph(members, n: int | None = None) -> KernelGraphResult:
    """Kernel graph of an explicit set of transformations.

    With no members the graph is complete, so ``n`` is required then.
    """
    members = list(members)
    if not members:
        if n is None:
            raise ValueError("need n when the member list is empty")
        return KernelGraphResult(complete(n), None, ())
    size = members[0].n
    for t in members:
        if t.n != size:
            raise ValueError(f"members act on different point counts: {t.n} vs {size}")
    if n is not None and n != size:
        raise ValueError(f"n={n} disagrees with members on {size} points")
    blocked = set()
    for t in members:
        images = t.images
        for u in range(size):
            for v in range(u + 1, size):
                if images[u] == images[v]:
                    blocked.add((u, v))
    edges = [
        (u, v)
        for u in range(size)
        for v in range(u + 1, size)
        if (u, v) not in blocked
    ]
    min_rank = min(t.rank for t in members)
    kernels = tuple(sorted({t.kernel() for t in members if t.rank == min_rank}, key=lambda p: p.blocks))
    return KernelGraphResult(Graph(size, edges), min_rank, kernels)


def closure_kernel_graph(generators) -> KernelGraphResult:
    """Kernel graph of the semigroup generated by the given transformations.

    Works on pair reachability, never materializing the closure: a pair is a
    non-edge exactly when some product merges it.
    """
    gens = _check_generators(generators)
    n = gens[0].n
    collapsible_set = _pair_collapse_table(gens, n)[0]
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in collapsible_set
    ]
    return KernelGraphResult(Graph(n, edges), min_rank_of_generators(gens), None)


def hull(g: Graph, *, node_budget: int | None = None) -> Graph:
    """Kernel graph of the endomorphism monoid of g.

    Two vertices are adjacent in the hull exactly when no endomorphism of g
    merges them. The input is always a spanning subgraph of its hull.
    """
    n = g.n
    edges = list(g.edges())
    for u in range(n):
        for v in range(u + 1, n):
            if not g.has_edge(u, v) and not collapsible(g, u, v, node_budget=node_budget):
                edges.append((u, v))
    return Graph(n, edges)


def is_hull(g: Graph, *, node_budget: int | None = None) -> bool:
    return hull(g, node_budget=node_budget) == g


def iterated_hull(g: Graph, *, node_budget: int | None = None) -> tuple[Graph, int]:
    """Apply hull until it stops changing; returns (fixed point, steps used)."""
    steps = 0
    while True:
        h = hull(g, node_budget=node_budget)
        if h == g:
            return g, steps
        g = h
        steps += 1


def derived_graph(g: Graph) -> Graph:
    """Subgraph keeping only the edges that lie in some maximum clique.

    An edge survives exactly when the common neighborhood of its endpoints
    holds a clique two smaller than the maximum.
    """
    if g.edge_count == 0:
        return g
    omega = clique_number(g)
    kept = []
    for u, v in g.edges():
        common = g.adj[u] & g.adj[v]
        members = [w for w in range(g.n) if common >> w & 1]
        if clique_number(g.induced(members)) == omega - 2:
            kept.append((u, v))
    return Graph(g.n, kept)
