"""Shared test helpers.

Brute-force reference implementations here stay as close to the definitions
as possible and share no code with the package's search routines, so the two
sides can disagree when either is wrong.  The random samplers are seeded by
their callers and exist to feed the equivalence suites.
"""

from __future__ import annotations

import itertools
import math
import random

import networkx as nx

from domatch import Edge, Graph, is_connected, min_degree

# ---------------------------------------------------------------------------
# brute-force references


def brute_total_domination(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Smallest total dominating set by plain subset enumeration.

    Returns the lexicographically first optimal subset, which is also what
    the package solver promises.
    """
    vertices = list(g.vertices())
    for size in range(1, g.vertex_count + 1):
        for combo in itertools.combinations(vertices, size):
            chosen = set(combo)
            if all(g.neighbors(v) & chosen for v in vertices):
                return size, combo
    raise AssertionError("no total dominating set: isolated vertex present")


def is_matching_edges(edges) -> bool:
    seen: set[int] = set()
    for e in edges:
        if e.u in seen or e.v in seen:
            return False
        seen.add(e.u)
        seen.add(e.v)
    return True


def is_maximal_edges(g: Graph, edges) -> bool:
    covered = {w for e in edges for w in (e.u, e.v)}
    return all(e.u in covered or e.v in covered for e in g.edges())


def brute_minimum_maximal_matching(g: Graph) -> tuple[int, tuple[Edge, ...]]:
    """Smallest maximal matching by enumerating edge subsets by size."""
    edges = sorted(g.edges())
    for size in range(1, len(edges) + 1):
        for combo in itertools.combinations(edges, size):
            if is_matching_edges(combo) and is_maximal_edges(g, combo):
                return size, combo
    raise AssertionError("no maximal matching: graph has no edges")


def brute_maximal_matchings(g: Graph) -> set[frozenset[Edge]]:
    """Every maximal matching, via the power set of the edges.

    Exponential in the edge count; keep inputs below ~16 edges.
    """
    edges = sorted(g.edges())
    found: set[frozenset[Edge]] = set()
    for size in range(len(edges) + 1):
        for combo in itertools.combinations(edges, size):
            if is_matching_edges(combo) and is_maximal_edges(g, combo):
                found.add(frozenset(combo))
    return found


def brute_girth(g: Graph) -> int | float:
    """Shortest cycle length: drop each edge and measure the detour."""
    h = to_networkx(g)
    best: int | float = math.inf
    for e in g.edges():
        h.remove_edge(e.u, e.v)
        try:
            best = min(best, nx.shortest_path_length(h, e.u, e.v) + 1)
        except nx.NetworkXNoPath:
            pass
        h.add_edge(e.u, e.v)
    return best


# ---------------------------------------------------------------------------
# conversions and assembly


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    """Relabel an arbitrary networkx graph onto dense integer ids."""
    nodes = sorted(h.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return Graph(len(nodes), [(index[a], index[b]) for a, b in h.edges()])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union with b's ids shifted above a's; labels stay unique."""
    shift = a.vertex_count
    edges = [(e.u, e.v) for e in a.edges()]
    edges += [(e.u + shift, e.v + shift) for e in b.edges()]
    labels = [f"l.{a.label(v)}" for v in a.vertices()]
    labels += [f"r.{b.label(v)}" for v in b.vertices()]
    return Graph(a.vertex_count + b.vertex_count, edges, labels=labels)


def relabel(g: Graph, permutation: list[int]) -> Graph:
    """Image of g under a permutation of its vertex ids (labels dropped)."""
    return Graph(
        g.vertex_count,
        [(permutation[e.u], permutation[e.v]) for e in g.edges()],
    )


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    """Replace edge uv by a two-edge path through a fresh vertex."""
    dropped = Edge.of(u, v)
    edges = [(e.u, e.v) for e in g.edges() if e != dropped]
    w = g.vertex_count
    edges += [(u, w), (v, w)]
    return Graph(g.vertex_count + 1, edges)


def petersen_subdivided() -> Graph:
    """The Petersen graph with one edge subdivided; minimum degree two."""
    return subdivide_edge(petersen_graph(), 0, 1)


# ---------------------------------------------------------------------------
# seeded samplers


def random_connected_graph(rng: random.Random, n: int, extra_edges: int = 0) -> Graph:
    """Random spanning tree plus a few random chords."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {Edge.of(order[i], order[rng.randrange(i)]) for i in range(1, n)}
    rest = [
        Edge.of(u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if Edge.of(u, v) not in edges
    ]
    rng.shuffle(rest)
    edges.update(rest[:extra_edges])
    return Graph(n, edges)


def _patched_to_min_degree_two(rng: random.Random, g: Graph) -> Graph:
    """Add edges at degree-deficient vertices until every degree is >= 2."""
    n = g.vertex_count
    adjacency = {v: set(g.neighbors(v)) for v in g.vertices()}
    edges = set(g.edges())
    for v in range(n):
        while len(adjacency[v]) < 2:
            options = [w for w in range(n) if w != v and w not in adjacency[v]]
            w = rng.choice(options)
            adjacency[v].add(w)
            adjacency[w].add(v)
            edges.add(Edge.of(v, w))
    return Graph(n, edges)


def random_min_degree_two_graph(rng: random.Random, lo: int = 6, hi: int = 13) -> Graph:
    """Connected graph with minimum degree exactly two.

    Mixes two shapes so the sample is not all Hamiltonian: a cycle with a few
    chords, and a patched-up random tree.  Rejection keeps the degree exact.
    """
    while True:
        n = rng.randint(lo, hi)
        if rng.random() < 0.5:
            order = list(range(n))
            rng.shuffle(order)
            ring = {Edge.of(order[i - 1], order[i]) for i in range(1, n)}
            ring.add(Edge.of(order[0], order[-1]))
            chords = [
                Edge.of(u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if Edge.of(u, v) not in ring
            ]
            rng.shuffle(chords)
            ring.update(chords[: rng.randint(0, max(1, n // 4))])
            g = Graph(n, ring)
        else:
            g = random_connected_graph(rng, n, rng.randint(0, n // 2))
            g = _patched_to_min_degree_two(rng, g)
        if is_connected(g) and min_degree(g) == 2:
            return g


def random_low_degree_graph(rng: random.Random, lo: int = 4, hi: int = 11) -> Graph:
    """Connected graph with minimum degree one or two (mostly one)."""
    while True:
        n = rng.randint(lo, hi)
        g = random_connected_graph(rng, n, rng.randint(0, n // 2))
        if min_degree(g) in (1, 2):
            return g
