"""Immutable simple-graph type plus the structural queries the rest of the
package builds on: text round-tripping, degrees, connectivity, girth,
support classification, induced subgraphs and small-family detection.

Vertices are dense integer ids ``0..n-1``.  Optional per-vertex labels are
kept only for round-tripping named input; every algorithm works on ids.
Graphs are immutable, so instances are safe to share between threads.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import DomainError, EdgeListFormatError

#: Returned by :func:`girth` for acyclic graphs.  Compares sanely with ints.
INFINITE_GIRTH = math.inf

_HEADER_TOKEN = "vertices:"


class Edge(NamedTuple):
    """Undirected edge in canonical orientation (``u < v``)."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        """Build a canonical edge from endpoints in either order."""
        if a == b:
            raise DomainError(f"self-loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)

    def other(self, w: int) -> int:
        """The endpoint that is not ``w``."""
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise DomainError(f"vertex {w} is not an endpoint of {self}")


def _check_label(label: str) -> str:
    # Labels must survive the edge-list text format unchanged.
    if not label or label.split() != [label]:
        raise DomainError(f"label {label!r} is empty or contains whitespace")
    if label.startswith("#") or label == _HEADER_TOKEN:
        raise DomainError(f"label {label!r} would be ambiguous in edge-list text")
    return label


class Graph:
    """A finite simple undirected graph.

    Parameters
    ----------
    vertex_count:
        Number of vertices; ids run from 0 to ``vertex_count - 1``.
    edges:
        Iterable of endpoint pairs (either order, duplicates collapse).
    labels:
        Optional per-vertex text labels, unique, one per vertex.  When
        omitted, ``str(id)`` is used.
    """

    __slots__ = ("_adjacency", "_labels", "_edges", "_label_index")

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
    ) -> None:
        if vertex_count < 0:
            raise DomainError("vertex count must be nonnegative")
        adjacency: list[set[int]] = [set() for _ in range(vertex_count)]
        canonical: set[Edge] = set()
        for a, b in edges:
            e = Edge.of(a, b)
            if not (0 <= e.u and e.v < vertex_count):
                raise DomainError(f"edge {e} has an endpoint outside 0..{vertex_count - 1}")
            canonical.add(e)
            adjacency[e.u].add(e.v)
            adjacency[e.v].add(e.u)
        self._adjacency: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adjacency)
        self._edges: tuple[Edge, ...] = tuple(sorted(canonical))
        if labels is None:
            self._labels: tuple[str, ...] = tuple(str(v) for v in range(vertex_count))
        else:
            if len(labels) != vertex_count:
                raise DomainError(f"{len(labels)} labels for {vertex_count} vertices")
            if len(set(labels)) != len(labels):
                raise DomainError("vertex labels must be unique")
            self._labels = tuple(_check_label(str(l)) for l in labels)
        self._label_index: dict[str, int] | None = None

    @property
    def vertex_count(self) -> int:
        return len(self._adjacency)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(len(self._adjacency))

    def edges(self) -> tuple[Edge, ...]:
        """All edges, sorted canonically."""
        return self._edges

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adjacency[v])

    def has_edge(self, a: int, b: int) -> bool:
        self._check_vertex(a)
        self._check_vertex(b)
        return b in self._adjacency[a]

    def label(self, v: int) -> str:
        self._check_vertex(v)
        return self._labels[v]

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def vertex_with_label(self, label: str) -> int:
        if self._label_index is None:
            self._label_index = {l: v for v, l in enumerate(self._labels)}
        try:
            return self._label_index[label]
        except KeyError:
            raise DomainError(f"unknown vertex label {label!r}") from None

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < len(self._adjacency)):
            raise DomainError(f"vertex id {v} outside 0..{len(self._adjacency) - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adjacency == other._adjacency and self._labels == other._labels

    def __hash__(self) -> int:
        return hash((self._adjacency, self._labels))

    def __repr__(self) -> str:
        return f"Graph({self.vertex_count} vertices, {self.edge_count} edges)"


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a :class:`Graph`.

    The format is line based.  Blank lines and lines starting with ``#`` are
    ignored.  An optional ``vertices: <labels>`` line declares vertices (and
    is the only way to get isolated ones).  Every other line holds exactly
    two whitespace-separated labels, one edge per line.  Vertex ids are
    assigned by first appearance.

    Raises
    ------
    EdgeListFormatError
        On self-loops, short or overlong lines, or labels the format cannot
        represent unambiguously.
    """
    order: list[str] = []
    index: dict[str, int] = {}

    def vertex_id(token: str, lineno: int) -> int:
        if token.startswith("#") or token == _HEADER_TOKEN:
            raise EdgeListFormatError(f"line {lineno}: label {token!r} is ambiguous in this format")
        if token not in index:
            index[token] = len(order)
            order.append(token)
        return index[token]

    edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == _HEADER_TOKEN:
            for token in tokens[1:]:
                vertex_id(token, lineno)
            continue
        if len(tokens) < 2:
            raise EdgeListFormatError(f"line {lineno}: expected two vertex labels, got {line!r}")
        if len(tokens) > 2:
            raise EdgeListFormatError(f"line {lineno}: unexpected extra tokens in {line!r}")
        a, b = tokens
        if a == b:
            raise EdgeListFormatError(f"line {lineno}: self-loop at {a!r}")
        edges.add(Edge.of(vertex_id(a, lineno), vertex_id(b, lineno)))
    return Graph(len(order), edges, labels=order)


def serialize_edge_list(g: Graph) -> str:
    """Render ``g`` as edge-list text that parses back to an equal graph.

    The header line carries every label in id order, so isolated vertices
    and vertex numbering survive the round trip.  Edges are emitted sorted
    canonically; comments from parsed input are not preserved.
    """
    lines = [" ".join([_HEADER_TOKEN, *g.labels])]
    for e in g.edges():
        lines.append(f"{g.label(e.u)} {g.label(e.v)}")
    return "\n".join(lines) + "\n"


def min_degree(g: Graph) -> int:
    """Smallest vertex degree.  Raises on the empty graph."""
    if g.vertex_count == 0:
        raise DomainError("empty graph has no minimum degree")
    return min(g.degree(v) for v in g.vertices())


def degree_two_vertices(g: Graph) -> frozenset[int]:
    """Vertices of degree exactly two."""
    return frozenset(v for v in g.vertices() if g.degree(v) == 2)


@dataclass(frozen=True)
class SupportClassification:
    """Support vertices split by adjacency among themselves.

    ``sup`` holds every vertex adjacent to a leaf, ``s_plus`` the supports
    adjacent to another support, and ``s_minus`` the rest of ``sup``.
    """

    sup: frozenset[int]
    s_plus: frozenset[int]
    s_minus: frozenset[int]


def support_classification(g: Graph) -> SupportClassification:
    """Classify the support vertices of ``g``."""
    leaves = {v for v in g.vertices() if g.degree(v) == 1}
    sup = frozenset(v for v in g.vertices() if g.neighbors(v) & leaves)
    s_plus = frozenset(v for v in sup if g.neighbors(v) & sup)
    return SupportClassification(sup=sup, s_plus=s_plus, s_minus=sup - s_plus)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest id."""
    seen: set[int] = set()
    components: list[frozenset[int]] = []
    for start in g.vertices():
        if start in seen:
            continue
        queue = deque([start])
        seen.add(start)
        group = {start}
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    group.add(y)
                    queue.append(y)
        components.append(frozenset(group))
    return components


def is_connected(g: Graph) -> bool:
    """True when ``g`` has exactly one connected component."""
    return len(connected_components(g)) == 1


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or :data:`INFINITE_GIRTH` when acyclic.

    Runs one breadth-first search per vertex; every non-tree edge closes a
    walk of length ``dist[x] + dist[y] + 1`` that contains a cycle no longer
    than that, and the minimum over all roots is exact.
    """
    best: int | float = INFINITE_GIRTH
    for root in g.vertices():
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            dx = dist[x]
            if 2 * dx >= best:
                continue
            for y in g.neighbors(x):
                if y not in dist:
                    dist[y] = dx + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    candidate = dx + dist[y] + 1
                    if candidate < best:
                        best = candidate
    return best


class InducedSubgraph(NamedTuple):
    """An induced subgraph together with the map back to original ids."""

    graph: Graph
    original_ids: tuple[int, ...]


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> InducedSubgraph:
    """Subgraph induced by ``vertices``.

    ``original_ids[i]`` is the id in ``g`` of the subgraph's vertex ``i``;
    the mapping is sorted ascending, and labels carry over.
    """
    chosen = sorted(set(vertices))
    for v in chosen:
        g._check_vertex(v)
    back = {orig: new for new, orig in enumerate(chosen)}
    edges = [
        (back[e.u], back[e.v]) for e in g.edges() if e.u in back and e.v in back
    ]
    labels = [g.label(v) for v in chosen]
    return InducedSubgraph(Graph(len(chosen), edges, labels=labels), tuple(chosen))


def is_cycle_of_length(g: Graph, n: int) -> bool:
    """True when ``g`` is a cycle on exactly ``n`` vertices (n >= 3)."""
    if n < 3 or g.vertex_count != n or g.edge_count != n:
        return False
    if any(g.degree(v) != 2 for v in g.vertices()):
        return False
    return is_connected(g)


def triangle_book_parameter(g: Graph) -> int | None:
    """Page count when ``g`` is a book of triangles, else ``None``.

    A book of ``n`` triangles consists of an edge ``uv`` plus ``n`` page
    vertices adjacent to exactly ``u`` and ``v``.  Detection: ``g`` is
    connected on ``n + 2`` vertices, some adjacent pair has degree
    ``n + 1``, and every other vertex's neighborhood is exactly that pair.
    """
    n = g.vertex_count - 2
    if n < 1 or not is_connected(g):
        return None
    for u, v in g.edges():
        if g.degree(u) != n + 1 or g.degree(v) != n + 1:
            continue
        pair = frozenset((u, v))
        if all(g.neighbors(w) == pair for w in g.vertices() if w not in pair):
            return n
    return None
