"""Constructors for the graph families used throughout the package.

Deterministic builders for the named fixture families (spiders, subdivided
grids, triangle books, cycles, paths, the high-minimum-degree extremal
graphs) and the recipe-driven family of matching-certified graphs, with a
seeded random sampler over recipes.  Every generator labels its vertices so
emitted edge lists read like the construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import DomainError, ResourceLimitError
from .graph import Edge, Graph
from .oracles import Matching


def spider(n: int) -> Graph:
    """``n`` legs of three edges hanging from one center vertex.

    Vertices: center ``c`` plus ``x_i, y_i, z_i`` per leg, 3n+1 in total.
    Minimum degree 1 for every n.
    """
    if n < 1:
        raise DomainError("spider needs at least one leg")
    labels = ["c"]
    edges: list[tuple[int, int]] = []
    for i in range(n):
        x, y, z = 3 * i + 1, 3 * i + 2, 3 * i + 3
        labels += [f"x{i + 1}", f"y{i + 1}", f"z{i + 1}"]
        edges += [(0, x), (x, y), (y, z)]
    return Graph(3 * n + 1, edges, labels)


def subdivided_grid(n: int) -> Graph:
    """Two-row grid ladder with every row edge subdivided once.

    Rows ``u_0..u_n`` and ``v_0..v_n`` joined by n+1 rungs; the row edges
    are replaced by paths through ``a_i`` (top) and ``b_i`` (bottom).
    4n+2 vertices, minimum degree 2; n=1 yields the six-cycle.
    """
    if n < 1:
        raise DomainError("subdivided grid needs at least one column")
    top = list(range(n + 1))
    bottom = [n + 1 + i for i in range(n + 1)]
    mid_top = [2 * n + 2 + i for i in range(n)]
    mid_bottom = [3 * n + 2 + i for i in range(n)]
    labels = (
        [f"u{i}" for i in range(n + 1)]
        + [f"v{i}" for i in range(n + 1)]
        + [f"a{i}" for i in range(n)]
        + [f"b{i}" for i in range(n)]
    )
    edges = [(top[i], bottom[i]) for i in range(n + 1)]
    for i in range(n):
        edges += [(top[i], mid_top[i]), (mid_top[i], top[i + 1])]
        edges += [(bottom[i], mid_bottom[i]), (mid_bottom[i], bottom[i + 1])]
    return Graph(4 * n + 2, edges, labels)


def triangle_book(n: int) -> Graph:
    """``n`` triangles sharing one common edge ``uv``."""
    if n < 1:
        raise DomainError("triangle book needs at least one page")
    labels = ["u", "v"] + [f"w{i + 1}" for i in range(n)]
    edges = [(0, 1)]
    for i in range(n):
        edges += [(0, 2 + i), (1, 2 + i)]
    return Graph(n + 2, edges, labels)


def cycle(n: int) -> Graph:
    """Cycle on ``n`` ≥ 3 vertices."""
    if n < 3:
        raise DomainError("cycle needs at least three vertices")
    labels = [f"v{i}" for i in range(n)]
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], labels)


def path(n: int) -> Graph:
    """Path on ``n`` ≥ 2 vertices."""
    if n < 2:
        raise DomainError("path needs at least two vertices")
    labels = [f"v{i}" for i in range(n)]
    return Graph(n, [(i, i + 1) for i in range(n - 1)], labels)


def high_degree_extremal(n: int, delta: int, *, max_vertices: int = 4096) -> Graph:
    """Extremal graph meeting the bound 2μ* − δ + 2 with minimum degree δ ≥ 3.

    ``n`` disjoint base edges, plus one apex vertex per δ-subset of the 2n
    base vertices, adjacent to exactly that subset.  Apexes have degree δ;
    base vertices have degree 1 + C(2n−1, δ−1), which is larger whenever the
    size precondition 2n ≥ δ + 1 holds, so the minimum degree is δ.
    """
    if delta < 3:
        raise DomainError("minimum degree parameter must be at least 3")
    if 2 * n < delta + 1:
        raise DomainError(f"need 2n >= delta + 1, got n={n}, delta={delta}")
    base = 2 * n
    total = base + comb(base, delta)
    if total > max_vertices:
        raise ResourceLimitError(
            f"{total} vertices exceeds the generator limit of {max_vertices}"
        )
    labels = [f"m{i}" for i in range(base)]
    edges = [(2 * i, 2 * i + 1) for i in range(n)]
    for j, subset in enumerate(combinations(range(base), delta)):
        apex = base + j
        labels.append(f"s{j}")
        edges += [(apex, v) for v in subset]
    return Graph(total, edges, labels)


def _sorted_unique(items) -> tuple[int, ...]:
    return tuple(sorted(set(items)))


@dataclass(frozen=True)
class TightRecipe:
    """Build plan for a graph certified tight by its embedded matching.

    The matching is ``k2_count`` disjoint edges on vertices 0..2k−1 (vertex
    2i pairs with 2i+1).  ``a_count`` attachment vertices follow, with ids
    2k..2k+a−1; ``a_edges`` lists each one's matched neighbors (at least
    two).  ``marked`` names the matched vertices destined to become support
    vertices.  ``leaf_edges`` joins still-unattached matched vertices with
    unmarked partners to attachment vertices; ``extra_edges`` run between
    matched vertices whose partners are marked.  ``pendant_counts`` gives
    per marked vertex the number of leaves to hang in the final step.
    """

    k2_count: int
    a_count: int = 0
    marked: tuple[int, ...] = ()
    a_edges: tuple[tuple[int, ...], ...] = ()
    leaf_edges: tuple[tuple[int, int], ...] = ()
    extra_edges: tuple[tuple[int, int], ...] = ()
    pendant_counts: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "marked", _sorted_unique(self.marked))
        object.__setattr__(
            self, "a_edges", tuple(_sorted_unique(group) for group in self.a_edges)
        )
        object.__setattr__(
            self, "leaf_edges", tuple(sorted(set((v, a) for v, a in self.leaf_edges)))
        )
        object.__setattr__(
            self,
            "extra_edges",
            tuple(sorted(set((min(u, v), max(u, v)) for u, v in self.extra_edges))),
        )
        object.__setattr__(
            self, "pendant_counts", tuple(sorted(set(self.pendant_counts)))
        )


def build_tight_graph(
    recipe: TightRecipe, *, max_vertices: int = 512
) -> tuple[Graph, Matching]:
    """Materialize a recipe and return the graph with its embedded matching.

    After the recipe's explicit edges are drawn, witness vertices are added
    until closure: any two matched-with-unmarked-partner vertices that share
    a neighbor (or, when both are unmarked, whose partners do) receive a
    degree-two vertex pinned to the relevant partner pair, unless one
    already exists.  Finally each marked vertex gets its pendant leaves;
    a marked vertex that would end up leafless and without a pendant is a
    recipe error.  Every edge of the result touches a matched vertex, so
    the embedded matching is maximal by construction.
    """
    k2 = recipe.k2_count
    if k2 < 1:
        raise DomainError("recipe needs at least one matched edge")
    if recipe.a_count < 0:
        raise DomainError("attachment vertex count cannot be negative")
    if len(recipe.a_edges) != recipe.a_count:
        raise DomainError(
            f"{recipe.a_count} attachment vertices but {len(recipe.a_edges)}"
            " neighbor groups"
        )
    base = 2 * k2
    for v in recipe.marked:
        if not 0 <= v < base:
            raise DomainError(f"marked vertex {v} is not a matched vertex")
    marked = set(recipe.marked)
    unmarked_partner = {v for v in range(base) if (v ^ 1) not in marked}

    adjacency: dict[int, set[int]] = {v: set() for v in range(base + recipe.a_count)}

    def add_edge(u: int, v: int) -> None:
        if u == v:
            raise DomainError(f"self-loop at {u}")
        adjacency[u].add(v)
        adjacency[v].add(u)

    for i in range(k2):
        add_edge(2 * i, 2 * i + 1)
    for j, group in enumerate(recipe.a_edges):
        if len(group) < 2:
            raise DomainError(f"attachment vertex a{j} needs at least two neighbors")
        for v in group:
            if not 0 <= v < base:
                raise DomainError(f"attachment neighbor {v} is not a matched vertex")
            add_edge(base + j, v)

    # Step-4 edges may only leave vertices that are still bare after the
    # attachment round, and only when their partner is unmarked.
    bare = {v for v in range(base) if len(adjacency[v]) == 1}
    for v, a in recipe.leaf_edges:
        if not base <= a < base + recipe.a_count:
            raise DomainError(f"{a} is not an attachment vertex id")
        if v not in bare:
            raise DomainError(f"vertex {v} is not a bare matched vertex")
        if v not in unmarked_partner:
            raise DomainError(f"vertex {v} has a marked partner")
        add_edge(v, a)

    for u, v in recipe.extra_edges:
        for w in (u, v):
            if not 0 <= w < base:
                raise DomainError(f"extra edge endpoint {w} is not a matched vertex")
            if w in unmarked_partner:
                raise DomainError(f"extra edge endpoint {w} has an unmarked partner")
        add_edge(u, v)

    next_id = base + recipe.a_count

    def ensure_witness(pair: frozenset[int]) -> bool:
        nonlocal next_id
        for nb in adjacency.values():
            if nb == pair:
                return False
        if next_id >= max_vertices:
            raise ResourceLimitError(
                f"witness closure exceeded the vertex limit of {max_vertices}"
            )
        w = next_id
        next_id += 1
        adjacency[w] = set()
        for t in pair:
            add_edge(w, t)
        return True

    pool = sorted(unmarked_partner)
    changed = True
    while changed:
        changed = False
        for u, v in combinations(pool, 2):
            if u in marked or v in marked:
                if adjacency[u] & adjacency[v]:
                    changed |= ensure_witness(frozenset((u ^ 1, v ^ 1)))
            elif (adjacency[u] & adjacency[v]) or (adjacency[u ^ 1] & adjacency[v ^ 1]):
                # For a matched pair both sets coincide: one witness only.
                changed |= ensure_witness(frozenset((u, v)))
                changed |= ensure_witness(frozenset((u ^ 1, v ^ 1)))
    witness_count = next_id - base - recipe.a_count

    requested: dict[int, int] = {}
    for v, count in recipe.pendant_counts:
        if v in requested:
            raise DomainError(f"duplicate pendant count for vertex {v}")
        if v not in marked:
            raise DomainError(f"pendant leaves are only allowed on marked vertices, not {v}")
        if count < 0:
            raise DomainError(f"negative pendant count for vertex {v}")
        requested[v] = count
    # Support status is judged once, before any pendant is added, so the
    # outcome does not depend on the order marked vertices are processed.
    supported = {
        v: any(len(adjacency[w]) == 1 for w in adjacency[v]) for v in sorted(marked)
    }
    for v in sorted(marked):
        count = requested.get(v, 0)
        if count == 0 and not supported[v]:
            raise DomainError(f"marked vertex {v} needs at least one pendant leaf")
        for _ in range(count):
            if next_id >= max_vertices:
                raise ResourceLimitError(
                    f"pendant leaves exceeded the vertex limit of {max_vertices}"
                )
            leaf = next_id
            next_id += 1
            adjacency[leaf] = set()
            add_edge(leaf, v)

    labels = (
        [f"m{i}" for i in range(base)]
        + [f"a{i}" for i in range(recipe.a_count)]
        + [f"w{i}" for i in range(witness_count)]
        + [f"p{i}" for i in range(next_id - base - recipe.a_count - witness_count)]
    )
    edges = sorted(
        {Edge.of(u, v) for u, neighbors in adjacency.items() for v in neighbors}
    )
    graph = Graph(next_id, edges, labels)
    matching = Matching((2 * i, 2 * i + 1) for i in range(k2))
    return graph, matching


@dataclass(frozen=True)
class TightGraphParams:
    """Bounds for the random recipe sampler."""

    max_k2: int = 4
    max_a: int = 2
    mark_probability: float = 0.25
    extra_edge_probability: float = 0.2
    max_vertices: int = 16


def random_tight_graph(
    seed: int, params: TightGraphParams = TightGraphParams()
) -> tuple[Graph, Matching]:
    """Seeded random recipe, built; identical seeds give identical output.

    Recipes always use at least one attachment vertex, and every bare
    matched vertex with an unmarked partner is wired to an attachment
    vertex, so mark-free draws come out with minimum degree two.  Draws are
    repeated until the built graph fits ``params.max_vertices``.
    """
    if params.max_k2 < 1 or params.max_a < 1:
        raise DomainError("sampler needs positive size bounds")
    if not 0.0 <= params.mark_probability <= 1.0:
        raise DomainError("mark probability must lie in [0, 1]")
    if not 0.0 <= params.extra_edge_probability <= 1.0:
        raise DomainError("extra edge probability must lie in [0, 1]")
    if params.max_vertices < 4:
        raise DomainError("vertex budget below any buildable recipe")
    rng = random.Random(seed)
    build_cap = max(64, 4 * params.max_vertices)
    for _ in range(1000):
        k2 = rng.randint(1, params.max_k2)
        a_count = rng.randint(1, params.max_a)
        base = 2 * k2
        marked = tuple(v for v in range(base) if rng.random() < params.mark_probability)
        groups = []
        for _ in range(a_count):
            size = rng.randint(2, min(4, base)) if base > 2 else 2
            groups.append(tuple(rng.sample(range(base), size)))
        touched = {v for group in groups for v in group}
        unmarked_partner = {v for v in range(base) if (v ^ 1) not in set(marked)}
        leaf_edges = tuple(
            (v, base + rng.randrange(a_count))
            for v in sorted(unmarked_partner - touched)
        )
        anchored = sorted(set(range(base)) - unmarked_partner)
        extra_edges = tuple(
            (u, v)
            for u, v in combinations(anchored, 2)
            if rng.random() < params.extra_edge_probability
        )
        pendant_counts = tuple((v, rng.randint(1, 2)) for v in marked)
        recipe = TightRecipe(
            k2, a_count, marked, tuple(groups), leaf_edges, extra_edges, pendant_counts
        )
        try:
            graph, matching = build_tight_graph(recipe, max_vertices=build_cap)
        except ResourceLimitError:
            continue
        if graph.vertex_count <= params.max_vertices:
            return graph, matching
    raise ResourceLimitError(
        f"no recipe fit {params.max_vertices} vertices within 1000 draws"
    )


_RECIPE_KEYS = (
    "k2_count",
    "a_count",
    "marked",
    "a_edges",
    "leaf_edges",
    "extra_edges",
    "pendant_counts",
)


def recipe_to_text(recipe: TightRecipe) -> str:
    """Serialize a recipe to reviewable key/value lines."""
    lines = [
        f"k2_count: {recipe.k2_count}",
        f"a_count: {recipe.a_count}",
        "marked: " + " ".join(str(v) for v in recipe.marked),
        "a_edges: " + " ".join(",".join(str(v) for v in g) for g in recipe.a_edges),
        "leaf_edges: " + " ".join(f"{v}-{a}" for v, a in recipe.leaf_edges),
        "extra_edges: " + " ".join(f"{u}-{v}" for u, v in recipe.extra_edges),
        "pendant_counts: " + " ".join(f"{v}:{c}" for v, c in recipe.pendant_counts),
    ]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _parse_int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise DomainError(f"line {line_no}: expected an integer, got {token!r}") from None


def _parse_pair(token: str, sep: str, line_no: int) -> tuple[int, int]:
    left, found, right = token.partition(sep)
    if not found:
        raise DomainError(f"line {line_no}: expected '{sep}'-separated pair, got {token!r}")
    return _parse_int(left, line_no), _parse_int(right, line_no)


def recipe_from_text(text: str) -> TightRecipe:
    """Parse the key/value format written by :func:`recipe_to_text`.

    Blank lines and '#' comments are ignored; both counts are required,
    collection keys default to empty; unknown or repeated keys are errors.
    """
    seen: dict[str, tuple[str, int]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, found, value = line.partition(":")
        key = key.strip()
        if not found:
            raise DomainError(f"line {line_no}: expected 'key: value', got {line!r}")
        if key not in _RECIPE_KEYS:
            raise DomainError(f"line {line_no}: unknown key {key!r}")
        if key in seen:
            raise DomainError(f"line {line_no}: repeated key {key!r}")
        seen[key] = (value.strip(), line_no)
    for required in ("k2_count", "a_count"):
        if required not in seen:
            raise DomainError(f"missing required key {required!r}")

    def tokens(key: str) -> tuple[list[str], int]:
        value, line_no = seen.get(key, ("", 0))
        return (value.split() if value else []), line_no

    k2_value, k2_line = seen["k2_count"]
    a_value, a_line = seen["a_count"]
    marked_tokens, marked_line = tokens("marked")
    group_tokens, group_line = tokens("a_edges")
    leaf_tokens, leaf_line = tokens("leaf_edges")
    extra_tokens, extra_line = tokens("extra_edges")
    pendant_tokens, pendant_line = tokens("pendant_counts")
    return TightRecipe(
        k2_count=_parse_int(k2_value, k2_line),
        a_count=_parse_int(a_value, a_line),
        marked=tuple(_parse_int(t, marked_line) for t in marked_tokens),
        a_edges=tuple(
            tuple(_parse_int(v, group_line) for v in t.split(",")) for t in group_tokens
        ),
        leaf_edges=tuple(_parse_pair(t, "-", leaf_line) for t in leaf_tokens),
        extra_edges=tuple(_parse_pair(t, "-", extra_line) for t in extra_tokens),
        pendant_counts=tuple(_parse_pair(t, ":", pendant_line) for t in pendant_tokens),
    )
