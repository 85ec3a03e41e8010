"""Certificates for equality between γ_t and twice the matching number.

For graphs of minimum degree one or two, equality of the total domination
number with twice the minimum maximal matching number is witnessed by a
single maximal matching satisfying four local conditions.  This module
splits a matching by the support status of edge endpoints, evaluates the
four conditions with explicit violation witnesses, enumerates maximal
matchings to search for a certificate, and builds the small total
dominating set that a maximal matching yields when the minimum degree is
three or more.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, NamedTuple

from .errors import ClassificationError, DomainError, ResourceLimitError
from .graph import Edge, Graph, min_degree, support_classification
from .oracles import Matching, is_maximal_matching

#: Node budget for exhaustive maximal-matching enumeration.
DEFAULT_ENUMERATION_BUDGET = 10**6

#: Condition identifiers, in report order.
CONDITION_IDS = ("i", "ii", "iii", "iv")


@dataclass(frozen=True)
class MatchingPartition:
    """A maximal matching split by the support status of edge endpoints.

    ``m_plus`` holds the edges with both endpoints adjacent to a leaf,
    ``m_minus`` those with exactly one such endpoint, ``m_star`` the rest.
    """

    m_plus: tuple[Edge, ...]
    m_minus: tuple[Edge, ...]
    m_star: tuple[Edge, ...]


@dataclass(frozen=True)
class Violation:
    """One concrete witness against a certificate condition."""

    condition: str
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    message: str


@dataclass(frozen=True)
class ConditionReport:
    """Per-condition verdicts with a witness for every failure."""

    verdicts: Mapping[str, bool]
    violations: tuple[Violation, ...]

    @property
    def holds(self) -> bool:
        return all(self.verdicts.values())


class CertifyingMatchingResult(NamedTuple):
    """A maximal matching passing all four conditions, with the evidence."""

    matching: Matching
    partition: MatchingPartition
    report: ConditionReport


def _validate_edges(g: Graph, m: Matching) -> None:
    for e in m:
        if not g.has_edge(e.u, e.v):
            raise DomainError(f"edge {e.u}-{e.v} is not an edge of the graph")


def partition_matching(g: Graph, m: Matching) -> MatchingPartition:
    """Classify each matching edge by how many endpoints are support vertices.

    Two endpoints in the support go to ``m_plus``, one to ``m_minus``, zero
    to ``m_star``.  An edge joining two support vertices of which one is an
    isolated support cannot occur in a certifying matching and is reported
    as a :class:`~domatch.errors.ClassificationError` rather than filed.
    """
    _validate_edges(g, m)
    support = support_classification(g)
    plus: list[Edge] = []
    minus: list[Edge] = []
    star: list[Edge] = []
    for e in m:
        in_sup = (e.u in support.sup) + (e.v in support.sup)
        if in_sup == 2:
            if e.u in support.s_minus or e.v in support.s_minus:
                raise ClassificationError(
                    f"edge {e.u}-{e.v} joins two support vertices, one isolated"
                    " within the support"
                )
            plus.append(e)
        elif in_sup == 1:
            minus.append(e)
        else:
            star.append(e)
    return MatchingPartition(tuple(plus), tuple(minus), tuple(star))


def _covered_by(edges: tuple[Edge, ...]) -> set[int]:
    vertices: set[int] = set()
    for e in edges:
        vertices.add(e.u)
        vertices.add(e.v)
    return vertices


def check_certificate_conditions(g: Graph, m: Matching) -> ConditionReport:
    """Evaluate the four certificate conditions for a maximal matching.

    The graph must have minimum degree one or two.  Writing ``S⁺`` for the
    support vertices adjacent to another support, ``S⁻`` for the remaining
    support vertices and ``p(v)`` for the matching partner:

    (i)   the double-support edges perfectly match ``S⁺``;
    (ii)  every ``S⁻`` vertex is matched, along a single-support edge whose
          other endpoint is no support vertex;
    (iii) every vertex in ``S⁻`` or covered by a no-support edge sees
          exactly one matched vertex, its partner;
    (iv)  whenever two such vertices u, v share a neighbor, some vertex has
          neighborhood exactly {p(u), p(v)}.

    Together these force the matching to be minimum and the total
    domination number to equal twice its size.
    """
    delta = min_degree(g)
    if delta not in (1, 2):
        raise DomainError(f"minimum degree {delta} is outside {{1, 2}}")
    if not is_maximal_matching(g, m.edges):
        raise DomainError("matching is not maximal")
    support = support_classification(g)
    partition = partition_matching(g, m)
    violations: list[Violation] = []

    plus_covered = _covered_by(partition.m_plus)
    unmatched_plus = sorted(support.s_plus - plus_covered)
    stray_plus = sorted(plus_covered - support.s_plus)
    if unmatched_plus:
        violations.append(
            Violation(
                "i",
                tuple(unmatched_plus),
                (),
                "adjacent-support vertices left unmatched by double-support edges",
            )
        )
    if stray_plus:
        violations.append(
            Violation(
                "i",
                tuple(stray_plus),
                (),
                "double-support edges reach outside the adjacent-support set",
            )
        )
    verdict_i = not unmatched_plus and not stray_plus

    minus_covered = _covered_by(partition.m_minus)
    unmatched_minus = sorted(support.s_minus - minus_covered)
    if unmatched_minus:
        violations.append(
            Violation(
                "ii",
                tuple(unmatched_minus),
                (),
                "isolated-support vertices not covered by single-support edges",
            )
        )
    bad_minus_edges = [
        e
        for e in partition.m_minus
        if not (
            (e.u in support.s_minus and e.v not in support.sup)
            or (e.v in support.s_minus and e.u not in support.sup)
        )
    ]
    if bad_minus_edges:
        violations.append(
            Violation(
                "ii",
                (),
                tuple(bad_minus_edges),
                "single-support edges must join an isolated support to a"
                " non-support vertex",
            )
        )
    verdict_ii = not unmatched_minus and not bad_minus_edges

    pool = sorted(support.s_minus | _covered_by(partition.m_star))
    matched = m.covered
    verdict_iii = True
    for v in pool:
        partner = m.partner(v)
        matched_neighbors = sorted(g.neighbors(v) & matched)
        if matched_neighbors != [partner]:
            verdict_iii = False
            violations.append(
                Violation(
                    "iii",
                    (v, *matched_neighbors),
                    (),
                    f"vertex {v} must see exactly its partner {partner} among"
                    " matched vertices",
                )
            )

    verdict_iv = True
    for a in range(len(pool)):
        for b in range(a + 1, len(pool)):
            u, v = pool[a], pool[b]
            if not g.neighbors(u) & g.neighbors(v):
                continue
            wanted = {m.partner(u), m.partner(v)}
            if not any(g.neighbors(x) == wanted for x in g.vertices()):
                verdict_iv = False
                violations.append(
                    Violation(
                        "iv",
                        (u, v),
                        (),
                        f"no vertex has neighborhood exactly {sorted(wanted)}",
                    )
                )

    verdicts = {"i": verdict_i, "ii": verdict_ii, "iii": verdict_iii, "iv": verdict_iv}
    return ConditionReport(verdicts, tuple(violations))


def iter_maximal_matchings(
    g: Graph, *, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> Iterator[Matching]:
    """Yield every maximal matching of ``g`` exactly once.

    Depth-first include/exclude over the sorted edge list, include branch
    first, so matchings arrive in ascending lexicographic order of their
    sorted edge-index tuples.  Search effort is metered; crossing ``budget``
    nodes raises :class:`~domatch.errors.ResourceLimitError`.
    """
    edges = g.edges()
    m = len(edges)
    if m == 0:
        yield Matching(())
        return
    incident = [0] * g.vertex_count
    for i, e in enumerate(edges):
        incident[e.u] |= 1 << i
        incident[e.v] |= 1 << i
    kill = [incident[e.u] | incident[e.v] for e in edges]
    max_killer = [k.bit_length() - 1 for k in kill]
    nodes = 0

    def dfs(i: int, undominated: int, chosen: tuple[int, ...]) -> Iterator[Matching]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise ResourceLimitError(
                f"maximal matching enumeration exceeded {budget} nodes"
            )
        if undominated == 0:
            # No edge has two uncovered endpoints, so nothing can be added.
            yield Matching(edges[j] for j in chosen)
            return
        first = (undominated & -undominated).bit_length() - 1
        if max_killer[first] < i:
            return  # the least undominated edge is out of reach
        if i == m:
            return
        if undominated >> i & 1:
            yield from dfs(i + 1, undominated & ~kill[i], chosen + (i,))
        yield from dfs(i + 1, undominated, chosen)

    yield from dfs(0, (1 << m) - 1, ())


def find_certifying_matching(
    g: Graph, *, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> CertifyingMatchingResult | None:
    """First maximal matching satisfying all four certificate conditions.

    Matchings are tried in the enumeration order of
    :func:`iter_maximal_matchings`, so the result is deterministic.  Returns
    None when no matching certifies, which for connected graphs of minimum
    degree one or two means γ_t < 2μ*.
    """
    delta = min_degree(g)
    if delta not in (1, 2):
        raise DomainError(f"minimum degree {delta} is outside {{1, 2}}")
    for matching in iter_maximal_matchings(g, budget=budget):
        report = check_certificate_conditions(g, matching)
        if report.holds:
            return CertifyingMatchingResult(matching, partition_matching(g, matching), report)
    return None


def total_dominating_set_from_matching(g: Graph, m: Matching) -> frozenset[int]:
    """Total dominating set of size at most 2|m| − δ + 2 for δ ≥ 3.

    Follows the constructive bound argument: when some vertex x is left
    uncovered, all its neighbors are matched, and dropping the partners of
    δ − 1 of them in favor of x keeps every vertex dominated.  When the
    matching covers the whole graph, any δ − 1 vertices may be dropped.
    Least-id choices make the output deterministic.
    """
    delta = min_degree(g)
    if delta < 3:
        raise DomainError(f"minimum degree {delta} is below 3")
    if not is_maximal_matching(g, m.edges):
        raise DomainError("matching is not maximal")
    covered = m.covered
    uncovered = [v for v in g.vertices() if v not in covered]
    if uncovered:
        x = min(uncovered)
        chosen_neighbors = sorted(g.neighbors(x))[: delta - 1]
        dropped = {m.partner(a) for a in chosen_neighbors}
        return frozenset(covered - dropped) | {x}
    dropped = set(sorted(g.vertices(), reverse=True)[: delta - 1])
    return frozenset(v for v in g.vertices() if v not in dropped)
