"""Command-line front end.

Subcommands wrap the exact solvers (``gamma-t``, ``mu-star``, ``bounds``),
the minimum-degree-two recognizer (``recognize``), the certificate checker
(``verify``) and the generators (``generate``), all over the plain edge-list
file format.  Exit codes are uniform: 0 for an affirmative answer or plain
success, 1 for a negative verdict, 2 for any error.

``--machine`` switches commands that report results to a line-oriented
``key: value`` document that is byte-stable for a given command line and
input file.  The solver vertex limit can be raised per call with
``--max-vertices`` or globally through the ``DOMATCH_MAX_VERTICES``
environment variable; an explicit flag wins.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, Sequence

from .characterization import (
    ConditionReport,
    check_certificate_conditions,
    partition_matching,
)
from .errors import DomainError, DomatchError, EdgeListFormatError
from .generators import (
    cycle,
    high_degree_extremal,
    path,
    random_tight_graph,
    spider,
    subdivided_grid,
    triangle_book,
)
from .graph import (
    INFINITE_GIRTH,
    Edge,
    Graph,
    girth,
    min_degree,
    parse_edge_list,
    serialize_edge_list,
)
from .oracles import (
    Matching,
    check_matching_bound,
    is_matching,
    is_maximal_matching,
    is_tight_graph,
    minimum_maximal_matching,
    total_domination_number,
)
from .recognizer import (
    CertifyingMatching,
    ExceptionalBook,
    ExceptionalSixCycle,
    Refutation,
    check_degree_two_certificate,
    recognize,
)

#: Environment variable overriding the solver vertex limit.
MAX_VERTICES_ENV = "DOMATCH_MAX_VERTICES"

_FAMILIES = ("spider", "subdivided-grid", "k-family", "cycle", "path", "prop2", "family-f")


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_edge_list(handle.read())


def _load_matching_edges(g: Graph, path: str) -> list[Edge]:
    """Matching files hold edge lines in the graph's labels, plus comments."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    edges: list[Edge] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListFormatError(
                f"line {line_no}: expected two labels, got {len(tokens)}"
            )
        u = g.vertex_with_label(tokens[0])
        v = g.vertex_with_label(tokens[1])
        if not g.has_edge(u, v):
            raise DomainError(
                f"line {line_no}: {tokens[0]}-{tokens[1]} is not an edge of the graph"
            )
        edges.append(Edge.of(u, v))
    return edges


def _resolve_limit(flag_value: int | None) -> int | None:
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(MAX_VERTICES_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{MAX_VERTICES_ENV}={raw!r} is not an integer") from None


def _machine_header(argv: Sequence[str], g: Graph) -> list[str]:
    lines = ["command: " + " ".join(argv)]
    lines.append(f"vertices: {g.vertex_count}")
    lines.append(f"edges: {g.edge_count}")
    if g.vertex_count:
        lines.append(f"min_degree: {min_degree(g)}")
        gi = girth(g)
        lines.append("girth: infinite" if gi == INFINITE_GIRTH else f"girth: {gi}")
    else:
        lines.append("min_degree: undefined")
        lines.append("girth: infinite")
    return lines


def _emit_machine(lines: list[str], code: int) -> int:
    print("\n".join(lines + [f"exit: {code}"]))
    return code


def _edge_label(g: Graph, e: Edge) -> str:
    return f"{g.label(e.u)} {g.label(e.v)}"


def _run_gamma_t(args: argparse.Namespace, argv: Sequence[str]) -> int:
    g = _load_graph(args.graph)
    result = total_domination_number(g, max_vertices=_resolve_limit(args.max_vertices))
    witness = sorted(result.witness)
    if args.machine:
        lines = _machine_header(argv, g)
        lines.append(f"gamma_t: {result.value}")
        lines += [f"witness_vertex: {g.label(v)}" for v in witness]
        return _emit_machine(lines, 0)
    print(f"gamma_t = {result.value}")
    print("witness: " + " ".join(g.label(v) for v in witness))
    return 0


def _run_mu_star(args: argparse.Namespace, argv: Sequence[str]) -> int:
    g = _load_graph(args.graph)
    result = minimum_maximal_matching(g, max_vertices=_resolve_limit(args.max_vertices))
    assert isinstance(result.witness, Matching)
    if args.machine:
        lines = _machine_header(argv, g)
        lines.append(f"mu_star: {result.value}")
        lines += [f"witness_edge: {_edge_label(g, e)}" for e in result.witness]
        return _emit_machine(lines, 0)
    print(f"mu_star = {result.value}")
    print("witness: " + ", ".join(_edge_label(g, e) for e in result.witness))
    return 0


def _run_bounds(args: argparse.Namespace, argv: Sequence[str]) -> int:
    g = _load_graph(args.graph)
    report = check_matching_bound(g, max_vertices=_resolve_limit(args.max_vertices))
    code = 0 if report.holds else 1
    if args.machine:
        lines = _machine_header(argv, g)
        lines.append(f"gamma_t: {report.gamma_t}")
        lines.append(f"mu_star: {report.mu_star}")
        lines.append(f"bound: {report.bound}")
        lines.append(f"slack: {report.slack}")
        lines.append("holds: yes" if report.holds else "holds: no")
        return _emit_machine(lines, code)
    print(f"min_degree = {report.min_degree}")
    print(f"gamma_t = {report.gamma_t}")
    print(f"mu_star = {report.mu_star}")
    print(f"bound = {report.bound}")
    print(f"slack = {report.slack}")
    print("holds: yes" if report.holds else "holds: no")
    return code


def _certificate_human(g: Graph, certificate) -> str:
    if isinstance(certificate, ExceptionalBook):
        pages = certificate.pages
        return f"yes - triangle book ({pages} page{'s' if pages != 1 else ''})"
    if isinstance(certificate, ExceptionalSixCycle):
        return "yes - six-cycle"
    if isinstance(certificate, CertifyingMatching):
        edges = ", ".join(_edge_label(g, e) for e in certificate.matching)
        return f"yes - certifying matching: {edges}"
    assert isinstance(certificate, Refutation)
    return f"no - {certificate.reason}: {certificate.detail}"


def _certificate_machine(g: Graph, certificate) -> list[str]:
    if isinstance(certificate, ExceptionalBook):
        return ["certificate: triangle-book", f"book_pages: {certificate.pages}"]
    if isinstance(certificate, ExceptionalSixCycle):
        return ["certificate: six-cycle"]
    if isinstance(certificate, CertifyingMatching):
        return ["certificate: certifying-matching"] + [
            f"certificate_edge: {_edge_label(g, e)}" for e in certificate.matching
        ]
    assert isinstance(certificate, Refutation)
    lines = ["certificate: refutation", f"refutation_reason: {certificate.reason}"]
    lines += [f"refutation_vertex: {g.label(v)}" for v in certificate.vertices]
    if certificate.detail:
        lines.append(f"refutation_detail: {certificate.detail}")
    return lines


def _run_recognize(args: argparse.Namespace, argv: Sequence[str]) -> int:
    g = _load_graph(args.graph)
    delta = min_degree(g)
    if delta != 2:
        print(f"error: minimum degree {delta}, expected exactly 2", file=sys.stderr)
        print(
            "hint: recognition covers minimum degree two only; use gamma-t and"
            " mu-star for exact values, or verify with a candidate matching",
            file=sys.stderr,
        )
        return 2
    outcome = recognize(g)
    oracle_line: str | None = None
    if args.oracle:
        oracle_verdict = is_tight_graph(g, max_vertices=_resolve_limit(args.max_vertices))
        if oracle_verdict != outcome.verdict:
            print("error: recognizer and oracle disagree", file=sys.stderr)
            return 2
        oracle_line = "oracle: agrees"
    code = 0 if outcome.verdict else 1
    if args.machine:
        lines = _machine_header(argv, g)
        for index, component in enumerate(outcome.components, start=1):
            lines.append(f"component: {index}")
            lines.append(f"component_verdict: {'yes' if component.verdict else 'no'}")
            lines += _certificate_machine(g, component.certificate)
        lines.append(f"verdict: {'yes' if outcome.verdict else 'no'}")
        if oracle_line:
            lines.append(oracle_line)
        return _emit_machine(lines, code)
    for index, component in enumerate(outcome.components, start=1):
        size = len(component.vertices)
        print(f"component {index} ({size} vertices): "
              + _certificate_human(g, component.certificate))
    print(f"verdict: {'yes' if outcome.verdict else 'no'}")
    if oracle_line:
        print(oracle_line)
    return code


def _condition_lines(
    g: Graph, report: ConditionReport, *, machine: bool
) -> list[str]:
    lines: list[str] = []
    for condition, verdict in report.verdicts.items():
        if machine:
            lines.append(f"condition_{condition}: {'yes' if verdict else 'no'}")
        else:
            lines.append(f"condition {condition}: {'ok' if verdict else 'violated'}")
        for violation in report.violations:
            if violation.condition != condition:
                continue
            labels = [g.label(v) for v in violation.vertices]
            labels += [g.label(w) for e in violation.edges for w in e]
            if machine:
                lines.append(f"violation_{condition}: " + " ".join(labels))
            else:
                suffix = f" (vertices: {' '.join(labels)})" if labels else ""
                lines.append(f"  {violation.message}{suffix}")
    return lines


def _run_verify(args: argparse.Namespace, argv: Sequence[str]) -> int:
    g = _load_graph(args.graph)
    edges = _load_matching_edges(g, args.matching)
    delta = min_degree(g)
    if delta not in (1, 2):
        raise DomainError(f"minimum degree {delta} is outside {{1, 2}}")
    machine = args.machine
    lines = _machine_header(argv, g) if machine else []
    if machine:
        lines += [f"matching_edge: {_edge_label(g, e)}" for e in sorted(set(edges))]

    if not is_matching(g, edges):
        if machine:
            lines += ["matching: no", "verdict: fails"]
            return _emit_machine(lines, 1)
        print("matching: no (edges share an endpoint)")
        print("verdict: certificate fails")
        return 1
    if machine:
        lines.append("matching: yes")
    m = Matching(edges)

    if delta == 1:
        if not is_maximal_matching(g, m.edges):
            if machine:
                lines += ["condition_maximal: no", "verdict: fails"]
                return _emit_machine(lines, 1)
            print("condition maximal: violated")
            print("verdict: certificate fails")
            return 1
        partition = partition_matching(g, m)
        report = check_certificate_conditions(g, m)
        if machine:
            lines.append("condition_maximal: yes")
            for name, part in (
                ("m_plus", partition.m_plus),
                ("m_minus", partition.m_minus),
                ("m_star", partition.m_star),
            ):
                lines += [f"{name}_edge: {_edge_label(g, e)}" for e in part]
        else:
            print("condition maximal: ok")
            for name, part in (
                ("m_plus", partition.m_plus),
                ("m_minus", partition.m_minus),
                ("m_star", partition.m_star),
            ):
                shown = ", ".join(_edge_label(g, e) for e in part) or "none"
                print(f"{name}: {shown}")
    else:
        report = check_degree_two_certificate(g, m)

    condition_lines = _condition_lines(g, report, machine=machine)
    code = 0 if report.holds else 1
    if machine:
        lines += condition_lines
        lines.append("verdict: holds" if report.holds else "verdict: fails")
        return _emit_machine(lines, code)
    for line in condition_lines:
        print(line)
    print("verdict: certificate holds" if report.holds else "verdict: certificate fails")
    return code


def _run_generate(args: argparse.Namespace, argv: Sequence[str]) -> int:
    family = args.family
    params = args.params
    if args.seed is not None and family != "family-f":
        raise DomainError("--seed only applies to family-f")

    def need(count: int) -> None:
        if len(params) != count:
            raise DomainError(
                f"family {family!r} takes exactly {count} parameter(s), got {len(params)}"
            )

    comments = ""
    if family == "spider":
        need(1)
        g = spider(params[0])
    elif family == "subdivided-grid":
        need(1)
        g = subdivided_grid(params[0])
    elif family == "k-family":
        need(1)
        g = triangle_book(params[0])
    elif family == "cycle":
        need(1)
        g = cycle(params[0])
    elif family == "path":
        need(1)
        g = path(params[0])
    elif family == "prop2":
        need(2)
        g = high_degree_extremal(params[0], params[1])
    else:
        need(0)
        if args.seed is None:
            raise DomainError("family-f requires --seed")
        g, matching = random_tight_graph(args.seed)
        comments = "# certifying matching:\n" + "".join(
            f"# {_edge_label(g, e)}\n" for e in matching
        )
    sys.stdout.write(comments + serialize_edge_list(g))
    return 0


_DISPATCH: dict[str, Callable[[argparse.Namespace, Sequence[str]], int]] = {
    "gamma-t": _run_gamma_t,
    "mu-star": _run_mu_star,
    "bounds": _run_bounds,
    "recognize": _run_recognize,
    "verify": _run_verify,
    "generate": _run_generate,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domatch",
        description="Decide, certify and construct graphs whose total domination"
        " number is twice the minimum maximal matching number.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_common(p: argparse.ArgumentParser, *, limit: bool) -> None:
        if limit:
            p.add_argument(
                "--max-vertices",
                type=int,
                default=None,
                help="solver vertex limit (default 24; env DOMATCH_MAX_VERTICES)",
            )
        p.add_argument("--machine", action="store_true", help="stable key/value output")

    p = sub.add_parser("gamma-t", help="exact total domination number")
    p.add_argument("graph", help="edge-list file")
    with_common(p, limit=True)

    p = sub.add_parser("mu-star", help="exact minimum maximal matching number")
    p.add_argument("graph", help="edge-list file")
    with_common(p, limit=True)

    p = sub.add_parser("bounds", help="degree-aware matching bound report")
    p.add_argument("graph", help="edge-list file")
    with_common(p, limit=True)

    p = sub.add_parser("recognize", help="decide minimum-degree-two graphs")
    p.add_argument("graph", help="edge-list file")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check the verdict against the exact solvers",
    )
    with_common(p, limit=True)

    p = sub.add_parser("verify", help="check a matching certificate")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("matching", help="matching file: one edge per line, graph labels")
    with_common(p, limit=False)

    p = sub.add_parser("generate", help="emit a named family member as an edge list")
    p.add_argument("family", choices=_FAMILIES)
    p.add_argument("params", nargs="*", type=int, help="family parameters")
    p.add_argument("--seed", type=int, default=None, help="seed for family-f")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return int(stop.code or 0)
    try:
        return _DISPATCH[args.command](args, argv)
    except DomatchError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
