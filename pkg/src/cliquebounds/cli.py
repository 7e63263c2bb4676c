"""Command-line surface: analyze, verify, search, enumerate, oracle.

Exit codes: 0 clean, 1 findings of a requested severity, 2 usage or parse
error, 3 internal invariant breach (a proven theorem bound violated, or a
fast/oracle mismatch). Machine output never rounds rationals; the human
format renders them as "num/den (~ decimal)".
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .bounds import (
    BOUND_KINDS,
    DEFAULT_SWEEP_KINDS,
    KIND_CC_CYCLE,
    KIND_CC_PATH,
    KIND_LOCAL_EDGE_CYCLE,
    KIND_LOCAL_EDGE_PATH,
    KIND_LOCAL_VERTEX,
    KIND_LOCAL_VERTEX_TOTAL,
    KIND_WOOD,
    KIND_WOOD_TOTAL,
    BoundReport,
    cc_cycle_bound,
    cc_path_bound,
    compare_local_vs_classical,
    format_fraction,
    local_edge_cycle_bound,
    local_edge_path_bound,
    local_vertex_bound,
    local_vertex_total_bound,
    make_report,
    wood_bound,
    wood_total_bound,
)
from .certificates import (
    EqualityCertificate,
    cross_validate,
    cycle_equality_certificate,
    edge_equality_certificate,
    is_block_forest_of_kr,
    is_clique_union_with_isolated,
    is_disjoint_clique_union,
    vertex_equality_certificate,
)
from .cliques import clique_census, count_all_cliques, count_cliques
from .enumeration import ENUMERATION_CAP, enumerate_graphs
from .graph import Graph, GraphError, parse_edge_list_text, parse_graph6, write_graph6
from .oracles import (
    DP_WEIGHT_CAP,
    NAIVE_CLIQUE_CAP,
    dp_longest_cycle_through_edge,
    dp_longest_path_through_edge,
    naive_count_all_cliques,
    naive_count_cliques,
)
from .search import (
    CATEGORY_BOUND_VIOLATION,
    GraphSource,
    SearchConfig,
    classical_cycle_r,
    classical_path_r,
    findings_to_jsonl,
    rows_to_csv,
    run_sweep,
    summary_to_json,
)
from .weights import DEFAULT_EXACT_CAP, CapExceededError, all_weights, block_decomposition, is_block_forest

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

PARALLELISM_ENV = "CLIQUEBOUNDS_PARALLELISM"


def _default_parallelism() -> int:
    raw = os.environ.get(PARALLELISM_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def load_single_graph(spec: str, edge_list: bool) -> Graph:
    """Resolve an input argument: '-' for stdin, an existing path, or a graph6 literal."""
    if spec == "-":
        text = sys.stdin.read()
    elif os.path.exists(spec):
        with open(spec, "r", encoding="ascii") as fh:
            text = fh.read()
    elif edge_list:
        raise GraphError(f"edge-list input must be a file or '-', got literal {spec!r}")
    else:
        return parse_graph6(spec)
    if edge_list:
        return parse_edge_list_text(text)
    for line in text.splitlines():
        if line.strip():
            return parse_graph6(line)
    raise GraphError("no graph found in input")


def parse_t_range(raw: str | None, g: Graph) -> list[int]:
    """Parse 'MIN:MAX' or a single order; default is 2..(max degree + 1)."""
    if raw is None:
        hi = max(g.max_degree() + 1, 2)
        return list(range(2, hi + 1))
    if ":" in raw:
        lo_s, hi_s = raw.split(":", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(raw)
    if lo < 1 or hi < lo:
        raise ValueError(f"invalid t range {raw!r}")
    return list(range(lo, hi + 1))


def _edge_key(e: tuple[int, int]) -> str:
    return f"{e[0]}-{e[1]}"


def reports_for_t(g: Graph, weights, census, t: int) -> list[BoundReport]:
    """BoundReports for every per-order kind defined at this t."""
    count = census[t].total if 1 <= t <= g.n else 0
    d = g.max_degree()
    reports = [
        make_report(
            KIND_LOCAL_VERTEX, t, count, local_vertex_bound(g, t), vertex_equality_certificate(g, t)
        ),
        make_report(
            KIND_WOOD,
            t,
            count,
            wood_bound(g.n, d, t),
            EqualityCertificate(
                "wood", is_disjoint_clique_union(g, d + 1), None, write_graph6(g),
                f"disjoint union of cliques on {d + 1} vertices",
            ),
        ),
    ]
    if t >= 2:
        pr = classical_path_r(weights, g.m)
        cr = classical_cycle_r(weights)
        reports.extend(
            [
                make_report(
                    KIND_LOCAL_EDGE_PATH, t, count, local_edge_path_bound(g, weights, t),
                    edge_equality_certificate(g, weights, t),
                ),
                make_report(
                    KIND_LOCAL_EDGE_CYCLE, t, count, local_edge_cycle_bound(g, weights, t),
                    cycle_equality_certificate(g, weights, t),
                ),
                make_report(
                    KIND_CC_PATH, t, count, cc_path_bound(g.m, pr, t),
                    EqualityCertificate(
                        "cc_path", is_clique_union_with_isolated(g, pr), None, write_graph6(g),
                        f"disjoint union of cliques on {pr} vertices plus isolated vertices",
                    ),
                ),
                make_report(
                    KIND_CC_CYCLE, t, count, cc_cycle_bound(g.m, cr, t),
                    EqualityCertificate(
                        "cc_cycle", is_block_forest_of_kr(g, cr), None, write_graph6(g),
                        f"block forest with every block a clique on {cr} vertices",
                    ),
                ),
            ]
        )
    return reports


def build_analyze_report(g: Graph, ts: list[int], weight_cap: int = DEFAULT_EXACT_CAP) -> dict:
    weights = all_weights(g, weight_cap)
    census = clique_census(g)
    decomp = block_decomposition(g)
    reports = []
    validations = []
    dominance = []
    for t in ts:
        reports.extend(r.to_json_dict() for r in reports_for_t(g, weights, census, t))
        validations.append(cross_validate(g, t, weights).to_json_dict())
        if t >= 2:
            dominance.append(compare_local_vs_classical(g, weights, t).to_json_dict())
    all_count = count_all_cliques(g)
    totals = [
        make_report(KIND_LOCAL_VERTEX_TOTAL, None, all_count, local_vertex_total_bound(g)),
        make_report(KIND_WOOD_TOTAL, None, all_count, wood_total_bound(g.n, g.max_degree())),
    ]
    return {
        "graph6": write_graph6(g),
        "n": g.n,
        "m": g.m,
        "degrees": list(g.degrees()),
        "weights": {
            "p": {_edge_key(e): w for e, w in weights.p.items()},
            "c": {_edge_key(e): w for e, w in weights.c.items()},
            "longest_path": weights.longest_path,
            "circumference": weights.circumference,
        },
        "blocks": {
            "blocks": [[_edge_key(e) for e in block] for block in decomp.blocks],
            "articulation_points": sorted(
                v for v in range(g.n) if (decomp.articulation_points >> v) & 1
            ),
            "is_block_forest": is_block_forest(g),
        },
        "t_values": ts,
        "reports": reports,
        "cross_validation": validations,
        "dominance": dominance,
        "totals": [r.to_json_dict() for r in totals],
    }


def render_human_report(report: dict) -> str:
    lines = [
        f"graph {report['graph6']}  n={report['n']} m={report['m']} degrees={report['degrees']}",
        f"longest path {report['weights']['longest_path']}, circumference {report['weights']['circumference']}",
        f"p(e): {report['weights']['p']}",
        f"c(e): {report['weights']['c']}",
        f"blocks: {report['blocks']['blocks']} articulation={report['blocks']['articulation_points']} block_forest={report['blocks']['is_block_forest']}",
        "",
    ]

    def frac(d: dict) -> str:
        return format_fraction(Fraction(d["num"], d["den"]))

    for rep in report["reports"]:
        cert = rep["certificate"]
        cert_txt = "-" if cert is None else ("holds" if cert["holds"] else "fails")
        lines.append(
            f"t={rep['t']} {rep['kind']:<28} count={rep['count']:<4} bound={frac(rep['bound']):<18} "
            f"slack={frac(rep['slack']):<18} equality={str(rep['equality']):<5} certificate={cert_txt}"
        )
    lines.append("")
    for tot in report["totals"]:
        lines.append(
            f"all-orders {tot['kind']:<24} count={tot['count']:<5} bound={frac(tot['bound']):<18} equality={tot['equality']}"
        )
    lines.append("")
    for cv in report["cross_validation"]:
        lines.append(
            f"t={cv['t']} cross-validation: vertex={cv['vertex']['verdict']} (core {cv['vertex']['core_graph6']}), "
            f"edge={cv['edge']['verdict']}"
        )
    for dom in report["dominance"]:
        lines.append(
            f"t={dom['t']} dominance: local_vertex<=wood {dom['vertex_ok']}, local_edge<=cc_path {dom['edge_ok']}"
        )
    return "\n".join(lines) + "\n"


def _parse_kinds(raw: str) -> tuple[str, ...]:
    if raw == "all":
        return tuple(k for k in BOUND_KINDS if k not in (KIND_WOOD_TOTAL, KIND_LOCAL_VERTEX_TOTAL))
    kinds = tuple(k.strip() for k in raw.split(",") if k.strip())
    for k in kinds:
        if k not in BOUND_KINDS:
            raise ValueError(f"unknown bound kind {k!r} (known: {', '.join(BOUND_KINDS)})")
    return kinds


def _write_outputs(args, result) -> None:
    if args.findings:
        with open(args.findings, "w", encoding="ascii") as fh:
            fh.write(findings_to_jsonl(result.findings))
    if args.summary:
        with open(args.summary, "w", encoding="ascii") as fh:
            fh.write(summary_to_json(result.summary))
    if getattr(args, "csv", None):
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write(rows_to_csv(result.rows))


def _sweep_exit_code(args, result) -> int:
    violations = [f for f in result.findings if f.category == CATEGORY_BOUND_VIOLATION]
    if violations:
        return EXIT_INTERNAL
    fail_on = {c.strip() for c in (args.fail_on or "").split(",") if c.strip()}
    if any(f.category in fail_on for f in result.findings):
        return EXIT_FINDINGS
    return EXIT_OK


def _print_sweep_human(result) -> None:
    from collections import Counter

    counts = Counter(f.category for f in result.findings)
    print(f"graphs analyzed: {result.summary['graphs']}")
    for cat in sorted(counts):
        print(f"{cat}: {counts[cat]}")
    if result.summary["cap_errors"]:
        print(f"cap errors: {len(result.summary['cap_errors'])}")
    for f in result.findings:
        if f.category != "EQUALITY_INSTANCE":
            print(
                f"  {f.category} {f.graph6} t={f.t} {f.kind} count={f.count} "
                f"bound={f.bound_num}/{f.bound_den} {f.detail}"
            )


def cmd_analyze(args) -> int:
    g = load_single_graph(args.graph, args.edge_list)
    ts = parse_t_range(args.t, g)
    report = build_analyze_report(g, ts, args.weight_cap)
    if args.format == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(render_human_report(report), end="")
    return EXIT_OK


def cmd_verify(args) -> int:
    source = GraphSource(kind="graph6_file", path=args.input) if args.input != "-" else GraphSource(
        kind="graph6_lines", lines=tuple(sys.stdin.read().splitlines())
    )
    lo, hi = _t_bounds(args.t)
    config = SearchConfig(
        t_min=lo,
        t_max=hi,
        kinds=_parse_kinds(args.kinds),
        parallelism=args.parallelism,
        equality_cap=args.equality_cap,
        weight_cap=args.weight_cap,
        collect_rows=bool(args.csv),
    )
    result = run_sweep(source, config)
    _write_outputs(args, result)
    if args.format == "jsonl":
        sys.stdout.write(findings_to_jsonl(result.findings))
    elif args.format == "json":
        print(
            json.dumps(
                {"findings": [f.to_json_dict() for f in result.findings], "summary": result.summary},
                sort_keys=True,
                indent=2,
            )
        )
    else:
        _print_sweep_human(result)
    return _sweep_exit_code(args, result)


def cmd_search(args) -> int:
    if args.random:
        params = {}
        if args.random == "gnp":
            params["p"] = args.p
        else:
            params["d"] = args.d
        source = GraphSource(
            kind="random",
            model=args.random,
            n=args.n,
            count=args.count,
            seed=args.seed,
            params=params,
            connected_only=args.connected_only,
            max_edges=args.max_edges,
        )
    else:
        ns = tuple(int(x) for x in args.exhaustive.split(","))
        source = GraphSource(
            kind="exhaustive", ns=ns, connected_only=args.connected_only, max_edges=args.max_edges
        )
    lo, hi = _t_bounds(args.t)
    config = SearchConfig(
        t_min=lo,
        t_max=hi,
        kinds=_parse_kinds(args.kinds),
        parallelism=args.parallelism,
        equality_cap=args.equality_cap,
        stop_on_first=args.stop_on_first,
        weight_cap=args.weight_cap,
        emit_min_slack=args.min_slack,
        collect_rows=bool(args.csv),
    )
    result = run_sweep(source, config)
    _write_outputs(args, result)
    if args.format == "jsonl":
        sys.stdout.write(findings_to_jsonl(result.findings))
    elif args.format == "json":
        print(
            json.dumps(
                {"findings": [f.to_json_dict() for f in result.findings], "summary": result.summary},
                sort_keys=True,
                indent=2,
            )
        )
    else:
        _print_sweep_human(result)
    return _sweep_exit_code(args, result)


def _t_bounds(raw: str | None) -> tuple[int, int | None]:
    if raw is None:
        return 2, None
    if ":" in raw:
        lo_s, hi_s = raw.split(":", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(raw)
    if lo < 1 or hi < lo:
        raise ValueError(f"invalid t range {raw!r}")
    return lo, hi


def cmd_enumerate(args) -> int:
    if args.n > ENUMERATION_CAP:
        raise CapExceededError(
            f"built-in enumeration supports n <= {ENUMERATION_CAP}; "
            "pipe graph6 from an external enumerator for larger n"
        )
    for g in enumerate_graphs(args.n):
        print(write_graph6(g))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = load_single_graph(args.graph, args.edge_list)
    mismatches = 0
    if args.mode == "cliques":
        if g.n > NAIVE_CLIQUE_CAP:
            raise CapExceededError(f"clique oracle supports n <= {NAIVE_CLIQUE_CAP}, got n={g.n}")
        print(f"{'t':>3} {'fast':>8} {'oracle':>8}")
        for t in range(1, g.n + 1):
            fast = count_cliques(g, t)
            slow = naive_count_cliques(g, t)
            ok = fast.total == slow.total and fast.per_vertex == slow.per_vertex and fast.per_edge == slow.per_edge
            if not ok:
                mismatches += 1
            print(f"{t:>3} {fast.total:>8} {slow.total:>8} {'' if ok else ' MISMATCH'}")
        fast_all = count_all_cliques(g)
        slow_all = naive_count_all_cliques(g)
        if fast_all != slow_all:
            mismatches += 1
        print(f"all {fast_all:>8} {slow_all:>8}{'' if fast_all == slow_all else ' MISMATCH'}")
    else:
        if g.n > DP_WEIGHT_CAP:
            raise CapExceededError(f"path-weight oracle supports n <= {DP_WEIGHT_CAP}, got n={g.n}")
        from .weights import longest_cycle_through_edge, longest_path_through_edge

        print(f"{'edge':>7} {'p fast':>7} {'p dp':>7} {'c fast':>7} {'c dp':>7}")
        for e in g.edges():
            pf = longest_path_through_edge(g, e)
            po = dp_longest_path_through_edge(g, e)
            cf = longest_cycle_through_edge(g, e)
            co = dp_longest_cycle_through_edge(g, e)
            ok = pf == po and cf == co
            if not ok:
                mismatches += 1
            print(f"{_edge_key(e):>7} {pf:>7} {po:>7} {cf:>7} {co:>7}{'' if ok else ' MISMATCH'}")
    if mismatches:
        print(f"{mismatches} mismatch(es): fast path disagrees with the oracle", file=sys.stderr)
        return EXIT_INTERNAL
    print("fast and oracle agree")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliquebounds",
        description="Localized clique bounds: exact verification and counterexample search on small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common_graph(p):
        p.add_argument("graph", help="graph6 literal, file path, or '-' for stdin")
        p.add_argument("--edge-list", action="store_true", help="input is 'n m' edge-list text")

    p_analyze = sub.add_parser("analyze", help="full report for a single graph")
    add_common_graph(p_analyze)
    p_analyze.add_argument("--t", help="clique orders MIN:MAX (default 2..max degree + 1)")
    p_analyze.add_argument("--format", choices=("human", "json"), default="human")
    p_analyze.add_argument("--weight-cap", type=int, default=DEFAULT_EXACT_CAP)
    p_analyze.set_defaults(func=cmd_analyze)

    def add_sweep_flags(p):
        p.add_argument("--t", help="clique orders MIN:MAX (default 2..max degree + 1 per graph)")
        p.add_argument("--kinds", default=",".join(DEFAULT_SWEEP_KINDS),
                       help="comma-separated bound kinds, or 'all'")
        p.add_argument("--parallelism", type=int, default=_default_parallelism(),
                       help=f"worker processes (default ${PARALLELISM_ENV} or 1)")
        p.add_argument("--equality-cap", type=int, default=100,
                       help="max EQUALITY_INSTANCE findings per (n,t)")
        p.add_argument("--weight-cap", type=int, default=DEFAULT_EXACT_CAP)
        p.add_argument("--findings", help="write findings as JSON lines to this path")
        p.add_argument("--summary", help="write the summary JSON to this path")
        p.add_argument("--csv", help="write the per-evaluation slack table as CSV to this path")
        p.add_argument("--format", choices=("human", "json", "jsonl"), default="human")
        p.add_argument("--fail-on", default="",
                       help="comma-separated finding categories that set exit code 1")

    p_verify = sub.add_parser("verify", help="sweep a graph6 stream against the bounds")
    p_verify.add_argument("input", help="graph6 file path or '-' for stdin")
    add_sweep_flags(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_search = sub.add_parser("search", help="search graph families for findings")
    src = p_search.add_mutually_exclusive_group(required=True)
    src.add_argument("--exhaustive", help="comma-separated vertex counts, e.g. 4,5,6")
    src.add_argument("--random", choices=("gnp", "regular"), help="random model")
    p_search.add_argument("--n", type=int, default=8, help="vertices for the random model")
    p_search.add_argument("--count", type=int, default=100, help="number of random graphs")
    p_search.add_argument("--p", type=float, default=0.5, help="edge probability for gnp")
    p_search.add_argument("--d", type=int, default=3, help="degree for the regular model")
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("--connected-only", action="store_true")
    p_search.add_argument("--max-edges", type=int)
    p_search.add_argument("--stop-on-first", action="store_true",
                          help="stop at the first bound/conjecture violation")
    p_search.add_argument("--min-slack", action="store_true",
                          help="emit MIN_SLACK findings per (n,t,kind)")
    add_sweep_flags(p_search)
    p_search.set_defaults(func=cmd_search)

    p_enum = sub.add_parser("enumerate", help="print one graph6 line per isomorphism class")
    p_enum.add_argument("n", type=int)
    p_enum.set_defaults(func=cmd_enumerate)

    p_oracle = sub.add_parser("oracle", help="cross-check fast algorithms against naive oracles")
    add_common_graph(p_oracle)
    p_oracle.add_argument("--mode", choices=("cliques", "pweights"), default="cliques")
    p_oracle.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, CapExceededError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
