"""Sweep harness: stream graphs, evaluate bounds and certificates, emit findings.

Workers see one graph at a time (as its graph6 line, which doubles as the
witness string) and return plain dicts; the consumer assembles findings in
stream order, so the output is identical for any parallelism width. Every
finding can be replayed from its witness alone.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import partial
from typing import Iterator

from .bounds import (
    DEFAULT_SWEEP_KINDS,
    KIND_CC_CYCLE,
    KIND_CC_PATH,
    KIND_LOCAL_EDGE_CYCLE,
    KIND_LOCAL_EDGE_PATH,
    KIND_LOCAL_VERTEX,
    KIND_WOOD,
    cc_cycle_bound,
    cc_path_bound,
    compare_local_vs_classical,
    equals_count,
    local_edge_cycle_bound,
    local_edge_path_bound,
    local_vertex_bound,
    wood_bound,
)
from .certificates import (
    VERDICT_DISCREPANCY,
    conjecture_verdict,
    cross_validate,
    cycle_equality_certificate,
    edge_equality_certificate,
    is_block_forest_of_kr,
    is_clique_union_with_isolated,
    is_disjoint_clique_union,
    vertex_equality_certificate,
)
from .cliques import clique_census
from .enumeration import enumerate_graphs, random_graph
from .graph import Graph, GraphError, connected_components, parse_graph6, write_graph6
from .weights import DEFAULT_EXACT_CAP, CapExceededError, WeightMap, all_weights

CATEGORY_BOUND_VIOLATION = "BOUND_VIOLATION"
CATEGORY_CONJECTURE_VIOLATION = "CONJECTURE_VIOLATION"
CATEGORY_CHAR_DISCREPANCY = "CHAR_DISCREPANCY"
CATEGORY_EQUALITY_INSTANCE = "EQUALITY_INSTANCE"
CATEGORY_MIN_SLACK = "MIN_SLACK"

VIOLATION_CATEGORIES = (CATEGORY_BOUND_VIOLATION, CATEGORY_CONJECTURE_VIOLATION)

# pseudo-kinds for dominance violations (always checked, never requested)
KIND_DOMINANCE_VERTEX = "dominance_vertex"
KIND_DOMINANCE_EDGE = "dominance_edge"


@dataclass(frozen=True)
class SearchConfig:
    t_min: int = 2
    t_max: int | None = None  # None: per-graph max degree + 1
    kinds: tuple[str, ...] = DEFAULT_SWEEP_KINDS
    parallelism: int = 1
    equality_cap: int = 100
    stop_on_first: bool = False
    weight_cap: int = DEFAULT_EXACT_CAP
    emit_min_slack: bool = False
    collect_rows: bool = False


@dataclass(frozen=True)
class GraphSource:
    """A stream of graphs: exhaustive small-n, a graph6 file, or a random model."""

    kind: str  # "exhaustive" | "graph6_file" | "graph6_lines" | "random"
    ns: tuple[int, ...] = ()
    path: str | None = None
    lines: tuple[str, ...] = ()
    model: str = "gnp"
    n: int = 0
    count: int = 0
    seed: int = 0
    params: dict = field(default_factory=dict)
    connected_only: bool = False
    max_edges: int | None = None

    def _accept(self, g: Graph) -> bool:
        if self.max_edges is not None and g.m > self.max_edges:
            return False
        if self.connected_only and len(connected_components(g)) != 1:
            return False
        return True

    def graphs(self) -> Iterator[str]:
        """Yield graph6 lines, already validated and filtered."""
        if self.kind == "exhaustive":
            for n in self.ns:
                for g in enumerate_graphs(n):
                    if self._accept(g):
                        yield write_graph6(g)
        elif self.kind == "graph6_file":
            assert self.path is not None
            with open(self.path, "r", encoding="ascii") as fh:
                yield from self._parse_lines(fh)
        elif self.kind == "graph6_lines":
            yield from self._parse_lines(self.lines)
        elif self.kind == "random":
            for i in range(self.count):
                g = random_graph(self.model, self.n, self.params, self.seed + i)
                if self._accept(g):
                    yield write_graph6(g)
        else:
            raise ValueError(f"unknown graph source kind {self.kind!r}")

    def _parse_lines(self, lines) -> Iterator[str]:
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                g = parse_graph6(line)
            except GraphError as exc:
                raise GraphError(f"line {lineno}: {exc}") from None
            if self._accept(g):
                yield line


@dataclass(frozen=True)
class Finding:
    """One replayable search result, anchored to its graph6 witness."""

    category: str
    graph6: str
    n: int
    m: int
    t: int
    kind: str
    count: int
    bound_num: int
    bound_den: int
    slack_num: int
    slack_den: int
    certificate: bool | None
    detail: str

    def to_json_dict(self) -> dict:
        return {
            "category": self.category,
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "t": self.t,
            "kind": self.kind,
            "count": self.count,
            "bound_num": self.bound_num,
            "bound_den": self.bound_den,
            "slack_num": self.slack_num,
            "slack_den": self.slack_den,
            "certificate": self.certificate,
            "detail": self.detail,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "Finding":
        return cls(**{k: d[k] for k in cls.__dataclass_fields__})


def classical_path_r(weights: WeightMap, m: int) -> int:
    # tightest valid path premise: no path longer than the longest one
    return max(weights.longest_path + 1, 2) if m > 0 else 2


def classical_cycle_r(weights: WeightMap) -> int:
    return max(weights.circumference, 2)


def evaluate_kind(g: Graph, weights: WeightMap, count: int, t: int, kind: str):
    """(bound, certificate_holds) for one per-order bound kind, or None if t is
    outside the kind's domain."""
    if kind == KIND_LOCAL_VERTEX:
        if t < 1:
            return None
        return local_vertex_bound(g, t), vertex_equality_certificate(g, t).holds
    if kind == KIND_WOOD:
        if t < 1:
            return None
        d = g.max_degree()
        return wood_bound(g.n, d, t), is_disjoint_clique_union(g, d + 1)
    if t < 2:
        return None
    if kind == KIND_LOCAL_EDGE_PATH:
        return local_edge_path_bound(g, weights, t), edge_equality_certificate(g, weights, t).holds
    if kind == KIND_LOCAL_EDGE_CYCLE:
        return local_edge_cycle_bound(g, weights, t), cycle_equality_certificate(g, weights, t).holds
    if kind == KIND_CC_PATH:
        r = classical_path_r(weights, g.m)
        return cc_path_bound(g.m, r, t), is_clique_union_with_isolated(g, r)
    if kind == KIND_CC_CYCLE:
        r = classical_cycle_r(weights)
        return cc_cycle_bound(g.m, r, t), is_block_forest_of_kr(g, r)
    raise ValueError(f"unknown per-order bound kind {kind!r}")


def sweep_worker(line: str, config: SearchConfig) -> dict:
    """Analyze one graph6 line; returns a JSON-able record."""
    g = parse_graph6(line)
    record: dict = {"graph6": line, "n": g.n, "m": g.m, "error": None, "evals": [], "verdicts": [], "dominance_violations": []}
    try:
        weights = all_weights(g, config.weight_cap)
    except CapExceededError as exc:
        record["error"] = str(exc)
        return record
    census = clique_census(g)
    t_hi = config.t_max if config.t_max is not None else max(g.max_degree() + 1, config.t_min)
    for t in range(config.t_min, t_hi + 1):
        count = census[t].total if 1 <= t <= g.n else 0
        for kind in config.kinds:
            res = evaluate_kind(g, weights, count, t, kind)
            if res is None:
                continue
            bound, cert = res
            slack = bound - count
            record["evals"].append(
                {
                    "t": t,
                    "kind": kind,
                    "count": count,
                    "bound_num": bound.numerator,
                    "bound_den": bound.denominator,
                    "slack_num": slack.numerator,
                    "slack_den": slack.denominator,
                    "equality": equals_count(count, bound),
                    "certificate": cert,
                }
            )
        if KIND_LOCAL_VERTEX in config.kinds or KIND_LOCAL_EDGE_PATH in config.kinds:
            cv = cross_validate(g, t, weights)
            if KIND_LOCAL_VERTEX in config.kinds and cv.vertex_verdict == VERDICT_DISCREPANCY:
                core = parse_graph6(cv.vertex_core_graph6)
                core_count = clique_census(core)[t].total if 1 <= t <= core.n else 0
                core_bound = local_vertex_bound(core, t)
                record["verdicts"].append(
                    {
                        "t": t,
                        "kind": KIND_LOCAL_VERTEX,
                        "count": core_count,
                        "bound_num": core_bound.numerator,
                        "bound_den": core_bound.denominator,
                        "certificate": cv.vertex_core_certificate,
                        "detail": f"core equality {cv.vertex_core_equality} vs core certificate {cv.vertex_core_certificate} (core {cv.vertex_core_graph6})",
                    }
                )
            if KIND_LOCAL_EDGE_PATH in config.kinds and cv.edge_verdict == VERDICT_DISCREPANCY:
                bound = local_edge_path_bound(g, weights, t)
                record["verdicts"].append(
                    {
                        "t": t,
                        "kind": KIND_LOCAL_EDGE_PATH,
                        "count": count,
                        "bound_num": bound.numerator,
                        "bound_den": bound.denominator,
                        "certificate": cv.edge_certificate,
                        "detail": f"equality {cv.edge_equality} vs certificate {cv.edge_certificate}",
                    }
                )
        if KIND_LOCAL_EDGE_CYCLE in config.kinds and t >= 2:
            verdict, equality, cert = conjecture_verdict(g, weights, t, count)
            if verdict == VERDICT_DISCREPANCY:
                bound = local_edge_cycle_bound(g, weights, t)
                record["verdicts"].append(
                    {
                        "t": t,
                        "kind": KIND_LOCAL_EDGE_CYCLE,
                        "count": count,
                        "bound_num": bound.numerator,
                        "bound_den": bound.denominator,
                        "certificate": cert,
                        "detail": f"equality {equality} vs block-forest certificate {cert}",
                    }
                )
        if t >= 2:
            dom = compare_local_vs_classical(g, weights, t)
            if not dom.vertex_ok:
                record["dominance_violations"].append(
                    {"t": t, "kind": KIND_DOMINANCE_VERTEX, "local_num": dom.local_vertex.numerator,
                     "local_den": dom.local_vertex.denominator, "classical_num": dom.wood.numerator,
                     "classical_den": dom.wood.denominator}
                )
            if not dom.edge_ok:
                assert dom.local_edge is not None and dom.cc_path is not None
                record["dominance_violations"].append(
                    {"t": t, "kind": KIND_DOMINANCE_EDGE, "local_num": dom.local_edge.numerator,
                     "local_den": dom.local_edge.denominator, "classical_num": dom.cc_path.numerator,
                     "classical_den": dom.cc_path.denominator}
                )
    return record


@dataclass
class SweepResult:
    findings: list[Finding]
    summary: dict
    rows: list[dict]


def _category_for_violation(kind: str) -> str:
    if kind == KIND_LOCAL_EDGE_CYCLE:
        return CATEGORY_CONJECTURE_VIOLATION
    return CATEGORY_BOUND_VIOLATION


def run_sweep(source: GraphSource, config: SearchConfig) -> SweepResult:
    """Drive the sweep over a graph source.

    Output (findings, summary, rows) is deterministic: results are merged in
    stream order regardless of the parallelism width.
    """
    findings: list[Finding] = []
    rows: list[dict] = []
    equality_seen: dict[tuple[int, int], int] = {}
    min_slack: dict[tuple[int, int, str], tuple[Fraction, Finding]] = {}
    stats_nt: dict[tuple[int, int], dict] = {}
    graphs_per_n: dict[int, int] = {}
    cap_errors: list[str] = []
    total_graphs = 0

    def consume(record: dict) -> bool:
        """Merge one worker record; returns True when the sweep should stop."""
        nonlocal total_graphs
        total_graphs += 1
        n, m, line = record["n"], record["m"], record["graph6"]
        graphs_per_n[n] = graphs_per_n.get(n, 0) + 1
        if record["error"] is not None:
            cap_errors.append(f"{line}: {record['error']}")
            return False
        stop = False
        for ev in record["evals"]:
            t, kind = ev["t"], ev["kind"]
            key = (n, t)
            st = stats_nt.setdefault(key, {})
            ks = st.setdefault(kind, {"evaluations": 0, "equalities": 0, "violations": 0, "discrepancies": 0})
            ks["evaluations"] += 1
            if config.collect_rows:
                rows.append(
                    {
                        "graph6": line, "n": n, "m": m, "t": t, "kind": kind,
                        "count": ev["count"], "bound_num": ev["bound_num"], "bound_den": ev["bound_den"],
                        "equality": ev["equality"], "certificate": ev["certificate"],
                    }
                )
            base = Finding(
                category="", graph6=line, n=n, m=m, t=t, kind=kind,
                count=ev["count"], bound_num=ev["bound_num"], bound_den=ev["bound_den"],
                slack_num=ev["slack_num"], slack_den=ev["slack_den"],
                certificate=ev["certificate"], detail="",
            )
            slack = Fraction(ev["slack_num"], ev["slack_den"])
            if slack < 0:
                ks["violations"] += 1
                findings.append(replace(base, category=_category_for_violation(kind),
                                         detail=f"count exceeds bound by {-slack}"))
                if config.stop_on_first:
                    stop = True
            elif ev["equality"]:
                ks["equalities"] += 1
                seen = equality_seen.get(key, 0)
                if seen < config.equality_cap:
                    equality_seen[key] = seen + 1
                    findings.append(replace(base, category=CATEGORY_EQUALITY_INSTANCE,
                                            detail="bound attained exactly"))
            else:
                cur = min_slack.get((n, t, kind))
                if cur is None or slack < cur[0]:
                    min_slack[(n, t, kind)] = (slack, replace(base, category=CATEGORY_MIN_SLACK,
                                                              detail="smallest positive slack for this (n,t,kind)"))
        for vd in record["verdicts"]:
            t, kind = vd["t"], vd["kind"]
            st = stats_nt.setdefault((n, t), {})
            ks = st.setdefault(kind, {"evaluations": 0, "equalities": 0, "violations": 0, "discrepancies": 0})
            ks["discrepancies"] += 1
            count = vd["count"]
            bound = Fraction(vd["bound_num"], vd["bound_den"])
            slack = bound - count
            findings.append(
                Finding(
                    category=CATEGORY_CHAR_DISCREPANCY, graph6=line, n=n, m=m, t=t, kind=kind,
                    count=count, bound_num=bound.numerator, bound_den=bound.denominator,
                    slack_num=slack.numerator, slack_den=slack.denominator,
                    certificate=vd["certificate"], detail=vd["detail"],
                )
            )
        for dv in record["dominance_violations"]:
            local = Fraction(dv["local_num"], dv["local_den"])
            classical = Fraction(dv["classical_num"], dv["classical_den"])
            gap = classical - local
            findings.append(
                Finding(
                    category=CATEGORY_BOUND_VIOLATION, graph6=line, n=n, m=m, t=dv["t"], kind=dv["kind"],
                    count=0, bound_num=classical.numerator, bound_den=classical.denominator,
                    slack_num=gap.numerator, slack_den=gap.denominator, certificate=None,
                    detail=f"localized bound {local} exceeds classical bound {classical}",
                )
            )
            if config.stop_on_first:
                stop = True
        return stop

    lines = source.graphs()
    if config.parallelism > 1:
        worker = partial(sweep_worker, config=config)
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            for record in pool.map(worker, lines, chunksize=16):
                if consume(record):
                    break
    else:
        for line in lines:
            if consume(sweep_worker(line, config)):
                break

    if config.emit_min_slack:
        for key in sorted(min_slack):
            findings.append(min_slack[key][1])

    summary = {
        "graphs": total_graphs,
        "graphs_per_n": {str(n): graphs_per_n[n] for n in sorted(graphs_per_n)},
        "cap_errors": cap_errors,
        "by_nt": {
            f"n={n},t={t}": {
                kind: dict(ks) for kind, ks in sorted(stats_nt[(n, t)].items())
            }
            for (n, t) in sorted(stats_nt)
        },
        "min_positive_slack": {
            f"n={n},t={t},kind={kind}": {
                "slack_num": slack.numerator,
                "slack_den": slack.denominator,
                "graph6": finding.graph6,
            }
            for (n, t, kind), (slack, finding) in sorted(min_slack.items())
        },
    }
    return SweepResult(findings, summary, rows)


def replay_finding(finding: Finding, weight_cap: int = DEFAULT_EXACT_CAP) -> bool:
    """Re-analyze a finding's witness in isolation and confirm it reproduces
    the category and the exact rationals."""
    try:
        g = parse_graph6(finding.graph6)
    except GraphError:
        return False
    if g.n != finding.n or g.m != finding.m:
        return False
    t = finding.t
    weights = all_weights(g, weight_cap)
    count = clique_census(g)[t].total if 1 <= t <= g.n else 0

    if finding.kind in (KIND_DOMINANCE_VERTEX, KIND_DOMINANCE_EDGE):
        dom = compare_local_vs_classical(g, weights, t)
        ok = not dom.vertex_ok if finding.kind == KIND_DOMINANCE_VERTEX else not dom.edge_ok
        return ok and finding.category == CATEGORY_BOUND_VIOLATION

    if finding.category == CATEGORY_CHAR_DISCREPANCY:
        if finding.kind == KIND_LOCAL_VERTEX:
            cv = cross_validate(g, t, weights)
            if cv.vertex_verdict != VERDICT_DISCREPANCY:
                return False
            core = parse_graph6(cv.vertex_core_graph6)
            core_count = clique_census(core)[t].total if 1 <= t <= core.n else 0
            core_bound = local_vertex_bound(core, t)
            return (
                core_count == finding.count
                and core_bound.numerator == finding.bound_num
                and core_bound.denominator == finding.bound_den
            )
        if finding.kind == KIND_LOCAL_EDGE_PATH:
            cv = cross_validate(g, t, weights)
            if cv.edge_verdict != VERDICT_DISCREPANCY:
                return False
            bound = local_edge_path_bound(g, weights, t)
            return count == finding.count and bound == Fraction(finding.bound_num, finding.bound_den)
        if finding.kind == KIND_LOCAL_EDGE_CYCLE:
            verdict, _, _ = conjecture_verdict(g, weights, t, count)
            if verdict != VERDICT_DISCREPANCY:
                return False
            bound = local_edge_cycle_bound(g, weights, t)
            return count == finding.count and bound == Fraction(finding.bound_num, finding.bound_den)
        return False

    res = evaluate_kind(g, weights, count, t, finding.kind)
    if res is None:
        return False
    bound, _cert = res
    if count != finding.count or bound != Fraction(finding.bound_num, finding.bound_den):
        return False
    slack = bound - count
    if slack != Fraction(finding.slack_num, finding.slack_den):
        return False
    if finding.category in VIOLATION_CATEGORIES:
        return slack < 0 and _category_for_violation(finding.kind) == finding.category
    if finding.category == CATEGORY_EQUALITY_INSTANCE:
        return slack == 0
    if finding.category == CATEGORY_MIN_SLACK:
        return slack > 0
    return False


def findings_to_jsonl(findings: list[Finding]) -> str:
    return "".join(json.dumps(f.to_json_dict(), sort_keys=True) + "\n" for f in findings)


def summary_to_json(summary: dict) -> str:
    return json.dumps(summary, sort_keys=True, indent=2) + "\n"


CSV_COLUMNS = ["graph6", "n", "m", "t", "kind", "count", "bound_num", "bound_den", "equality", "certificate"]


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        out = dict(row)
        if out["certificate"] is None:
            out["certificate"] = ""
        writer.writerow(out)
    return buf.getvalue()
