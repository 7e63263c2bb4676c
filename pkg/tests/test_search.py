"""Sweep harness: finding generation, replayability, determinism, sources."""

import pytest

from cliquebounds import (
    Finding,
    GraphSource,
    SearchConfig,
    canonical_form,
    from_edge_list,
    parse_graph6,
    replay_finding,
    run_sweep,
    write_graph6,
)
from cliquebounds.bounds import (
    DEFAULT_SWEEP_KINDS,
    KIND_LOCAL_EDGE_CYCLE,
    KIND_LOCAL_EDGE_PATH,
    KIND_LOCAL_VERTEX,
)
from cliquebounds.graph import GraphError
from cliquebounds.search import (
    CATEGORY_BOUND_VIOLATION,
    CATEGORY_CHAR_DISCREPANCY,
    CATEGORY_CONJECTURE_VIOLATION,
    CATEGORY_EQUALITY_INSTANCE,
    CATEGORY_MIN_SLACK,
    CSV_COLUMNS,
    findings_to_jsonl,
    rows_to_csv,
    summary_to_json,
)


@pytest.fixture(scope="module")
def small_sweep():
    source = GraphSource(kind="exhaustive", ns=(1, 2, 3, 4, 5))
    config = SearchConfig(t_min=1, t_max=5, kinds=DEFAULT_SWEEP_KINDS)
    return run_sweep(source, config)


def test_no_violations_on_small_graphs(small_sweep):
    cats = {f.category for f in small_sweep.findings}
    assert CATEGORY_BOUND_VIOLATION not in cats
    assert CATEGORY_CONJECTURE_VIOLATION not in cats


def test_discrepancies_only_for_vertex_bound_at_order_two(small_sweep):
    disc = [f for f in small_sweep.findings if f.category == CATEGORY_CHAR_DISCREPANCY]
    assert disc, "the order-2 vertex sweep must surface discrepancies"
    assert all(f.kind == KIND_LOCAL_VERTEX and f.t == 2 for f in disc)
    smallest = min(disc, key=lambda f: (f.n, f.graph6))
    p3 = from_edge_list(3, [(0, 1), (1, 2)])
    assert canonical_form(parse_graph6(smallest.graph6)) == canonical_form(p3)


def test_all_findings_replay(small_sweep):
    for finding in small_sweep.findings:
        assert replay_finding(finding), finding


def test_replay_rejects_tampered_witness(small_sweep):
    finding = next(f for f in small_sweep.findings if f.category == CATEGORY_EQUALITY_INSTANCE)
    from dataclasses import replace

    assert not replay_finding(replace(finding, count=finding.count + 1))
    assert not replay_finding(replace(finding, graph6="garbage"))


def test_parallel_determinism(small_sweep):
    source = GraphSource(kind="exhaustive", ns=(1, 2, 3, 4, 5))
    config = SearchConfig(t_min=1, t_max=5, kinds=DEFAULT_SWEEP_KINDS, parallelism=4)
    parallel = run_sweep(source, config)
    assert findings_to_jsonl(parallel.findings) == findings_to_jsonl(small_sweep.findings)
    assert summary_to_json(parallel.summary) == summary_to_json(small_sweep.summary)


def test_equality_cap():
    source = GraphSource(kind="exhaustive", ns=(5,))
    config = SearchConfig(t_min=2, t_max=2, kinds=(KIND_LOCAL_VERTEX,), equality_cap=3)
    result = run_sweep(source, config)
    eq = [f for f in result.findings if f.category == CATEGORY_EQUALITY_INSTANCE]
    assert len(eq) == 3
    # the summary still counts every equality instance
    total = sum(
        ks["equalities"] for stats in result.summary["by_nt"].values() for ks in stats.values()
    )
    assert total == 34  # handshake makes every n=5 graph tight at t=2


def test_summary_shape(small_sweep):
    summary = small_sweep.summary
    assert summary["graphs"] == 1 + 2 + 4 + 11 + 34
    assert summary["graphs_per_n"] == {"1": 1, "2": 2, "3": 4, "4": 11, "5": 34}
    assert summary["cap_errors"] == []
    key = "n=4,t=3"
    assert key in summary["by_nt"]
    assert summary["by_nt"][key][KIND_LOCAL_VERTEX]["evaluations"] == 11


def test_min_slack_emission():
    source = GraphSource(kind="exhaustive", ns=(4,))
    config = SearchConfig(
        t_min=3, t_max=3, kinds=(KIND_LOCAL_VERTEX,), emit_min_slack=True
    )
    result = run_sweep(source, config)
    ms = [f for f in result.findings if f.category == CATEGORY_MIN_SLACK]
    assert len(ms) == 1
    assert replay_finding(ms[0])
    assert result.summary["min_positive_slack"]


def test_graph6_file_source(tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text("C~\nBw\n\nBg\n")
    lines = list(GraphSource(kind="graph6_file", path=str(path)).graphs())
    assert lines == ["C~", "Bw", "Bg"]


def test_source_parse_error_names_line(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("C~\nBw\nE??*\n")
    with pytest.raises(GraphError, match="line 3"):
        list(GraphSource(kind="graph6_file", path=str(path)).graphs())


def test_source_filters():
    source = GraphSource(kind="exhaustive", ns=(4,), connected_only=True)
    lines = list(source.graphs())
    assert len(lines) == 6  # connected graphs on 4 vertices
    capped = GraphSource(kind="exhaustive", ns=(4,), max_edges=3)
    assert all(parse_graph6(line).m <= 3 for line in capped.graphs())


def test_random_source_reproducible():
    src = GraphSource(kind="random", model="gnp", n=6, count=5, seed=11, params={"p": 0.5})
    assert list(src.graphs()) == list(src.graphs())


def test_stop_on_first_flag_does_not_change_clean_runs(small_sweep):
    source = GraphSource(kind="exhaustive", ns=(1, 2, 3, 4, 5))
    config = SearchConfig(t_min=1, t_max=5, kinds=DEFAULT_SWEEP_KINDS, stop_on_first=True)
    result = run_sweep(source, config)
    assert findings_to_jsonl(result.findings) == findings_to_jsonl(small_sweep.findings)


def test_rows_csv_columns():
    source = GraphSource(kind="exhaustive", ns=(3,))
    config = SearchConfig(
        t_min=2, t_max=3, kinds=(KIND_LOCAL_VERTEX, KIND_LOCAL_EDGE_PATH), collect_rows=True
    )
    result = run_sweep(source, config)
    text = rows_to_csv(result.rows)
    header, first = text.splitlines()[:2]
    assert header.split(",") == CSV_COLUMNS
    assert len(result.rows) == 4 * 2 * 2  # 4 graphs, 2 orders, 2 kinds
    assert first.split(",")[0] == write_graph6(parse_graph6(first.split(",")[0]))


def test_finding_round_trips_through_json(small_sweep):
    f = small_sweep.findings[0]
    assert Finding.from_json_dict(f.to_json_dict()) == f


def test_cap_errors_are_counted_not_skipped():
    line = write_graph6(from_edge_list(8, [(i, i + 1) for i in range(7)]))
    source = GraphSource(kind="graph6_lines", lines=(line, "C~"))
    config = SearchConfig(t_min=2, t_max=3, kinds=(KIND_LOCAL_EDGE_CYCLE,), weight_cap=7)
    result = run_sweep(source, config)
    assert len(result.summary["cap_errors"]) == 1
    assert result.summary["graphs"] == 2
