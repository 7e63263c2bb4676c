"""CLI behavior: subcommands, formats, and the exit-code contract."""

import io
import json

from cliquebounds.cli import EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_k4_human(self, capsys):
        code, out, _ = run(capsys, "analyze", "C~", "--t", "3")
        assert code == EXIT_OK
        assert "count=4" in out
        assert "equality=True" in out
        assert "certificate=holds" in out
        assert "vertex=both-hold" in out

    def test_k4_json_schema(self, capsys):
        code, out, _ = run(capsys, "analyze", "C~", "--t", "3", "--format", "json")
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["graph6"] == "C~" and report["n"] == 4 and report["m"] == 6
        kinds = {r["kind"] for r in report["reports"]}
        assert kinds == {
            "local_vertex",
            "wood_classical",
            "local_edge_path",
            "local_edge_cycle_conjecture",
            "cc_path_classical",
            "cc_cycle_classical",
        }
        for r in report["reports"]:
            assert r["count"] == 4
            assert r["bound"] == {"num": 4, "den": 1, "decimal": 4.0}
            assert r["equality"] is True
            assert r["certificate"]["holds"] is True

    def test_p4_edge_list_values(self, capsys, tmp_path):
        path = tmp_path / "p4.edges"
        path.write_text("4 3\n0 1\n1 2\n2 3\n")
        code, out, _ = run(capsys, "analyze", str(path), "--edge-list", "--t", "3", "--format", "json")
        assert code == EXIT_OK
        report = json.loads(out)
        by_kind = {r["kind"]: r for r in report["reports"]}
        assert by_kind["local_vertex"]["count"] == 0
        assert by_kind["local_vertex"]["bound"]["num"] == 2
        assert by_kind["local_vertex"]["bound"]["den"] == 3
        assert by_kind["local_edge_path"]["bound"] == {"num": 2, "den": 1, "decimal": 2.0}

    def test_tree_cycle_bound_is_zero_and_tight(self, capsys):
        # star on 4 vertices: conjectured cycle bound 0 equals the count, certificate holds
        code, out, _ = run(capsys, "analyze", "Cs", "--t", "3", "--format", "json")
        assert code == EXIT_OK
        report = json.loads(out)
        by_kind = {r["kind"]: r for r in report["reports"]}
        cyc = by_kind["local_edge_cycle_conjecture"]
        assert cyc["count"] == 0
        assert cyc["bound"]["num"] == 0
        assert cyc["equality"] is True
        assert cyc["certificate"]["holds"] is True

    def test_default_t_range_tracks_max_degree(self, capsys):
        code, out, _ = run(capsys, "analyze", "C~", "--format", "json")
        report = json.loads(out)
        assert report["t_values"] == [2, 3, 4]

    def test_parse_error_exits_2(self, capsys):
        code, _, err = run(capsys, "analyze", "E??*")
        assert code == EXIT_USAGE
        assert "error" in err


class TestVerify:
    def test_k4_stream_yields_one_equality_row_per_kind(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("C~\n"))
        code, out, _ = run(capsys, "verify", "-", "--t", "3", "--format", "jsonl")
        assert code == EXIT_OK
        rows = [json.loads(line) for line in out.splitlines()]
        assert len(rows) == 4
        assert {r["category"] for r in rows} == {"EQUALITY_INSTANCE"}
        assert {r["kind"] for r in rows} == {
            "local_vertex",
            "local_edge_path",
            "cc_cycle_classical",
            "local_edge_cycle_conjecture",
        }

    def test_malformed_line_names_position(self, capsys, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_text("C~\nBw\nE??*\n")
        code, _, err = run(capsys, "verify", str(path))
        assert code == EXIT_USAGE
        assert "line 3" in err

    def test_exhaustive_file_clean_exit(self, capsys, tmp_path):
        from cliquebounds import enumerate_graphs, write_graph6

        path = tmp_path / "all5.g6"
        path.write_text("".join(write_graph6(g) + "\n" for g in enumerate_graphs(5)))
        code, out, _ = run(capsys, "verify", str(path), "--t", "2:5", "--kinds", "all")
        assert code == EXIT_OK
        assert "BOUND_VIOLATION" not in out

    def test_fail_on_selects_severity(self, capsys, tmp_path):
        path = tmp_path / "p3.g6"
        path.write_text("Bg\n")
        code, _, _ = run(capsys, "verify", str(path), "--t", "2")
        assert code == EXIT_OK
        code, _, _ = run(
            capsys, "verify", str(path), "--t", "2", "--fail-on", "CHAR_DISCREPANCY"
        )
        assert code == 1

    def test_outputs_written(self, capsys, tmp_path):
        src = tmp_path / "k4.g6"
        src.write_text("C~\n")
        findings = tmp_path / "f.jsonl"
        summary = tmp_path / "s.json"
        csv_path = tmp_path / "rows.csv"
        code, _, _ = run(
            capsys, "verify", str(src), "--t", "3",
            "--findings", str(findings), "--summary", str(summary), "--csv", str(csv_path),
        )
        assert code == EXIT_OK
        assert len(findings.read_text().splitlines()) == 4
        assert json.loads(summary.read_text())["graphs"] == 1
        header = csv_path.read_text().splitlines()[0]
        assert header == "graph6,n,m,t,kind,count,bound_num,bound_den,equality,certificate"


class TestSearch:
    def test_exhaustive_search_json(self, capsys):
        code, out, _ = run(
            capsys, "search", "--exhaustive", "3,4", "--t", "3", "--format", "json"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["summary"]["graphs"] == 15

    def test_random_search_runs(self, capsys):
        code, out, _ = run(
            capsys, "search", "--random", "gnp", "--n", "7", "--count", "10",
            "--p", "0.5", "--seed", "5", "--t", "2:4", "--format", "json",
        )
        assert code == EXIT_OK
        assert json.loads(out)["summary"]["graphs"] == 10

    def test_unknown_kind_exits_2(self, capsys):
        code, _, err = run(capsys, "search", "--exhaustive", "3", "--kinds", "bogus")
        assert code == EXIT_USAGE
        assert "unknown bound kind" in err


class TestEnumerate:
    def test_counts(self, capsys):
        code, out, _ = run(capsys, "enumerate", "4")
        assert code == EXIT_OK
        assert len(out.splitlines()) == 11

    def test_over_cap(self, capsys):
        code, _, err = run(capsys, "enumerate", "12")
        assert code == EXIT_USAGE
        assert "external enumerator" in err


class TestOracle:
    def test_cliques_agree(self, capsys):
        code, out, _ = run(capsys, "oracle", "C~", "--mode", "cliques")
        assert code == EXIT_OK
        assert "fast and oracle agree" in out

    def test_pweights_agree(self, capsys):
        code, out, _ = run(capsys, "oracle", "D~{", "--mode", "pweights")
        assert code == EXIT_OK
        assert "fast and oracle agree" in out

    def test_cap_error(self, capsys):
        from cliquebounds import from_edge_list, write_graph6

        big = write_graph6(from_edge_list(30, [(i, i + 1) for i in range(29)]))
        code, _, err = run(capsys, "oracle", big, "--mode", "cliques")
        assert code == EXIT_USAGE
        assert "n <= 10" in err


def test_env_var_sets_default_parallelism(monkeypatch):
    from cliquebounds.cli import _default_parallelism

    monkeypatch.setenv("CLIQUEBOUNDS_PARALLELISM", "6")
    assert _default_parallelism() == 6
    monkeypatch.setenv("CLIQUEBOUNDS_PARALLELISM", "junk")
    assert _default_parallelism() == 1
