import json

import pytest

import cyclebound as cb
from cyclebound.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestConstruct:
    def test_cycle(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "cycle", "--n", "6")
        assert code == 0
        assert out.strip() == cb.to_graph6(cb.cycle_graph(6))

    def test_sun(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "sun", "--m", "4", "--k", "1")
        assert code == 0
        assert out.strip() == cb.to_graph6(cb.sun_graph(4, 1))

    def test_extremal(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "extremal", "--r", "3", "--d", "4")
        assert code == 0
        assert out.strip() == cb.to_graph6(cb.extremal_graph(3, 4))

    def test_witness(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "witness", "--r", "5")
        assert code == 0
        assert cb.parse_graph6(out.strip()).n == 14

    def test_multisun(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "multisun", "--m", "4", "--k", "1", "--t", "2")
        assert code == 0
        assert cb.parse_graph6(out.strip()).n == 12

    def test_inadmissible_extremal_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "construct", "extremal", "--r", "3", "--d", "6")
        assert code == 2
        assert "vacuous" in err

    def test_figure_written(self, capsys, tmp_path):
        fig = tmp_path / "sun.png"
        code, _, _ = run_cli(
            capsys, "construct", "sun", "--m", "6", "--k", "2", "--figure", str(fig)
        )
        assert code == 0
        assert fig.stat().st_size > 0


class TestAnalyze:
    def test_tsv_columns(self, capsys, tmp_path):
        p = tmp_path / "in.g6"
        p.write_text(
            cb.to_graph6(cb.sun_graph(4, 1)) + "\n" + cb.to_graph6(cb.cycle_graph(6)) + "\n"
        )
        code, out, _ = run_cli(capsys, "analyze", "--input", str(p))
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("#graph6")
        row = lines[1].split("\t")
        assert row == [cb.to_graph6(cb.sun_graph(4, 1)), "8", "3", "4", "4", "4"]
        row = lines[2].split("\t")
        assert row == [cb.to_graph6(cb.cycle_graph(6)), "6", "3", "3", "6", "6"]

    def test_tree_prints_dash(self, capsys, tmp_path):
        p = tmp_path / "t.g6"
        p.write_text(cb.to_graph6(cb.from_edges(4, [(0, 1), (1, 2), (2, 3)])) + "\n")
        code, out, _ = run_cli(capsys, "analyze", "--input", str(p))
        assert code == 0
        row = out.strip().splitlines()[1].split("\t")
        assert row[4] == "-" and row[5] == "-"

    def test_corrupt_input_is_error(self, capsys, tmp_path):
        p = tmp_path / "bad.g6"
        p.write_text("Bw\nB\n")
        code, _, err = run_cli(capsys, "analyze", "--input", str(p))
        assert code == 2
        assert "line 2" in err

    def test_figures_directory(self, capsys, tmp_path):
        p = tmp_path / "in.g6"
        p.write_text("Bw\nA_\n")
        figs = tmp_path / "figs"
        code, _, _ = run_cli(capsys, "analyze", "--input", str(p), "--figures", str(figs))
        assert code == 0
        assert sorted(f.name for f in figs.iterdir()) == ["graph_0000.png", "graph_0001.png"]


class TestEnumerate:
    def test_matches_library_and_sorted(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--n", "5")
        assert code == 0
        lines = out.strip().splitlines()
        assert tuple(lines) == cb.connected_canonical_forms(5)
        assert lines == sorted(lines)

    def test_out_of_range(self, capsys):
        code, _, err = run_cli(capsys, "enumerate", "--n", "0")
        assert code == 2
        assert "error" in err


class TestVerify:
    def test_json_summary_and_exit_zero(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--claim", "thm1", "--max-n", "4")
        assert code == 0
        report = json.loads(out)
        assert report["graphs_checked"] == 10
        assert report["violated"] == 0
        assert report["counterexamples"] == []

    def test_usage_error_on_bad_claim(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--claim", "thm9", "--max-n", "4"])
        assert exc.value.code == 2

    def test_usage_error_when_no_source(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--claim", "thm1"])
        assert exc.value.code == 2

    def test_exit_one_on_violation(self, capsys, tmp_path, monkeypatch):
        # a doctored checker cannot be injected, so force a violation with a
        # universe the claim genuinely fails on: none exists, so instead
        # check the exit-code wiring through a report with violated > 0
        import cyclebound.cli as cli_mod

        class FakeReport:
            violated = 1

            def to_json(self):
                return {"violated": 1}

        monkeypatch.setattr(cli_mod, "verify_range", lambda *a, **k: FakeReport())
        code, _, _ = run_cli(capsys, "verify", "--claim", "thm1", "--max-n", "3")
        assert code == 1

    def test_plot_written(self, capsys, tmp_path):
        fig = tmp_path / "verify.png"
        code, _, _ = run_cli(
            capsys, "verify", "--claim", "cor3", "--max-n", "5", "--plot", str(fig)
        )
        assert code == 0
        assert fig.stat().st_size > 0

    def test_file_universe(self, capsys, tmp_path):
        p = tmp_path / "u.g6"
        p.write_text("".join(s + "\n" for s in cb.connected_canonical_forms(4)))
        code, out, _ = run_cli(capsys, "verify", "--claim", "thm4", "--input", str(p))
        assert code == 0
        assert json.loads(out)["graphs_checked"] == 6


class TestMinorder:
    def test_found(self, capsys):
        code, out, _ = run_cli(capsys, "minorder", "--r", "2", "--d", "2", "--cap", "5")
        assert code == 0
        data = json.loads(out)
        assert data["status"] == "found"
        assert data["order"] == 4
        assert cb.canonical_form(cb.cycle_graph(4)) in data["witnesses"]

    def test_undetermined(self, capsys):
        code, out, _ = run_cli(capsys, "minorder", "--r", "4", "--d", "4", "--cap", "4")
        assert code == 0
        assert json.loads(out)["status"] == "undetermined"

    def test_invalid_pair(self, capsys):
        code, _, err = run_cli(capsys, "minorder", "--r", "2", "--d", "5")
        assert code == 2
        assert "error" in err


class TestStdin:
    def test_analyze_reads_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("Bw\n"))
        code, out, _ = run_cli(capsys, "analyze")
        assert code == 0
        assert out.strip().splitlines()[1].split("\t")[0] == "Bw"


class TestCrossProcessDeterminism:
    def test_enumerate_byte_identical_across_runs(self):
        import subprocess
        import sys

        cmd = [sys.executable, "-m", "cyclebound.cli", "enumerate", "--n", "6"]
        first = subprocess.run(cmd, capture_output=True, check=True)
        second = subprocess.run(cmd, capture_output=True, check=True)
        assert first.stdout == second.stdout
        assert first.stdout.decode().split() == list(cb.connected_canonical_forms(6))
