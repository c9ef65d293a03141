from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from symbreak.analysis import FIELDS
from symbreak.cli import main


def run(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def records(text: str) -> tuple[list[dict], dict]:
    rows = [json.loads(line) for line in text.splitlines()]
    assert "summary" in rows[-1]
    return rows[:-1], rows[-1]["summary"]


class TestAnalyze:
    def test_k4_minus_e(self):
        code, text = run("analyze", "C}", "--format", "json")
        (r,), s = records(text)
        assert code == 0 and s["failures"] == []
        assert (r["D"], r["D_prime"], r["aut_order"]) == (2, 2, 4)
        assert r["verdict_certificate"] is True and r["orbit_size"] == 1 and r["labels_used"] <= 2

    def test_p4(self):
        code, text = run("analyze", "Ch", "--format", "json")
        (r,), _ = records(text)
        assert code == 0
        assert (r["D"], r["D_prime"], r["in_family_T"], r["is_tree"]) == (2, 2, False, True)

    def test_k2_not_defined(self):
        code, text = run("analyze", "A_", "--format", "json")
        (r,), _ = records(text)
        assert code == 0 and r["D"] == 2 and r["D_prime"] == "NotDefined"

    def test_malformed_argument_fails_exit_code(self):
        code, text = run("analyze", "C}", "C", "--format", "json")
        rows, s = records(text)
        assert code != 0
        assert rows[1]["status"] == "error" and s["errors"] == 1
        assert s["failures"][0]["reason"].startswith("argument 2")

    def test_input_file_reports_line_number(self, tmp_path):
        f = tmp_path / "g.g6"
        f.write_text("C}\nnot graph6 !\nCh\n")
        code, text = run("analyze", "--input", str(f), "--format", "json")
        rows, s = records(text)
        assert code != 0 and len(rows) == 3
        assert "line 2" in rows[1]["error"]
        assert [r["status"] for r in rows] == ["ok", "error", "ok"]

    def test_disconnected_is_skipped(self):
        # edge 01 plus an isolated vertex
        code, text = run("analyze", "B_", "--format", "json")
        (r,), s = records(text)
        assert r["status"] == "skipped" and s["skipped"] == 1

    def test_tsv_columns(self):
        code, text = run("analyze", "C}", "Ch")
        lines = text.splitlines()
        assert lines[0].split("\t") == list(FIELDS)
        assert len(lines[1].split("\t")) == len(FIELDS)
        assert lines[1].split("\t")[0] == "C}"
        assert any(line.startswith("# violations\t0") for line in lines)

    def test_certificates(self):
        code, text = run("analyze", "C}", "--format", "json", "--emit-certificates")
        (r,), _ = records(text)
        cert = r["certificate"]
        assert len(cert["chosen_cycle"]) == 4 and cert["verified"]
        assert len(cert["final_labeling"]) == 5


class TestVerifyCorpus:
    def test_default_nmax_5(self):
        code, text = run("verify-corpus", "--nmax", "5", "--format", "json")
        rows, s = records(text)
        assert code == 0
        assert len(rows) == 30 == s["records"]
        assert s["by_n"] == {"2": 1, "3": 2, "4": 6, "5": 21}
        assert s["violations"] == 0

    def test_trees_only_8(self):
        code, text = run("verify-corpus", "--trees-only", "--nmin", "3", "--nmax", "8", "--format", "json")
        rows, s = records(text)
        assert code == 0 and len(rows) == 1 + 2 + 3 + 6 + 11 + 23
        assert all(r["verdict_tree_theorem"] for r in rows)

    def test_empty_source(self, tmp_path):
        f = tmp_path / "empty.g6"
        f.write_text("")
        code, text = run("verify-corpus", "--source", str(f), "--format", "json")
        rows, s = records(text)
        assert code == 0 and rows == [] and s["records"] == 0

    def test_source_with_filter(self, tmp_path):
        f = tmp_path / "mix.g6"
        f.write_text("C}\nCh\nC~\n")
        code, text = run("verify-corpus", "--source", str(f), "--cyclic-only", "--format", "json")
        rows, _ = records(text)
        assert code == 0 and [r["graph6"] for r in rows] == ["C}", "C~"]

    def test_nmax_over_cap(self):
        assert run("verify-corpus", "--nmax", "9")[0] == 2

    def test_exclusive_filters(self):
        assert run("verify-corpus", "--trees-only", "--cyclic-only")[0] == 2

    def test_budget_error_recorded_not_raised(self):
        code, text = run("analyze", "E~~w", "--search-budget", "10", "--format", "json")
        (r,), s = records(text)
        assert code != 0 and r["status"] == "error"
        assert "Budget" in r["error"]

    def test_parallel_matches_serial(self):
        a = run("verify-corpus", "--nmax", "6", "--jobs", "1")
        b = run("verify-corpus", "--nmax", "6", "--jobs", "3")
        assert a == b


class TestEnumerate:
    @pytest.mark.parametrize("n,lines", [(1, ["@"]), (3, ["BW", "Bw"])])
    def test_small(self, n, lines):
        assert run("enumerate", str(n)) == (0, "\n".join(lines) + "\n")

    def test_n4(self):
        code, text = run("enumerate", "4")
        assert code == 0 and len(text.splitlines()) == 6

    def test_trees(self):
        assert len(run("enumerate", "7", "--trees-only")[1].splitlines()) == 11

    def test_cap(self):
        assert run("enumerate", "9")[0] == 2


def test_console_script_is_deterministic():
    cmd = [sys.executable, "-m", "symbreak.cli", "verify-corpus", "--nmax", "5", "--emit-certificates"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
