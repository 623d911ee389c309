import io
import json
import subprocess
import sys

import pytest

from extendlab.cli import CommandPlan, execute, main, parse_args
from extendlab.families import complete, complete_bipartite, cycle
from extendlab.graph6 import emit_graph6

K6 = emit_graph6(complete(6))
C6 = emit_graph6(cycle(6))
K33 = emit_graph6(complete_bipartite(3, 3))


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = execute(parse_args(argv), io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_parse_args_builds_plan():
    plan = parse_args(["search", "--n", "6", "--k", "2", "--claw-free", "--minimal", "--jobs", "3"])
    assert plan == CommandPlan("search", k=2, n=6, claw_free=True, minimal=True, jobs=3)


def test_parse_args_degree_range():
    plan = parse_args(["search", "--k", "1", "--min-degree", "2", "--max-degree", "3", "--format", "tsv"])
    assert (plan.min_degree, plan.max_degree, plan.format) == (2, 3, "tsv")


@pytest.mark.parametrize(
    "argv",
    [
        ["check"],                                          # --k missing
        ["check", "--k", "2", "--n", "6"],
        ["search", "--k", "2", "--n", "6", "--input", "x"],
        ["search", "--k", "2", "--min-degree", "3"],
        ["search", "--k", "2", "--min-degree", "4", "--max-degree", "3"],
        ["search", "--k", "2", "--jobs", "0"],
        ["check", "--k", "2", "--format", "tsv"],
        ["conjecture", "--k", "2"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        parse_args(argv)
    assert info.value.code == 2


def test_jobs_default_from_environment(monkeypatch):
    monkeypatch.setenv("EXTENDLAB_JOBS", "4")
    assert parse_args(["search", "--k", "1"]).jobs == 4
    monkeypatch.setenv("EXTENDLAB_JOBS", "nonsense")
    assert parse_args(["search", "--k", "1"]).jobs == 1


def test_check_k6_minimal():
    code, out, _ = run(["check", "--k", "2", "--minimal"], K6 + "\n")
    (rec,) = records(out)
    assert code == 0
    assert rec["extendable"] is True and rec["minimal"] is True
    assert rec["min_degree"] == 5 and rec["claw_free"] is True


def test_check_c6_reports_witness():
    code, out, _ = run(["check", "--k", "2"], C6 + "\n")
    (rec,) = records(out)
    assert code == 1
    assert rec["extendable"] is False
    assert rec["witness"] == [[0, 1], [3, 4]] and rec["stranded"] == [2]


def test_check_claw_free_flag_fails_bipartite():
    code, out, _ = run(["check", "--k", "2", "--claw-free"], K33 + "\n")
    assert code == 1 and records(out)[0]["claw_free"] is False


def test_check_out_of_range_k_is_a_failed_record():
    code, out, _ = run(["check", "--k", "3"], K6 + "\n")
    rec = records(out)[0]
    assert code == 1 and rec["extendable"] is False and "error" in rec


def test_check_multiple_lines_in_order():
    code, out, _ = run(["check", "--k", "1"], f"{K6}\n{C6}\n")
    assert code == 0
    assert [r["graph6"] for r in records(out)] == [K6, C6]


def test_certify_k33():
    code, out, _ = run(["certify", "--k", "2"], K33 + "\n")
    rec = records(out)[0]
    assert code == 0 and rec["all_certified"] is True
    assert len(rec["certificates"]) == 9
    for cert in rec["certificates"]:
        assert len(cert["s"]) == 4 and cert["type_tag"] == "unclassified"


def test_certify_k44_reports_missing():
    code, out, _ = run(["certify", "--k", "2"], emit_graph6(complete_bipartite(4, 4)) + "\n")
    rec = records(out)[0]
    assert code == 1 and rec["all_certified"] is False
    assert any(c["s"] is None for c in rec["certificates"])


def test_certify_non_extendable():
    code, out, _ = run(["certify", "--k", "2"], C6 + "\n")
    assert code == 1 and records(out)[0]["extendable"] is False


def test_search_claw_free_minimal_order_six():
    code, out, _ = run(["search", "--n", "6", "--k", "2", "--claw-free", "--minimal"])
    report = json.loads(out)
    assert code == 0
    assert set(report["min_degree_histogram"]) <= {"4", "5"}
    assert report["violations"] == []


def test_search_tsv_and_survivors_file(tmp_path):
    target = tmp_path / "survivors.g6"
    code, out, _ = run(["search", "--n", "6", "--k", "2", "--format", "tsv", "--survivors", str(target)])
    assert code == 0
    rows = out.splitlines()
    assert rows[0] == "min_degree\tcount"
    total = sum(int(r.split("\t")[1]) for r in rows[1:])
    lines = target.read_text().splitlines()
    assert len(lines) == total and K6 in lines and K33 in lines


def test_search_degree_window():
    code, out, _ = run(["search", "--n", "6", "--k", "1", "--min-degree", "3", "--max-degree", "3"])
    assert code == 0 and set(json.loads(out)["min_degree_histogram"]) == {"3"}


def test_search_from_file(tmp_path):
    src = tmp_path / "in.g6"
    src.write_text(f"{K6}\n{C6}\n{K33}\n")
    code, out, _ = run(["search", "--k", "2", "--input", str(src)])
    report = json.loads(out)
    assert code == 0 and report["input_count"] == 3 and report["survivor_count"] == 2


def test_bad_line_abort_and_skip():
    text = f"{K6}\n!!bad\n{K33}\n"
    code, out, err = run(["check", "--k", "2"], text)
    assert code == 2 and "line 2" in err
    code, out, err = run(["check", "--k", "2", "--on-error", "skip"], text)
    assert code == 0 and len(records(out)) == 2 and "skipped line 2" in err


def test_missing_input_file_exits_2(tmp_path):
    code, _, err = run(["check", "--k", "1", "--input", str(tmp_path / "absent.g6")])
    assert code == 2 and err


def test_empty_input():
    assert run(["check", "--k", "1"], "") == (0, "", "")


def test_conjecture_from_generator():
    code, out, _ = run(["conjecture", "--n", "6", "--k", "2"])
    report = json.loads(out)
    assert code == 0 and report["within_expected"] is True
    assert report["expected_degrees"] == [4, 5]


def test_conjecture_rejects_mixed_orders(tmp_path):
    src = tmp_path / "mixed.g6"
    src.write_text(f"{K6}\n{emit_graph6(complete(8))}\n")
    code, _, err = run(["conjecture", "--k", "1", "--input", str(src)])
    assert code == 2 and "one order" in err


def test_conjecture_bad_k_exits_2():
    code, _, err = run(["conjecture", "--n", "6", "--k", "3"])
    assert code == 2 and "k=3" in err


def test_oracle_records():
    code, out, _ = run(["oracle", "--k", "2", "--minimal"], K6 + "\n")
    rec = records(out)[0]
    assert code == 0
    assert rec["connectivity"] == 5 and rec["perfect_matching"] is True
    assert rec["extendable"] is True and rec["minimal"] is True and rec["certified_edges"] == 15


def test_oracle_counts():
    code, out, _ = run(["oracle", "--n", "7"])
    assert code == 0 and records(out) == [{"n": 7, "graphs": 1044, "connected_graphs": 853}]


def test_main_uses_argv(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(K6 + "\n"))
    assert main(["check", "--k", "1"]) == 0
    assert json.loads(capsys.readouterr().out)["extendable"] is True


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "extendlab", "check", "--k", "2"],
        input=C6 + "\n", capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["witness"] == [[0, 1], [3, 4]]
