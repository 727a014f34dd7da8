import json
import os
import subprocess
import sys

import pytest

from conftest import BASES
from occlogic.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def analyze(capsys, name, *extra):
    code, out, _ = run(capsys, "analyze", BASES / name, "--json", *extra)
    assert code == 0
    return json.loads(out)


def test_analyze_two_conflicts(capsys):
    doc = analyze(capsys, "two_conflicts.txt", "--stats")
    assert doc["schema"] == "occlogic.analyze/1"
    assert doc["stats"]["mirs"] == 2 and doc["stats"]["mcrs"] == 2
    assert doc["stats"]["omises"] == 2 and doc["stats"]["mises"] == 1
    big = [[b for b in m["blocks"] if len(b) > 1] for m in doc["mirs"]]
    assert big == [[["p@f0#1+", "p@f1#1-"]], [["q@f0#1+", "q@f2#1-"], ["r@f1#1+", "r@f2#1-"]]]


def test_analyze_disj_has_one_bmcr(capsys):
    doc = analyze(capsys, "p_notp_disj.txt")
    assert len(doc["mcrs"]) == 2
    (bmcr,) = doc["bmcrs"]
    assert bmcr["pn"] == [["p@f0#1+", "p@f2#1-"]]
    assert sorted(m["pn"] for m in doc["mcrs"]) == [[], [["p@f0#1+", "p@f2#1-"]]]


def test_analyze_empty_file(capsys, tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("# nothing here\n")
    code, out, _ = run(capsys, "analyze", path, "--json")
    doc = json.loads(out)
    assert code == 0 and doc["consistent"] and doc["mcrs"] == [{"blocks": [], "pn": []}]


def test_analyze_human_output(capsys):
    code, out, _ = run(capsys, "analyze", BASES / "two_conflicts.txt")
    assert code == 0
    assert "MIRs (2):" in out and "{p@f0#1+, p@f1#1-}" in out


def test_stats_only_adds_counts(capsys):
    plain = analyze(capsys, "two_conflicts.txt")
    stats = analyze(capsys, "two_conflicts.txt", "--stats")
    stats.pop("stats")
    assert plain == stats


@pytest.mark.parametrize("base, query, relation, code", [
    ("p_notp_disj.txt", "q", "mb2", 0),
    ("p_notp_disj.txt", "p", "m2", 1),
    ("p_notp_disj.txt", "q", "lpm", 1),
    ("separation.txt", "(!p & (!q | !r)) | (p & q & r)", "a1", 0),
    ("separation.txt", "(!p & (!q | !r)) | (p & q & r)", "m1", 1),
])
def test_entail_exit_codes(capsys, base, query, relation, code):
    got, out, _ = run(capsys, "entail", BASES / base, "-q", query, "-r", relation)
    assert got == code
    assert out.splitlines()[0] == ("yes" if code == 0 else "no")


def test_entail_json_witnesses(capsys):
    _, out, _ = run(capsys, "entail", BASES / "p_notp_disj.txt", "-q", "p", "-r", "m2", "--json")
    doc = json.loads(out)
    assert doc["verdict"] == "no" and doc["witness"]["tuple"] == {"p": "p__2"}
    _, out, _ = run(capsys, "entail", BASES / "p_notp_disj.txt", "-q", "p", "-r", "m1", "--json")
    doc = json.loads(out)
    assert doc["verdict"] == "yes" and len(doc["witness"]["witnesses"]) == 2
    _, out, _ = run(capsys, "entail", BASES / "separation.txt", "-q", "q", "-r", "a2", "--json")
    w = json.loads(out)["witness"]
    assert set(w) == {"omodel", "valuation"}


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("p &\n")
    code, _, err = run(capsys, "analyze", bad)
    assert code == 2 and "line 1" in err
    code, _, _ = run(capsys, "analyze", tmp_path / "missing.txt")
    assert code == 2
    code, _, _ = run(capsys, "entail", BASES / "p_notp_disj.txt", "-q", "p &&", "-r", "m1")
    assert code == 2


def test_cap_exit_code(capsys, monkeypatch):
    code, _, err = run(capsys, "analyze", BASES / "two_conflicts.txt", "--occ-cap", "3")
    assert code == 3 and "cap" in err
    monkeypatch.setenv("OCCLOGIC_LPM_CAP", "1")
    code, _, _ = run(capsys, "entail", BASES / "two_conflicts.txt", "-q", "p", "-r", "lpm")
    assert code == 3


def test_duality_check(capsys):
    assert run(capsys, "duality-check", BASES / "two_conflicts.txt")[0] == 0
    assert run(capsys, "duality-check", BASES / "consistent.txt")[0] == 0
    code, out, _ = run(capsys, "duality-check", BASES / "p_notp_disj.txt", "--json")
    doc = json.loads(out)
    assert code == 1 and doc["mcr_direction"]["passed"] and not doc["mir_direction"]["passed"]


def test_compare_disj(capsys):
    code, out, _ = run(capsys, "compare", BASES / "p_notp_disj.txt", "--queries", BASES / "p_notp_disj_queries.txt", "--json")
    doc = json.loads(out)
    assert code == 0
    rows = {r["query"]: r["verdicts"] for r in doc["rows"]}
    assert {k: rows["p"][k] for k in ("m1", "m2", "mb1", "mb2")} == \
        {"m1": "yes", "m2": "no", "mb1": "yes", "mb2": "no"}
    assert {k: rows["q"][k] for k in ("m1", "m2", "mb1", "mb2")} == \
        {"m1": "no", "m2": "no", "mb1": "yes", "mb2": "yes"}


def test_compare_consistent_base_columns_agree(capsys, tmp_path):
    queries = tmp_path / "q.txt"
    queries.write_text("p\nq\np & !q\nt\nt | !t\n!p -> q\n")
    code, out, _ = run(capsys, "compare", BASES / "consistent.txt", "--queries", queries, "--json")
    assert code == 0
    for row in json.loads(out)["rows"]:
        assert len(set(row["verdicts"].values())) == 1


def test_compare_human_table(capsys):
    code, out, _ = run(capsys, "compare", BASES / "separation.txt",
                       "--queries", BASES / "separation_queries.txt")
    assert code == 0 and "ERROR" not in out
    header, _, row = out.splitlines()[:3]
    cells = dict(zip(header.split()[1:], row.split()[-10:]))
    assert cells["a1"] == "yes" and cells["m1"] == "no"


@pytest.mark.parametrize("name", ["two_conflicts.txt", "unminimal_lpm.txt"])
def test_json_is_byte_identical_across_processes(name):
    cmd = [sys.executable, "-m", "occlogic", "analyze", str(BASES / name), "--json", "--stats"]
    outputs = {subprocess.run(cmd, capture_output=True, check=True,
                              env={**os.environ, "PYTHONHASHSEED": seed}).stdout
               for seed in ("0", "1", "2")}
    assert len(outputs) == 1 and outputs.pop()
