import json

import pytest

from grmcodes import codes as cc
from grmcodes.analysis.report import GROUPS, analyze, dumps, open_problem_evidence, verify_paper_tables
from grmcodes.cli import main


def test_verify_paper_tables_all_pass():
    items = verify_paper_tables()
    assert items and all(it.passed for it in items)
    assert {it.group for it in items} == set(GROUPS)


def test_verify_single_groups():
    dims = verify_paper_tables("dimensions")
    assert dims and {it.group for it in dims} == {"dimensions"}
    with pytest.raises(ValueError):
        verify_paper_tables("nope")


def test_analyze_report_shape():
    r = analyze(cc.dual(cc.grm(3, 3, 1)))
    assert r["d"]["value"] == 15 and r["d"]["status"] == "exact"
    assert r["bounds"]["hartmann_tzeng"] >= 10 and r["bounds"]["paper_lower"] == 10
    assert r["k"] == 6
    json.loads(dumps(r))
    r = analyze(cc.grm(3, 4, 1))
    assert r["d"]["method"] == "information_set" and r["d"]["value"] == 4
    assert "affine_invariant" not in r


def test_analyze_zero_code():
    r = analyze(cc.reversible_grm(2, 4, 2, allow_zero=True))
    assert r["k"] == 0 and r["d"] is None


def test_open_problem_evidence():
    budget = 2**18
    ev = open_problem_evidence(3, 4, 2, budget)
    assert ev["problem1_grm"]["d"] == 13 and ev["problem1_grm"]["attained"] is True
    # unresolved within budget: reported as such, never as attained or not
    assert ev["problem2_dual"]["status"] == "lower_bound_only" and ev["problem2_dual"]["attained"] is None
    ev = open_problem_evidence(3, 4, 3, budget)
    assert ev["problem1_grm"]["d"] == 40 and ev["problem1_grm"]["attained"] is True
    ev = open_problem_evidence(3, 3, 1, budget)
    p2 = ev["problem2_dual"]
    assert (p2["d"], p2["bound"], p2["attained"]) == (15, 10, False)
    assert "problem3_reversible" in ev


def _run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_cli_construct(capsys):
    rc, out, _ = _run(capsys, "construct", "--family", "grm", "--q", "3", "--m", "3", "--h", "1", "--format", "json")
    assert rc == 0 and json.loads(out)["k"] == 20
    rc, out, _ = _run(capsys, "construct", "--family", "grm", "--q", "2", "--m", "4", "--h", "1", "--format", "json")
    assert json.loads(out)["generator"] == [1, 1, 0, 0, 1]
    rc, out, _ = _run(capsys, "construct", "--family", "reversible", "--q", "5", "--m", "2", "--h", "1")
    assert rc == 0 and "[24, 9]" in out


def test_cli_round_trip(capsys):
    rc, out, _ = _run(capsys, "construct", "--family", "grm", "--q", "3", "--m", "3", "--h", "2", "--extend",
                      "--format", "json")
    d = json.loads(out)
    assert cc.code_from_descriptor(d).descriptor() == d
    assert out.isascii()


@pytest.mark.parametrize("argv", [
    ["construct", "--family", "grm", "--q", "6", "--m", "2", "--h", "1"],
    ["construct", "--family", "grm", "--q", "3", "--m", "3", "--h", "7"],
    ["construct", "--family", "grm", "--q", "3", "--m", "3"],
    ["construct", "--family", "bch", "--q", "2", "--n", "15"],
    ["construct", "--family", "reversible", "--q", "2", "--m", "4", "--h", "2"],
    ["construct", "--family", "grm", "--q", "2", "--m", "30", "--h", "1"],
    ["cosets", "--n", "6", "--q", "2"],
])
def test_cli_invalid_parameters(capsys, argv):
    rc, _, err = _run(capsys, *argv)
    assert rc == 2 and "invalid parameters" in err


def test_cli_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["construct", "--family", "grm", "--q", "3", "--m", "3", "--h", "1", "--dual", "--complement"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["analyze", "--family", "grm", "--q", "3", "--m", "3", "--h", "1", "--max-enum", "0"])
    assert e.value.code == 2


def test_cli_analyze(capsys, tmp_path):
    rc, out, _ = _run(capsys, "analyze", "--family", "grm", "--q", "3", "--m", "3", "--h", "1", "--dual")
    assert rc == 0 and "[26, 6, 15]" in out and "HT 10" in out
    rc, out, _ = _run(capsys, "analyze", "--family", "grm", "--q", "3", "--m", "4", "--h", "1")
    assert rc == 0 and "[80, 72, 4]" in out and "information_set" in out
    path = tmp_path / "r.json"
    rc, out, _ = _run(capsys, "analyze", "--family", "grm", "--q", "3", "--m", "3", "--h", "2", "--extend",
                      "--weights", "--designs", "--format", "json", "--output", str(path))
    assert rc == 0 and out == ""
    r = json.loads(path.read_text())
    assert r["weights"]["14"] == 810 and r["affine_invariant"] is True
    pairs = {(c["k"], c["lambda"]) for c in r["designs"]}
    assert {(14, 105), (15, 105), (17, 272), (18, 170), (20, 570), (21, 210)} <= pairs


def test_cli_budget_exit(capsys):
    rc, out, _ = _run(capsys, "analyze", "--family", "grm", "--q", "3", "--m", "4", "--h", "2", "--max-enum", "50")
    assert rc == 3 and ">=" in out
    rc, _, err = _run(capsys, "analyze", "--family", "grm", "--q", "3", "--m", "3", "--h", "1", "--weights",
                      "--max-enum", "1000")
    assert rc == 3 and "budget" in err


def test_cli_verify_paper(capsys):
    rc, out, _ = _run(capsys, "verify-paper", "--only", "designs")
    assert rc == 0 and out.count("PASS") == 6 and "FAIL" not in out
    rc, out, _ = _run(capsys, "verify-paper", "--only", "dimensions", "--format", "json")
    assert rc == 0 and json.loads(out)["failures"] == 0


def test_cli_factor_and_cosets(capsys):
    rc, out, _ = _run(capsys, "factor", "--n", "7", "--q", "2", "--format", "json")
    assert rc == 0 and json.loads(out)["factors"] == {"0": [1, 1], "1": [1, 1, 0, 1], "3": [1, 0, 1, 1]}
    rc, out, _ = _run(capsys, "cosets", "--n", "8", "--q", "3", "--format", "json")
    assert json.loads(out)["cosets"] == [[0], [1, 3], [2, 6], [4], [5, 7]]


def test_cli_field_cap(capsys):
    rc, _, err = _run(capsys, "construct", "--family", "grm", "--q", "3", "--m", "3", "--h", "1", "--field-cap", "20")
    assert rc == 2 and "budget" in err


def test_module_entry_point():
    import subprocess
    import sys

    p = subprocess.run([sys.executable, "-m", "grmcodes", "cosets", "--n", "7", "--q", "2"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and "C_3" in p.stdout
    p = subprocess.run([sys.executable, "-m", "grmcodes", "factor", "--n", "7", "--q", "6"],
                       capture_output=True, text=True)
    assert p.returncode == 2


def test_index_set_relation_reported():
    from grmcodes.analysis.report import index_set_relation

    # observed on this instance: neither set contains the other
    assert index_set_relation(3, 3, 1) == {
        "I_m_minus_h_in_neg_complement": False, "neg_complement_in_I_m_minus_h": False}


@pytest.mark.parametrize("q,m", [(2, 4), (3, 3), (4, 2), (5, 2)])
def test_pgrm_dual_relation(q, m):
    from grmcodes.analysis.report import pgrm_dual_relation

    for ell in range(m * (q - 1)):
        r = pgrm_dual_relation(q, m, ell)
        assert r["order_mq_minus_1_minus_ell"] is True
        assert r["order_mq_minus_ell"] in (False, None)
