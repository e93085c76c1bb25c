import json

import khlab.cli as cli
from khlab.homology import BigradedGroup
from khlab.invariants import Check, VerificationReport

from helpers import table_of

HOPF_PD = "X[0,1,2,3] +\nX[1,0,3,2] +\n"


def run(argv, capsys):
    code = cli.run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_homology_json_trefoil(capsys):
    code, out, _ = run(["homology", "--braid", "1 1 1", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert list(doc) == ["input", "n_plus", "n_minus", "components",
                         "convention", "homology", "euler_characteristic"]
    assert doc["input"] == {"kind": "braid", "text": "1 1 1", "strands": 2}
    assert doc["n_plus"] == 3 and doc["n_minus"] == 0
    assert doc["components"] == 1
    assert len(doc["homology"]) == 5
    assert {"i": 3, "j": 7, "rank": 0, "torsion": [2]} in doc["homology"]
    assert doc["euler_characteristic"] == {"1": 1, "3": 1, "5": 1, "9": -1}


def test_homology_json_roundtrip_stable(capsys):
    code, out, _ = run(["homology", "--braid", "1 2 1 2", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert json.loads(json.dumps(doc)) == doc
    entries = [(e["i"], e["j"]) for e in doc["homology"]]
    assert entries == sorted(entries)


def test_homology_rational_ring_drops_torsion(capsys):
    code, out, _ = run(
        ["homology", "--braid", "1 1 1", "--ring", "q", "--format", "json"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert all(e["torsion"] == [] for e in doc["homology"])
    # the rank-0 pure-torsion entry disappears over the rationals
    assert len(doc["homology"]) == 4


def test_homology_inverted_convention(capsys):
    code, out, _ = run(
        ["homology", "--braid", "1 1 1", "--convention", "inverted",
         "--format", "json"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert {e["j"] for e in doc["homology"]} == {-1, -3, -5, -7, -9}


def test_homology_pd_input(tmp_path, capsys):
    pd = tmp_path / "hopf.pd"
    pd.write_text(HOPF_PD)
    code, out, _ = run(["homology", "--pd", str(pd), "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["input"]["kind"] == "pd"
    assert doc["components"] == 2
    assert len(doc["homology"]) == 4


def test_render_table_cells():
    text = cli.render_table(table_of("1 1 1"), "text")
    assert "0+T2" in text
    csv = cli.render_table(table_of("1 1 1"), "csv")
    assert "3,7,0,2" in csv.splitlines()
    assert csv.splitlines()[0] == "i,j,rank,torsion"


def test_render_empty_table():
    assert cli.render_table(BigradedGroup({}), "text") == "j\\i"
    assert cli.render_table(BigradedGroup({}), "csv") == "i,j,rank,torsion"


def test_jones_command(capsys):
    code, out, _ = run(["jones", "--braid", "-1 -1 -1", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["euler_characteristic"] == {"-9": -1, "-5": 1, "-3": 1, "-1": 1}


def test_verify_command_passes(capsys):
    code, out, _ = run(["verify", "--braid", "1 1 1"], capsys)
    assert code == 0
    assert "h1_vanishing: pass" in out


def test_verify_failure_exits_three(monkeypatch, capsys):
    def fake_verify(word, cap):
        return VerificationReport(
            word=word, is_knot=True,
            checks=(Check("h1_vanishing", "fail", "synthetic"),),
        )

    monkeypatch.setattr(cli, "verify_positive_braid", fake_verify)
    code, _, _ = run(["verify", "--braid", "1 1 1"], capsys)
    assert code == 3


def test_parse_error_exits_one(capsys):
    code, _, err = run(["homology", "--braid", "0"], capsys)
    assert code == 1
    assert "error" in err


def test_unknown_flag_exits_one(capsys):
    code, _, _ = run(["homology", "--braid", "1", "--bogus"], capsys)
    assert code == 1


def test_unreadable_pd_exits_one(capsys):
    code, _, err = run(["homology", "--pd", "/no/such/file.pd"], capsys)
    assert code == 1
    assert "cannot read" in err


def test_cap_exceeded_exits_two(capsys):
    code, _, err = run(["homology", "--braid", "1 1 1", "--cap", "2"], capsys)
    assert code == 2
    assert "cap" in err


def test_env_cap_override(monkeypatch, capsys):
    monkeypatch.setenv("KHLAB_CAP", "2")
    code, _, _ = run(["homology", "--braid", "1 1 1"], capsys)
    assert code == 2
    code, _, _ = run(["homology", "--braid", "1 1 1", "--cap", "5"], capsys)
    assert code == 0


def test_cube_stats(capsys):
    code, out, _ = run(["cube-stats", "--braid", "1 1 1", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["dims"] == [4, 6, 12, 8]
    assert len(doc["nonzeros"]) == 3
