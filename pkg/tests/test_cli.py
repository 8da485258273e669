import json

import pytest

from patternlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_enumerate_csv_row_count(capsys):
    code, out = run(
        capsys,
        "enumerate", "--class", "inv", "--n", "4", "--avoid", "[12]0",
        "--stats", "zero,last", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "object,zero,last"
    assert len(lines) == 24  # header + 23 avoiders
    assert lines[1] == '"0,0,0,0",4,0'


def test_enumerate_json(capsys):
    code, out = run(
        capsys,
        "enumerate", "--class", "perm", "--n", "3", "--stats", "last", "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 6
    assert rows[0] == {"object": [1, 2, 3], "last": 0}


def test_poly_coefficients(capsys):
    code, out = run(capsys, "poly", "--k", "2", "--i", "1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"k": 2, "i": 1, "coefficients": [0, 2, 1]}
    code, out2 = run(capsys, "poly", "--k", "2", "--i", "1", "--recursive", "--format", "json")
    assert json.loads(out2)["coefficients"] == [0, 2, 1]


def test_grow_trace_lists_all_children(capsys):
    code, out = run(capsys, "grow", "--input", "0,1,0,2,1,1,0,0,2,5,6,5", "--trace")
    assert code == 0
    assert "e^(4+1) = 0020322003676" in out
    assert "e^(3,2) = 0102111013676" in out
    assert "e^(4,1) = 0110322003676" in out
    assert out.count("e^") == 11


def test_bs_fs_round_trip(capsys):
    code, out = run(capsys, "bs", "--input", "0022201740980131", "--m", "3", "--j", "5")
    assert code == 0
    assert out.strip() == "0111052010980131"
    code, out = run(capsys, "fs", "--input", "0111052010980131")
    assert code == 0
    assert out.strip() == "0022201740980131"


def test_invcode_directions(capsys):
    code, out = run(capsys, "invcode", "--perm", "2,4,1,3")
    assert (code, out.strip()) == (0, "0,0,2,1")
    code, out = run(capsys, "invcode", "--inverse", "--seq", "0,0,2,1")
    assert (code, out.strip()) == (0, "2,4,1,3")


def test_triangle_csv(capsys):
    code, out = run(capsys, "triangle", "--name", "cnk", "--n-max", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,k,value"
    assert "4,2,10" in out


def test_tree_json_level_sizes(capsys):
    code, out = run(capsys, "tree", "--rule", "pq120", "--n-max", "6", "--format", "json")
    assert code == 0
    levels = json.loads(out)
    assert [lv["size"] for lv in levels] == [1, 2, 6, 23, 105, 549]


def test_verify_claim_exit_codes(capsys):
    code, out = run(capsys, "verify", "--claim", "conj-inv-120", "--n-max", "5")
    assert code == 0
    assert "PASS" in out
    code, _ = run(capsys, "verify", "--claim", "definitely-not-a-claim")
    assert code == 2


def test_verify_json_deterministic(capsys):
    _, out1 = run(capsys, "verify", "--claim", "bell-special", "--n-max", "5", "--format", "json")
    _, out2 = run(capsys, "verify", "--claim", "bell-special", "--n-max", "5", "--format", "json")
    assert out1 == out2
    report = json.loads(out1)[0]
    assert report["passed"] is True
    assert report["claim"] == "bell-special"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["enumerate", "--class", "bogus", "--n", "3"])
    assert info.value.code == 2


def test_missing_verify_target(capsys):
    code, _ = run(capsys, "verify")
    assert code == 2


def test_count_table_text(capsys):
    code, out = run(
        capsys,
        "count-table", "--class", "inv", "--avoid", "110", "--n-max", "5", "--by", "zero",
    )
    assert code == 0
    assert "n=4: 23" in out


def test_aztec_check(capsys):
    code, out = run(capsys, "aztec-check", "--k-max", "3")
    assert code == 0
    assert "PASS" in out


def test_claims_listing(capsys):
    code, out = run(capsys, "claims")
    assert code == 0
    assert "conj-inv-120" in out and "conj-quad" in out
