import csv
import io
import json

from graphpower.cli import main
from graphpower.graphs import graph6_decode, cycle, hypercube, is_isomorphic
from graphpower.schemas import (
    CLASSIFY_SCHEMA,
    GRAPH_SCHEMA,
    GROUP_REPORT_SCHEMA,
    RA_VERDICT_SCHEMA,
    SOLVE_SCHEMA,
    validate,
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_graph_gen_graph6(capsys):
    code, out, _ = run(capsys, "graph", "gen", "cycle", "5")
    assert code == 0
    assert is_isomorphic(graph6_decode(out.strip()), cycle(5))


def test_graph_gen_json_and_dot(capsys):
    code, out, _ = run(capsys, "graph", "gen", "hypercube", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    validate(payload, GRAPH_SCHEMA)
    assert payload["n"] == 8
    code, out, _ = run(capsys, "graph", "gen", "petersen", "--format", "dot")
    assert code == 0 and out.startswith("graph G {")


def test_graph_classify(capsys):
    code, out, _ = run(capsys, "graph", "classify", "Q3")
    assert code == 0
    payload = json.loads(out)
    validate(payload, CLASSIFY_SCHEMA)
    assert payload["girth"] == 4 and payload["square_completion"] is True


def test_eldivs_fixtures(capsys):
    for spec, want in [("C4", "(1^3, 3)"), ("Q3", "(1^4, 2, 0^3)"), ("T4,1", "(1^4, 2)")]:
        code, out, _ = run(capsys, "eldivs", spec)
        assert code == 0 and out.strip() == want
    code, out, _ = run(capsys, "eldivs", "C4", "--matrix", "ra")
    assert code == 0 and out.strip() == "(1^4)"


def test_eldivs_bad_token(capsys):
    code, _, err = run(capsys, "eldivs", "Xk9")
    assert code == 2 and "Xk9" in err


def test_ra_check(capsys):
    code, out, _ = run(capsys, "ra", "check", "Q3")
    assert code == 0
    payload = json.loads(out)
    validate(payload, RA_VERDICT_SCHEMA)
    assert payload["ra"] is False
    code, out, _ = run(capsys, "ra", "check", "petersen")
    assert json.loads(out)["ra"] is True


def test_ra_check_precondition_is_input_error(capsys):
    code, _, err = run(capsys, "ra", "check", "K4")
    assert code == 2
    code, out, _ = run(capsys, "ra", "check", "K4", "--reduce")
    assert code == 0 and json.loads(out)["ra"] is True


def test_ra_gra_fixture(capsys):
    code, out, _ = run(capsys, "ra", "gra", "Q3", "--group", "D8")
    assert code == 0
    payload = json.loads(out)
    validate(payload, GROUP_REPORT_SCHEMA)
    assert payload["ra_index"] == 2 and payload["g_ra"] is False
    code, out, _ = run(capsys, "ra", "gra", "Q3", "--group", "D10")
    payload = json.loads(out)
    assert payload["ra_index"] == 1 and payload["g_ra"] is True


def test_ra_chain(capsys):
    code, out, _ = run(capsys, "ra", "chain", "C4", "--group", "D8")
    assert code == 0
    payload = json.loads(out)
    assert payload["orders"]["comm_d"] == 8
    assert payload["orders"]["comm_b"] == 16
    assert payload["g_ra"] is True


def test_ra_gra_capacity_exit(capsys, monkeypatch):
    monkeypatch.setenv("GRAPHPOWER_MAX_ORDER", "100")
    code, _, err = run(capsys, "ra", "gra", "C5", "--group", "S4")
    assert code == 3 and "exceeds cap" in err


def test_bad_group_spec(capsys):
    code, _, err = run(capsys, "ra", "gra", "C4", "--group", "Z9")
    assert code == 2 and "Z9" in err


def test_census_csv_and_oeis(capsys, tmp_path):
    code, out, err = run(capsys, "ra", "census", "--max-n", "5")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "graph6", "divisors", "ra", "method", "witness"]
    assert "full-lattice counts: 1,0,1,1,6" in err
    body = rows[1:]
    assert all(r[3] == "1" for r in body)

    good = tmp_path / "b.txt"
    good.write_text("1 1\n2 0\n3 1\n4 3\n5 11\n")
    code, _, err = run(capsys, "ra", "census", "--max-n", "5", "--oeis", str(good))
    assert code == 0 and "MISMATCH" not in err

    bad = tmp_path / "bad.txt"
    bad.write_text("1 1\n2 0\n3 1\n4 3\n5 12\n")
    code, _, err = run(capsys, "ra", "census", "--max-n", "5", "--oeis", str(bad))
    assert code == 4 and "MISMATCH" in err


def test_solve_solvable(capsys):
    code, out, _ = run(capsys, "solve", "grid5x5", "--moduli", "2",
                       "--target", ",".join(["1"] * 25))
    assert code == 0
    payload = json.loads(out)
    validate(payload, SOLVE_SCHEMA)
    assert payload["solvable"] is True
    assert len(payload["clicks"][0]) == 25
    assert payload["schedule"]


def test_solve_unsolvable_witness(capsys):
    code, out, err = run(capsys, "solve", "C4", "--moduli", "Z", "--target", "1,0,0,0")
    assert code == 0
    payload = json.loads(out)
    validate(payload, SOLVE_SCHEMA)
    assert payload["solvable"] is False
    assert payload["witness"]["vertex"] == 3
    assert "UNSOLVABLE" in err


def test_solve_json_target(capsys):
    code, out, _ = run(capsys, "solve", "P3", "--moduli", "2,3",
                       "--target", '{"0": [1, 2], "2": [1, 0]}')
    assert code == 0
    payload = json.loads(out)
    assert payload["solvable"] is True


def test_solve_bad_target_length(capsys):
    code, _, err = run(capsys, "solve", "C4", "--moduli", "2", "--target", "1,0")
    assert code == 2 and "4 vertices" in err


def test_bad_family_parameter(capsys):
    code, _, err = run(capsys, "graph", "gen", "cycle", "four")
    assert code == 2 and "integers" in err


def test_bad_json_target(capsys):
    code, _, err = run(capsys, "solve", "C4", "--moduli", "2",
                       "--target", '{"zero": 1}')
    assert code == 2


def test_hypercube_gen_matches_library(capsys):
    code, out, _ = run(capsys, "graph", "gen", "hypercube", "3", "--format", "graph6")
    assert code == 0
    assert is_isomorphic(graph6_decode(out.strip()), hypercube(3))


def test_ra_check_consistent_with_heisenberg_group_verdict(capsys):
    # a graph verdict of RA must never coexist with g_ra false over H(F_2)
    for spec in ["C4", "C5", "Q3", "St3", "petersen"]:
        code, out, _ = run(capsys, "ra", "check", spec)
        assert code == 0
        ra_true = json.loads(out)["ra"]
        code, out, _ = run(capsys, "ra", "gra", spec, "--group", "H2")
        assert code == 0
        g_ra = json.loads(out)["g_ra"]
        if ra_true:
            assert g_ra
