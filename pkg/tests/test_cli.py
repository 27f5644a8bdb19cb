import json

import pytest

from matschubert.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_groth_text(capsys):
    assert run(capsys, "groth", "132") == (0, "x1 + x2 - x1*x2\n", "")


def test_groth_engines_match(capsys):
    _, a, _ = run(capsys, "groth", "25314", "--json")
    _, b, _ = run(capsys, "groth", "25314", "--json", "--engine", "pipedream")
    ja, jb = json.loads(a), json.loads(b)
    assert ja["terms"] == jb["terms"]
    assert ja["terms"][0] == {"coeff": "-1", "exps": [3, 2, 1]}


def test_hilbert_json(capsys):
    code, out, _ = run(capsys, "hilbert", "25314", "--effective", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["postulation"] == -3
    assert data["regularity"] == 1
    assert data["hilbertian"] is True
    assert data["ambient"] == {"kind": "effective", "variable_count": 9}
    assert data["hilbert_polynomial"][0] == "1/1"
    assert data["schema_version"] == 1
    assert set(data) == {
        "schema_version", "permutation", "ambient", "k_polynomial", "hf_table",
        "hilbert_polynomial", "postulation", "regularity", "hilbertian",
    }


def test_hilbert_text_and_k_max(capsys):
    code, out, _ = run(capsys, "hilbert", "2,1", "--n", "3", "--k-max", "2")
    assert code == 0
    assert "postulation: -8" in out
    assert out.count("\n2 ") == 1


def test_json_is_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "--n", "3", "--json")
    _, b, _ = run(capsys, "verify", "--n", "3", "--json", "--jobs", "2")
    assert a == b


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--checks", "degree-bound")
    assert code == 0
    assert "24/24 permutations pass" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    import matschubert.verify as verify

    monkeypatch.setattr(verify, "pipe_dream_table", lambda n: {})
    code, out, _ = run(capsys, "verify", "--n", "2", "--checks", "engine-agreement")
    assert code == 1
    assert "counterexample" in out and "grothendieck" in out


def test_diagram(capsys):
    code, out, _ = run(capsys, "diagram", "25314")
    assert code == 0
    assert "(2,4) r=1" in out and "(3,1) r=0" in out
    code, out, _ = run(capsys, "diagram", "25314", "--json")
    data = json.loads(out)
    assert data["essential_set"] == [[2, 4], [3, 1]]
    assert data["rank_matrix"][2][0] == 0


def test_ideal(capsys):
    code, out, _ = run(capsys, "ideal", "25314", "--json")
    data = json.loads(out)
    assert code == 0 and len(data["minors"]) == 9 and len(data["variables"]) == 25
    code, out, _ = run(capsys, "ideal", "132", "--expand")
    assert "z11*z22 - z12*z21" in out


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "25314", "--effective", "--k-max", "3")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "oracle", "321", "--k-max", "2", "--json")
    assert json.loads(out)["passed"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["groth", "1,2,2"],
        ["hilbert", "25314", "--n", "3"],
        ["hilbert", "25314", "--effective", "--n", "5"],
        ["hilbert", "1", "--effective"],
        ["verify", "--n", "3", "--checks", "nonsense"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
