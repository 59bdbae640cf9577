import json
from pathlib import Path

import pytest

from boundring.cli import EXIT_CONTRADICTION, EXIT_INVALID, EXIT_OK, EXIT_USAGE, run
from boundring.dsl import parse_set, set_from_json

SETS = Path(__file__).resolve().parent.parent / "sets"


def sets(name):
    return str(SETS / f"{name}.set")


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ring_strip(capsys):
    code, out, _ = call(capsys, "ring", "-f", sets("strip"))
    assert code == EXIT_OK
    assert "generators: x" in out
    assert "B(strip) = R[x]" in out


def test_completion_t_json(capsys):
    code, out, _ = call(capsys, "completion", "-f", sets("T"), "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    comp = data["completion"]
    assert [b["ray"] for b in comp["blowups"]] == [[0, -1], [1, -1]]
    assert [b["label"] for b in comp["blowups"]] == ["E1", "E2"]
    assert comp["m_d"] == [[0, 1], [1, -2]]
    assert comp["verdict"] == "two"
    assert data["trdeg"] == 2
    assert data["generators"] == ["x", "x*y"]
    assert data["hilbert_basis"] == [[1, 0], [1, 1]]


def test_json_schema_keys(capsys):
    _, out, _ = call(capsys, "ring", "-f", sets("threegen"), "--json")
    data = json.loads(out)
    assert {"command", "spec", "diagnostics", "generators", "hilbert_basis", "trdeg", "completion"} <= set(data)
    assert {"rays", "blowups", "touched", "untouched", "m_d", "verdict"} <= set(data["completion"])


def test_json_spec_round_trips(capsys):
    for name in ("strip", "T", "threegen", "union", "wedge"):
        _, out, _ = call(capsys, "ring", "-f", sets(name), "--json")
        spec = json.loads(out)["spec"]
        assert set_from_json(spec) == parse_set((SETS / f"{name}.set").read_text())


def test_member_unbounded(capsys):
    code, out, _ = call(capsys, "member", "-f", sets("T"), "x*y^2")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "unbounded"
    assert "(-1, 1)" in out and "oracle confirms" in out


def test_member_bounded_json(capsys):
    code, out, _ = call(capsys, "member", "-f", sets("T"), "x*y - 3*x", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["member"]["bounded"] is True


def test_trdeg_and_witness(capsys):
    _, out, _ = call(capsys, "trdeg", "-f", sets("strip"))
    assert out.splitlines()[0] == "1"
    _, out, _ = call(capsys, "witness", "-f", sets("threegen"))
    assert "x*y" in out
    _, out, _ = call(capsys, "witness", "-f", sets("strip"))
    assert "no witness" in out


def test_check(capsys):
    code, out, _ = call(capsys, "check", "-f", sets("T"), "--degree-bound", "3")
    assert code == EXIT_OK
    assert "route equivalence: ok" in out
    assert "0 disagreements" in out


def test_diagonal_obstruction(capsys):
    code, out, err = call(capsys, "ring", "-f", sets("diagonal"))
    assert code == EXIT_INVALID
    assert "B_V(S) is not noetherian" in err
    code, out, _ = call(capsys, "diagnose", "-f", sets("diagonal"))
    assert code == EXIT_INVALID and "noetherian obstruction: True" in out


def test_box_diagnose(capsys):
    code, out, _ = call(capsys, "diagnose", "-f", sets("box"))
    assert code == EXIT_OK
    assert "unbounded: False" in out and "B(S) = R[V]" in out


def test_inline_expression_and_no_completion(capsys):
    code, out, _ = call(capsys, "ring", "-e", "vars a, b; set S = { |a| <= 1 };", "--no-completion", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["generators"] == ["a"] and data["completion"] is None


def test_three_variables(capsys):
    code, out, _ = call(capsys, "ring", "--n", "3", "-e", "set S = { |x| <= 1 and |x*y| <= 1 and |z| <= 2 };")
    assert code == EXIT_OK
    assert "generators: x, z, x*y" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["member", "-f", "sets/T.set"],
        ["ring", "-f", "sets/T.set", "x"],
        ["ring"],
        ["bogus", "-e", "set S = {};"],
        ["ring", "-e", "set S = { |w| <= 1 };"],
        ["member", "-e", "set S = { |x| <= 1 };", "x^-1"],
        ["ring", "-f", "/nonexistent/file.set"],
        ["completion", "--n", "3", "-e", "set S = {};"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == EXIT_USAGE
    assert err


def test_contradiction_exit_code(capsys, monkeypatch):
    import boundring.cli as cli
    from boundring.completion2d import CrossCheckError

    def broken(s):
        raise CrossCheckError("forced")

    monkeypatch.setattr(cli, "compatible_completion", broken)
    code, out, _ = call(capsys, "ring", "-f", sets("T"))
    assert code == EXIT_CONTRADICTION
    assert "cross-check failure" in out


def test_output_is_deterministic(capsys):
    _, a, _ = call(capsys, "completion", "-f", sets("threegen"), "--json")
    _, b, _ = call(capsys, "completion", "-f", sets("threegen"), "--json")
    assert a == b
