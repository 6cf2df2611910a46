import json

from click.testing import CliRunner

from conftest import fixture_path
from weilrep.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_validate_ok():
    res = run("validate", fixture_path("picard72.json"))
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["ok"] and doc["group_order"] == 72


def test_validate_exit_code_on_bad_model(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "p": 2, "base_degree": 1,
        "components": [{"n": 2, "f": [0, 1, 1]}]}))
    res = run("validate", str(bad))
    assert res.exit_code == 2


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    res = run("validate", str(bad))
    assert res.exit_code == 2


def test_zeta_golden():
    res = run("zeta", fixture_path("picard72.json"))
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["polynomial"]["coefficients"] == [1, 0, 0, 0, 0, 0, 8]
    assert doc["polynomial"]["weil_check"]["ok"]


def test_zeta_twisted():
    res = run("zeta", fixture_path("picard72.json"), "--element", "tau2")
    doc = json.loads(res.output)
    assert doc["polynomial"]["coefficients"] == [1, 0, 4, 0, 8, 0, 8]


def test_count_command():
    res = run("count", fixture_path("chain24.json"), "--ext", "2")
    doc = json.loads(res.output)
    assert doc["counts"][0] == 9  # 3 points on each of three components


def test_twist_command():
    res = run("twist", fixture_path("picard72.json"), "--element", "tau2")
    doc = json.loads(res.output)
    assert doc["components"][0]["f"] == [[1], [1], [0], [0], [1]]
    assert doc["orbits"][0]["shape"] == "wild"


def test_solvability_exit_code():
    # an absurdly small field bound makes the twist unsolvable
    res = run("zeta", fixture_path("picard216.json"), "--element", "psi",
              "--frobenius-power", "6", "--max-field-bits", "8")
    assert res.exit_code == 3


def test_trace_table_command():
    res = run("trace-table", fixture_path("picard72.json"))
    doc = json.loads(res.output)
    assert doc["artin_order"] == 6 and doc["class_constant"] == -8
    by_class = {row["class"]: row for row in doc["classes"]}
    assert by_class["tau1"]["artin_trace"]["rational"] == "-2"


def test_decompose_command():
    res = run("decompose", fixture_path("chain24.json"))
    doc = json.loads(res.output)
    kept = [d for d, m in zip(doc["dimensions"], doc["multiplicities"]) if m]
    assert kept == [2, 2, 2]


def test_report_degraded_without_group(tmp_path):
    doc = {"p": 2, "base_degree": 1,
           "components": [{"n": 3, "f": [0, 1, 0, 0, 1]}]}
    f = tmp_path / "plain.json"
    f.write_text(json.dumps(doc))
    res = run("report", str(f))
    assert res.exit_code == 0
    out = json.loads(res.output)
    assert "eigenvalue_classes" in out and "trace_table" not in out


def test_report_deterministic_across_jobs():
    outs = []
    for jobs in ("1", "4"):
        res = run("report", fixture_path("picard72.json"), "--jobs", jobs,
                  "--fixed-space", "tau1")
        assert res.exit_code == 0
        outs.append(res.output)
    assert outs[0] == outs[1]


def test_roundtrip_command():
    res = run("roundtrip", fixture_path("chain24.json"))
    assert res.exit_code == 0
    emitted = json.loads(res.output)
    from conftest import FIXTURES
    from weilrep.problem import parse_problem
    prob = parse_problem(emitted, base_dir=FIXTURES)
    assert prob.build_group().order() == 24
