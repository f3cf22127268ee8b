"""The command line verbs, their formats and exit codes."""

import json

import pytest

from k3auto.classify import enumerate_cases, rows_from_json
from k3auto.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_json(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


EX1_FIBRATION = {"form": "short",
                 "a": [["1", 8], ["1", 0]],
                 "b": [["1", 8], ["3", 0]]}
EX1_AUTOMORPHISM = {"ex": 0, "ey": 0, "et": 1}


# -- classify -----------------------------------------------------------------


def test_classify_table_counts(capsys):
    code, out, _ = run(capsys, "classify", "--pic", "all")
    assert code == 0
    assert len(out.strip().split("\n")) == 17

    code, out, _ = run(capsys, "classify", "--pic", "18", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 5  # header + the four Picard-18 rows
    assert all(",18," in line for line in lines[1:])


def test_classify_rejects_bad_rank(capsys):
    code, out, err = run(capsys, "classify", "--pic", "11")
    assert code == 1
    assert not out and "usage" in err


def test_classify_json_round_trips(capsys):
    code, out, _ = run(capsys, "classify", "--pic", "all",
                       "--format", "json")
    assert code == 0
    rows = rows_from_json(json.loads(out))
    assert rows == enumerate_cases()


def test_classify_output_is_deterministic(capsys):
    outputs = set()
    for _ in range(2):
        _, out, _ = run(capsys, "classify", "--pic", "all",
                        "--format", "json")
        outputs.add(out)
    assert len(outputs) == 1


def test_format_env_default(capsys, monkeypatch):
    monkeypatch.setenv("K3AUTO_FORMAT", "csv")
    code, out, _ = run(capsys, "classify", "--pic", "18")
    assert code == 0 and out.startswith("r,l,m,")
    # an explicit flag wins over the environment
    code, out, _ = run(capsys, "classify", "--pic", "18",
                       "--format", "table")
    assert code == 0 and not out.startswith("r,l,m,")
    monkeypatch.setenv("K3AUTO_FORMAT", "yaml")
    code, _, err = run(capsys, "classify", "--pic", "18")
    assert code == 1 and "format" in err


# -- analyze ------------------------------------------------------------------


def test_analyze_generic_example(capsys, tmp_path):
    fib = write_json(tmp_path, "f.json", EX1_FIBRATION)
    aut = write_json(tmp_path, "g.json", EX1_AUTOMORPHISM)
    code, out, _ = run(capsys, "analyze", "--fibration", fib,
                       "--automorphism", aut, "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["fiber_counts"] == {"I_1": 24}
    assert report["matched_row"]["index"] == 1
    assert report["euler_sum"] == 24
    assert all(report["checks"].values())


def test_analyze_degenerate_example3(capsys, tmp_path):
    fib = write_json(tmp_path, "f.json", {
        "form": "short",
        "a": [["-3", 8], ["1", 0]],
        "b": [["-1", 4], ["2", 12]]})
    aut = write_json(tmp_path, "g.json", {"ex": 4, "ey": 2, "et": 7})
    code, out, _ = run(capsys, "analyze", "--fibration", fib,
                       "--automorphism", aut, "--format", "json")
    assert code == 0
    assert json.loads(out)["matched_row"]["index"] == 16


def test_analyze_parse_error_exits_1(capsys, tmp_path):
    fib = write_json(tmp_path, "f.json", {
        "form": "short", "a": [["1", 9]], "b": [["1", 0]]})
    aut = write_json(tmp_path, "g.json", EX1_AUTOMORPHISM)
    code, out, err = run(capsys, "analyze", "--fibration", fib,
                         "--automorphism", aut)
    assert code == 1
    assert "not a K3 Weierstrass datum" in err

    code, _, err = run(capsys, "analyze", "--fibration",
                       str(tmp_path / "missing.json"),
                       "--automorphism", aut)
    assert code == 1 and "cannot read" in err

    bad = tmp_path / "broken.json"
    bad.write_text("{", encoding="utf-8")
    code, _, err = run(capsys, "analyze", "--fibration", str(bad),
                       "--automorphism", aut)
    assert code == 1 and "not valid JSON" in err

    incomplete = write_json(tmp_path, "h.json", {"ex": 0, "ey": 0})
    code, _, err = run(capsys, "analyze", "--fibration",
                       write_json(tmp_path, "f2.json", EX1_FIBRATION),
                       "--automorphism", incomplete)
    assert code == 1 and "missing field" in err


def test_analyze_invariant_failure_exits_2(capsys, tmp_path):
    fib = write_json(tmp_path, "f.json", {
        "form": "short",
        "a": [["1", 7], ["1", 0]],
        "b": [["1", 8], ["3", 0]]})
    aut = write_json(tmp_path, "g.json", EX1_AUTOMORPHISM)
    code, out, err = run(capsys, "analyze", "--fibration", fib,
                         "--automorphism", aut)
    assert code == 2
    assert "invariant violated" in err and "does not preserve" in err


# -- examples -----------------------------------------------------------------


def test_examples_pass_and_report(capsys):
    code, out, _ = run(capsys, "examples", "--id", "2",
                       "--preset", "generic")
    assert code == 0
    assert "matched row 4" in out
    assert "result: pass" in out
    assert "FAIL" not in out


def test_examples_preset_i8(capsys):
    code, out, _ = run(capsys, "examples", "--id", "4", "--preset", "i8",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["matched_row"] == 8 and payload["passed"]


def test_examples_tau_variant(capsys):
    code, out, _ = run(capsys, "examples", "--id", "3", "--tau",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["matched_row"] == 4


def test_examples_bad_inputs(capsys):
    code, _, err = run(capsys, "examples", "--id", "5")
    assert code == 1 and "must be one of" in err
    code, _, err = run(capsys, "examples", "--id", "4",
                       "--params", "1,zz,3")
    assert code == 1 and "bad --params" in err


# -- lefschetz ----------------------------------------------------------------


def test_lefschetz_check_mode(capsys, tmp_path):
    config = write_json(tmp_path, "c.json", {
        "curves": [{"genus": 1, "normal_exp": 1}],
        "n2": 2, "n3": 0, "n4": 0})
    code, out, _ = run(capsys, "lefschetz", "--config", config)
    assert code == 0
    assert out.count("pass") >= 3 and "FAIL" not in out

    config = write_json(tmp_path, "bad.json", {
        "curves": [{"genus": 1, "normal_exp": 1}],
        "n2": 1, "n3": 1, "n4": 0})
    code, out, _ = run(capsys, "lefschetz", "--config", config)
    assert code == 1
    assert "FAIL" in out


def test_lefschetz_enumerate_alpha0(capsys, tmp_path):
    config = write_json(tmp_path, "c.json", {"alpha": 0})
    code, out, _ = run(capsys, "lefschetz", "--config", config,
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["solutions"] == [[0, 2, 4], [1, 1, 2], [2, 0, 0]]


def test_lefschetz_enumerate_alpha2(capsys, tmp_path):
    config = write_json(tmp_path, "c.json", {"alpha": 2})
    code, out, _ = run(capsys, "lefschetz", "--config", config,
                       "--format", "json")
    assert code == 0
    solutions = [tuple(s) for s in json.loads(out)["solutions"]]
    assert solutions == [(6, 4, 4), (7, 3, 2), (8, 2, 0)]


def test_lefschetz_enumerate_with_incompatible_pin(capsys, tmp_path):
    # n2 + n3 must be even (= 2 + 4*alpha); pinning an odd split kills all
    config = write_json(tmp_path, "c.json", {"alpha": 0, "n2": 1, "n3": 2})
    code, out, _ = run(capsys, "lefschetz", "--config", config)
    assert code == 0
    assert "no solutions" in out


def test_lefschetz_bad_config(capsys, tmp_path):
    config = write_json(tmp_path, "c.json", {"n2": 1})
    code, _, err = run(capsys, "lefschetz", "--config", config)
    assert code == 1
    config = write_json(tmp_path, "c2.json", {"alpha": -1})
    code, _, err = run(capsys, "lefschetz", "--config", config)
    assert code == 1 and "non-negative" in err
    config = write_json(tmp_path, "c3.json", [1, 2, 3])
    code, _, err = run(capsys, "lefschetz", "--config", config)
    assert code == 1 and "JSON object" in err
