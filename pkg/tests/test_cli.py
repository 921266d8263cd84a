import json

import pytest

from antigeometry.cli import main
from antigeometry.model import DEFAULT


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_report_default(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, err = run(["report", "--out", str(out)], capsys)
    assert code == 0
    bundle = json.loads(out.read_text())
    assert bundle["config"] == DEFAULT.to_dict()
    assert len(bundle["fixtures"]) >= 30
    assert all(f["status"] == f["expected"] for f in bundle["fixtures"])
    assert "timings_ms" not in bundle


def test_report_filter_and_timings(capsys):
    code, out, _ = run(["report", "--filter", "II.", "--timings"], capsys)
    bundle = json.loads(out)
    assert code == 0
    assert [f["fixture_id"] for f in bundle["fixtures"]] == ["II.1", "II.2", "II.3", "II.4", "II.5"]
    assert set(bundle["timings_ms"]) == {"II.1", "II.2", "II.3", "II.4", "II.5"}


def test_report_unknown_filter(capsys):
    assert run(["report", "--filter", "ZZ"], capsys)[0] == 2


def test_bad_config_reports_pointer(tmp_path, capsys):
    d = DEFAULT.to_dict()
    d["string_lengths"] = [4, 5, 9]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(d))
    code, _, err = run(["report", "--config", str(path)], capsys)
    assert code == 2
    assert "/string_lengths/1" in err


def test_missing_config(tmp_path, capsys):
    assert run(["report", "--config", str(tmp_path / "nope.json")], capsys)[0] == 2


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["plot"])
    assert exc.value.code == 2


def test_plot_commands(tmp_path, capsys):
    for argv in (
        ["plot", "model"],
        ["plot", "geodesic", "-1,0", "3,0"],
        ["plot", "circle", "Q", "6"],
        ["plot", "triangle", "-3,1", "-3,-1", "Q", "--side-choice", "0", "0", "1"],
    ):
        out = tmp_path / "x.svg"
        code, _, _ = run(argv + ["--out", str(out)], capsys)
        assert code == 0, argv
        assert out.read_text().startswith("<svg")


def test_plot_failures(capsys):
    assert run(["plot", "geodesic", "P", "P"], capsys)[0] == 1
    assert run(["plot", "geodesic", "I", "P"], capsys)[0] == 1
    assert run(["plot", "circle", "Q", "-1"], capsys)[0] == 2
    assert run(["plot", "geodesic", "1,0", "P"], capsys)[0] == 2
    assert run(["plot", "geodesic", "P"], capsys)[0] == 2


def test_counter_search(capsys):
    code, out, _ = run(["counter-search", "--max-points", "2", "--max-lines", "0"], capsys)
    assert code == 0
    d = json.loads(out)
    assert d["count"] == 1
    assert d["structures"] == [{"points": 2, "lines": 0, "incidence": [[], []]}]
    assert run(["counter-search", "--max-points", "9", "--max-lines", "9"], capsys)[0] == 2
    assert run(["counter-search", "--max-points", "3", "--max-lines", "3", "--required", "4"], capsys)[0] == 2


def test_axiom_sys(tmp_path, capsys):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"vars": 2, "axioms": ["v0", "v1", "! v1"]}))
    code, out, _ = run(["axiom-sys", str(path), "--k", "2"], capsys)
    d = json.loads(out)
    assert code == 0
    assert d["construction"]["t"] >= 1 and d["construction"]["identity_holds"]
    path.write_text(json.dumps({"vars": 2, "axioms": ["v0", "v1"]}))
    code, out, _ = run(["axiom-sys", str(path)], capsys)
    assert code == 0 and "& v0 v1" in json.loads(out)["consequences"]
    path.write_text(json.dumps({"vars": 2, "axioms": ["v0 v1"]}))
    assert run(["axiom-sys", str(path)], capsys)[0] == 2


def test_distance_and_geodesics(capsys):
    code, out, _ = run(["distance", "-3,0", "6,0"], capsys)
    assert code == 0 and json.loads(out)["distance"] == 11.0
    code, out, _ = run(["geodesics", "-1,0", "3,0"], capsys)
    assert len(json.loads(out)["geodesics"]) == 2
    code, out, _ = run(["distance", "I", "P"], capsys)
    assert json.loads(out)["distance"] == "unreachable"


def test_oracle_check(capsys):
    code, out, _ = run(["oracle-check", "--pairs", "30", "--grid-step", "0.1"], capsys)
    assert code == 0 and json.loads(out)["within_tolerance"]
