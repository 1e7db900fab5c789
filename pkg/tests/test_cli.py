import csv
import json

import pytest

from inclab import fileio
from inclab.cli import main
from inclab.constructions import build_elekes
from inclab.core import Line


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_then_inc_round_trip(tmp_path, capsys):
    cfg_path = tmp_path / "cfg.json"
    code, out, _ = run(capsys, "gen", "--construction", "elekes", "--n", "64",
                       "-o", str(cfg_path))
    assert code == 0 and "|lines|=64" in out

    code, out, _ = run(capsys, "inc", str(cfg_path), "-o",
                       str(tmp_path / "prof.csv"), "--summary",
                       str(tmp_path / "summary.json"))
    assert code == 0
    assert out.startswith("total 128")

    # file round trip is bit-identical with in-process generation
    assert fileio.load_config(cfg_path) == build_elekes(64)
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary == {"total": 128, "min": 2, "max": 2, "median": 2}
    with open(tmp_path / "prof.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["line_c", "line_d", "count"]
    assert len(rows) == 65


def test_gen_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "gen", "--construction", "geometric", "--n", "8", "-o", str(a))
    run(capsys, "gen", "--construction", "geometric", "--n", "8", "-o", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_energy_line_kind(tmp_path, capsys):
    lines_path = tmp_path / "two-lines.json"
    lines_path.write_text(json.dumps(
        {"lines": [{"c": "1", "d": "0"}, {"c": "2", "d": "0"}]}))
    out_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "energy", "--kind", "line", "--lines",
                       str(lines_path), "-o", str(out_path))
    assert code == 0
    assert "line energy 6" in out
    payload = json.loads(out_path.read_text())
    assert payload["value"] == "6"
    assert payload["kind"] == "line"
    assert any(b["label"] == "|L|^2" for b in payload["bounds"])


def test_energy_additive_from_set_file(tmp_path, capsys):
    set_path = tmp_path / "set.json"
    set_path.write_text(json.dumps({"elements": ["1", "2", "3", "4", "5",
                                                 "6", "7", "8", "9", "10"]}))
    code, out, _ = run(capsys, "energy", "--kind", "additive", "--set",
                       str(set_path))
    assert code == 0 and "additive energy 670" in out


def test_energy_bipartite_from_two_sets(tmp_path, capsys):
    path = tmp_path / "ab.json"
    path.write_text(json.dumps({"A": ["0", "1"], "B": ["5"]}))
    code, out, _ = run(capsys, "energy", "--kind", "bipartite", "--set", str(path))
    assert code == 0 and "bipartite energy 2" in out


def test_energy_from_config(tmp_path, capsys):
    cfg_path = tmp_path / "cfg.json"
    run(capsys, "gen", "--construction", "elekes", "--n", "64", "-o", str(cfg_path))
    code, out, _ = run(capsys, "energy", "--kind", "line", str(cfg_path))
    assert code == 0 and "line energy" in out


def test_rich_command(tmp_path, capsys):
    pts_path = tmp_path / "pts.json"
    pts_path.write_text(json.dumps(
        {"points": [[str(x), str(y)] for x in range(3) for y in range(3)]}))
    out_path = tmp_path / "rich.csv"
    code, out, _ = run(capsys, "rich", str(pts_path), "--r", "3",
                       "-o", str(out_path))
    assert code == 0
    assert out.startswith("8 lines")
    with open(out_path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert len(rows) == 9
    assert sum(1 for r in rows[1:] if r[0] == "vertical") == 3


def test_structure_command(tmp_path, capsys):
    cfg_path = tmp_path / "cfg.json"
    run(capsys, "gen", "--construction", "elekes", "--n", "64", "-o", str(cfg_path))
    out_path = tmp_path / "structure.json"
    code, out, _ = run(capsys, "structure", str(cfg_path), "-o", str(out_path))
    assert code == 0
    payload = json.loads(out_path.read_text())
    assert payload["branch"] == "parallel"
    assert payload["slopes"] == ["1", "2", "3", "4"]
    assert payload["log_base"] == "e"


def test_structure_band_flag(tmp_path, capsys):
    cfg_path = tmp_path / "cfg.json"
    run(capsys, "gen", "--construction", "elekes", "--n", "64", "-o", str(cfg_path))
    code, out, _ = run(capsys, "structure", str(cfg_path), "--band", "3:9")
    assert code == 0
    assert json.loads(out)["degenerate"] is True  # every line has richness 2


def test_sweep_command(tmp_path, capsys):
    spec_path = tmp_path / "spec.json"
    spec_path.write_text(json.dumps({
        "construction": "elekes", "n_values": [64, 512, 4096],
        "measurements": ["incidences"]}))
    csv_path = tmp_path / "sweep.csv"
    fits_path = tmp_path / "fits.json"
    code, out, _ = run(capsys, "sweep", str(spec_path), "-o", str(csv_path),
                       "--fits", str(fits_path))
    assert code == 0
    with open(csv_path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["construction", "n", "alpha", "metric", "value"]
    assert rows[1] == ["elekes", "64", "", "incidences", "128"]
    fits = json.loads(fits_path.read_text())
    assert fits["incidences"]["slope"] == pytest.approx(4 / 3, abs=1e-9)


def test_verify_single_criterion(capsys):
    code, out, _ = run(capsys, "verify", "--only", "1")
    assert code == 0
    assert "C01 PASS" in out


def test_verify_exit_1_on_any_miss(capsys, monkeypatch):
    from inclab import verify

    def failing(seed=0, threads=None, **_):
        return verify.CheckResult(99, "synthetic", False, "forced miss", 0.0)

    monkeypatch.setattr(verify, "CRITERIA", [verify.criterion_1, failing])
    code, out, _ = run(capsys, "verify")
    assert code == 1
    assert "FAILURES PRESENT" in out


def test_exit_code_2_on_missing_file(capsys):
    code, _, err = run(capsys, "inc", "/nonexistent/cfg.json")
    assert code == 2 and "error" in err


def test_exit_code_2_on_bad_input(tmp_path, capsys):
    set_path = tmp_path / "bad.json"
    set_path.write_text(json.dumps({"elements": ["0", "1"]}))
    code, _, err = run(capsys, "energy", "--kind", "multiplicative", "--set",
                       str(set_path))
    assert code == 2 and "error" in err


def test_exit_code_2_on_malformed_flags(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--construction", "erdos", "--n", "64", "-o", "x.json"])
    assert exc.value.code == 2
