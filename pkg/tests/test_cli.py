import csv
import json

import pytest

from mimo_dof import __version__
from mimo_dof.cli import main, snr_grid_type


def _rows(path):
    with open(path, newline="") as f:
        return list(csv.DictReader(f))


def test_snr_grid_parsing():
    assert snr_grid_type("30:5:40") == (30.0, 35.0, 40.0)
    assert snr_grid_type("0,10,20") == (0.0, 10.0, 20.0)
    for bad in ("30:0:40", "40,30", "", "a:b:c"):
        with pytest.raises(Exception):
            snr_grid_type(bad)


def test_region_command(tmp_path):
    out = tmp_path / "region_1234.json"
    assert main(["region", "--antennas", "1,2,3,4", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["exact"]["case"] == "C"
    assert payload["exact"]["L"] == 1
    assert payload["exact"]["vertices"] == [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 3.0]]
    assert payload["contains_origin"] is True
    assert payload["provenance"]["tool_version"] == __version__
    boundary = _rows(tmp_path / "region_1234_boundary.csv")
    assert {r["region"] for r in boundary} == {"exact", "previous_outer_bound"}


def test_region_requires_antennas(tmp_path):
    assert main(["region", "--out", str(tmp_path / "r.json")]) == 2
    assert main(["region", "--antennas", "1,2,3"]) == 2
    assert main(["region", "--antennas", "0,2,3,4"]) == 2


def test_sweep_is_reproducible(tmp_path):
    args = ["sweep", "--antennas", "1,2,3,4", "--snr-db", "0,10", "--trials", "20", "--seed", "3"]
    a, b, c = tmp_path / "a.csv", tmp_path / "b.csv", tmp_path / "c.csv"
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert main(args + ["--out", str(c), "--workers", "3"]) == 0
    assert a.read_bytes() == b.read_bytes() == c.read_bytes()
    rows = _rows(a)
    assert len(rows) == 2 * 6
    assert list(rows[0]) == ["gamma_db", "quantity", "mean_bits", "std_err", "trials", "seed", "tool_version"]
    assert {r["quantity"] for r in rows} == {f"mac{r}_{q}" for r in (1, 2) for q in ("r1", "r2", "sum")}
    assert all(r["seed"] == "3" and r["trials"] == "20" for r in rows)


def test_sweep_json(tmp_path):
    out = tmp_path / "sweep.json"
    assert main(["sweep", "--antennas", "1,1,1,1", "--law", "fixed:1", "--snr-db", "0",
                 "--trials", "4", "--format", "json", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["law"] == "fixed:1.0"
    sums = [r["mean_bits"] for r in payload["rows"] if r["quantity"] == "mac1_sum"]
    assert sums == [pytest.approx(1.584962500721156)]


def test_slope_from_sweep_file(tmp_path, capsys):
    sweep = tmp_path / "sweep.csv"
    assert main(["sweep", "--antennas", "1,1,1,1", "--law", "fixed:1", "--snr-db", "30:5:40",
                 "--trials", "3", "--out", str(sweep)]) == 0
    out = tmp_path / "slopes.json"
    assert main(["slope", "--in", str(sweep), "--out", str(out)]) == 0
    slopes = json.loads(out.read_text())["slopes"]
    assert slopes["mac1_r1"] == pytest.approx(1.0, abs=1e-9)
    assert slopes["mac2_r2"] == pytest.approx(1.0, abs=1e-9)
    assert "mac1_r1: 1.0000" in capsys.readouterr().out


def test_slope_missing_input_is_io_error(tmp_path):
    assert main(["slope", "--in", str(tmp_path / "nope.csv")]) == 3


def test_achievable_command(tmp_path):
    out = tmp_path / "ach.json"
    assert main(["achievable", "--antennas", "1,1,1,1", "--law", "fixed:1", "--snr-db", "0,10",
                 "--trials", "3", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert [p["gamma_db"] for p in payload["points"]] == [0.0, 10.0]
    assert payload["points"][0]["vertices"][0] == [0.0, 0.0]
    assert set(payload["corner_slopes"]) == {"user1_alone", "user2_alone", "mac_max_r1", "mac_max_r2"}


def test_verify_command(tmp_path, capsys):
    out = tmp_path / "verify.json"
    assert main(["verify", "--suite", "lemma3", "--trials", "100", "--seed", "7", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["passed"] is True
    assert payload["reports"][0]["suite_name"] == "lemma3"
    assert "lemma3: 7/7 checks passed" in capsys.readouterr().out


def test_verify_theorem2_command_passes(tmp_path, capsys):
    out = tmp_path / "theorem2.json"
    assert main(["verify", "--suite", "theorem2", "--trials", "2000", "--seed", "7", "--out", str(out)]) == 0
    assert "theorem2: 16/16 checks passed" in capsys.readouterr().out


def test_unknown_suite_is_usage_error():
    assert main(["verify", "--suite", "nope"]) == 2


def test_config_file_supplies_defaults(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# quick sweep\nantennas = 1,1,1,1\nlaw = fixed:1\nsnr-db = 0,10,20\ntrials = 5\n")
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "--config", str(cfg), "--out", str(out)]) == 0
    rows = _rows(out)
    assert len(rows) == 3 * 6
    assert {r["trials"] for r in rows} == {"5"}

    # command-line flags override the file
    out2 = tmp_path / "sweep2.csv"
    assert main(["sweep", "--config", str(cfg), "--snr-db", "0", "--out", str(out2)]) == 0
    assert len(_rows(out2)) == 6


def test_config_file_errors(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour = blue\n")
    assert main(["region", "--config", str(bad)]) == 2
    assert main(["region", "--config", str(tmp_path / "missing.cfg")]) == 2


def test_version_flag(capsys):
    assert main(["--version"]) == 0
    assert __version__ in capsys.readouterr().out
