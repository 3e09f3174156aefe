import json
import math

import numpy as np
import pytest

from landau.cli import main


def run_cli(args):
    return main(args)


def read_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def test_spectrum_command(tmp_path):
    code = run_cli(
        ["spectrum", "--nphi", "3", "--lx", "1", "--ly", "1", "--grid", "48", "--levels", "3", "--out-dir", str(tmp_path)]
    )
    assert code == 0
    payload = read_json(tmp_path / "spectrum.json")
    assert [c["multiplicity"] for c in payload["clusters"]] == [3, 3, 3]
    omega = 6 * math.pi
    for i, c in enumerate(payload["clusters"]):
        assert abs(c["mean"] - omega * (i + 0.5)) / (omega * (i + 0.5)) < 0.05
    manifest = read_json(tmp_path / "spectrum_manifest.json")
    assert "spectrum.json" in manifest["outputs"]
    assert manifest["config"]["nphi"] == 3


def test_spectrum_unit_flux_nondegenerate(tmp_path):
    run_cli(["spectrum", "--nphi", "1", "--grid", "48", "--levels", "2", "--out-dir", str(tmp_path)])
    payload = read_json(tmp_path / "spectrum.json")
    assert payload["clusters"][0]["multiplicity"] == 1


def test_spectrum_missing_nphi_exits_2(tmp_path):
    with pytest.raises(SystemExit) as err:
        run_cli(["spectrum", "--out-dir", str(tmp_path)])
    assert err.value.code == 2


def test_density_fig2_reproduction(tmp_path):
    pi = repr(math.pi)
    code = run_cli(
        ["density", "--nphi", "1", "--theta-x", pi, "--theta-y", pi, "--n", "0", "--l", "0", "--grid", "128", "--out-dir", str(tmp_path)]
    )
    assert code == 0
    argmax = read_json(tmp_path / "argmax.json")
    assert abs(argmax["argmax_x"] - 0.5) <= 1 / 128
    assert abs(argmax["argmax_y"] - 0.5) <= 1 / 128
    assert argmax["grid"] == [129, 129]
    pgm = (tmp_path / "density.pgm").read_text().splitlines()
    assert pgm[0] == "P2" and pgm[1] == "129 129"


def test_density_coherent_normalized(tmp_path):
    code = run_cli(
        ["density", "--nphi", "1", "--lam", "0", "--lam-prime", "0.2+0.1j", "--grid", "96", "--out-dir", str(tmp_path)]
    )
    assert code == 0
    argmax = read_json(tmp_path / "argmax.json")
    assert abs(argmax["integral"] - 1.0) < 1e-8


def test_density_resolution_flag_changes_grid(tmp_path):
    run_cli(["density", "--nphi", "2", "--n", "0", "--l", "1", "--grid", "64", "--out-dir", str(tmp_path)])
    assert read_json(tmp_path / "argmax.json")["grid"] == [65, 65]


def test_density_selector_required(tmp_path):
    with pytest.raises(SystemExit) as err:
        run_cli(["density", "--nphi", "1", "--out-dir", str(tmp_path)])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        run_cli(["density", "--nphi", "1", "--n", "0", "--lam", "0", "--out-dir", str(tmp_path)])
    assert err.value.code == 2


def test_group_dump(tmp_path):
    code = run_cli(["group", "--nphi", "4", "--out-dir", str(tmp_path)])
    assert code == 0
    payload = read_json(tmp_path / "group.json")
    assert payload["order"] == 64
    assert len(payload["multiplication_table"]) == 64
    assert len(payload["center"]) == 4
    assert payload["weyl_deviation"] < 1e-14
    tx = np.array([[complex(re, im) for re, im in row] for row in payload["tx"]])
    ty = np.array([[complex(re, im) for re, im in row] for row in payload["ty"]])
    assert np.array_equal(tx, np.array([[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]], dtype=complex))
    assert np.max(np.abs(ty - np.diag([1, 1j, -1, -1j]))) < 1e-15
    # conjugacy classes partition the group
    sizes = sum(len(c) for c in payload["conjugacy_classes"])
    assert sizes == 64


def test_group_too_large(tmp_path):
    with pytest.raises(SystemExit) as err:
        run_cli(["group", "--nphi", "13", "--out-dir", str(tmp_path)])
    assert err.value.code == 2


def test_verify_passes_and_reports_numbers(tmp_path):
    code = run_cli(["verify", "--nphi", "1", "--out-dir", str(tmp_path)])
    assert code == 0
    payload = read_json(tmp_path / "verify.json")
    assert payload["all_passed"] is True
    assert all(isinstance(c["residual"], float) for c in payload["checks"])
    assert len(payload["checks"]) >= 15


def test_verify_detects_non_integer_flux(tmp_path):
    code = run_cli(["verify", "--nphi", "1", "--nphi-override", "1.5", "--out-dir", str(tmp_path)])
    assert code == 1
    payload = read_json(tmp_path / "verify.json")
    failed = [c for c in payload["checks"] if not c["passed"]]
    assert any(c["name"] == "boundary_shift_consistency" for c in failed)


def test_orbit_small_radius_no_wrap(tmp_path):
    code = run_cli(
        ["orbit", "--nphi", "1", "--center-x", "0.5", "--center-y", "0.5", "--radius", "0.2", "--out-dir", str(tmp_path)]
    )
    assert code == 0
    info = read_json(tmp_path / "orbit.json")
    assert info["closes"] is True
    assert info["crosses_boundary"] is False
    assert info["closure_residual"] < 1e-9


def test_orbit_large_radius_wraps_and_closes(tmp_path):
    code = run_cli(["orbit", "--nphi", "1", "--radius", "1.4", "--out-dir", str(tmp_path)])
    assert code == 0
    info = read_json(tmp_path / "orbit.json")
    assert info["closes"] is True
    assert info["crosses_boundary"] is True
    trace = (tmp_path / "orbit.csv").read_text().splitlines()
    assert trace[0] == "t,x,y"
    xs = [float(line.split(",")[1]) for line in trace[1:]]
    assert all(0 <= x < 1 for x in xs)


def test_coherent_time_series(tmp_path):
    code = run_cli(
        ["coherent", "--nphi", "1", "--lam", "0", "--lam-prime", "0.3+0.2j", "--samples", "16", "--out-dir", str(tmp_path)]
    )
    assert code == 0
    lines = (tmp_path / "coherent.csv").read_text().splitlines()
    assert lines[0] == "t,x,y,energy,delta_x,delta_y,delta_energy"
    rows = [list(map(float, line.split(","))) for line in lines[1:]]
    xs = {row[1] for row in rows}
    ys = {row[2] for row in rows}
    assert max(xs) - min(xs) < 1e-12  # lambda = 0: the packet sits still
    assert max(ys) - min(ys) < 1e-12
    energies = [row[3] for row in rows]
    assert max(energies) - min(energies) < 1e-12


def test_coherent_period_return(tmp_path):
    run_cli(
        ["coherent", "--nphi", "1", "--lam", "0.4+0.1j", "--lam-prime", "0.2-0.3j", "--samples", "32", "--out-dir", str(tmp_path)]
    )
    lines = (tmp_path / "coherent.csv").read_text().splitlines()
    first = list(map(float, lines[1].split(",")))
    last = list(map(float, lines[-1].split(",")))
    assert abs(first[1] - last[1]) < 1e-9 and abs(first[2] - last[2]) < 1e-9


def test_outputs_are_deterministic(tmp_path):
    dir_a = tmp_path / "a"
    dir_b = tmp_path / "b"
    flags = ["density", "--nphi", "1", "--n", "0", "--l", "0", "--grid", "64"]
    run_cli(flags + ["--out-dir", str(dir_a)])
    run_cli(flags + ["--out-dir", str(dir_b)])
    for name in ("density.csv", "density.pgm", "argmax.json"):
        assert (dir_a / name).read_bytes() == (dir_b / name).read_bytes()


def test_spectrum_output_deterministic_through_eigensolver(tmp_path):
    # 96^2 routes through the iterative solver; repeated runs must still be
    # byte-identical (spectrum.json embeds no timing, only eigenvalues)
    dir_a = tmp_path / "a"
    dir_b = tmp_path / "b"
    flags = ["spectrum", "--nphi", "2", "--grid", "96", "--levels", "2"]
    run_cli(flags + ["--out-dir", str(dir_a)])
    run_cli(flags + ["--out-dir", str(dir_b)])
    assert (dir_a / "spectrum.json").read_bytes() == (dir_b / "spectrum.json").read_bytes()


def test_config_file_with_flag_override(tmp_path):
    cfg_file = tmp_path / "t.cfg"
    cfg_file.write_text("mass=1\ncharge=1\nlx=1\nly=1\nnphi=2\ntheta_x=0.5\n")
    run_cli(
        ["density", "--config", str(cfg_file), "--theta-x", "1.5", "--n", "0", "--l", "0", "--grid", "32", "--out-dir", str(tmp_path)]
    )
    manifest = read_json(tmp_path / "density_manifest.json")
    assert manifest["config"]["nphi"] == 2
    assert manifest["config"]["theta_x"] == 1.5
