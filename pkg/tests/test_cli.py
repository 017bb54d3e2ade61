import json

import jsonschema
import numpy as np
import pandas as pd
import pytest
from typer.testing import CliRunner

from src.app.cli.main import GuessOption, app
from src.app.cli.runner import EXIT_CONFIG, EXIT_NUMERICAL, EXIT_OK
from src.app.schemas.common import ModeVolumeInfo
from src.app.services.artifact_service import load_schema
from src.structures.presets import list_presets

runner = CliRunner()


def write_config(path, document) -> str:
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


def test_presets_are_listed():
    result = runner.invoke(app, ["presets"])
    assert result.exit_code == EXIT_OK
    assert result.stdout.split() == list_presets()


def test_slab_qnm_writes_documents(tmp_path):
    result = runner.invoke(app, ["slab-qnm", "--preset", "slab-n2", "--out", str(tmp_path)])
    assert result.exit_code == EXIT_OK, result.output

    report = json.loads((tmp_path / "qnm.json").read_text(encoding="utf-8"))
    jsonschema.validate(report, load_schema("qnm"))
    assert report["omega_re"] == pytest.approx(np.pi / 2, rel=1e-8)
    assert report["omega_im"] == pytest.approx(-np.log(3) / 2, rel=1e-8)
    assert report["dimension"] == 1
    assert report["l_eff"] == pytest.approx(0.375, rel=1e-6)
    assert report["antinode"] == pytest.approx([0.0], abs=1e-12)

    lines = (tmp_path / "field.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0] == "x,f_re,f_im,f_abs"
    field = pd.read_csv(tmp_path / "field.csv")
    assert field["x"].iloc[0] == pytest.approx(-0.5)
    assert field["x"].iloc[-1] == pytest.approx(1.5)


def test_slab_qnm_field_is_reproducible(tmp_path):
    for run in ("first", "second"):
        result = runner.invoke(app, ["slab-qnm", "--preset", "slab-n2", "--out", str(tmp_path / run)])
        assert result.exit_code == EXIT_OK
    assert (tmp_path / "first" / "field.csv").read_bytes() == (tmp_path / "second" / "field.csv").read_bytes()


def test_malformed_config_is_a_configuration_error(tmp_path):
    config = tmp_path / "broken.json"
    config.write_text("{\"type\": \"layered_stack\",", encoding="utf-8")
    result = runner.invoke(app, ["slab-qnm", "--config", str(config), "--out", str(tmp_path)])
    assert result.exit_code == EXIT_CONFIG


def test_unknown_preset_is_a_configuration_error(tmp_path):
    result = runner.invoke(app, ["slab-qnm", "--preset", "no-such-slab", "--out", str(tmp_path)])
    assert result.exit_code == EXIT_CONFIG


def test_mirror_root_is_a_numerical_error(tmp_path):
    result = runner.invoke(app, ["slab-qnm", "--preset", "slab-n2", "--guess=-1.57,-0.55", "--out", str(tmp_path)])
    assert result.exit_code == EXIT_NUMERICAL


def test_homogeneous_stack_is_a_numerical_error(tmp_path):
    config = write_config(tmp_path / "air.json", {
        "type": "layered_stack",
        "name": "air",
        "layers": [{"thickness": 1.0, "eps": 1.0}],
    })
    result = runner.invoke(app, ["slab-qnm", "--config", config, "--guess", "1.5,-0.5", "--out", str(tmp_path)])
    assert result.exit_code == EXIT_NUMERICAL


def test_crystallite_without_rings_is_rejected(tmp_path):
    config = write_config(tmp_path / "empty.json", {
        "type": "rod_lattice",
        "rod_radius": 0.15,
        "eps_rod": 11.4,
        "layers": 0,
    })
    result = runner.invoke(app, ["crystallite-qnm", "--config", config, "--out", str(tmp_path)])
    assert result.exit_code == EXIT_CONFIG


def test_slab_command_rejects_a_crystallite(tmp_path):
    result = runner.invoke(app, ["slab-qnm", "--preset", "paper-2d-crystallite-N1", "--out", str(tmp_path)])
    assert result.exit_code == EXIT_CONFIG


@pytest.mark.parametrize("radii", ["3,2", "", "0,1"])
def test_bad_radii_are_rejected(tmp_path, radii):
    result = runner.invoke(app, [
        "mode-volume-sweep", "--preset", "slab-n2", "--radii", radii, "--out", str(tmp_path),
    ])
    assert result.exit_code == EXIT_CONFIG


def test_zero_threads_are_rejected(tmp_path):
    result = runner.invoke(app, ["slab-qnm", "--preset", "slab-n2", "--threads", "0", "--out", str(tmp_path)])
    assert result.exit_code == EXIT_CONFIG


def test_probe_inside_a_rod_is_rejected(tmp_path):
    result = runner.invoke(app, [
        "ldos", "--preset", "paper-2d-crystallite-N1", "--probe", "1,0", "--out", str(tmp_path),
    ])
    assert result.exit_code == EXIT_CONFIG


def test_homogeneous_ldos_is_flat(tmp_path):
    config = write_config(tmp_path / "reference.json", {
        "presets": ["homogeneous-2d"],
        "spectrum_points": 5,
        "resolution": 4,
    })
    out = tmp_path / "ldos"
    result = runner.invoke(app, ["ldos", "--config", config, "--out", str(out)])
    assert result.exit_code == EXIT_OK, result.output

    spectrum = pd.read_csv(out / "ldos.csv")
    assert list(spectrum.columns) == ["omega", "F_full", "F_single"]
    assert len(spectrum) == 5
    np.testing.assert_allclose(spectrum["F_full"], 1.0)
    assert spectrum["F_single"].isna().all()

    report = json.loads((out / "ldos.json").read_text(encoding="utf-8"))
    jsonschema.validate(report, load_schema("ldos"))
    assert report["mode_omega_re"] is None


def test_slab_sweep_writes_table_and_summary(tmp_path):
    result = runner.invoke(app, [
        "mode-volume-sweep", "--preset", "slab-n2", "--radii", "1,2,3", "--out", str(tmp_path),
    ])
    assert result.exit_code == EXIT_OK, result.output

    lines = (tmp_path / "sweep.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0] == "radius,Veff_N,Veff_Q,vQ_re,vQ_im"
    assert len(lines) == 4
    sweep = pd.read_csv(tmp_path / "sweep.csv")
    np.testing.assert_allclose(sweep["Veff_Q"], 0.375, rtol=1e-6)

    summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
    jsonschema.validate(summary, load_schema("summary"))
    assert summary["radii"] == [1.0, 2.0, 3.0]
    assert summary["v_eff_q"] == pytest.approx(0.375, rel=1e-6)
    assert summary["v_eff_tot"] is not None


def test_batched_sweep_uses_one_directory_per_preset(tmp_path):
    result = runner.invoke(app, [
        "mode-volume-sweep", "--preset", "slab-n2", "--preset", "slab-n6",
        "--radii", "1,2", "--no-ldos", "--out", str(tmp_path),
    ])
    assert result.exit_code == EXIT_OK, result.output
    for name in ("slab-n2", "slab-n6"):
        summary = json.loads((tmp_path / name / "summary.json").read_text(encoding="utf-8"))
        assert summary["structure"] == name
        assert summary["v_eff_tot"] is None


def test_crystallite_sweep_is_referenced_to_the_defect_centre(tmp_path):
    result = runner.invoke(app, [
        "mode-volume-sweep", "--preset", "paper-2d-crystallite-N1", "--resolution", "10",
        "--guess", "0.4259,-0.0135", "--radii", "2,3", "--out", str(tmp_path),
    ])
    assert result.exit_code == EXIT_OK, result.output
    summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
    jsonschema.validate(summary, load_schema("summary"))
    assert summary["antinode"] == pytest.approx([0.0, 0.0], abs=1e-9)
    assert summary["n_c"] == 1.0
    assert summary["omega_re"] == pytest.approx(0.4259, abs=0.005)
    assert summary["v_eff_tot"] is not None


def test_guess_help_names_both_unit_systems():
    assert "omega L/c" in GuessOption.help
    assert "omega a/2 pi c" in GuessOption.help


def test_volume_field_documents_the_null_condition():
    assert "Re(v_Q) <= 0" in ModeVolumeInfo.model_fields["v_eff_q"].description
