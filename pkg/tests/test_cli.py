"""Command line interface: subcommands, exit codes, file formats."""

import contextlib
import importlib.resources
import io
import json
import re

import numpy as np
import pytest

import gaussbound as gb
from gaussbound.cli import (
    EXIT_DATA,
    EXIT_INCONCLUSIVE,
    EXIT_OK,
    EXIT_USAGE,
    main,
)
from gaussbound.serialization import matrix_to_json, params_to_json

pytestmark = pytest.mark.filterwarnings(
    "ignore::gaussbound.errors.DegenerateSpectrumWarning"
)


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = main(list(argv))
        except SystemExit as exc:
            code = exc.code
    return code, out.getvalue(), err.getvalue()


def packaged_fixture(name):
    return (
        importlib.resources.files("gaussbound") / "data" / f"{name}.json"
    ).read_text()


@pytest.fixture
def example1_file(tmp_path):
    path = tmp_path / "example1.json"
    path.write_text(packaged_fixture("example1"))
    return path


def test_version_flag():
    code, out, _ = run_cli("--version")
    assert code == 0
    assert out == f"gaussbound {gb.__version__}\n"
    assert out == "gaussbound 0.1.0\n"


@pytest.mark.parametrize("name", gb.EXAMPLE_NAMES)
def test_construct_preset_passes_fixture_through(name):
    code, out, _ = run_cli("construct", "--preset", name)
    assert code == EXIT_OK
    assert out == packaged_fixture(name)


def test_construct_out_file_matches_stdout(tmp_path):
    path = tmp_path / "state.json"
    code, _, _ = run_cli("construct", "--preset", "example2", "--out", str(path))
    assert code == EXIT_OK
    assert path.read_text() == packaged_fixture("example2")


def test_construct_grouped_ordering(example_matrices):
    code, out, _ = run_cli(
        "construct", "--preset", "example1", "--ordering", "grouped"
    )
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["ordering"] == "grouped"
    perm = [0, 2, 4, 6, 1, 3, 5, 7]
    np.testing.assert_allclose(
        np.array(record["data"]),
        example_matrices["example1"][np.ix_(perm, perm)],
        atol=1e-12,
    )


def test_construct_requires_exactly_one_source(tmp_path):
    code, _, err = run_cli("construct")
    assert code == EXIT_USAGE
    assert "exactly one of --preset or --params" in err
    params = tmp_path / "params.json"
    params.write_text(params_to_json(gb.example_params("example1")))
    code, _, err = run_cli(
        "construct", "--preset", "example1", "--params", str(params)
    )
    assert code == EXIT_USAGE
    code, _, _ = run_cli("construct", "--preset", "example9")
    assert code == EXIT_USAGE


def test_construct_from_params_file(tmp_path, example_matrices):
    params = tmp_path / "params.json"
    params.write_text(params_to_json(gb.example_params("example3")))
    code, out, _ = run_cli("construct", "--params", str(params))
    assert code == EXIT_OK
    record = json.loads(out)
    np.testing.assert_allclose(
        np.array(record["data"]), example_matrices["example3"], atol=1e-12
    )


def test_construct_rejects_malformed_params(tmp_path):
    params = tmp_path / "params.json"
    params.write_text("{broken\n")
    code, _, err = run_cli("construct", "--params", str(params))
    assert code == EXIT_DATA
    assert "data error" in err


def test_classify_bound_example(example1_file):
    code, out, _ = run_cli("classify", "--input", str(example1_file))
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["class"] == "bound_entangled"
    assert record["slack"] > 1e-6
    assert record["iterations"] > 0
    assert abs(record["ppt_margin"]) < 1e-9


def test_classify_alternate_partition_is_separable(example1_file):
    # Across 13|24 the same state carries no entanglement at all.
    code, out, _ = run_cli(
        "classify", "--input", str(example1_file), "--partition", "a=1,3", "b=2,4"
    )
    assert code == EXIT_OK
    assert json.loads(out)["class"] == "separable"


def test_classify_rejects_partition_mismatch(example1_file):
    code, _, err = run_cli(
        "classify", "--input", str(example1_file), "--partition", "a=1", "b=2"
    )
    assert code == EXIT_USAGE
    assert "partition covers 2 modes" in err


def test_classify_missing_input_is_a_data_error():
    code, _, err = run_cli("classify", "--input", "/nonexistent/state.json")
    assert code == EXIT_DATA
    assert "cannot read" in err


def test_decompose_mode_payloads(example1_file, tmp_path):
    code, out, _ = run_cli(
        "decompose", "--input", str(example1_file), "--mode", "williamson"
    )
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["mode"] == "williamson"
    assert set(record) == {
        "format_version", "mode", "n_modes", "ordering", "nu", "symplectic",
    }
    np.testing.assert_allclose(record["nu"], [1, 1, 3, 3], atol=1e-9)

    code, out, _ = run_cli(
        "decompose", "--input", str(example1_file), "--mode", "euler"
    )
    record = json.loads(out)
    assert set(record) == {
        "format_version", "mode", "n_modes", "ordering",
        "r", "tau", "passive_out", "passive_in",
    }
    tau_star = (1.0 + np.sqrt(17.0)) / 4.0
    np.testing.assert_allclose(record["tau"], [tau_star] * 4, atol=1e-9)

    code, out, _ = run_cli(
        "decompose", "--input", str(example1_file), "--mode", "both"
    )
    record = json.loads(out)
    assert {"nu", "symplectic", "r", "tau", "passive_out", "passive_in"} <= set(
        record
    )


def test_synthesize_then_simulate_reproduces_the_state(tmp_path, example_matrices):
    circuit_path = tmp_path / "circuit.json"
    input_path = tmp_path / "input.json"
    tau_star = repr(float((1.0 + np.sqrt(17.0)) / 4.0))
    code, _, _ = run_cli(
        "synthesize", "--kappa", "3", "--tau", tau_star,
        "--out", str(circuit_path), "--input-out", str(input_path),
    )
    assert code == EXIT_OK
    assert len(json.loads(circuit_path.read_text())["elements"]) == 23
    code, out, _ = run_cli(
        "simulate", "--circuit", str(circuit_path), "--input", str(input_path)
    )
    assert code == EXIT_OK
    produced = np.array(json.loads(out)["data"])
    assert np.max(np.abs(produced - example_matrices["example1"])) <= 1e-8


def test_synthesize_trimmed_and_generic_variants(tmp_path):
    circuit_path = tmp_path / "circuit.json"
    code, _, _ = run_cli(
        "synthesize", "--kappa", "3", "--tau", "1.28", "--omit-redundant",
        "--out", str(circuit_path),
    )
    assert code == EXIT_OK
    assert len(json.loads(circuit_path.read_text())["elements"]) == 21
    code, _, _ = run_cli(
        "synthesize", "--kappa", "3", "--tau", "1.28", "--generic",
        "--out", str(circuit_path),
    )
    assert code == EXIT_OK
    assert len(json.loads(circuit_path.read_text())["elements"]) == 21


def test_synthesize_rejects_out_of_range_parameters():
    code, _, err = run_cli("synthesize", "--kappa", "0.5", "--tau", "1.2")
    assert code == EXIT_USAGE
    assert "--kappa" in err
    code, _, err = run_cli("synthesize", "--kappa", "3", "--tau", "0")
    assert code == EXIT_USAGE
    assert "--tau" in err


def test_simulate_rejects_mode_mismatch(tmp_path):
    circuit_path = tmp_path / "circuit.json"
    run_cli("synthesize", "--kappa", "3", "--tau", "1.28", "--out", str(circuit_path))
    small = tmp_path / "small.json"
    small.write_text(matrix_to_json(gb.vacuum_state(2)))
    code, _, err = run_cli(
        "simulate", "--circuit", str(circuit_path), "--input", str(small)
    )
    assert code == EXIT_DATA
    assert "data error" in err


def test_sweep_writes_grid_and_boundary(tmp_path):
    grid_path = tmp_path / "grid.csv"
    boundary_path = tmp_path / "boundary.csv"
    code, _, _ = run_cli(
        "sweep", "--kappa", "1:3:2", "--tau", "1:1.5:3",
        "--out", str(grid_path), "--boundary", str(boundary_path),
    )
    assert code == EXIT_OK
    grid_lines = grid_path.read_text().splitlines()
    assert grid_lines[0] == "kappa,tau,class,ppt_margin,slack"
    assert len(grid_lines) == 7
    boundary_lines = boundary_path.read_text().splitlines()
    assert boundary_lines[0] == "kappa,tau_lower,tau_upper,converged"
    assert len(boundary_lines) == 3
    # kappa=1 admits no flip boundary; kappa=3 must bracket one.
    assert boundary_lines[1].startswith("1,,,false")
    assert boundary_lines[2].endswith("true")


def test_sweep_rejects_malformed_axes():
    code, _, err = run_cli("sweep", "--kappa", "3:1:5", "--tau", "1:1.5:3")
    assert code == EXIT_USAGE
    assert "empty or inverted" in err
    code, _, err = run_cli("sweep", "--kappa", "1:2", "--tau", "1:1.5:3")
    assert code == EXIT_USAGE
    assert "lo:hi:count" in err


def test_verify_paper_reports_nine_passing_suites(tmp_path):
    report_path = tmp_path / "report.json"
    code, out, _ = run_cli("verify-paper", "--out", str(report_path))
    assert code == EXIT_OK
    assert "9/9 suites passed" in out
    assert len(re.findall(r"\[\s*ok\s*\]", out)) == 9
    report = json.loads(report_path.read_text())
    assert report["status"] == "pass"
    assert len(report["suites"]) == 9
    assert all(suite["status"] == "pass" for suite in report["suites"])


def test_verify_paper_flags_unreachable_tolerance():
    code, out, err = run_cli("verify-paper", "--tol-sep", "1e-12")
    assert code == EXIT_INCONCLUSIVE


def test_unknown_subcommand_is_a_usage_error():
    code, _, _ = run_cli("nonsense")
    assert code == EXIT_USAGE
    code, _, _ = run_cli()
    assert code == EXIT_USAGE
