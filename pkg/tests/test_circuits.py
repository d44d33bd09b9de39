"""Optical circuit elements, mesh decomposition, and state preparation."""

import numpy as np
import pytest

import gaussbound as gb
from gaussbound.circuits import (
    BeamSplitter,
    OpticalCircuit,
    PhaseShift,
    Squeezer,
    build_preparation_circuit,
    decompose_unitary,
    elements_to_symplectic,
    elements_to_unitary,
    passive_to_unitary,
    reference_mesh_factors,
    simulate,
    unitary_to_passive,
)
from gaussbound.errors import (
    DimensionMismatchError,
    InvalidKappaError,
    InvalidTauError,
    NotPassiveError,
    SqueezerInUnitaryCompositionError,
)

TAU_STAR = (1.0 + np.sqrt(17.0)) / 4.0


def random_unitary(n, rng):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def test_beam_splitter_unitary_block():
    theta, phi = 0.4, 1.1
    u = elements_to_unitary(OpticalCircuit(2, (BeamSplitter(1, 2, theta, phi),)))
    expected = np.array(
        [
            [np.cos(theta), -np.exp(1j * phi) * np.sin(theta)],
            [np.exp(-1j * phi) * np.sin(theta), np.cos(theta)],
        ]
    )
    np.testing.assert_allclose(u, expected, atol=1e-12)


def test_phase_shift_unitary():
    u = elements_to_unitary(OpticalCircuit(2, (PhaseShift(2, 0.7),)))
    np.testing.assert_allclose(u, np.diag([1.0, np.exp(1j * 0.7)]), atol=1e-12)


def test_element_validation():
    with pytest.raises(ValueError):
        BeamSplitter(1, 1, 0.3)
    with pytest.raises(ValueError):
        BeamSplitter(1, 2, 2.0)
    with pytest.raises(ValueError):
        OpticalCircuit(2, (PhaseShift(3, 0.1),))


def test_unitary_composition_rejects_squeezers():
    circuit = OpticalCircuit(1, (Squeezer(1, 0.2),))
    assert not circuit.is_passive
    with pytest.raises(SqueezerInUnitaryCompositionError):
        elements_to_unitary(circuit)


def test_passive_unitary_round_trips():
    rng = np.random.default_rng(2)
    for n in (1, 2, 4):
        u = random_unitary(n, rng)
        s = unitary_to_passive(u)
        ok, defect = gb.is_symplectic(s.data)
        assert ok and defect <= 1e-12
        np.testing.assert_allclose(passive_to_unitary(s), u, atol=1e-12)


def test_passive_to_unitary_rejects_squeezing():
    with pytest.raises(NotPassiveError):
        passive_to_unitary(gb.SymplecticTransform(np.diag([2.0, 0.5])))


def test_mesh_decomposition_budget_and_accuracy():
    rng = np.random.default_rng(33)
    for _ in range(60):
        n = int(rng.integers(1, 7))
        u = random_unitary(n, rng)
        circuit = decompose_unitary(u)
        assert circuit.is_passive
        splitters = [e for e in circuit.elements if isinstance(e, BeamSplitter)]
        phases = [e for e in circuit.elements if isinstance(e, PhaseShift)]
        assert len(splitters) <= n * (n - 1) // 2
        assert len(phases) <= n
        assert np.max(np.abs(circuit.unitary() - u)) <= 1e-8


def test_symplectic_and_unitary_views_agree():
    rng = np.random.default_rng(4)
    u = random_unitary(3, rng)
    circuit = decompose_unitary(u)
    np.testing.assert_allclose(
        circuit.symplectic().data,
        unitary_to_passive(u).data,
        atol=1e-10,
    )
    np.testing.assert_allclose(
        elements_to_symplectic(circuit).data, circuit.symplectic().data, atol=1e-12
    )


def test_passive_circuits_conserve_trace():
    rng = np.random.default_rng(5)
    for _ in range(10):
        u = random_unitary(3, rng)
        circuit = decompose_unitary(u)
        gamma = gb.random_valid_covariance(3, rng)
        out = simulate(circuit, gamma)
        assert np.trace(out.data) == pytest.approx(np.trace(gamma.data), rel=1e-10)
        assert gb.is_valid_covariance(out)[0]


def test_simulate_rejects_mode_mismatch():
    circuit, _ = build_preparation_circuit(3.0, TAU_STAR)
    with pytest.raises(DimensionMismatchError):
        simulate(circuit, gb.vacuum_state(2))


def test_preparation_reproduces_first_example():
    circuit, thermal_in = build_preparation_circuit(3.0, TAU_STAR)
    np.testing.assert_array_equal(
        np.diag(thermal_in.data), [1, 1, 1, 1, 3, 3, 3, 3]
    )
    np.testing.assert_array_equal(
        thermal_in.data, np.diag(np.diag(thermal_in.data))
    )
    out = simulate(circuit, thermal_in)
    target = gb.construct(gb.example_params("example1"))
    assert np.max(np.abs(out.data - target.data)) <= 1e-8


def test_redundant_elements_change_nothing():
    full, state = build_preparation_circuit(3.0, TAU_STAR)
    trimmed, state2 = build_preparation_circuit(3.0, TAU_STAR, include_redundant=False)
    np.testing.assert_array_equal(state.data, state2.data)
    assert len(full.elements) == 23
    assert len(trimmed.elements) == 21
    assert len(full.elements) - len(trimmed.elements) == 2
    out_full = simulate(full, state)
    out_trimmed = simulate(trimmed, state)
    assert np.max(np.abs(out_full.data - out_trimmed.data)) <= 1e-10


def test_generic_route_builds_the_same_state():
    generic, state = build_preparation_circuit(3.0, TAU_STAR, generic=True)
    assert len(generic.elements) == 21
    out = simulate(generic, state)
    target = gb.construct(gb.example_params("example1"))
    assert np.max(np.abs(out.data - target.data)) <= 1e-8


def test_unit_parameters_prepare_the_vacuum():
    circuit, state = build_preparation_circuit(1.0, 1.0)
    out = simulate(circuit, state)
    np.testing.assert_allclose(out.data, np.eye(8), atol=1e-10)


def test_preparation_rejects_bad_parameters():
    with pytest.raises(InvalidKappaError):
        build_preparation_circuit(0.5, 1.2)
    with pytest.raises(InvalidTauError):
        build_preparation_circuit(3.0, 0.0)
    with pytest.raises(InvalidTauError):
        build_preparation_circuit(3.0, -1.0)


def test_reference_mesh_factor_chains():
    factors = reference_mesh_factors()
    assert sorted(factors.keys()) == [
        "input_factor_modes",
        "input_factors",
        "input_phase",
        "output_factor_modes",
        "output_factors",
        "output_phase",
    ]
    assert len(factors["input_factors"]) == 5
    assert len(factors["output_factors"]) == 4
    np.testing.assert_allclose(
        factors["input_phase"], np.diag([1, -1, 1, 1]), atol=1e-12
    )
    np.testing.assert_allclose(
        factors["output_phase"], np.diag([1, 1, 1j, -1j]), atol=1e-12
    )
    for factor in list(factors["input_factors"]) + list(factors["output_factors"]):
        np.testing.assert_allclose(
            factor @ factor.conj().T, np.eye(4), atol=1e-10
        )
    # Multiplying the printed factors (last applied first) against the
    # closing phases reproduces the two reference interferometers.
    chain_in = np.eye(4, dtype=complex)
    for factor in factors["input_factors"]:
        chain_in = factor @ chain_in
    chain_in = chain_in @ factors["input_phase"]
    chain_out = np.eye(4, dtype=complex)
    for factor in factors["output_factors"]:
        chain_out = factor @ chain_out
    chain_out = chain_out @ factors["output_phase"]
    np.testing.assert_allclose(
        chain_in, gb.refvalues.input_unitary(), atol=1e-10
    )
    np.testing.assert_allclose(
        chain_out, gb.refvalues.output_unitary(), atol=1e-10
    )
