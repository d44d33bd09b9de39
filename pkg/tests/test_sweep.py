"""Phase-diagram scan, boundary bisection, and large-occupation asymptote."""

import numpy as np
import pytest
from scipy.linalg import null_space
from scipy.optimize import brentq

import gaussbound as gb
from gaussbound.circuits import build_preparation_circuit, elements_to_symplectic
from gaussbound.errors import NoBracketError, NotConvergedError
from gaussbound.sdp import EntanglementClass, classify
from gaussbound.sweep import (
    BoundaryKind,
    SweepGrid,
    SweepOptions,
    cell_state,
    default_axes,
    estimate_asymptote,
    find_boundary,
    scan,
    trace_boundary,
)

TAU_STAR = (1.0 + np.sqrt(17.0)) / 4.0


def infinite_occupation_boundary():
    """Independent limit of the flip boundary for unbounded thermal input.

    The prepared state is S (P_vac + kappa P_th) S^T with a
    kappa-independent symplectic S(tau).  Dividing by kappa and letting
    it grow, the flip test's pencil splits into a divergent part and a
    finite part; compressing the finite part onto the divergent part's
    null space gives the limiting margin, whose root in tau is the
    asymptote.  Everything here is built from scipy primitives, not from
    the sweep module under test.
    """
    part = gb.family_bipartition()
    flip = np.ones(8)
    for m in part.modes_b:
        flip[2 * (m - 1) + 1] = -1.0
    lam = np.diag(flip)
    sig = gb.symplectic_form(4)
    p_vac = np.diag([1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0])
    p_th = np.diag([0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0])

    def margin(tau):
        circuit, _ = build_preparation_circuit(2.0, tau)
        s = elements_to_symplectic(circuit).data
        finite = np.block(
            [[lam @ s @ p_vac @ s.T @ lam, sig], [sig.T, lam @ s @ p_vac @ s.T @ lam]]
        )
        divergent = np.block(
            [
                [lam @ s @ p_th @ s.T @ lam, np.zeros((8, 8))],
                [np.zeros((8, 8)), lam @ s @ p_th @ s.T @ lam],
            ]
        )
        basis = null_space(divergent, rcond=1e-10)
        compressed = basis.T @ finite @ basis
        return np.linalg.eigvalsh((compressed + compressed.T) / 2.0)[0]

    return brentq(margin, 1.3, 1.9, xtol=1e-12)


def test_probe_cells_cover_all_three_phases():
    part = gb.family_bipartition()
    assert (
        classify(cell_state(3.0, 1.0), part).classification
        is EntanglementClass.SEPARABLE
    )
    assert (
        classify(cell_state(3.0, 1.05), part).classification
        is EntanglementClass.BOUND_ENTANGLED
    )
    assert (
        classify(cell_state(3.0, 1.5), part).classification
        is EntanglementClass.FREE_ENTANGLED
    )


def test_scan_grid_codes_and_shape():
    grid = scan([1.0, 3.0], [1.0, 1.05, 1.5])
    assert grid.shape == (2, 3)
    assert grid.inconclusive_fraction == 0.0
    np.testing.assert_array_equal(
        grid.classification_codes(), [[0, 2, 2], [0, 1, 2]]
    )


def test_scan_is_thread_count_invariant():
    axes = ([1.0, 3.0], [1.0, 1.1, 1.4])
    serial = scan(*axes, SweepOptions(threads=1))
    parallel = scan(*axes, SweepOptions(threads=4))
    np.testing.assert_array_equal(
        serial.classification_codes(), parallel.classification_codes()
    )
    for row_s, row_p in zip(serial.cells, parallel.cells):
        for cell_s, cell_p in zip(row_s, row_p):
            assert cell_s.ppt_margin == cell_p.ppt_margin
            assert cell_s.separability_slack == cell_p.separability_slack


def test_inverse_squeezing_is_a_local_rotation():
    # Replacing tau by 1/tau conjugates the state by a per-mode quarter
    # rotation, so the two cells carry the same classification.
    rot = np.zeros((8, 8))
    for m in range(4):
        rot[2 * m, 2 * m + 1] = 1.0
        rot[2 * m + 1, 2 * m] = -1.0
    for tau in (1.05, 1.3, 1.7):
        direct = cell_state(3.0, 1.0 / tau)
        rotated = rot @ cell_state(3.0, tau).data @ rot.T
        np.testing.assert_allclose(direct.data, rotated, atol=1e-12)
        part = gb.family_bipartition()
        assert (
            classify(direct, part).classification
            is classify(cell_state(3.0, tau), part).classification
        )


def test_boundary_brackets_at_reference_occupation():
    lower, upper = find_boundary(3.0, BoundaryKind.BOUND_TO_FREE)
    assert upper - lower <= 1e-4
    assert lower <= TAU_STAR <= upper
    sep_lower, sep_upper = find_boundary(3.0, "sep_to_bound")
    assert sep_upper - sep_lower <= 1e-4
    assert sep_lower >= 1.0
    # The separable shell is thin: its edge sits well below the flip edge.
    assert sep_upper < lower


def test_boundary_tolerance_is_respected():
    lower, upper = find_boundary(3.0, "bound_to_free", tol=1e-5)
    assert upper - lower <= 1e-5
    assert lower <= TAU_STAR <= upper


def test_no_bracket_for_pure_inputs():
    with pytest.raises(NoBracketError):
        find_boundary(1.0, "bound_to_free")
    with pytest.raises(NoBracketError):
        find_boundary(1.0, "sep_to_bound")


def test_trace_boundary_records_missing_brackets():
    curve = trace_boundary([1.0, 3.0], "bound_to_free")
    assert curve.kind is BoundaryKind.BOUND_TO_FREE
    assert curve.kappa == (1.0, 3.0)
    assert np.isnan(curve.tau_lower[0]) and np.isnan(curve.tau_upper[0])
    assert curve.converged == (False, True)
    assert curve.tau_lower[1] <= TAU_STAR <= curve.tau_upper[1]


def test_asymptote_against_independent_limit():
    reference = infinite_occupation_boundary()
    estimate = estimate_asymptote(kappa_max=200.0)
    assert abs(estimate.value - reference) <= 5e-4
    assert abs(estimate.value - reference) <= estimate.error
    assert len(estimate.kappa_rungs) == 4
    assert estimate.kappa_rungs[0] == pytest.approx(41.0)
    assert estimate.kappa_rungs[-1] == pytest.approx(200.0)
    assert all(
        a < b for a, b in zip(estimate.kappa_rungs, estimate.kappa_rungs[1:])
    )
    assert len(estimate.boundary_taus) == 4
    assert float(estimate) == estimate.value


def test_asymptote_needs_room_for_the_ladder():
    with pytest.raises(NotConvergedError, match="41"):
        estimate_asymptote(kappa_max=30.0)


def test_thread_resolution(monkeypatch):
    assert SweepOptions(threads=3).resolve_threads() == 3
    monkeypatch.setenv("GAUSSBOUND_THREADS", "2")
    assert SweepOptions().resolve_threads() == 2
    monkeypatch.delenv("GAUSSBOUND_THREADS")
    assert 1 <= SweepOptions().resolve_threads() <= 8


def test_grid_validation():
    verdict_row = scan([3.0], [1.5]).cells
    with pytest.raises(ValueError):
        SweepGrid((2.0, 1.0), (1.5,), verdict_row)
    with pytest.raises(ValueError):
        SweepGrid((1.0, 2.0), (1.5,), verdict_row)


def test_default_axes_cover_the_documented_window():
    kappa_axis, tau_axis = default_axes()
    assert kappa_axis[0] == 1.0 and kappa_axis[-1] == 17.0
    assert tau_axis[0] == 1.0 and tau_axis[-1] == 2.0
    assert len(kappa_axis) == 200 and len(tau_axis) == 200


def test_boundary_kind_values():
    assert BoundaryKind.SEP_TO_BOUND.value == "sep_to_bound"
    assert BoundaryKind.BOUND_TO_FREE.value == "bound_to_free"
    assert BoundaryKind("bound_to_free") is BoundaryKind.BOUND_TO_FREE
