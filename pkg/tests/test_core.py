"""Covariance containers, orderings, symplectic form, validity and PPT tests."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import gaussbound as gb
from gaussbound import Bipartition, CovarianceMatrix, Ordering, SymplecticTransform
from gaussbound.errors import (
    DimensionMismatchError,
    NegativeOccupationError,
    NonSymmetricError,
    NotSymplecticError,
    OrderingMismatchError,
)


def test_symplectic_form_single_mode():
    np.testing.assert_array_equal(gb.symplectic_form(1), [[0, 1], [-1, 0]])


def test_symplectic_form_interleaved_is_block_diagonal():
    form = gb.symplectic_form(3)
    block = np.array([[0, 1], [-1, 0]], dtype=float)
    expected = np.zeros((6, 6))
    for m in range(3):
        expected[2 * m : 2 * m + 2, 2 * m : 2 * m + 2] = block
    np.testing.assert_array_equal(form, expected)


def test_symplectic_form_grouped_layout():
    form = gb.symplectic_form(2, Ordering.GROUPED)
    eye = np.eye(2)
    np.testing.assert_array_equal(form[:2, 2:], eye)
    np.testing.assert_array_equal(form[2:, :2], -eye)
    np.testing.assert_array_equal(form[:2, :2], np.zeros((2, 2)))
    np.testing.assert_array_equal(form[2:, 2:], np.zeros((2, 2)))


def test_symplectic_form_is_read_only():
    form = gb.symplectic_form(2)
    assert not form.flags.writeable
    with pytest.raises(ValueError):
        form[0, 0] = 5.0


def test_covariance_data_is_read_only():
    v = gb.vacuum_state(2)
    assert not v.data.flags.writeable
    with pytest.raises(ValueError):
        v.data[0, 0] = 9.0


def test_covariance_rejects_asymmetry():
    with pytest.raises(NonSymmetricError):
        CovarianceMatrix(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_covariance_symmetrizes_roundoff():
    data = np.eye(2)
    data[0, 1] = 1e-14
    m = CovarianceMatrix(data)
    np.testing.assert_array_equal(m.data, m.data.T)


def test_covariance_rejects_odd_dimension():
    with pytest.raises(DimensionMismatchError):
        CovarianceMatrix(np.eye(3))


def test_covariance_rejects_non_square():
    with pytest.raises(DimensionMismatchError):
        CovarianceMatrix(np.ones((2, 4)))


def test_symplectic_transform_rejects_non_symplectic():
    with pytest.raises(NotSymplecticError):
        SymplecticTransform(2.0 * np.eye(4))


def test_symplectic_transform_inverse_and_determinant():
    rng = np.random.default_rng(7)
    for _ in range(10):
        s = gb.random_symplectic(3, rng)
        np.testing.assert_allclose(
            s.data @ s.inverse.data, np.eye(6), atol=1e-10
        )
        assert abs(np.linalg.det(s.data) - 1.0) < 1e-8


def test_is_symplectic_reports_defect():
    ok, defect = gb.is_symplectic(2.0 * np.eye(4))
    assert not ok
    assert defect == pytest.approx(3.0)
    ok, defect = gb.is_symplectic(np.eye(4))
    assert ok
    assert defect == 0.0


def test_vacuum_and_thermal_literals():
    np.testing.assert_array_equal(gb.vacuum_state(2).data, np.eye(4))
    t = gb.thermal_state([0.0, 1.0])
    np.testing.assert_array_equal(np.diag(t.data), [1.0, 1.0, 3.0, 3.0])
    np.testing.assert_array_equal(t.data, np.diag(np.diag(t.data)))


def test_thermal_scalar_broadcast():
    t = gb.thermal_state(0.5, 3)
    np.testing.assert_array_equal(t.data, 2.0 * np.eye(6))


def test_thermal_rejects_negative_occupation():
    with pytest.raises(NegativeOccupationError):
        gb.thermal_state([-0.2], 1)


def test_validity_margin_literals():
    assert gb.validity_margin(gb.vacuum_state(3)) == pytest.approx(0.0, abs=1e-12)
    assert gb.validity_margin(gb.thermal_state(1.0, 1)) == pytest.approx(2.0)
    tau = 1.7
    squeezed = CovarianceMatrix(np.diag([tau**2, tau**-2]))
    assert gb.validity_margin(squeezed) == pytest.approx(0.0, abs=1e-12)


def test_is_valid_covariance_boundary():
    ok, margin = gb.is_valid_covariance(gb.vacuum_state(2))
    assert ok and abs(margin) < 1e-12
    ok, margin = gb.is_valid_covariance(CovarianceMatrix(0.999 * np.eye(2)))
    assert not ok
    assert margin == pytest.approx(-0.001)


def test_reorder_round_trip_is_exact():
    rng = np.random.default_rng(3)
    gamma = gb.random_valid_covariance(3, rng)
    grouped = gb.reorder(gamma, Ordering.GROUPED)
    assert grouped.ordering is Ordering.GROUPED
    back = gb.reorder(grouped, Ordering.INTERLEAVED)
    np.testing.assert_array_equal(back.data, gamma.data)


def test_reorder_permutation_two_modes():
    rng = np.random.default_rng(4)
    gamma = gb.random_valid_covariance(2, rng)
    perm = [0, 2, 1, 3]
    grouped = gb.reorder(gamma, Ordering.GROUPED)
    np.testing.assert_array_equal(grouped.data, gamma.data[np.ix_(perm, perm)])


def test_reorder_same_ordering_is_identity():
    gamma = gb.vacuum_state(2)
    again = gb.reorder(gamma, Ordering.INTERLEAVED)
    np.testing.assert_array_equal(again.data, gamma.data)


def test_direct_sum_block_structure():
    a = gb.thermal_state(0.5, 1)
    b = gb.vacuum_state(2)
    both = gb.direct_sum(a, b)
    assert both.n_modes == 3
    np.testing.assert_array_equal(both.data[:2, :2], a.data)
    np.testing.assert_array_equal(both.data[2:, 2:], b.data)
    np.testing.assert_array_equal(both.data[:2, 2:], np.zeros((2, 4)))


def test_direct_sum_rejects_mixed_orderings():
    a = gb.vacuum_state(1)
    b = gb.reorder(gb.vacuum_state(2), Ordering.GROUPED)
    with pytest.raises(OrderingMismatchError):
        gb.direct_sum(a, b)


def test_apply_symplectic_preserves_validity():
    rng = np.random.default_rng(11)
    for _ in range(20):
        gamma = gb.random_valid_covariance(3, rng)
        s = gb.random_symplectic(3, rng)
        out = gb.apply_symplectic(s, gamma)
        ok, _ = gb.is_valid_covariance(out)
        assert ok


def test_partial_transpose_momentum_flip(example_matrices, half_partition):
    gamma = CovarianceMatrix(example_matrices["example1"])
    flipped = gb.partial_transpose(gamma, half_partition)
    signs = np.array([1, 1, 1, 1, 1, -1, 1, -1], dtype=float)
    expected = example_matrices["example1"] * np.outer(signs, signs)
    np.testing.assert_array_equal(flipped.data, expected)


def test_partial_transpose_is_involutive(half_partition):
    rng = np.random.default_rng(5)
    gamma = gb.random_valid_covariance(4, rng)
    twice = gb.partial_transpose(
        gb.partial_transpose(gamma, half_partition), half_partition
    )
    np.testing.assert_array_equal(twice.data, gamma.data)


def test_ppt_margin_two_mode_squeezed():
    # Printed two-mode squeezed covariance at r = 0.5; the momentum flip
    # shifts the smallest admissibility eigenvalue to exp(-2r) - 1.
    r = 0.5
    c, s = np.cosh(2 * r), np.sinh(2 * r)
    gamma = CovarianceMatrix(
        np.array(
            [
                [c, 0, s, 0],
                [0, c, 0, -s],
                [s, 0, c, 0],
                [0, -s, 0, c],
            ]
        )
    )
    part = Bipartition((1,), (2,))
    assert gb.validity_margin(gamma) == pytest.approx(0.0, abs=1e-12)
    margin = gb.ppt_margin(gamma, part)
    assert margin == pytest.approx(np.exp(-2 * r) - 1.0, abs=1e-12)
    ok, _ = gb.is_ppt(gamma, part)
    assert not ok


def test_product_states_are_ppt():
    rng = np.random.default_rng(21)
    for _ in range(25):
        a = gb.random_valid_covariance(2, rng)
        b = gb.random_valid_covariance(2, rng)
        both = gb.direct_sum(a, b)
        ok, margin = gb.is_ppt(both, Bipartition((1, 2), (3, 4)))
        assert ok
        assert margin >= -1e-9


def test_random_symplectic_is_symplectic():
    rng = np.random.default_rng(13)
    for n in (1, 2, 4):
        s = gb.random_symplectic(n, rng)
        ok, defect = gb.is_symplectic(s.data)
        assert ok
        assert defect <= 1e-10


def test_random_valid_covariance_is_valid():
    rng = np.random.default_rng(17)
    for n in (1, 3):
        gamma = gb.random_valid_covariance(n, rng)
        ok, margin = gb.is_valid_covariance(gamma)
        assert ok
        assert margin > 0.0


def test_random_draws_are_seed_deterministic():
    a = gb.random_valid_covariance(3, np.random.default_rng(99))
    b = gb.random_valid_covariance(3, np.random.default_rng(99))
    np.testing.assert_array_equal(a.data, b.data)


def test_bipartition_validation():
    with pytest.raises(DimensionMismatchError):
        Bipartition((), (1, 2))
    with pytest.raises(DimensionMismatchError):
        Bipartition((1, 2), (2, 3))
    with pytest.raises(DimensionMismatchError):
        Bipartition((1,), (3,))


def test_bipartition_quadrature_indices():
    part = Bipartition((1,), (2, 3))
    assert part.n_modes == 3
    np.testing.assert_array_equal(part.quadrature_indices(part.modes_a), [0, 1])
    np.testing.assert_array_equal(
        part.quadrature_indices(part.modes_b), [2, 3, 4, 5]
    )


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 4))
def test_reorder_round_trip_property(seed, n):
    gamma = gb.random_valid_covariance(n, np.random.default_rng(seed))
    back = gb.reorder(gb.reorder(gamma, Ordering.GROUPED), Ordering.INTERLEAVED)
    np.testing.assert_array_equal(back.data, gamma.data)


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n_a=st.integers(1, 3), n_b=st.integers(1, 3))
def test_partial_transpose_involution_property(seed, n_a, n_b):
    n = n_a + n_b
    part = Bipartition(tuple(range(1, n_a + 1)), tuple(range(n_a + 1, n + 1)))
    gamma = gb.random_valid_covariance(n, np.random.default_rng(seed))
    twice = gb.partial_transpose(gb.partial_transpose(gamma, part), part)
    np.testing.assert_array_equal(twice.data, gamma.data)


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 4))
def test_symplectic_preserves_form_property(seed, n):
    s = gb.random_symplectic(n, np.random.default_rng(seed))
    form = gb.symplectic_form(n)
    np.testing.assert_allclose(s.data @ form @ s.data.T, form, atol=1e-10)
