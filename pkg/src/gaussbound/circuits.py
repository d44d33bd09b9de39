r"""Linear-optical circuits: synthesis, composition, and simulation.

A circuit is an ordered list of elements applied left to right.  Three
element kinds exist.  On the annihilation operators of its two modes a
beam splitter acts as

    BS(theta, phi) = [[cos(theta), -e^{i phi} sin(theta)],
                      [e^{-i phi} sin(theta), cos(theta)]],

a phase shifter multiplies one mode by e^{i phi}, and a squeezer scales
one mode's quadratures by diag(e^{-r}, e^{r}).  Mode indices are
1-based.  The quadrature <-> annihilation dictionary identifies an n x n
unitary U with the orthogonal symplectic whose mode blocks are
[[Re U, -Im U], [Im U, Re U]]; vacuum has covariance I under it.

Passive (squeezer-free) circuits compose to orthogonal symplectics and
any unitary factors into at most n(n-1)/2 beam splitters plus n phase
shifters by triangular Givens elimination.  The four-mode preparation
circuit (two vacua and two equal thermal inputs into mesh - squeezers -
mesh) is built from closed-form factor matrices by default, or from the
generic triangular synthesis on request.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import refvalues
from .core import CovarianceMatrix, Ordering, SymplecticTransform
from .errors import (
    DimensionMismatchError,
    InvalidKappaError,
    InvalidTauError,
    NotPassiveError,
    SqueezerInUnitaryCompositionError,
)

__all__ = [
    "BeamSplitter",
    "PhaseShift",
    "Squeezer",
    "CircuitElement",
    "OpticalCircuit",
    "passive_to_unitary",
    "unitary_to_passive",
    "decompose_unitary",
    "elements_to_unitary",
    "elements_to_symplectic",
    "reference_mesh_factors",
    "build_preparation_circuit",
    "simulate",
]

_ANGLE_EPS = 1e-12


def _wrap_angle(phi: float) -> float:
    """Wrap an angle to (-pi, pi]."""
    wrapped = math.remainder(phi, 2.0 * math.pi)
    if wrapped <= -math.pi + 0.0:
        wrapped += 2.0 * math.pi
    return wrapped


@dataclass(frozen=True)
class BeamSplitter:
    """Two-mode coupler with transmission angle theta in [0, pi/2]."""

    mode_a: int
    mode_b: int
    theta: float
    phi: float = 0.0

    kind = "bs"

    def __post_init__(self) -> None:
        if self.mode_a == self.mode_b:
            raise ValueError("beam splitter modes must be distinct")
        if not -_ANGLE_EPS <= self.theta <= math.pi / 2.0 + _ANGLE_EPS:
            raise ValueError(f"theta {self.theta} outside [0, pi/2]")

    @property
    def modes(self) -> tuple[int, int]:
        return (self.mode_a, self.mode_b)

    def block(self) -> np.ndarray:
        c, s = math.cos(self.theta), math.sin(self.theta)
        ph = complex(math.cos(self.phi), math.sin(self.phi))
        return np.array([[c, -ph * s], [s / ph, c]], dtype=complex)


@dataclass(frozen=True)
class PhaseShift:
    """Single-mode rotation a -> e^{i phi} a."""

    mode: int
    phi: float

    kind = "phase"

    @property
    def modes(self) -> tuple[int]:
        return (self.mode,)


@dataclass(frozen=True)
class Squeezer:
    """Single-mode squeezer scaling quadratures by diag(e^{-r}, e^{r})."""

    mode: int
    r: float

    kind = "squeezer"

    @property
    def modes(self) -> tuple[int]:
        return (self.mode,)


CircuitElement = BeamSplitter | PhaseShift | Squeezer


@dataclass(frozen=True)
class OpticalCircuit:
    """Immutable ordered element list acting on n_modes (1-based indices)."""

    n_modes: int
    elements: tuple[CircuitElement, ...] = ()

    def __post_init__(self) -> None:
        if self.n_modes < 1:
            raise ValueError("circuit needs at least one mode")
        object.__setattr__(self, "elements", tuple(self.elements))
        for element in self.elements:
            for mode in element.modes:
                if not 1 <= mode <= self.n_modes:
                    raise ValueError(
                        f"mode {mode} outside 1..{self.n_modes}"
                    )

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def is_passive(self) -> bool:
        return not any(isinstance(e, Squeezer) for e in self.elements)

    def unitary(self) -> np.ndarray:
        return elements_to_unitary(self)

    def symplectic(self) -> SymplecticTransform:
        return elements_to_symplectic(self)


def _apply_element_unitary(u: np.ndarray, element: CircuitElement) -> None:
    """Left-multiply u in place by the element's n x n unitary."""
    if isinstance(element, PhaseShift):
        j = element.mode - 1
        u[j, :] *= complex(math.cos(element.phi), math.sin(element.phi))
    elif isinstance(element, BeamSplitter):
        rows = [element.mode_a - 1, element.mode_b - 1]
        u[rows, :] = element.block() @ u[rows, :]
    else:
        raise SqueezerInUnitaryCompositionError(
            "squeezers have no annihilation-operator unitary; compose the "
            "symplectic instead"
        )


def elements_to_unitary(circuit: OpticalCircuit) -> np.ndarray:
    """Composed n x n unitary of a passive circuit (left-to-right order)."""
    u = np.eye(circuit.n_modes, dtype=complex)
    for element in circuit.elements:
        _apply_element_unitary(u, element)
    return u


def elements_to_symplectic(circuit: OpticalCircuit) -> SymplecticTransform:
    """Composed quadrature symplectic of a circuit (left-to-right order)."""
    n = circuit.n_modes
    s = np.eye(2 * n)
    for element in circuit.elements:
        if isinstance(element, Squeezer):
            j = element.mode - 1
            s[2 * j, :] *= math.exp(-element.r)
            s[2 * j + 1, :] *= math.exp(element.r)
        elif isinstance(element, PhaseShift):
            j = element.mode - 1
            rows = [2 * j, 2 * j + 1]
            c, d = math.cos(element.phi), math.sin(element.phi)
            s[rows, :] = np.array([[c, -d], [d, c]]) @ s[rows, :]
        else:
            block = element.block()
            ja, jb = element.mode_a - 1, element.mode_b - 1
            rows = [2 * ja, 2 * ja + 1, 2 * jb, 2 * jb + 1]
            real = np.zeros((4, 4))
            for p in range(2):
                for q in range(2):
                    real[2 * p, 2 * q] = block[p, q].real
                    real[2 * p, 2 * q + 1] = -block[p, q].imag
                    real[2 * p + 1, 2 * q] = block[p, q].imag
                    real[2 * p + 1, 2 * q + 1] = block[p, q].real
            s[rows, :] = real @ s[rows, :]
    return SymplecticTransform(s, Ordering.INTERLEAVED)


def passive_to_unitary(transform: SymplecticTransform) -> np.ndarray:
    """The n x n unitary of an orthogonal symplectic transformation.

    U[j, k] = O[2j, 2k] + i O[2j+1, 2k] in the interleaved ordering.
    Raises NotPassiveError when the input is not orthogonal (a symplectic
    is passive exactly when it is orthogonal).
    """
    from .core import reorder

    o = reorder(transform, Ordering.INTERLEAVED).data
    n = transform.n_modes
    defect = float(np.max(np.abs(o @ o.T - np.eye(2 * n))))
    if defect > 1e-10:
        raise NotPassiveError(
            f"transformation is not orthogonal (defect {defect:.3e}); "
            "it involves squeezing"
        )
    return o[0::2, 0::2] + 1j * o[1::2, 0::2]


def unitary_to_passive(u: np.ndarray) -> SymplecticTransform:
    """Orthogonal symplectic with mode blocks [[Re U, -Im U], [Im U, Re U]]."""
    u = np.asarray(u, dtype=complex)
    _check_unitary(u)
    n = u.shape[0]
    o = np.zeros((2 * n, 2 * n))
    o[0::2, 0::2] = u.real
    o[0::2, 1::2] = -u.imag
    o[1::2, 0::2] = u.imag
    o[1::2, 1::2] = u.real
    return SymplecticTransform(o, Ordering.INTERLEAVED)


def _check_unitary(u: np.ndarray) -> None:
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got {u.shape}")
    defect = float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))
    if defect > 1e-10:
        raise ValueError(f"matrix is not unitary (defect {defect:.3e})")


def _givens(a: complex, c: complex) -> tuple[float, float]:
    """Angles (theta, phi) so BS(theta, phi) @ [a, c] has zero second entry."""
    theta = math.atan2(abs(c), abs(a))
    phi = float(np.angle(a)) - float(np.angle(-c))
    return theta, phi


def _two_mode_elements(
    mode_a: int, mode_b: int, block: np.ndarray
) -> list[CircuitElement]:
    """Elements (application order) realizing a 2 x 2 unitary on two modes."""
    block = np.asarray(block, dtype=complex)
    _check_unitary(block)
    elements: list[CircuitElement] = []
    a, c = block[0, 0], block[1, 0]
    if abs(c) > _ANGLE_EPS:
        theta, phi = _givens(a, c)
        g = BeamSplitter(mode_a, mode_b, theta, _wrap_angle(phi)).block()
        diag = g @ block
        diag[1, 0] = 0.0
        inverse_bs = BeamSplitter(
            mode_a, mode_b, theta, _wrap_angle(phi + math.pi)
        )
    else:
        diag = block.copy()
        inverse_bs = None
    for mode, entry in ((mode_a, diag[0, 0]), (mode_b, diag[1, 1])):
        angle = _wrap_angle(float(np.angle(entry)))
        if abs(angle) > _ANGLE_EPS:
            elements.append(PhaseShift(mode, angle))
    if inverse_bs is not None:
        elements.append(inverse_bs)
    return elements


def decompose_unitary(u: np.ndarray, n_modes: int | None = None) -> OpticalCircuit:
    """Triangular synthesis of a unitary into beam splitters and phases.

    Eliminates below-diagonal entries column by column with Givens beam
    splitters on adjacent mode pairs, leaving a diagonal of phases; the
    circuit lists those phases first, then the inverted beam splitters.
    At most n(n-1)/2 beam splitters and n phase shifters are emitted; the
    identity gives an empty circuit.
    """
    u = np.asarray(u, dtype=complex)
    _check_unitary(u)
    n = u.shape[0]
    if n_modes is None:
        n_modes = n
    work = u.copy()
    splitters: list[BeamSplitter] = []
    for col in range(n - 1):
        for row in range(n - 1, col, -1):
            a, c = work[row - 1, col], work[row, col]
            if abs(c) <= _ANGLE_EPS:
                continue
            theta, phi = _givens(a, c)
            cb, sb = math.cos(theta), math.sin(theta)
            ph = complex(math.cos(phi), math.sin(phi))
            g = np.array([[cb, -ph * sb], [sb / ph, cb]])
            work[[row - 1, row], :] = g @ work[[row - 1, row], :]
            work[row, col] = 0.0
            splitters.append(
                BeamSplitter(row, row + 1, theta, _wrap_angle(phi + math.pi))
            )
    elements: list[CircuitElement] = []
    for mode in range(n):
        angle = _wrap_angle(float(np.angle(work[mode, mode])))
        if abs(angle) > _ANGLE_EPS:
            elements.append(PhaseShift(mode + 1, angle))
    elements.extend(reversed(splitters))
    return OpticalCircuit(n_modes, tuple(elements))


_INPUT_FACTOR_MODES = ((3, 4), (2, 4), (1, 3), (1, 2), (3, 4))
_OUTPUT_FACTOR_MODES = ((3, 4), (2, 4), (1, 3), (3, 4))


def reference_mesh_factors() -> dict[str, object]:
    """Closed-form two-mode factors of the preparation interferometers.

    Returns the five input-side and four output-side 4 x 4 factor
    matrices, the mode pair each acts on, and the input/output phase
    diagonals; the ordered factor products times the phase diagonals
    reproduce the two mesh unitaries.
    """
    a_factors, a_phase = refvalues.input_mesh_factorization()
    b_factors, b_phase = refvalues.output_mesh_factorization()
    return {
        "input_factors": tuple(a_factors),
        "input_factor_modes": _INPUT_FACTOR_MODES,
        "input_phase": a_phase,
        "output_factors": tuple(b_factors),
        "output_factor_modes": _OUTPUT_FACTOR_MODES,
        "output_phase": b_phase,
    }


def _factor_elements(
    factor: np.ndarray, modes: tuple[int, int]
) -> list[CircuitElement]:
    """Convert an embedded two-mode factor matrix into circuit elements."""
    factor = np.asarray(factor, dtype=complex)
    idx = [modes[0] - 1, modes[1] - 1]
    rest = factor.copy()
    rest[np.ix_(idx, idx)] = np.eye(2)
    if np.max(np.abs(rest - np.eye(factor.shape[0]))) > 1e-12:
        raise ValueError(f"factor is not confined to modes {modes}")
    return _two_mode_elements(modes[0], modes[1], factor[np.ix_(idx, idx)])


def build_preparation_circuit(
    kappa: float,
    tau: float,
    include_redundant: bool = True,
    generic: bool = False,
) -> tuple[OpticalCircuit, CovarianceMatrix]:
    """Four-mode circuit preparing the bound-entangled family's flagship ray.

    The input state is vacuum on modes 1, 2 and a kappa-occupation
    thermal state on modes 3, 4 (kappa = 2 nbar + 1 >= 1).  The circuit
    applies the input interferometer, one squeezer per mode with
    e^{-r} = tau, then the output interferometer.  By default the meshes
    are built from the closed-form two-mode factors; generic=True routes
    both through the triangular synthesis instead.  include_redundant
    controls the two input-side components (a pi phase on mode 2 and the
    leading factor on modes 3, 4) that act trivially on the vacuum and
    equal-thermal inputs.
    """
    if not kappa >= 1.0:
        raise InvalidKappaError(f"kappa must be >= 1, got {kappa}")
    if not tau > 0.0:
        raise InvalidTauError(f"tau must be > 0, got {tau}")

    elements: list[CircuitElement] = []
    if generic:
        elements.extend(decompose_unitary(refvalues.input_unitary()).elements)
    else:
        a_factors, _ = refvalues.input_mesh_factorization()
        if include_redundant:
            elements.append(PhaseShift(2, math.pi))
            elements.extend(_factor_elements(a_factors[0], _INPUT_FACTOR_MODES[0]))
        for factor, modes in zip(a_factors[1:], _INPUT_FACTOR_MODES[1:]):
            elements.extend(_factor_elements(factor, modes))

    r = -math.log(tau)
    elements.extend(Squeezer(mode, r) for mode in (1, 2, 3, 4))

    if generic:
        elements.extend(decompose_unitary(refvalues.output_unitary()).elements)
    else:
        elements.append(PhaseShift(3, math.pi / 2.0))
        elements.append(PhaseShift(4, -math.pi / 2.0))
        b_factors, _ = refvalues.output_mesh_factorization()
        for factor, modes in zip(b_factors, _OUTPUT_FACTOR_MODES):
            elements.extend(_factor_elements(factor, modes))

    circuit = OpticalCircuit(4, tuple(elements))
    input_state = CovarianceMatrix(
        np.diag([1.0, 1.0, 1.0, 1.0, kappa, kappa, kappa, kappa]),
        Ordering.INTERLEAVED,
    )
    return circuit, input_state


def simulate(circuit: OpticalCircuit, state: CovarianceMatrix) -> CovarianceMatrix:
    """Output covariance S gamma S^T of the circuit on a Gaussian input."""
    if state.n_modes != circuit.n_modes:
        raise DimensionMismatchError(
            f"circuit has {circuit.n_modes} modes, state has {state.n_modes}"
        )
    from .core import apply_symplectic

    return apply_symplectic(elements_to_symplectic(circuit), state)
