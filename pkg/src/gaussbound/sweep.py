r"""Phase map of the preparation circuit over occupation and squeezing.

Every cell of the (kappa, tau) plane is the output state of the
four-mode preparation circuit classified across the 12|34 split.  Along
a fixed-kappa row with tau >= 1 the verdicts follow the pattern
Separable* BoundEntangled* FreeEntangled*; the two transition points are
located by bisection and the bound-to-free boundary approaches a
horizontal asymptote for large thermal occupation.

Bisection predicates differ per transition.  The bound-to-free boundary
is the sign change of the partial-transpose margin, a smooth function of
tau.  The separable-to-bound boundary uses the separability slack, which
is exactly zero throughout the separable region (every swept state
saturates the uncertainty bound on two modes) and grows continuously
past the transition, so the test is slack > tol.
"""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .circuits import build_preparation_circuit, simulate
from .core import Bipartition, CovarianceMatrix, ppt_margin
from .errors import (
    InconclusiveError,
    NoBracketError,
    NotConvergedError,
    NumericalFailureError,
)
from .family import family_bipartition
from .sdp import (
    SEPARABILITY_TOL,
    EntanglementClass,
    EntanglementVerdict,
    SolverOptions,
    classify,
)

__all__ = [
    "BoundaryKind",
    "SweepOptions",
    "SweepGrid",
    "BoundaryCurve",
    "AsymptoteEstimate",
    "default_axes",
    "cell_state",
    "scan",
    "find_boundary",
    "trace_boundary",
    "estimate_asymptote",
]

DEFAULT_KAPPA_RANGE = (1.0, 17.0)
DEFAULT_TAU_RANGE = (1.0, 2.0)
DEFAULT_GRID_POINTS = 200


class BoundaryKind(str, enum.Enum):
    SEP_TO_BOUND = "sep_to_bound"
    BOUND_TO_FREE = "bound_to_free"


@dataclass(frozen=True)
class SweepOptions:
    """Grid-evaluation controls; thread count defaults to GAUSSBOUND_THREADS."""

    tol_sep: float = SEPARABILITY_TOL
    tol_ppt: Optional[float] = None
    threads: Optional[int] = None
    inconclusive_limit: float = 1e-3
    solver: SolverOptions = SolverOptions()

    def resolve_threads(self) -> int:
        if self.threads is not None and self.threads > 0:
            return self.threads
        env = os.environ.get("GAUSSBOUND_THREADS", "")
        if env.strip():
            try:
                value = int(env)
            except ValueError:
                value = 0
            if value > 0:
                return value
        return min(8, os.cpu_count() or 1)


@dataclass(frozen=True)
class SweepGrid:
    """Verdict matrix over strictly increasing kappa and tau axes.

    cells[i][j] classifies the state at (kappa_axis[i], tau_axis[j]);
    None marks a cell whose semidefinite solve was inconclusive.
    """

    kappa_axis: tuple[float, ...]
    tau_axis: tuple[float, ...]
    cells: tuple[tuple[Optional[EntanglementVerdict], ...], ...]

    def __post_init__(self) -> None:
        for name, axis in (("kappa", self.kappa_axis), ("tau", self.tau_axis)):
            if any(b <= a for a, b in zip(axis, axis[1:])):
                raise ValueError(f"{name} axis must be strictly increasing")
        if len(self.cells) != len(self.kappa_axis) or any(
            len(row) != len(self.tau_axis) for row in self.cells
        ):
            raise ValueError("cell matrix shape does not match the axes")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.kappa_axis), len(self.tau_axis))

    @property
    def inconclusive_fraction(self) -> float:
        total = len(self.kappa_axis) * len(self.tau_axis)
        bad = sum(1 for row in self.cells for cell in row if cell is None)
        return bad / total if total else 0.0

    def classification_codes(self) -> np.ndarray:
        """Small-int view: 0 separable, 1 bound, 2 free, -1 inconclusive."""
        codes = {
            EntanglementClass.SEPARABLE: 0,
            EntanglementClass.BOUND_ENTANGLED: 1,
            EntanglementClass.FREE_ENTANGLED: 2,
        }
        out = np.empty(self.shape, dtype=np.int8)
        for i, row in enumerate(self.cells):
            for j, cell in enumerate(row):
                out[i, j] = -1 if cell is None else codes[cell.classification]
        return out


@dataclass(frozen=True)
class BoundaryCurve:
    """Per-kappa transition brackets; converged=False marks NoBracket rows."""

    kind: BoundaryKind
    kappa: tuple[float, ...]
    tau_lower: tuple[float, ...]
    tau_upper: tuple[float, ...]
    converged: tuple[bool, ...]


@dataclass(frozen=True)
class AsymptoteEstimate:
    """Extrapolated large-occupation limit of the bound-to-free boundary."""

    value: float
    error: float
    kappa_rungs: tuple[float, ...]
    boundary_taus: tuple[float, ...]

    def __float__(self) -> float:
        return self.value


def default_axes(
    kappa_range: tuple[float, float] = DEFAULT_KAPPA_RANGE,
    tau_range: tuple[float, float] = DEFAULT_TAU_RANGE,
    points: int = DEFAULT_GRID_POINTS,
) -> tuple[np.ndarray, np.ndarray]:
    """Uniform axes covering the documented default window."""
    return (
        np.linspace(kappa_range[0], kappa_range[1], points),
        np.linspace(tau_range[0], tau_range[1], points),
    )


def cell_state(kappa: float, tau: float) -> CovarianceMatrix:
    """Output covariance of the preparation circuit at one grid point."""
    circuit, input_state = build_preparation_circuit(kappa, tau)
    return simulate(circuit, input_state)


def _classify_cell(
    kappa: float,
    tau: float,
    part: Bipartition,
    opts: SweepOptions,
) -> Optional[EntanglementVerdict]:
    try:
        return classify(
            cell_state(kappa, tau),
            part,
            tol_sep=opts.tol_sep,
            tol_ppt=opts.tol_ppt,
            options=opts.solver,
        )
    except (InconclusiveError, NumericalFailureError):
        return None


def scan(
    kappa_axis: Sequence[float],
    tau_axis: Sequence[float],
    opts: SweepOptions | None = None,
) -> SweepGrid:
    """Classify every (kappa, tau) cell of the grid.

    Cells are independent and evaluated on a thread pool; results land in
    pre-indexed slots so the output is deterministic regardless of
    completion order.  Raises NumericalFailureError when more than the
    configured fraction of cells is inconclusive.
    """
    opts = opts or SweepOptions()
    kappas = tuple(float(k) for k in kappa_axis)
    taus = tuple(float(t) for t in tau_axis)
    part = family_bipartition()

    slots: list[list[Optional[EntanglementVerdict]]] = [
        [None] * len(taus) for _ in kappas
    ]
    tasks = [(i, j) for i in range(len(kappas)) for j in range(len(taus))]

    def work(index: tuple[int, int]) -> None:
        i, j = index
        slots[i][j] = _classify_cell(kappas[i], taus[j], part, opts)

    workers = opts.resolve_threads()
    if workers <= 1:
        for index in tasks:
            work(index)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(work, tasks))

    grid = SweepGrid(kappas, taus, tuple(tuple(row) for row in slots))
    if grid.inconclusive_fraction > opts.inconclusive_limit:
        raise NumericalFailureError(
            f"{grid.inconclusive_fraction:.2%} of cells inconclusive, "
            f"limit is {opts.inconclusive_limit:.2%}"
        )
    return grid


def _bisect(
    lo: float,
    hi: float,
    predicate,
    tol: float,
) -> tuple[float, float]:
    """Shrink [lo, hi] with predicate(lo) True, predicate(hi) False."""
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if predicate(mid):
            lo = mid
        else:
            hi = mid
    return lo, hi


def find_boundary(
    kappa: float,
    kind: BoundaryKind | str,
    tol: float = 1e-4,
    tau_range: tuple[float, float] = DEFAULT_TAU_RANGE,
    coarse_points: int = 33,
    opts: SweepOptions | None = None,
) -> tuple[float, float]:
    """Bracket one phase transition along the tau axis at fixed kappa.

    A coarse classification scan locates an adjacent pair of cells with
    the requested classes; the bracket is then tightened to width <= tol
    by bisecting the partial-transpose margin sign (bound to free) or the
    separability-slack threshold (separable to bound).  Raises
    NoBracketError when no adjacent pair on the coarse grid matches.
    """
    kind = BoundaryKind(kind)
    opts = opts or SweepOptions()
    part = family_bipartition()
    taus = np.linspace(tau_range[0], tau_range[1], coarse_points)
    verdicts = [_classify_cell(kappa, float(t), part, opts) for t in taus]

    if kind is BoundaryKind.BOUND_TO_FREE:
        before, after = (
            EntanglementClass.BOUND_ENTANGLED,
            EntanglementClass.FREE_ENTANGLED,
        )
    else:
        before, after = (
            EntanglementClass.SEPARABLE,
            EntanglementClass.BOUND_ENTANGLED,
        )

    bracket = None
    for j in range(len(taus) - 1):
        a, b = verdicts[j], verdicts[j + 1]
        if a is None or b is None:
            continue
        if a.classification is before and b.classification is after:
            bracket = (float(taus[j]), float(taus[j + 1]))
            break
    if bracket is None:
        raise NoBracketError(
            f"no adjacent ({before.value}, {after.value}) pair along "
            f"tau in [{tau_range[0]}, {tau_range[1]}] at kappa={kappa}"
        )

    if kind is BoundaryKind.BOUND_TO_FREE:

        def predicate(tau: float) -> bool:
            return ppt_margin(cell_state(kappa, tau), part) >= 0.0

    else:

        def predicate(tau: float) -> bool:
            verdict = classify(
                cell_state(kappa, tau),
                part,
                tol_sep=opts.tol_sep,
                tol_ppt=opts.tol_ppt,
                options=opts.solver,
            )
            slack = verdict.separability_slack
            return slack is not None and slack <= opts.tol_sep

    return _bisect(bracket[0], bracket[1], predicate, tol)


def trace_boundary(
    kappa_values: Sequence[float],
    kind: BoundaryKind | str,
    tol: float = 1e-4,
    tau_range: tuple[float, float] = DEFAULT_TAU_RANGE,
    opts: SweepOptions | None = None,
) -> BoundaryCurve:
    """find_boundary at each kappa; rows without a bracket stay unconverged."""
    kind = BoundaryKind(kind)
    lows: list[float] = []
    highs: list[float] = []
    flags: list[bool] = []
    for kappa in kappa_values:
        try:
            lo, hi = find_boundary(
                float(kappa), kind, tol=tol, tau_range=tau_range, opts=opts
            )
            lows.append(lo)
            highs.append(hi)
            flags.append(True)
        except NoBracketError:
            lows.append(math.nan)
            highs.append(math.nan)
            flags.append(False)
    return BoundaryCurve(
        kind,
        tuple(float(k) for k in kappa_values),
        tuple(lows),
        tuple(highs),
        tuple(flags),
    )


def estimate_asymptote(
    kappa_max: float = 800.0,
    tol: float = 5e-3,
    bisect_tol: float = 1e-6,
    opts: SweepOptions | None = None,
) -> AsymptoteEstimate:
    """Extrapolate the bound-to-free boundary to infinite occupation.

    Locates the boundary on a geometric kappa ladder ending at kappa_max
    and removes the leading power-law finite-occupation correction by
    Aitken extrapolation of the last three rungs; the error bar combines
    the change from the previous extrapolant with the bisection width.
    Raises NotConvergedError when the ladder is too short, the rung
    differences do not shrink, or the error bar exceeds tol.
    """
    if kappa_max < 41.0:
        raise NotConvergedError("kappa_max below 41 cannot anchor the ladder")
    rung_count = max(4, int(math.floor(math.log2(kappa_max / 41.0))) + 2)
    ratio = (kappa_max / 41.0) ** (1.0 / (rung_count - 1))
    kappas = tuple(41.0 * ratio**j for j in range(rung_count))

    boundaries: list[float] = []
    for kappa in kappas:
        lo, hi = find_boundary(
            kappa, BoundaryKind.BOUND_TO_FREE, tol=bisect_tol, opts=opts
        )
        boundaries.append(0.5 * (lo + hi))

    def aitken(t1: float, t2: float, t3: float) -> float:
        d1, d2 = t2 - t1, t3 - t2
        if abs(d1 - d2) < 1e-15:
            return t3
        return t3 + d2 * d2 / (d1 - d2)

    last = aitken(*boundaries[-3:])
    prev = aitken(*boundaries[-4:-1])
    error = abs(last - prev) + bisect_tol
    if abs(boundaries[-1] - boundaries[-2]) > abs(
        boundaries[-2] - boundaries[-3]
    ):
        raise NotConvergedError("boundary ladder is not contracting")
    if error > tol:
        raise NotConvergedError(
            f"asymptote error bar {error:.2e} exceeds tolerance {tol:.2e}"
        )
    return AsymptoteEstimate(last, error, kappas, tuple(boundaries))
