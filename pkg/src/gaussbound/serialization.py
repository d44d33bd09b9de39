r"""Deterministic JSON and CSV formats for matrices, circuits, and sweeps.

All writers are byte-deterministic: fixed field order, floats printed
with 15 significant digits, LF newlines, no locale dependence.  Matrix
files carry their ordering convention; every format is versioned with
"format_version": 1 and parsers reject unknown versions.  Malformed
input raises DataFormatError (the CLI maps it to the data-error exit
code).
"""

from __future__ import annotations

import json
import math
from typing import IO, Iterable, Optional, Sequence

import numpy as np

from .circuits import (
    BeamSplitter,
    CircuitElement,
    OpticalCircuit,
    PhaseShift,
    Squeezer,
)
from .core import CovarianceMatrix, Ordering, SymplecticTransform
from .errors import DataFormatError
from .family import FamilyParams
from .sdp import EntanglementVerdict
from .sweep import BoundaryCurve, SweepGrid

__all__ = [
    "FORMAT_VERSION",
    "format_float",
    "matrix_to_json",
    "matrix_from_json",
    "symplectic_to_json",
    "params_to_json",
    "params_from_json",
    "circuit_to_json",
    "circuit_from_json",
    "verdict_to_json",
    "decomposition_to_json",
    "sweep_to_csv",
    "boundary_to_csv",
]

FORMAT_VERSION = 1


def format_float(value: float) -> str:
    """15-significant-digit decimal form used by every file format."""
    value = float(value)
    if math.isnan(value) or math.isinf(value):
        raise DataFormatError(f"non-finite value {value!r} cannot be serialized")
    text = f"{value:.15g}"
    return "0" if text == "-0" else text


def _emit(value: object, out: list[str]) -> None:
    if isinstance(value, dict):
        out.append("{")
        for i, (key, item) in enumerate(value.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(key))
            out.append(": ")
            _emit(item, out)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(", ")
            _emit(item, out)
        out.append("]")
    elif isinstance(value, bool):
        out.append("true" if value else "false")
    elif isinstance(value, (int, np.integer)):
        out.append(str(int(value)))
    elif isinstance(value, (float, np.floating)):
        out.append(format_float(float(value)))
    elif isinstance(value, str):
        out.append(json.dumps(value))
    elif value is None:
        out.append("null")
    else:
        raise DataFormatError(f"cannot serialize {type(value).__name__}")


def dumps(document: dict) -> str:
    """Serialize a document with deterministic field order and floats."""
    out: list[str] = []
    _emit(document, out)
    out.append("\n")
    return "".join(out)


def _parse(text: str) -> dict:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise DataFormatError("top-level JSON value must be an object")
    return document


def _check_version(document: dict) -> None:
    version = document.get("format_version")
    if version != FORMAT_VERSION:
        raise DataFormatError(
            f"unsupported format_version {version!r}; expected {FORMAT_VERSION}"
        )


def _require(document: dict, key: str) -> object:
    if key not in document:
        raise DataFormatError(f"missing required field {key!r}")
    return document[key]


def _as_matrix(value: object, n_modes: int) -> np.ndarray:
    dim = 2 * n_modes
    if not isinstance(value, list) or len(value) != dim:
        raise DataFormatError(f"matrix data must have {dim} rows")
    rows = []
    for row in value:
        if not isinstance(row, list) or len(row) != dim:
            raise DataFormatError(f"matrix rows must have {dim} entries")
        try:
            rows.append([float(x) for x in row])
        except (TypeError, ValueError) as exc:
            raise DataFormatError("matrix entries must be numbers") from exc
    return np.array(rows)


def matrix_to_json(matrix: CovarianceMatrix | SymplecticTransform) -> str:
    return dumps(
        {
            "format_version": FORMAT_VERSION,
            "n_modes": matrix.n_modes,
            "ordering": matrix.ordering.value,
            "data": [list(row) for row in matrix.data],
        }
    )


def symplectic_to_json(transform: SymplecticTransform) -> str:
    return matrix_to_json(transform)


def matrix_from_json(text: str) -> CovarianceMatrix:
    document = _parse(text)
    _check_version(document)
    n_modes = _require(document, "n_modes")
    if not isinstance(n_modes, int) or n_modes < 1:
        raise DataFormatError("n_modes must be a positive integer")
    ordering_name = _require(document, "ordering")
    try:
        ordering = Ordering(ordering_name)
    except ValueError as exc:
        raise DataFormatError(f"unknown ordering {ordering_name!r}") from exc
    data = _as_matrix(_require(document, "data"), n_modes)
    try:
        return CovarianceMatrix(data, ordering)
    except Exception as exc:
        raise DataFormatError(f"not a covariance matrix: {exc}") from exc


def params_to_json(params: FamilyParams) -> str:
    return dumps(
        {
            "format_version": FORMAT_VERSION,
            "beta": list(params.beta),
            "alpha": list(params.alpha),
        }
    )


def params_from_json(text: str) -> FamilyParams:
    document = _parse(text)
    _check_version(document)
    beta = _require(document, "beta")
    alpha = _require(document, "alpha")
    if not isinstance(beta, list) or len(beta) != 2:
        raise DataFormatError("beta must be a list of two numbers")
    if not isinstance(alpha, list) or len(alpha) != 8:
        raise DataFormatError("alpha must be a list of eight numbers")
    try:
        b1, b2 = (float(x) for x in beta)
        alphas = tuple(float(x) for x in alpha)
    except (TypeError, ValueError) as exc:
        raise DataFormatError("parameters must be numbers") from exc
    try:
        return FamilyParams((b1, b2), alphas)
    except Exception as exc:
        raise DataFormatError(f"inadmissible parameters: {exc}") from exc


def _element_record(element: CircuitElement) -> dict:
    if isinstance(element, BeamSplitter):
        return {
            "kind": "bs",
            "modes": [element.mode_a, element.mode_b],
            "theta": element.theta,
            "phi": element.phi,
        }
    if isinstance(element, PhaseShift):
        return {"kind": "phase", "modes": [element.mode], "phi": element.phi}
    return {"kind": "squeezer", "modes": [element.mode], "r": element.r}


def circuit_to_json(circuit: OpticalCircuit) -> str:
    return dumps(
        {
            "format_version": FORMAT_VERSION,
            "n_modes": circuit.n_modes,
            "elements": [_element_record(e) for e in circuit.elements],
        }
    )


def _element_from_record(record: object) -> CircuitElement:
    if not isinstance(record, dict):
        raise DataFormatError("circuit elements must be objects")
    kind = record.get("kind")
    modes = record.get("modes")
    if not isinstance(modes, list) or not all(isinstance(m, int) for m in modes):
        raise DataFormatError("element modes must be a list of integers")

    def number(key: str) -> float:
        value = record.get(key)
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise DataFormatError(f"element field {key!r} must be a number")
        return float(value)

    try:
        if kind == "bs":
            if len(modes) != 2:
                raise DataFormatError("beam splitter needs two modes")
            return BeamSplitter(modes[0], modes[1], number("theta"), number("phi"))
        if kind == "phase":
            if len(modes) != 1:
                raise DataFormatError("phase shifter needs one mode")
            return PhaseShift(modes[0], number("phi"))
        if kind == "squeezer":
            if len(modes) != 1:
                raise DataFormatError("squeezer needs one mode")
            return Squeezer(modes[0], number("r"))
    except ValueError as exc:
        raise DataFormatError(f"invalid element: {exc}") from exc
    raise DataFormatError(f"unknown element kind {kind!r}")


def circuit_from_json(text: str) -> OpticalCircuit:
    document = _parse(text)
    _check_version(document)
    n_modes = _require(document, "n_modes")
    if not isinstance(n_modes, int) or n_modes < 1:
        raise DataFormatError("n_modes must be a positive integer")
    elements = _require(document, "elements")
    if not isinstance(elements, list):
        raise DataFormatError("elements must be a list")
    try:
        return OpticalCircuit(
            n_modes, tuple(_element_from_record(r) for r in elements)
        )
    except ValueError as exc:
        raise DataFormatError(f"invalid circuit: {exc}") from exc


def verdict_to_json(verdict: EntanglementVerdict) -> str:
    return dumps(
        {
            "format_version": FORMAT_VERSION,
            "class": verdict.classification.value,
            "ppt_margin": verdict.ppt_margin,
            "slack": verdict.separability_slack,
            "iterations": verdict.iterations,
        }
    )


def decomposition_to_json(
    mode: str,
    payload: dict,
) -> str:
    document = {"format_version": FORMAT_VERSION, "mode": mode}
    document.update(payload)
    return dumps(document)


def _class_name(cell: Optional[EntanglementVerdict]) -> str:
    return "inconclusive" if cell is None else cell.classification.value


def sweep_to_csv(grid: SweepGrid, stream: IO[str]) -> None:
    """Write one row per cell: kappa,tau,class,ppt_margin,slack."""
    stream.write("kappa,tau,class,ppt_margin,slack\n")
    for i, kappa in enumerate(grid.kappa_axis):
        for j, tau in enumerate(grid.tau_axis):
            cell = grid.cells[i][j]
            if cell is None:
                margin = slack = ""
            else:
                margin = format_float(cell.ppt_margin)
                slack = (
                    ""
                    if cell.separability_slack is None
                    else format_float(cell.separability_slack)
                )
            stream.write(
                f"{format_float(kappa)},{format_float(tau)},"
                f"{_class_name(cell)},{margin},{slack}\n"
            )


def boundary_to_csv(curve: BoundaryCurve, stream: IO[str]) -> None:
    """Write one row per kappa: kappa,tau_lower,tau_upper,converged."""
    stream.write("kappa,tau_lower,tau_upper,converged\n")
    for kappa, lo, hi, ok in zip(
        curve.kappa, curve.tau_lower, curve.tau_upper, curve.converged
    ):
        lo_text = "" if math.isnan(lo) else format_float(lo)
        hi_text = "" if math.isnan(hi) else format_float(hi)
        stream.write(
            f"{format_float(kappa)},{lo_text},{hi_text},"
            f"{'true' if ok else 'false'}\n"
        )
