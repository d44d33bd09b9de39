r"""Command-line interface.

Subcommands: construct, classify, decompose, synthesize, simulate,
sweep, and verify-paper.  All file formats are the versioned JSON/CSV
formats of the serialization module, every float is printed with 15
significant digits, and identical inputs produce byte-identical outputs.

Exit codes: 0 success, 64 usage error, 65 malformed data, 70 numerical
failure.  verify-paper instead distinguishes 0 (all suites pass),
1 (a suite failed, first failure named on stderr), and 2 (no failures
but at least one suite could not certify its verdict at the requested
tolerance).
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from typing import Callable, Optional, Sequence

import numpy as np

from . import __version__, refvalues
from .circuits import build_preparation_circuit, simulate
from .core import (
    Bipartition,
    CovarianceMatrix,
    Ordering,
    reorder,
)
from .decomp import (
    euler_decompose,
    verify_reference_values,
    williamson,
)
from .errors import (
    DataFormatError,
    DimensionMismatchError,
    GaussBoundError,
    InconclusiveError,
    InvalidKappaError,
    InvalidTauError,
    NoBracketError,
)
from .family import (
    EXAMPLE_NAMES,
    construct,
    example_params,
    family_bipartition,
    minimality_ranks,
)
from .sdp import SEPARABILITY_TOL, EntanglementClass, classify
from .serialization import (
    circuit_from_json,
    circuit_to_json,
    decomposition_to_json,
    matrix_from_json,
    matrix_to_json,
    params_from_json,
    sweep_to_csv,
    boundary_to_csv,
    verdict_to_json,
    dumps,
)
from .sweep import (
    BoundaryKind,
    SweepOptions,
    find_boundary,
    scan,
    trace_boundary,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_NUMERICAL = 70

# Slack this close to the separability threshold cannot be certified
# either way by a solver converging the duality gap to 1e-9.
_CERTIFICATION_FLOOR = 1e-8


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise DataFormatError(f"cannot read {path}: {exc}") from exc


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise DataFormatError(f"cannot write {path}: {exc}") from exc


def _parse_partition(tokens: Sequence[str]) -> Bipartition:
    groups: dict[str, tuple[int, ...]] = {}
    for token in tokens:
        side, _, body = token.partition("=")
        side = side.strip().lower()
        if side not in ("a", "b") or not body:
            raise _UsageError(
                f"partition groups look like a=1,2 or b=3,4; got {token!r}"
            )
        try:
            modes = tuple(int(m) for m in body.split(","))
        except ValueError:
            raise _UsageError(f"partition modes must be integers: {token!r}")
        groups[side] = modes
    if set(groups) != {"a", "b"}:
        raise _UsageError("partition needs exactly one a= group and one b= group")
    try:
        return Bipartition(groups["a"], groups["b"])
    except GaussBoundError as exc:
        raise _UsageError(f"invalid partition: {exc}")


def _parse_axis(text: str, name: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise _UsageError(f"--{name} must look like lo:hi:count, got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError:
        raise _UsageError(f"--{name} must look like lo:hi:count, got {text!r}")
    if count < 1 or (count == 1 and hi != lo) or (count > 1 and hi <= lo):
        raise _UsageError(f"--{name} range is empty or inverted: {text!r}")
    return np.linspace(lo, hi, count)


def _load_state(path: str) -> CovarianceMatrix:
    return matrix_from_json(_read_text(path))


def _default_partition(n_modes: int) -> Bipartition:
    if n_modes < 2:
        raise _UsageError("classification needs at least two modes")
    half = n_modes // 2
    return Bipartition(
        tuple(range(1, half + 1)), tuple(range(half + 1, n_modes + 1))
    )


def _matrix_rows(data: np.ndarray) -> list[list[float]]:
    return [list(row) for row in data]


# ---------------------------------------------------------------- subcommands


def _cmd_construct(args: argparse.Namespace) -> int:
    if (args.preset is None) == (args.params is None):
        raise _UsageError("construct needs exactly one of --preset or --params")
    ordering = Ordering(args.ordering)
    if args.preset is not None:
        fixture = (
            resources.files("gaussbound.data")
            .joinpath(f"{args.preset}.json")
            .read_text(encoding="utf-8")
        )
        if ordering is Ordering.INTERLEAVED:
            _write_text(args.out, fixture)
            return EXIT_OK
        state = matrix_from_json(fixture)
    else:
        params = params_from_json(_read_text(args.params))
        state = construct(params)
    _write_text(args.out, matrix_to_json(reorder(state, ordering)))
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace) -> int:
    state = _load_state(args.input)
    if args.partition is None:
        part = _default_partition(state.n_modes)
    else:
        part = _parse_partition(args.partition)
    if part.n_modes != state.n_modes:
        raise _UsageError(
            f"partition covers {part.n_modes} modes, state has {state.n_modes}"
        )
    verdict = classify(state, part, tol_sep=args.tol_sep, tol_ppt=args.tol_ppt)
    _write_text(args.out, verdict_to_json(verdict))
    return EXIT_OK


def _cmd_decompose(args: argparse.Namespace) -> int:
    state = reorder(_load_state(args.input), Ordering.INTERLEAVED)
    payload: dict = {"n_modes": state.n_modes, "ordering": "interleaved"}
    form = williamson(state)
    if args.mode in ("williamson", "both"):
        payload["nu"] = list(form.nu)
        payload["symplectic"] = _matrix_rows(form.transform.data)
    if args.mode in ("euler", "both"):
        euler = euler_decompose(form.transform)
        payload["r"] = list(euler.r)
        payload["tau"] = list(euler.tau)
        payload["passive_out"] = _matrix_rows(euler.passive_out.data)
        payload["passive_in"] = _matrix_rows(euler.passive_in.data)
    _write_text(args.out, decomposition_to_json(args.mode, payload))
    return EXIT_OK


def _cmd_synthesize(args: argparse.Namespace) -> int:
    if not args.kappa >= 1.0:
        raise _UsageError(f"--kappa must be >= 1, got {args.kappa}")
    if not args.tau > 0.0:
        raise _UsageError(f"--tau must be > 0, got {args.tau}")
    circuit, input_state = build_preparation_circuit(
        args.kappa,
        args.tau,
        include_redundant=not args.omit_redundant,
        generic=args.generic,
    )
    _write_text(args.out, circuit_to_json(circuit))
    if args.input_out is not None:
        _write_text(args.input_out, matrix_to_json(input_state))
    return EXIT_OK


def _cmd_simulate(args: argparse.Namespace) -> int:
    circuit = circuit_from_json(_read_text(args.circuit))
    state = reorder(_load_state(args.input), Ordering.INTERLEAVED)
    try:
        output = simulate(circuit, state)
    except DimensionMismatchError as exc:
        raise DataFormatError(str(exc)) from exc
    _write_text(args.out, matrix_to_json(output))
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    kappa_axis = _parse_axis(args.kappa, "kappa")
    tau_axis = _parse_axis(args.tau, "tau")
    opts = SweepOptions(tol_sep=args.tol_sep, threads=args.threads)
    grid = scan(kappa_axis, tau_axis, opts)

    import io

    buffer = io.StringIO()
    sweep_to_csv(grid, buffer)
    _write_text(args.out, buffer.getvalue())

    if args.boundary is not None:
        curve = trace_boundary(
            kappa_axis,
            BoundaryKind.BOUND_TO_FREE,
            tol=args.boundary_tol,
            opts=opts,
        )
        boundary_buffer = io.StringIO()
        boundary_to_csv(curve, boundary_buffer)
        _write_text(args.boundary, boundary_buffer.getvalue())
    return EXIT_OK


# ------------------------------------------------------------- verify-paper


def _certify(verdict, tol_sep: float) -> str:
    """Classification string, or 'inconclusive' for uncertifiable slack."""
    slack = verdict.separability_slack
    if slack is not None and abs(slack - tol_sep) < _CERTIFICATION_FLOOR:
        return "inconclusive"
    return verdict.classification.value


def _suite_example_reconstruction(tol_sep: float) -> tuple[str, str]:
    worst = 0.0
    for name in EXAMPLE_NAMES:
        fixture = (
            resources.files("gaussbound.data")
            .joinpath(f"{name}.json")
            .read_text(encoding="utf-8")
        )
        try:
            stored = matrix_from_json(fixture)
        except DataFormatError as exc:
            return ("fail", f"{name} fixture unreadable: {exc}")
        built = construct(example_params(name))
        err = float(np.max(np.abs(stored.data - built.data)))
        if err > 1e-12:
            return ("fail", f"{name} reconstruction error {err:.3e} > 1e-12")
        worst = max(worst, err)
    return ("pass", f"4 examples reconstructed, worst error {worst:.3e}")


def _suite_classification(tol_sep: float) -> tuple[str, str]:
    part = family_bipartition()
    for name in EXAMPLE_NAMES:
        try:
            verdict = classify(
                construct(example_params(name)), part, tol_sep=tol_sep
            )
        except InconclusiveError as exc:
            return ("inconclusive", f"{name}: {exc}")
        label = _certify(verdict, tol_sep)
        if label == "inconclusive":
            return (
                "inconclusive",
                f"{name} slack {verdict.separability_slack:.3e} within the "
                f"certification floor of tol-sep {tol_sep:g}",
            )
        if label != EntanglementClass.BOUND_ENTANGLED.value:
            return ("fail", f"{name} classified {label}")
    return ("pass", "examples 1-4 all bound entangled")


def _suite_minimality(tol_sep: float) -> tuple[str, str]:
    part = family_bipartition()
    for name in EXAMPLE_NAMES:
        ranks = minimality_ranks(construct(example_params(name)), part)
        if ranks != (4, 4, 8):
            return ("fail", f"{name} ranks {ranks} != (4, 4, 8)")
    return ("pass", "rank pattern (4, 4, 8) on all examples")


def _suite_williamson(tol_sep: float) -> tuple[str, str]:
    state = construct(example_params("example1"))
    form = williamson(state)
    nu_err = float(np.max(np.abs(form.nu - np.array([1.0, 1.0, 3.0, 3.0]))))
    rec_err = float(np.max(np.abs(form.reconstruct().data - state.data)))
    if nu_err > 1e-9:
        return ("fail", f"symplectic spectrum off by {nu_err:.3e}")
    if rec_err > 1e-9:
        return ("fail", f"reconstruction error {rec_err:.3e}")
    return ("pass", f"nu = (1, 1, 3, 3), reconstruction error {rec_err:.3e}")


def _suite_euler(tol_sep: float) -> tuple[str, str]:
    from .core import SymplecticTransform

    reference = SymplecticTransform(
        refvalues.diagonalizing_symplectic(), Ordering.INTERLEAVED
    )
    form = euler_decompose(reference)
    tau_err = float(np.max(np.abs(form.tau - refvalues.SQUEEZE_TAU)))
    rec_err = float(np.max(np.abs(form.reconstruct().data - reference.data)))
    eye = np.eye(8)
    orth = max(
        float(np.max(np.abs(form.passive_out.data @ form.passive_out.data.T - eye))),
        float(np.max(np.abs(form.passive_in.data @ form.passive_in.data.T - eye))),
    )
    if tau_err > 1e-9 or rec_err > 1e-9 or orth > 1e-10:
        return (
            "fail",
            f"tau error {tau_err:.3e}, reconstruction {rec_err:.3e}, "
            f"orthogonality {orth:.3e}",
        )
    return ("pass", f"four equal squeezers at tau = {refvalues.SQUEEZE_TAU:.6f}")


def _suite_mesh_factors(tol_sep: float) -> tuple[str, str]:
    a_factors, a_phase = refvalues.input_mesh_factorization()
    b_factors, b_phase = refvalues.output_mesh_factorization()
    eye = np.eye(4)
    worst_unitary = 0.0
    for factor in list(a_factors) + list(b_factors):
        f = np.asarray(factor, dtype=complex)
        worst_unitary = max(
            worst_unitary, float(np.max(np.abs(f.conj().T @ f - eye)))
        )
    chain_a = eye.astype(complex)
    for factor in a_factors:
        chain_a = np.asarray(factor, dtype=complex) @ chain_a
    chain_a = chain_a @ a_phase
    chain_b = eye.astype(complex)
    for factor in b_factors:
        chain_b = np.asarray(factor, dtype=complex) @ chain_b
    chain_b = chain_b @ b_phase
    err_a = float(np.max(np.abs(chain_a - refvalues.input_unitary())))
    err_b = float(np.max(np.abs(chain_b - refvalues.output_unitary())))
    if worst_unitary > 1e-10 or err_a > 1e-10 or err_b > 1e-10:
        return (
            "fail",
            f"unitarity {worst_unitary:.3e}, input chain {err_a:.3e}, "
            f"output chain {err_b:.3e}",
        )
    try:
        verify_reference_values(strict=True)
    except GaussBoundError as exc:
        return ("fail", str(exc))
    return ("pass", "nine factors unitary; chains match both interferometers")


def _suite_circuit_reproduction(tol_sep: float) -> tuple[str, str]:
    circuit, input_state = build_preparation_circuit(
        refvalues.STAR_KAPPA, refvalues.SQUEEZE_TAU
    )
    target = construct(example_params("example1"))
    err = float(np.max(np.abs(simulate(circuit, input_state).data - target.data)))
    if err > 1e-8:
        return ("fail", f"flagship output error {err:.3e} > 1e-8")
    trimmed, _ = build_preparation_circuit(
        refvalues.STAR_KAPPA, refvalues.SQUEEZE_TAU, include_redundant=False
    )
    delta = float(
        np.max(
            np.abs(
                simulate(trimmed, input_state).data
                - simulate(circuit, input_state).data
            )
        )
    )
    if delta > 1e-10:
        return ("fail", f"redundant elements change the output by {delta:.3e}")
    return ("pass", f"flagship state reproduced to {err:.3e}")


def _suite_zero_squeezing(tol_sep: float) -> tuple[str, str]:
    part = family_bipartition()
    for kappa in (1.0, 3.0, 9.0, 17.0):
        circuit, input_state = build_preparation_circuit(kappa, 1.0)
        try:
            verdict = classify(
                simulate(circuit, input_state), part, tol_sep=tol_sep
            )
        except InconclusiveError as exc:
            return ("inconclusive", f"kappa={kappa:g}: {exc}")
        label = _certify(verdict, tol_sep)
        if label == "inconclusive":
            return (
                "inconclusive",
                f"kappa={kappa:g} slack {verdict.separability_slack:.3e} not "
                f"certifiable at tol-sep {tol_sep:g}",
            )
        if label != EntanglementClass.SEPARABLE.value:
            return ("fail", f"kappa={kappa:g} classified {label}")
    return ("pass", "zero-squeezing outputs separable at kappa = 1, 3, 9, 17")


def _suite_boundary_star(tol_sep: float) -> tuple[str, str]:
    try:
        lo, hi = find_boundary(
            refvalues.STAR_KAPPA, BoundaryKind.BOUND_TO_FREE, tol=1e-4
        )
    except NoBracketError as exc:
        return ("fail", f"no bound-to-free bracket at kappa=3: {exc}")
    star = refvalues.SQUEEZE_TAU
    if not (lo - 1e-3 <= star <= hi + 1e-3):
        return ("fail", f"bracket [{lo:.6f}, {hi:.6f}] misses {star:.6f}")
    return ("pass", f"bound-to-free bracket [{lo:.6f}, {hi:.6f}] contains star")


_VERIFY_SUITES: tuple[tuple[str, Callable[[float], tuple[str, str]]], ...] = (
    ("example reconstruction", _suite_example_reconstruction),
    ("entanglement classification", _suite_classification),
    ("minimality ranks", _suite_minimality),
    ("normal-form spectrum", _suite_williamson),
    ("squeezer factorization", _suite_euler),
    ("mesh factor identities", _suite_mesh_factors),
    ("circuit reproduction", _suite_circuit_reproduction),
    ("zero-squeezing row", _suite_zero_squeezing),
    ("boundary star point", _suite_boundary_star),
)


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    results: list[dict] = []
    first_failure: Optional[str] = None
    any_inconclusive = False
    for name, suite in _VERIFY_SUITES:
        try:
            status, detail = suite(args.tol_sep)
        except InconclusiveError as exc:
            status, detail = "inconclusive", str(exc)
        except GaussBoundError as exc:
            status, detail = "fail", str(exc)
        results.append({"name": name, "status": status, "detail": detail})
        marker = {"pass": "ok", "fail": "FAIL", "inconclusive": "INCONCLUSIVE"}[
            status
        ]
        sys.stdout.write(f"[{marker:^12}] {name}: {detail}\n")
        if status == "fail" and first_failure is None:
            first_failure = name
        if status == "inconclusive":
            any_inconclusive = True

    passed = sum(1 for r in results if r["status"] == "pass")
    overall = (
        "fail" if first_failure else "inconclusive" if any_inconclusive else "pass"
    )
    sys.stdout.write(f"{passed}/{len(results)} suites passed\n")
    if args.out is not None:
        _write_text(
            args.out,
            dumps(
                {
                    "format_version": 1,
                    "status": overall,
                    "suites": results,
                }
            ),
        )
    if first_failure is not None:
        sys.stderr.write(f"first failing check: {first_failure}\n")
        return EXIT_FAIL
    if any_inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# ------------------------------------------------------------------- driver


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="gaussbound",
        description=(
            "Construct, classify, decompose, and optically compile bipartite "
            "bound entangled Gaussian states."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"gaussbound {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a family state as Matrix JSON")
    p.add_argument("--preset", choices=EXAMPLE_NAMES)
    p.add_argument("--params", metavar="FILE")
    p.add_argument(
        "--ordering",
        choices=[o.value for o in Ordering],
        default=Ordering.INTERLEAVED.value,
    )
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("classify", help="three-way entanglement verdict")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument(
        "--partition",
        nargs=2,
        metavar=("a=...", "b=..."),
        help="mode groups, e.g. --partition a=1,2 b=3,4",
    )
    p.add_argument("--tol-sep", type=float, default=SEPARABILITY_TOL)
    p.add_argument("--tol-ppt", type=float, default=None)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("decompose", help="normal forms of a state")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument(
        "--mode", choices=["williamson", "euler", "both"], default="both"
    )
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser(
        "synthesize", help="preparation circuit for given occupation/squeezing"
    )
    p.add_argument("--kappa", type=float, required=True)
    p.add_argument("--tau", type=float, required=True)
    p.add_argument(
        "--omit-redundant",
        action="store_true",
        help="drop the two elements that act trivially on the inputs",
    )
    p.add_argument(
        "--generic",
        action="store_true",
        help="synthesize the meshes by triangular elimination instead of "
        "the closed-form factors",
    )
    p.add_argument("--out", metavar="FILE")
    p.add_argument(
        "--input-out",
        metavar="FILE",
        help="also write the circuit's input state as Matrix JSON",
    )
    p.set_defaults(handler=_cmd_synthesize)

    p = sub.add_parser("simulate", help="apply a circuit to a Gaussian state")
    p.add_argument("--circuit", required=True, metavar="FILE")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("sweep", help="classify a (kappa, tau) grid to CSV")
    p.add_argument("--kappa", default="1:17:200", metavar="LO:HI:COUNT")
    p.add_argument("--tau", default="1:2:200", metavar="LO:HI:COUNT")
    p.add_argument("--out", metavar="FILE")
    p.add_argument(
        "--boundary",
        metavar="FILE",
        help="also trace the bound-to-free boundary over the kappa axis",
    )
    p.add_argument("--boundary-tol", type=float, default=1e-4)
    p.add_argument("--tol-sep", type=float, default=SEPARABILITY_TOL)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser(
        "verify-paper", help="run the built-in reference value suites"
    )
    p.add_argument("--tol-sep", type=float, default=SEPARABILITY_TOL)
    p.add_argument("--out", metavar="FILE", help="write the JSON report here")
    p.set_defaults(handler=_cmd_verify_paper)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (InvalidKappaError, InvalidTauError) as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except DataFormatError as exc:
        sys.stderr.write(f"data error: {exc}\n")
        return EXIT_DATA
    except GaussBoundError as exc:
        sys.stderr.write(f"numerical failure: {exc}\n")
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
