"""
QCSAT command line.

    python -m QCSAT solve FILE [--a A] [--max-steps N] [--method counting|statevector] [--json]
    python -m QCSAT trace (FILE | --q2 VALUE) [--a A] [--max-steps N]
    python -m QCSAT oracle FILE [--json]
    python -m QCSAT verify-bounds [--n-min 1] [--n-max 60] [--k 1] [--a 3.71] [--confirm] [--json]
    python -m QCSAT gen --n N --m M --k K [--seed S]

Exit codes: 10 satisfiable, 20 unsatisfiable, 0 success, 1 any error.
"""
import argparse
import inspect
import logging
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from .tools.chaos.chaos_utils import LogisticParams, check_parameter
from .tools.chaos.logistic import find_first_crossing, iterate_map
from .tools.chaos.propositions import START_MODES, verify_propositions
from .tools.dimacs.dimacs_utils import DimacsError
from .tools.dimacs.generate import generate_random_kcnf
from .tools.dimacs.parse import load_dimacs
from .tools.dimacs.serialize import serialize_dimacs
from .tools.errors import QCSATError, UsageError
from .tools.formula.count_roots import count_roots
from .tools.formula.formula_utils import ClauseSet
from .tools.quantum.oracle import apply_oracle
from .tools.quantum.quantum_utils import ReducedQubitState
from .tools.quantum.reduced_state import exact_q_squared, reduced_state_from_statevector
from .tools.quantum.statevector import uniform_superposition
from .tools.reports import (
    EXIT_ERROR,
    EXIT_OK,
    SAT,
    UNSAT,
    SolveReport,
    decision_exit_code,
    format_oracle_result,
    format_proposition_report,
    format_solve_report,
    to_json,
    write_trace_csv,
)
from .tools.settings import ENUMERATION_LIMIT_ENV, get_logistic_parameter, load_settings

logger = logging.getLogger(__name__)

METHODS = ("counting", "statevector")


def _error(e: Exception) -> Dict[str, Any]:
    result = {"status": "error", "message": str(e), "exit_code": EXIT_ERROR}
    if isinstance(e, DimacsError):
        result["diagnostics"] = [str(d) for d in e.diagnostics]
    return result


def _reduced_state(cs: ClauseSet, method: str, settings: Dict[str, Any]) -> ReducedQubitState:
    if method == "statevector":
        state = apply_oracle(uniform_superposition(cs.num_vars, limit=settings["statevector_limit"]), cs)
        return reduced_state_from_statevector(state)
    if method == "counting":
        return exact_q_squared(cs, limit=settings["enumeration_limit"])
    raise UsageError(f"unknown method {method!r}, expected one of {METHODS}")


def _amplifier_params(n: Optional[int], a: Optional[float], max_steps: Optional[int]) -> LogisticParams:
    """Steps default to 2n for an n-variable formula."""
    if max_steps is None:
        if n is None:
            raise UsageError("--max-steps is required with --q2")
        return LogisticParams.for_formula(n, a)
    return LogisticParams(max_steps=max_steps, a=a if a is not None else get_logistic_parameter())


def parse_q2(text: str) -> Fraction:
    """Read q^2 from decimal ("0.125") or rational ("1/8") text."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--q2 expects a number in [0, 1], got {text!r}")
    if not 0 <= value <= 1:
        raise UsageError(f"--q2 must lie in [0, 1], got {text!r}")
    return value


def cmd_solve(
    file: str,
    a: Optional[float] = None,
    max_steps: Optional[int] = None,
    method: str = "counting",
    settings: Optional[Dict[str, Any]] = None,
) -> Dict[str, Any]:
    """
    Decide satisfiability through the quantum step and the chaotic amplifier.

    Returns:
        {"status": "success", "report": SolveReport, "exit_code": 10|20} or an
        error dict with exit_code 1.
    """
    settings = settings or load_settings()
    started = time.perf_counter()
    try:
        cs = load_dimacs(file)
        qs = _reduced_state(cs, method, settings)
        params = _amplifier_params(cs.num_vars, a, max_steps)
        crossing = find_first_crossing(qs.q_squared_float, params)
        report = SolveReport(
            file=str(file),
            n=cs.num_vars,
            m=cs.num_clauses,
            r=qs.r,
            q_squared=str(qs.q_squared_exact),
            first_crossing=crossing,
            decision=SAT if crossing is not None else UNSAT,
            method=method,
            a=params.a,
            max_steps=params.max_steps,
            wall_time_ms=round((time.perf_counter() - started) * 1000),
        )
    except (QCSATError, OSError) as e:
        return _error(e)

    if not report.consistent:
        logger.warning("amplifier decided %s but r=%s for %s", report.decision, report.r, file)
    return {"status": "success", "report": report, "exit_code": decision_exit_code(report.decision)}


def cmd_trace(
    file: Optional[str] = None,
    q2: Optional[str] = None,
    a: Optional[float] = None,
    max_steps: Optional[int] = None,
    method: str = "counting",
    settings: Optional[Dict[str, Any]] = None,
) -> Dict[str, Any]:
    """
    Amplification trace g^m(q^2) for m = 0..max_steps.

    Exactly one of file / q2 must be given. With a file, q^2 is computed as in
    cmd_solve and max_steps defaults to 2n; with q2, max_steps is required.
    """
    settings = settings or load_settings()
    try:
        if (file is None) == (q2 is None):
            raise UsageError("give exactly one of FILE or --q2")
        if file is not None:
            cs = load_dimacs(file)
            x0 = _reduced_state(cs, method, settings).q_squared_float
            params = _amplifier_params(cs.num_vars, a, max_steps)
        else:
            x0 = float(parse_q2(q2))
            params = _amplifier_params(None, a, max_steps)
        trace = iterate_map(x0, params)
    except (QCSATError, OSError) as e:
        return _error(e)
    return {"status": "success", "trace": trace, "exit_code": EXIT_OK}


def cmd_oracle(file: str, settings: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Brute-force ground truth: r and the decision r > 0."""
    settings = settings or load_settings()
    try:
        cs = load_dimacs(file)
        r = count_roots(cs, limit=settings["enumeration_limit"])
    except (QCSATError, OSError) as e:
        return _error(e)
    decision = SAT if r > 0 else UNSAT
    return {
        "status": "success",
        "file": str(file),
        "n": cs.num_vars,
        "m": cs.num_clauses,
        "r": r,
        "decision": decision,
        "exit_code": decision_exit_code(decision),
    }


def cmd_verify_bounds(
    n_min: int = 1,
    n_max: int = 60,
    k: int = 1,
    a: Optional[float] = None,
    confirm: bool = False,
    digits: Optional[int] = None,
    start: str = "q2",
) -> Dict[str, Any]:
    """Sweep n_min..n_max and check the crossing-time bounds; exit 0 iff all rows pass."""
    try:
        if n_min < 1:
            raise UsageError(f"--n-min must be >= 1, got {n_min}")
        if n_max < n_min:
            raise UsageError(f"--n-max ({n_max}) must be >= --n-min ({n_min})")
        report = verify_propositions(
            range(n_min, n_max + 1), k=k, a=a, confirm=confirm, digits=digits, start=start
        )
    except QCSATError as e:
        return _error(e)
    return {"status": "success", "report": report, "exit_code": EXIT_OK if report.passed else EXIT_ERROR}


def cmd_gen(n: int, m: int, k: int, seed: int = 0) -> Dict[str, Any]:
    """Seeded random k-CNF as DIMACS bytes."""
    try:
        cs = generate_random_kcnf(n, m, k, seed)
    except QCSATError as e:
        return _error(UsageError(str(e)))
    comment = f"random {k}-CNF n={n} m={m} seed={seed}"
    return {"status": "success", "dimacs": serialize_dimacs(cs, [comment]), "exit_code": EXIT_OK}


COMMANDS: Dict[str, Callable[..., Dict[str, Any]]] = {
    "solve": cmd_solve,
    "trace": cmd_trace,
    "oracle": cmd_oracle,
    "verify-bounds": cmd_verify_bounds,
    "gen": cmd_gen,
}


class ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _parameter(text: str) -> float:
    try:
        return check_parameter(float(text))
    except (ValueError, QCSATError):
        raise argparse.ArgumentTypeError(f"expected a real in [0, 4], got {text!r}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="qcsat", description="Quantum-chaos SAT simulator")
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")
    parser.add_argument("--env-file", type=Path, default=None,
                        help=f"dotenv file to load (only {ENUMERATION_LIMIT_ENV} is read)")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="decide satisfiability of a DIMACS file")
    solve.add_argument("file")
    solve.add_argument("--a", type=_parameter, default=None)
    solve.add_argument("--max-steps", type=int, default=None)
    solve.add_argument("--method", choices=METHODS, default="counting")
    solve.add_argument("--json", action="store_true")

    trace = sub.add_parser("trace", help="emit the amplification trace as CSV")
    trace.add_argument("file", nargs="?", default=None)
    trace.add_argument("--q2", default=None)
    trace.add_argument("--a", type=_parameter, default=None)
    trace.add_argument("--max-steps", type=int, default=None)
    trace.add_argument("--method", choices=METHODS, default="counting")

    oracle = sub.add_parser("oracle", help="brute-force root count")
    oracle.add_argument("file")
    oracle.add_argument("--json", action="store_true")

    bounds = sub.add_parser("verify-bounds", help="check crossing-time bounds over a range of n")
    bounds.add_argument("--n-min", type=int, default=1)
    bounds.add_argument("--n-max", type=int, default=60)
    bounds.add_argument("--k", type=int, default=1)
    bounds.add_argument("--a", type=_parameter, default=None)
    bounds.add_argument("--confirm", action="store_true",
                        help="confirm crossings with the extended-precision oracle")
    bounds.add_argument("--digits", type=int, default=None)
    bounds.add_argument("--start", choices=START_MODES, default="q2")
    bounds.add_argument("--json", action="store_true")

    gen = sub.add_parser("gen", help="write a seeded random k-CNF to stdout")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--m", type=int, required=True)
    gen.add_argument("--k", type=int, required=True, help="literals per clause")
    gen.add_argument("--seed", type=int, default=0)

    return parser


def _print_error(result: Dict[str, Any]) -> None:
    print(f"error: {result['message']}", file=sys.stderr)
    for diagnostic in result.get("diagnostics", [])[1:]:
        print(f"  {diagnostic}", file=sys.stderr)


def _render_solve(result: Dict[str, Any], args: argparse.Namespace) -> None:
    report = result["report"]
    print(to_json(report.to_dict()) if args.json else format_solve_report(report))


def _render_trace(result: Dict[str, Any], args: argparse.Namespace) -> None:
    write_trace_csv(result["trace"], sys.stdout)


def _render_oracle(result: Dict[str, Any], args: argparse.Namespace) -> None:
    if args.json:
        print(to_json({key: value for key, value in result.items() if key not in ("status", "exit_code")}))
    else:
        print(format_oracle_result(result["file"], result["n"], result["m"], result["r"], result["decision"]))


def _render_verify_bounds(result: Dict[str, Any], args: argparse.Namespace) -> None:
    report = result["report"]
    print(to_json(report.to_dict()) if args.json else format_proposition_report(report))


def _render_gen(result: Dict[str, Any], args: argparse.Namespace) -> None:
    sys.stdout.write(result["dimacs"].decode("ascii"))


RENDERERS: Dict[str, Callable[[Dict[str, Any], argparse.Namespace], None]] = {
    "solve": _render_solve,
    "trace": _render_trace,
    "oracle": _render_oracle,
    "verify-bounds": _render_verify_bounds,
    "gen": _render_gen,
}


def command_arguments(handler: Callable[..., Dict[str, Any]], args: argparse.Namespace,
                      settings: Dict[str, Any]) -> Dict[str, Any]:
    """Keyword arguments for a cmd_* function, taken from parsed options by name."""
    parameters = inspect.signature(handler).parameters
    kwargs = {name: value for name, value in vars(args).items() if name in parameters}
    if "settings" in parameters:
        kwargs["settings"] = settings
    return kwargs


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    settings = load_settings(args.env_file)

    handler = COMMANDS[args.command]
    result = handler(**command_arguments(handler, args, settings))

    if result["status"] == "error":
        _print_error(result)
        return result["exit_code"]

    RENDERERS[args.command](result, args)
    return result["exit_code"]
