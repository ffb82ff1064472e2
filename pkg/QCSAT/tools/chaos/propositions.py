"""
Sweeps that check the crossing-time bounds of the amplifier.

For a start x0 = k / 2^n and a = 3.71, every row asserts:

    upper:       m* exists and m* <= 2n
    proof bound: m* <= floor((n - 1 - log2 k) / (log2 a - 1)) + 1
    lower:       m* >  (n - 1 - log2 k) / log2 a
    lower-cited: the same with log2 3.71 replaced by 1.8912

For k = 1 the lower bounds reduce to (n - 1) / log2 a. Other values of a only
report the empirical crossing. Starts below the smallest normal double are
iterated in extended precision instead.
"""
import logging
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional

from ..errors import InputError
from ..settings import get_cited_log2_a, get_logistic_parameter
from .chaos_utils import LogisticParams, check_parameter
from .logistic import find_first_crossing
from .precision import find_first_crossing_extended

logger = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"
NOT_APPLICABLE = "N/A"

START_MODES = ("q2", "q")

# Starts below this are subnormal or zero as doubles.
SMALLEST_NORMAL_DOUBLE = Fraction(sys.float_info.min)


@dataclass(frozen=True)
class PropositionRow:
    n: int
    k: int
    x0: str
    m_star: Optional[int]
    lower_bound: Optional[float]
    lower_bound_cited: Optional[float]
    upper_bound: int
    proof_bound: Optional[int]
    m_star_extended: Optional[int]
    precision_delta: Optional[int]
    status: str
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class PropositionReport:
    a: float
    k: int
    start: str
    rows: List[PropositionRow]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def applicable(self) -> bool:
        return any(row.status != NOT_APPLICABLE for row in self.rows)

    def failures(self) -> List[PropositionRow]:
        return [row for row in self.rows if row.status == FAIL]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a": self.a,
            "k": self.k,
            "start": self.start,
            "passed": self.passed,
            "rows": [row.to_dict() for row in self.rows],
        }


def start_value(n: int, k: int, start: str = "q2") -> Fraction:
    """x0 = k/2^n, or (k/2^n)^2 when k/2^n is read as q rather than q^2."""
    value = Fraction(k, 1 << n)
    return value if start == "q2" else value * value


def _log2(value: Fraction) -> float:
    return math.log2(value.numerator) - math.log2(value.denominator)


def _check_row(
    n: int,
    k: int,
    a: float,
    max_steps: Optional[int],
    confirm: bool,
    digits: Optional[int],
    start: str,
) -> PropositionRow:
    x0 = start_value(n, k, start)
    steps = max_steps if max_steps is not None else 2 * n
    applicable = a == get_logistic_parameter()

    if x0 > 1:
        return PropositionRow(n, k, str(x0), None, None, None, steps, None, None, None,
                              FAIL, "x0 outside [0, 1]")

    notes = []
    m_star_extended = None
    precision_delta = None
    below_double = 0 < x0 < SMALLEST_NORMAL_DOUBLE
    if below_double:
        m_star = find_first_crossing_extended(x0, a, steps, digits)
        notes.append("x0 below double range; crossing located in extended precision")
        if confirm:
            m_star_extended = m_star
    else:
        m_star = find_first_crossing(float(x0), LogisticParams(max_steps=steps, a=a))

    if confirm and not below_double:
        m_star_extended = find_first_crossing_extended(x0, a, steps, digits)
        if m_star is not None and m_star_extended is not None:
            precision_delta = m_star - m_star_extended

    if not applicable:
        notes.append("bounds hold for a=3.71 only; empirical crossing")
        return PropositionRow(n, k, str(x0), m_star, None, None, steps, None,
                              m_star_extended, precision_delta, NOT_APPLICABLE, "; ".join(notes))

    # -1 - log2 x0 is n - 1 - log2 k for the default start
    excess = -1.0 - _log2(x0)
    lower = excess / math.log2(a)
    lower_cited = excess / get_cited_log2_a()
    proof_bound = max(0, math.floor(excess / (math.log2(a) - 1.0))) + 1

    problems = []
    if m_star is None:
        problems.append(f"no crossing within {steps} steps")
    else:
        if m_star > 2 * n:
            problems.append(f"m*={m_star} exceeds 2n={2 * n}")
        if m_star > proof_bound:
            problems.append(f"m*={m_star} exceeds proof bound {proof_bound}")
        if not m_star > lower:
            problems.append(f"m*={m_star} not above lower bound {lower:.6f}")
        if not m_star > lower_cited:
            problems.append(f"m*={m_star} not above cited lower bound {lower_cited:.6f}")
    if confirm:
        if (m_star is None) != (m_star_extended is None):
            problems.append(f"extended precision crossing {m_star_extended} vs double {m_star}")
        elif precision_delta is not None and abs(precision_delta) > 1:
            problems.append(f"extended precision crossing differs by {precision_delta}")

    notes = problems + notes
    if precision_delta is not None and abs(precision_delta) == 1:
        notes.append(f"double and extended crossings differ by {precision_delta}")
    detail = "; ".join(notes)

    return PropositionRow(
        n=n, k=k, x0=str(x0), m_star=m_star,
        lower_bound=lower, lower_bound_cited=lower_cited,
        upper_bound=2 * n, proof_bound=proof_bound,
        m_star_extended=m_star_extended, precision_delta=precision_delta,
        status=FAIL if problems else PASS, detail=detail,
    )


def verify_propositions(
    n_range: Iterable[int],
    k: int = 1,
    a: Optional[float] = None,
    max_steps: Optional[int] = None,
    confirm: bool = False,
    digits: Optional[int] = None,
    start: str = "q2",
    workers: int = 1,
) -> PropositionReport:
    """
    Check the crossing-time bounds for x0 = k/2^n over n in n_range.

    Args:
        n_range: Values of n (each >= 1).
        k: Numerator of the start value (>= 1).
        a: Logistic parameter; defaults to 3.71. Bounds are only asserted for 3.71.
        max_steps: Steps to iterate; defaults to 2n per row.
        confirm: Also locate each crossing with the extended-precision oracle.
        digits: Significant digits for the extended-precision oracle.
        start: "q2" uses x0 = k/2^n; "q" uses x0 = (k/2^n)^2.
        workers: Threads sharing the rows.

    Returns:
        A PropositionReport. Failed checks are rows with status FAIL, never exceptions.
    """
    if a is None:
        a = get_logistic_parameter()
    check_parameter(a)
    if k < 1:
        raise InputError(f"k must be a positive integer, got {k}")
    if start not in START_MODES:
        raise InputError(f"start must be one of {START_MODES}, got {start!r}")
    ns = list(n_range)
    if any(n < 1 for n in ns):
        raise InputError("every n must be >= 1")

    def run(n: int) -> PropositionRow:
        return _check_row(n, k, a, max_steps, confirm, digits, start)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run, ns))
    else:
        rows = [run(n) for n in ns]

    report = PropositionReport(a=a, k=k, start=start, rows=rows)
    for row in report.failures():
        logger.warning("n=%d k=%d: %s", row.n, row.k, row.detail)
    return report
