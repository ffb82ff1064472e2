"""
Report types and renderers: human-readable text, JSON, and CSV traces.
"""
import csv
import json
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional, TextIO

from .chaos.chaos_utils import AmplifierTrace
from .chaos.propositions import PropositionReport

SAT = "SAT"
UNSAT = "UNSAT"

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_OK = 0
EXIT_ERROR = 1

TRACE_HEADER = ("m", "M_m")


def decision_exit_code(decision: str) -> int:
    return EXIT_SAT if decision == SAT else EXIT_UNSAT


@dataclass(frozen=True)
class SolveReport:
    file: str
    n: int
    m: int
    r: Optional[int]
    q_squared: str
    first_crossing: Optional[int]
    decision: str
    method: str
    a: float
    max_steps: int
    wall_time_ms: int

    def __post_init__(self):
        if (self.decision == SAT) != (self.first_crossing is not None):
            raise ValueError(
                f"decision {self.decision} inconsistent with first_crossing={self.first_crossing}"
            )

    @property
    def consistent(self) -> bool:
        """The amplifier decision agrees with the root count (r > 0 iff SAT)."""
        if self.r is None:
            return True
        return (self.r > 0) == (self.decision == SAT)

    def to_dict(self) -> Dict[str, Any]:
        result = asdict(self)
        result["consistent"] = self.consistent
        return result


def format_fields(title: str, fields: Dict[str, Any]) -> str:
    lines = [f"=== {title} ==="]
    for key, value in fields.items():
        lines.append(f"{key}: {'-' if value is None else value}")
    return "\n".join(lines)


def format_solve_report(report: SolveReport) -> str:
    text = format_fields("Solve Report", report.to_dict())
    if not report.consistent:
        text += "\nWARNING: amplifier decision disagrees with the root count"
    return text


def format_oracle_result(file: str, n: int, m: int, r: int, decision: str) -> str:
    return format_fields("Oracle Report", {"file": file, "n": n, "m": m, "r": r, "decision": decision})


def _fmt(value: Optional[float], spec: str) -> str:
    return "-" if value is None else format(value, spec)


def format_proposition_report(report: PropositionReport) -> str:
    """Fixed-width table, one row per n."""
    lines = [
        f"=== Crossing-time bounds (a={report.a}, k={report.k}, start={report.start}) ===",
        f"{'n':>4} {'m*':>5} {'lower':>9} {'lower_cited':>11} {'proof':>6} {'upper':>6} {'m*_ext':>7}  status",
    ]
    for row in report.rows:
        lines.append(
            f"{row.n:>4} {_fmt(row.m_star, 'd'):>5} {_fmt(row.lower_bound, '.3f'):>9} "
            f"{_fmt(row.lower_bound_cited, '.3f'):>11} {_fmt(row.proof_bound, 'd'):>6} "
            f"{row.upper_bound:>6} {_fmt(row.m_star_extended, 'd'):>7}  {row.status}"
            + (f"  ({row.detail})" if row.detail else "")
        )
    if not report.applicable:
        lines.append(f"bounds not applicable for a={report.a}: empirical crossings only")
    else:
        failures = len(report.failures())
        lines.append("✓ all rows pass" if failures == 0 else f"✗ {failures} row(s) failed")
    return "\n".join(lines)


def format_trace_value(value: float) -> str:
    """Decimal float with 17 significant digits."""
    return format(value, ".17g")


def write_trace_csv(trace: AmplifierTrace, stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(TRACE_HEADER)
    for m, value in trace.samples:
        writer.writerow((m, format_trace_value(value)))


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2)
