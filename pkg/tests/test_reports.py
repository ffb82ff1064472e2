import io
import logging

import pytest

from QCSAT.tools.chaos.chaos_utils import LogisticParams
from QCSAT.tools.chaos.logistic import iterate_map
from QCSAT.tools.reports import (
    SAT,
    UNSAT,
    SolveReport,
    decision_exit_code,
    format_solve_report,
    format_trace_value,
    write_trace_csv,
)
from QCSAT.tools.settings import (
    ENUMERATION_LIMIT_ENV,
    get_default_settings,
    get_enumeration_limit,
    load_settings,
)


def make_report(**overrides) -> SolveReport:
    fields = dict(
        file="x.cnf", n=3, m=3, r=1, q_squared="1/8", first_crossing=2, decision=SAT,
        method="counting", a=3.71, max_steps=6, wall_time_ms=0,
    )
    fields.update(overrides)
    return SolveReport(**fields)


class TestSettings:
    def test_defaults(self):
        settings = get_default_settings()
        assert settings["logistic"] == {"a": 3.71, "cited_log2_a": 1.8912, "threshold": 0.5}
        assert settings["enumeration_limit"] == 30
        assert settings["statevector_limit"] == 20

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv(ENUMERATION_LIMIT_ENV, "12")
        assert get_enumeration_limit() == 12

    @pytest.mark.parametrize("raw", ["lots", "0", "-3"])
    def test_invalid_override_is_ignored(self, monkeypatch, caplog, raw):
        monkeypatch.setenv(ENUMERATION_LIMIT_ENV, raw)
        with caplog.at_level(logging.WARNING):
            assert load_settings()["enumeration_limit"] == 30
        assert ENUMERATION_LIMIT_ENV in caplog.text

    def test_env_file(self, tmp_path, monkeypatch):
        monkeypatch.setenv(ENUMERATION_LIMIT_ENV, "30")
        env_file = tmp_path / ".env"
        env_file.write_text(f"{ENUMERATION_LIMIT_ENV}=9\n")
        assert load_settings(env_file)["enumeration_limit"] == 9

    def test_missing_env_file_warns(self, tmp_path, caplog):
        with caplog.at_level(logging.WARNING):
            assert load_settings(tmp_path / "absent.env")["enumeration_limit"] == 30
        assert "absent.env" in caplog.text


class TestReports:
    def test_exit_codes(self):
        assert decision_exit_code(SAT) == 10
        assert decision_exit_code(UNSAT) == 20

    def test_decision_must_match_crossing(self):
        with pytest.raises(ValueError):
            make_report(decision=UNSAT)

    def test_consistency(self):
        assert make_report().consistent
        assert not make_report(first_crossing=None, decision=UNSAT).consistent
        assert make_report(r=None, first_crossing=None, decision=UNSAT).consistent

    def test_text_report(self):
        text = format_solve_report(make_report())
        assert text.startswith("=== Solve Report ===")
        assert "q_squared: 1/8" in text
        assert "WARNING" not in text

    def test_trace_values_round_trip(self):
        trace = iterate_map(1 / 1024, LogisticParams(max_steps=30))
        for value in trace.values:
            assert float(format_trace_value(value)) == value

    def test_trace_csv(self):
        stream = io.StringIO()
        write_trace_csv(iterate_map(0.5, LogisticParams(max_steps=1)), stream)
        assert stream.getvalue() == "m,M_m\n0,0.5\n1,0.92749999999999999\n"
