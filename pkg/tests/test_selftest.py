import pytest

from src.selftest.runner import SelfTestRunner
from src.selftest.suites import SUITES, SuiteReport, run_suite
from src.utils.config import DEFAULT_SEED
from src.utils.errors import InvalidInputError


def test_report_records_first_failure_only():
    report = SuiteReport("demo")
    report.check("ok", True, "ignored")
    report.check_all("cases", [(True, "a"), (False, "b"), (False, "c")])
    assert not report.passed
    assert [(c.name, c.detail) for c in report.failures] == [("cases", "b")]
    assert report.checks[0].detail == ""


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes(name):
    report = run_suite(name, 1)
    assert report.suite == name
    assert report.checks
    assert report.passed, report.failures


def test_witt_suite_passes_on_default_seed():
    report = run_suite("witt", DEFAULT_SEED)
    assert report.passed, report.failures
    assert any("F_n" in c.name for c in report.checks)


def test_suites_are_seeded():
    first = run_suite("serialization", 5)
    second = run_suite("serialization", 5)
    assert [(c.name, c.passed) for c in first.checks] == [(c.name, c.passed) for c in second.checks]


def test_runner_rejects_unknown_suites():
    with pytest.raises(InvalidInputError):
        SelfTestRunner(["qz", "nope"])


def test_runner_defaults_to_every_suite():
    assert SelfTestRunner().names == list(SUITES)


def test_runner_prints_table(capsys):
    runner = SelfTestRunner(["qz", "qz"], seed=3, workers=1)
    assert runner.names == ["qz"]
    assert runner.run()
    runner.print_table()
    out = capsys.readouterr().out
    assert "BOST-CONNES SELF-TEST" in out
    assert "[PASS] qz" in out
    assert out.rstrip().endswith("=" * 60)
