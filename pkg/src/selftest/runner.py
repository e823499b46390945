import time
from concurrent.futures import ProcessPoolExecutor, TimeoutError as FutureTimeout

from src.selftest.suites import SUITES, CheckResult, SuiteReport, run_suite
from src.utils.config import DEFAULT_SEED, SELFTEST_TIME_BUDGET, SELFTEST_WORKERS
from src.utils.errors import InvalidInputError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class SelfTestRunner:
    """
    Runs the invariant suites concurrently and prints a pass/fail table

    Suites are independent and pure, so they are farmed out to a process
    pool; a suite still running when the time budget expires counts as failed.
    """

    def __init__(self, suites=None, seed=DEFAULT_SEED, workers=SELFTEST_WORKERS,
                 budget=SELFTEST_TIME_BUDGET):
        names = list(suites) if suites else list(SUITES)
        unknown = [name for name in names if name not in SUITES]
        if unknown:
            raise InvalidInputError(f"unknown suite(s) {unknown}; choose from {sorted(SUITES)}")
        self.names = list(dict.fromkeys(names))
        self.seed = seed
        self.workers = workers
        self.budget = budget
        self.reports = {}
        self.elapsed = 0.0

    def _collect(self, futures, start):
        for name, future in futures.items():
            remaining = max(0.0, self.budget - (time.perf_counter() - start))
            try:
                self.reports[name] = future.result(timeout=remaining)
            except FutureTimeout:
                future.cancel()
                report = SuiteReport(name)
                report.check("finished within the time budget", False, f"budget {self.budget:.0f}s exceeded")
                self.reports[name] = report
            except Exception as exc:
                report = SuiteReport(name)
                report.check("suite ran to completion", False, f"{type(exc).__name__}: {exc}")
                self.reports[name] = report

    def run(self):
        """
        Run the selected suites

        Returns:
            bool: True iff every check passed within the budget
        """
        logger.info("running %d suite(s) with seed %s", len(self.names), self.seed)
        start = time.perf_counter()
        pool = ProcessPoolExecutor(max_workers=self.workers)
        try:
            futures = {name: pool.submit(run_suite, name, self.seed) for name in self.names}
            self._collect(futures, start)
        finally:
            pool.shutdown(wait=False, cancel_futures=True)
        self.elapsed = time.perf_counter() - start
        if self.elapsed > self.budget:
            logger.warning("self-test took %.1fs, over the %.0fs budget", self.elapsed, self.budget)
        return self.passed

    @property
    def passed(self):
        return all(self.reports[name].passed for name in self.names) and self.elapsed <= self.budget

    def print_table(self):
        print("=" * 60)
        print("BOST-CONNES SELF-TEST")
        print(f"seed {self.seed}, {len(self.names)} suite(s), {self.elapsed:.1f}s")
        print("=" * 60)
        for name in self.names:
            report = self.reports[name]
            status = "PASS" if report.passed else "FAIL"
            print(f"[{status}] {name:<14} {len(report.checks) - len(report.failures)}/{len(report.checks)} checks")
            for failure in report.failures:
                print(f"       - {failure.name}: {failure.detail}")
        print("=" * 60)
        print("ALL SUITES PASSED" if self.passed else "SELF-TEST FAILED")
        print("=" * 60)


def run_selftest(suites=None, seed=DEFAULT_SEED):
    """Run and print; returns True iff all suites pass"""
    runner = SelfTestRunner(suites, seed)
    runner.run()
    runner.print_table()
    return runner.passed


__all__ = ["CheckResult", "SelfTestRunner", "run_selftest"]
