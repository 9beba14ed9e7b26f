"""The one-shot invariant suite and its report lines."""

import pytest

from m0n import verify
from m0n.errors import M0nError


class TestCheckResult:
    def test_pass_line(self):
        result = verify.CheckResult("demo", True, "1", "1")
        assert result.line() == "check demo: pass (expected 1, actual 1)"

    def test_fail_line(self):
        result = verify.CheckResult("demo", False, "1", "2")
        assert result.line() == "check demo: FAIL (expected 1, actual 2)"


class TestSuite:
    def test_everything_passes_for_five_markings(self):
        results = verify.run_suite(5)
        assert len(results) >= 25
        names = [r.name for r in results]
        assert len(set(names)) == len(names)
        failures = [r.line() for r in results if not r.passed]
        assert failures == []

    def test_marking_count_bounds(self):
        with pytest.raises(M0nError):
            verify.run_suite(4)
        with pytest.raises(M0nError):
            verify.run_suite(10)
