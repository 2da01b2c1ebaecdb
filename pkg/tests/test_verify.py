"""Suite driver behavior: section selection, degree capping, formatting."""

import pytest

from diagmon import verify
from diagmon.errors import ValidationError


def test_unknown_suite_rejected():
    with pytest.raises(ValidationError):
        verify.run_suite("7")


def test_degree_cap_produces_vacuous_pass():
    results = verify.run_suite("all", nmax=0)
    assert results and all(r.passed for r in results)


def test_capped_suite_skips_larger_degrees():
    results = verify.run_suite("3", nmax=2)
    names = " ".join(r.name for r in results)
    assert "degree-2" in names and "3 points" not in names


def test_result_lines_name_status_first():
    line = verify.CheckResult("something", True, "extra").line()
    assert line == "[PASS] something  (extra)"
    assert verify.CheckResult("bad", False).line() == "[FAIL] bad"


def test_counting_helpers():
    assert [verify.bell(n) for n in range(6)] == [1, 1, 2, 5, 15, 52]
    assert verify.stirling2(4, 2) == 7
    assert verify.double_factorial_odd(3) == 15
    assert verify.expected_size("P", 3) == 203
    with pytest.raises(ValidationError):
        verify.expected_size("RP", 2)
