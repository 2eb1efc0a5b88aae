import pytest

from hexpath import crosscheck


@pytest.mark.parametrize("suite", crosscheck.SUITES)
def test_suite_passes_at_defaults(suite):
    checks = crosscheck.run(suite)
    assert checks
    assert [c for c in checks if not c.passed] == []


def test_zero_bounds_pass():
    checks = crosscheck.run("all", 0, 0)
    assert checks and all(c.passed for c in checks)


def test_summary_and_json():
    checks = crosscheck.run("height", 8, 6)
    assert crosscheck.summary(checks) == {"pass": len(checks)}
    obj = checks[0].to_json_obj()
    assert set(obj) == {"suite", "name", "pass", "detail"}


def test_unknown_suite():
    with pytest.raises(ValueError):
        crosscheck.run("nope")
