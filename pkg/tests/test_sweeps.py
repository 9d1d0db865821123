import pytest

from ysym.sweeps import (
    DEFAULT_MAX_N,
    SUITES,
    default_max_n,
    run_suite,
    run_suites,
)


def test_suite_names_have_defaults():
    assert set(SUITES) == set(DEFAULT_MAX_N)


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("bogus", 3)


def test_run_suites_aggregates():
    ok, report = run_suites(["idempotence", "garnir"], max_n=3)
    assert ok
    assert [s["suite"] for s in report["suites"]] == ["idempotence", "garnir"]
    assert all(s["ok"] for s in report["suites"])


def test_env_var_overrides_default(monkeypatch):
    monkeypatch.delenv("YSYM_MAX_N", raising=False)
    assert default_max_n("idempotence") == 7
    monkeypatch.setenv("YSYM_MAX_N", "4")
    assert default_max_n("idempotence") == 4


def test_parallel_matches_serial():
    serial = run_suite("garnir", 4, jobs=1)
    parallel = run_suite("garnir", 4, jobs=2)
    assert serial.ok and parallel.ok
    assert serial.cases == parallel.cases


def test_integrality_stats_present():
    report = run_suite("product_expansion", 4)
    assert report.ok
    assert "integral_fraction" in report.stats
    num, den = report.stats["integral_fraction"].split("/")
    assert int(den) == report.cases
    assert 0 <= int(num) <= int(den)
