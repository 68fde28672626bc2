import pytest

from genlegendre.suites import DEFAULT_SAMPLES, SUITES, TOLERANCE, build_cases, run_all, run_suite


def test_suite_tables_cover_every_suite():
    assert set(DEFAULT_SAMPLES) == set(SUITES) == set(TOLERANCE)


@pytest.mark.parametrize("suite", [s for s in SUITES if s not in ("asymptotic",)])
def test_small_runs_pass(suite):
    report = run_suite(suite, seed=5, samples=3)
    assert report.errors == 0
    assert report.passed, [r.to_dict() for r in report.records if not r.passed][:3]


def test_report_schema():
    d = run_suite("symmetry", seed=1, samples=2).to_dict()
    assert {"suite", "seed", "samples", "cases_run", "skipped", "errors", "max_residual", "tolerance", "pass",
            "records"} <= set(d)
    assert d["cases_run"] == len(d["records"])


def test_case_lists_are_reproducible():
    a = [c.inputs for c in build_cases("connection", 9, 4)]
    b = [c.inputs for c in build_cases("connection", 9, 4)]
    c = [c.inputs for c in build_cases("connection", 10, 4)]
    assert a == b and a != c


def test_thread_count_does_not_change_reports():
    one = run_suite("recurrence", seed=2, samples=4, threads=1).to_dict()
    four = run_suite("recurrence", seed=2, samples=4, threads=4).to_dict()
    assert one == four


def test_tolerance_override_keeps_structural_bounds():
    loose = run_suite("addition", seed=1, samples=1, tolerance=1.0)
    monotone = [r for r in loose.records if r.inputs["check"].endswith("monotone")]
    assert monotone and all(r.tolerance == 0.9 for r in monotone)


def test_unknown_suite():
    with pytest.raises(ValueError):
        build_cases("bogus")


def test_run_all_order():
    reports = run_all(seed=0, samples=1)
    assert [r.suite for r in reports] == list(SUITES)
