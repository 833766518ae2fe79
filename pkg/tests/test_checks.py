from mquiver.checks import (
    RUNNING_EXAMPLE,
    _colour_limits_hold,
    check_counting,
    check_geometric_commutation,
    check_golden_mutation,
    check_tracker_golden,
    run_checks,
)
from mquiver.quiver import ColouredQuiver


def test_quick_suite_is_green():
    results = run_checks(full=False, sequences=25)
    assert [r.name for r in results] == [
        "golden-mutation",
        "oracle-equivalence",
        "fz-reduction",
        "cycle-law",
        "quiver-conditions",
        "counting",
        "geometric-commutation",
        "tracker-golden",
        "complement-sharing",
    ]
    assert all(r.passed for r in results), [r.line for r in results if not r.passed]


def test_result_lines_start_with_verdict():
    r = check_golden_mutation()
    assert r.line.startswith("PASS golden-mutation:")


def test_colour_limit_predicate_accepts_running_example():
    assert _colour_limits_hold(RUNNING_EXAMPLE)


def test_colour_limit_predicate_rejects_bad_composition():
    # 0 -> 1 and 1 -> 2 in colour 0, but 0 -> 2 in colour 2 (only 0 or 1 fit)
    bad = ColouredQuiver.from_arrows(
        2,
        3,
        [(0, 1, 0), (1, 0, 2), (1, 2, 0), (2, 1, 2), (0, 2, 2), (2, 0, 0)],
    )
    assert not _colour_limits_hold(bad)


def test_named_checks_report_detail():
    assert "55" in check_counting().detail
    assert check_geometric_commutation().passed
    assert "degree 1" in check_tracker_golden().detail
