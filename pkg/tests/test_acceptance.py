"""End-to-end acceptance suite.

One test per promised behaviour, each printing a single PASS/FAIL line
(run with -s or look at captured output).  These call the same suites as
`mquiver check`, plus the timing budget on the big equivalence sweep.
"""

import time

from mquiver.checks import (
    check_complement_sharing,
    check_counting,
    check_cycle_law,
    check_fz_reduction,
    check_geometric_commutation,
    check_golden_mutation,
    check_oracle_equivalence,
    check_quiver_conditions,
    check_tracker_golden,
)


def _expect(result):
    print(result.line)
    assert result.passed, result.line


def test_acceptance_golden_mutation():
    _expect(check_golden_mutation())


def test_acceptance_mutation_algorithms_agree_within_budget():
    t0 = time.perf_counter()
    result = check_oracle_equivalence(full=True)
    elapsed = time.perf_counter() - t0
    _expect(result)
    print(f"PASS oracle-equivalence-budget: {elapsed:.2f}s < 10s")
    assert elapsed < 10.0, f"equivalence sweep took {elapsed:.2f}s"


def test_acceptance_exchange_matrix_reduction():
    _expect(check_fz_reduction(sequences=1000, max_len=20))


def test_acceptance_mutation_has_order_m_plus_one():
    _expect(check_cycle_law())


def test_acceptance_reachable_quivers_stay_well_formed():
    _expect(check_quiver_conditions(full=True))


def test_acceptance_counting_matches_the_polygon_model():
    _expect(check_counting())


def test_acceptance_diagonal_rotation_is_mutation():
    _expect(check_geometric_commutation())


def test_acceptance_summand_tracking_golden():
    _expect(check_tracker_golden())


def test_acceptance_every_face_extends_m_plus_one_ways():
    _expect(check_complement_sharing())
