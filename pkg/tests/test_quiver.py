import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mquiver.quiver import (
    CANONICAL_BOUND,
    ColouredQuiver,
    canonical_form,
    colour0_matrix,
    fz_mutate,
    inverse_mutate,
    mutate,
    mutate_alt,
    quiver_from_json,
    quiver_to_dict,
    quiver_to_dot,
    quiver_to_json,
    relabel,
    seed_from_acyclic,
    two_colour_encoding,
    validate,
)

# The running three-vertex example with m=2 (vertices 0,1,2):
# arrows 0->1 colour 0, 1->0 colour 2, 1->2 colour 0, 2->1 colour 2.
QT = ColouredQuiver.from_arrows(2, 3, [(0, 1, 0), (1, 0, 2), (1, 2, 0), (2, 1, 2)])

# Its mutation at vertex 1, frozen arrow by arrow.
QT_PRIME = ColouredQuiver.from_arrows(
    2,
    3,
    [(0, 1, 1), (1, 0, 1), (0, 2, 0), (2, 0, 2), (1, 2, 2), (2, 1, 0)],
)


def test_validate_golden_quiver_clean():
    assert validate(QT) == []
    assert validate(QT_PRIME) == []


def test_validate_reports_loop():
    Q = ColouredQuiver.from_arrows(2, 2, [(0, 0, 0)])
    conditions = {v.condition for v in validate(Q)}
    assert "no-loops" in conditions


def test_validate_reports_two_colours_on_one_pair():
    Q = ColouredQuiver.from_arrows(2, 2, [(0, 1, 0), (0, 1, 1)])
    conditions = {v.condition for v in validate(Q)}
    assert "monochromaticity" in conditions
    assert "skew-symmetry" in conditions  # unmirrored arrows break (III) too


def test_mutate_golden():
    assert mutate(QT, 1) == QT_PRIME


def test_mutate_alt_golden():
    assert mutate_alt(QT, 1) == QT_PRIME


def test_mutate_vertex_without_arrows_changes_nothing():
    Q = ColouredQuiver.from_arrows(2, 4, [(0, 1, 0), (1, 0, 2)])
    assert mutate(Q, 3).q == Q.q
    assert mutate_alt(Q, 3).q == Q.q


def test_mutate_alt_without_colour0_out_arrows_is_pure_shift():
    # vertex 2 of QT has no colour-0 arrows out, so only the shift acts
    expected = ColouredQuiver.from_arrows(
        2, 3, [(0, 1, 0), (1, 0, 2), (1, 2, 1), (2, 1, 1)]
    )
    assert mutate_alt(QT, 2) == expected
    assert mutate(QT, 2) == expected


def test_mutate_rejects_invalid_quiver():
    broken = ColouredQuiver.from_arrows(2, 2, [(0, 1, 0)])  # no mirror arrow
    with pytest.raises(ValueError):
        mutate(broken, 0)
    with pytest.raises(IndexError):
        mutate(QT, 7)


def test_inverse_composition_on_golden():
    assert inverse_mutate(mutate(QT, 1), 1) == QT
    assert mutate(inverse_mutate(QT, 1), 1) == QT


def test_inverse_golden_read_backwards():
    assert inverse_mutate(QT_PRIME, 1) == QT


def test_inverse_equals_m_fold_mutation():
    for j in range(3):
        thrice = QT
        for _ in range(QT.m):
            thrice = mutate(thrice, j)
        assert inverse_mutate(QT, j) == thrice


def test_cycle_law_on_golden():
    for j in range(3):
        Q = QT
        for _ in range(QT.m + 1):
            Q = mutate(Q, j)
        assert Q == QT


# --- classical integer-quiver mutation ------------------------------------


def test_fz_rank2_reversal():
    assert fz_mutate(((0, 1), (0, 0)), 1) == ((0, 0), (1, 0))


def test_fz_source_mutation_makes_sink():
    b = ((0, 0, 0), (1, 0, 1), (0, 0, 0))  # 0 <- 1 -> 2
    assert fz_mutate(b, 1) == ((0, 1, 0), (0, 0, 0), (0, 1, 0))


def test_fz_path_creates_composite_arrow():
    b = ((0, 1, 0), (0, 0, 1), (0, 0, 0))  # 0 -> 1 -> 2
    assert fz_mutate(b, 1) == ((0, 0, 1), (1, 0, 0), (0, 1, 0))


def test_fz_rejects_two_cycle():
    with pytest.raises(ValueError):
        fz_mutate(((0, 1), (1, 0)), 0)


# --- seeds -----------------------------------------------------------------


def test_seed_from_acyclic_mirror():
    gamma = ((0, 0, 0), (1, 0, 1), (0, 0, 0))
    Q = seed_from_acyclic(gamma, 2)
    assert Q.q[1][0][0] == 1 and Q.q[1][2][0] == 1
    assert Q.q[0][1][2] == 1 and Q.q[2][1][2] == 1
    assert sum(mult for (_, _, _, mult) in Q.arrows()) == 4
    assert validate(Q) == []


def test_seed_m1_matches_two_colour_encoding():
    gamma = ((0, 2, 0), (0, 0, 1), (0, 0, 0))
    assert seed_from_acyclic(gamma, 1).q == two_colour_encoding(gamma).q


def test_seed_rejects_cycle_and_loop():
    with pytest.raises(ValueError):
        seed_from_acyclic(((0, 1), (1, 0)), 2)
    with pytest.raises(ValueError):
        seed_from_acyclic(((1,),), 2)


# --- canonical forms -------------------------------------------------------


def test_canonical_form_permutation_invariant():
    shuffled = relabel(QT, [2, 0, 1])
    assert canonical_form(shuffled) == canonical_form(QT)


def test_canonical_form_distinguishes_golden_pair():
    assert canonical_form(QT) != canonical_form(QT_PRIME)


def test_canonical_form_single_vertex():
    Q = ColouredQuiver.from_arrows(2, 1, [])
    assert canonical_form(Q) == b"m=2;n=1;"


def test_canonical_form_bound():
    Q = ColouredQuiver.from_arrows(1, CANONICAL_BOUND + 1, [])
    with pytest.raises(ValueError):
        canonical_form(Q)


# --- serialization ---------------------------------------------------------


def test_json_round_trip_and_exact_text():
    text = quiver_to_json(QT)
    assert quiver_from_json(text) == QT
    assert text.endswith("\n")
    parsed = json.loads(text)
    assert list(parsed.keys()) == ["m", "labels", "arrows"]
    assert parsed["arrows"][0] == {"from": 0, "to": 1, "colour": 0, "mult": 1}


def test_arrows_sorted_in_dict():
    arrows = quiver_to_dict(QT_PRIME)["arrows"]
    keys = [(a["from"], a["to"], a["colour"]) for a in arrows]
    assert keys == sorted(keys)


def test_dot_has_one_edge_per_arrow_unit():
    Q = ColouredQuiver.from_arrows(1, 2, [(0, 1, 0, 2), (1, 0, 1, 2)])
    dot = quiver_to_dot(Q)
    assert dot.count('0 -> 1 [label="0"]') == 2
    assert dot.count('1 -> 0 [label="1"]') == 2
    assert dot.startswith("digraph")


# --- randomized invariants -------------------------------------------------


@st.composite
def acyclic_matrix(draw, max_n=5, max_mult=2):
    n = draw(st.integers(min_value=2, max_value=max_n))
    order = draw(st.permutations(range(n)))
    rows = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            rows[order[a]][order[b]] = draw(
                st.integers(min_value=0, max_value=max_mult)
            )
    return tuple(tuple(r) for r in rows)


@st.composite
def reachable_quiver(draw):
    gamma = draw(acyclic_matrix())
    m = draw(st.integers(min_value=1, max_value=3))
    Q = seed_from_acyclic(gamma, m)
    seq = draw(st.lists(st.integers(min_value=0, max_value=Q.n - 1), max_size=8))
    for j in seq:
        Q = mutate(Q, j)
    return Q


@settings(max_examples=40, deadline=None)
@given(reachable_quiver(), st.data())
def test_reachable_quivers_stay_valid_and_consistent(Q, data):
    assert validate(Q) == []
    j = data.draw(st.integers(min_value=0, max_value=Q.n - 1))
    step = mutate(Q, j)
    assert validate(step) == []
    assert mutate_alt(Q, j) == step
    assert inverse_mutate(step, j) == Q
    cycled = Q
    for _ in range(Q.m + 1):
        cycled = mutate(cycled, j)
    assert cycled == Q


@settings(max_examples=40, deadline=None)
@given(acyclic_matrix(), st.data())
def test_m1_mutation_tracks_classical_mutation(gamma, data):
    b = gamma
    Q = two_colour_encoding(b)
    seq = data.draw(
        st.lists(st.integers(min_value=0, max_value=len(gamma) - 1), max_size=8)
    )
    for j in seq:
        b = fz_mutate(b, j)
        Q = mutate(Q, j)
        assert colour0_matrix(Q) == b
        assert two_colour_encoding(b).q == Q.q
