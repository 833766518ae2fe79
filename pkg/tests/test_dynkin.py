import pytest

from mquiver.dynkin import (
    bipartite_orientation,
    build_algebra,
    coxeter_apply,
    dynkin_edges,
    linear_orientation,
    positive_roots,
)

# Orientation 0 <- 1 -> 2 of the A3 chain, the running example's algebra.
A3_FORK = ((1, 0), (1, 2))


def test_positive_root_counts():
    assert len(positive_roots(1, dynkin_edges("A", 1))) == 1
    assert len(positive_roots(4, dynkin_edges("A", 4))) == 10
    assert len(positive_roots(4, dynkin_edges("D", 4))) == 12
    assert len(positive_roots(5, dynkin_edges("D", 5))) == 20
    assert len(positive_roots(6, dynkin_edges("E", 6))) == 36


def test_a2_roots_listed():
    assert set(positive_roots(2, dynkin_edges("A", 2))) == {
        (1, 0),
        (0, 1),
        (1, 1),
    }


def test_fork_projectives_and_injectives():
    alg = build_algebra("A", 3, A3_FORK)
    assert alg.projectives == ((1, 0, 0), (1, 1, 1), (0, 0, 1))
    assert alg.injectives == ((1, 1, 0), (0, 1, 0), (0, 1, 1))


def test_rank_one():
    alg = build_algebra("A", 1, ())
    assert alg.pos_roots == ((1,),)
    assert alg.projectives == ((1,),) == alg.injectives
    assert alg.coxeter == ((-1,),)


def test_coxeter_sends_projectives_to_minus_injectives():
    for type_, rank in [("A", 3), ("A", 4), ("D", 4), ("E", 6)]:
        alg = build_algebra(type_, rank)
        for i in range(rank):
            image = coxeter_apply(alg, alg.projectives[i])
            assert image == tuple(-x for x in alg.injectives[i])


def test_coxeter_on_nonprojective_gives_positive_root():
    alg = build_algebra("A", 3, A3_FORK)
    for root in alg.pos_roots:
        if root in alg.proj_index:
            continue
        assert alg.is_positive_root(coxeter_apply(alg, root))


def test_bipartite_orientation_makes_plus_class_sinks():
    assert set(bipartite_orientation("A", 3)) == set(A3_FORK)
    arrows = bipartite_orientation("D", 4)
    heads = {k for (_, k) in arrows}
    tails = {i for (i, _) in arrows}
    assert heads.isdisjoint(tails)  # alternating: no vertex both source and target
    assert 0 in heads  # vertex 0 sits in the sink class


def test_linear_orientation_shape():
    assert linear_orientation(4) == ((0, 1), (1, 2), (2, 3))


def test_orientation_validation():
    with pytest.raises(ValueError):
        build_algebra("A", 3, ((0, 1),))  # misses an edge
    with pytest.raises(ValueError):
        build_algebra("A", 3, ((0, 1), (1, 0)))  # not a tree orientation
    with pytest.raises(ValueError):
        build_algebra("D", 3)
    with pytest.raises(ValueError):
        build_algebra("F", 4)


def test_gamma_matrix():
    alg = build_algebra("A", 3, A3_FORK)
    assert alg.gamma() == ((0, 0, 0), (1, 0, 1), (0, 0, 0))
