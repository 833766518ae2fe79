"""Coloured almost positive roots and m-cluster mutation.

The ground set pairs every positive root with a colour 1..m and adds one
negative simple root per vertex.  It is in bijection with the fundamental
domain used by the summand tracker:

    beta with colour c   <->  indecomposable of class beta at degree c-1,
    minus alpha_i        <->  the projective P_i at degree m.

Cluster mutation is performed through that bijection (state mutation is
normative).  The direct exchange rule on coloured roots is also evaluated
for positive pivots as a cross-check; its sign conventions are ambiguous on
degree-crossing exchanges, so disagreements are logged, not fatal, unless
``strict_cross_check`` asks otherwise.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from mquiver.dynkin import AlgebraData, coxeter_apply
from mquiver.quiver import ColouredQuiver, mutate
from mquiver.tracker import (
    CorruptStateError,
    DecoratedSummand,
    TiltingState,
    enumerate_tilting_states,
    initial_state,
    mutate_state,
)

__all__ = [
    "ColouredRoot",
    "CrossCheckMismatch",
    "OrderedMCluster",
    "all_coloured_roots",
    "cluster_from_list",
    "cluster_to_list",
    "enumerate_clusters",
    "from_state",
    "initial_cluster",
    "mu_cluster",
    "quiver_of_cluster",
    "r_map",
    "to_state",
]

log = logging.getLogger("mquiver.clusters")


class CrossCheckMismatch(RuntimeError):
    pass


@dataclass(frozen=True)
class ColouredRoot:
    """A positive root with a colour in 1..m, or a negative simple root."""

    root: tuple[int, ...] | None
    colour: int | None
    neg_simple: int | None

    @classmethod
    def positive(cls, root, colour: int) -> "ColouredRoot":
        return cls(tuple(int(x) for x in root), int(colour), None)

    @classmethod
    def negative_simple(cls, i: int) -> "ColouredRoot":
        return cls(None, None, int(i))

    @property
    def is_negative(self) -> bool:
        return self.neg_simple is not None

    def __post_init__(self) -> None:
        if (self.neg_simple is None) == (self.root is None):
            raise ValueError("exactly one of root / neg_simple must be set")


def _check_root(alg: AlgebraData, m: int, x: ColouredRoot) -> None:
    if x.is_negative:
        if not (0 <= x.neg_simple < alg.rank):
            raise ValueError(f"negative simple index {x.neg_simple} out of range")
        return
    if not (1 <= x.colour <= m):
        raise ValueError(f"colour {x.colour} outside 1..{m}")
    if not alg.is_positive_root(x.root):
        raise ValueError(f"{x.root} is not a positive root")


@dataclass(frozen=True)
class OrderedMCluster:
    algebra: AlgebraData
    m: int
    roots: tuple[ColouredRoot, ...]
    quiver: ColouredQuiver

    def __post_init__(self) -> None:
        object.__setattr__(self, "roots", tuple(self.roots))
        if len(self.roots) != self.algebra.rank:
            raise ValueError("an ordered m-cluster has one entry per vertex")
        for x in self.roots:
            _check_root(self.algebra, self.m, x)


def _root_to_summand(alg: AlgebraData, m: int, x: ColouredRoot) -> DecoratedSummand:
    if x.is_negative:
        return DecoratedSummand.of_root(alg.projectives[x.neg_simple], m)
    return DecoratedSummand.of_root(x.root, x.colour - 1)


def _summand_to_root(alg: AlgebraData, m: int, s: DecoratedSummand) -> ColouredRoot:
    if s.degree == m:
        return ColouredRoot.negative_simple(alg.proj_index[s.root])
    return ColouredRoot.positive(s.root, s.degree + 1)


def to_state(C: OrderedMCluster) -> TiltingState:
    """Translate a cluster to its tilting state (raises if the entries do
    not form valid state data)."""
    summands = tuple(_root_to_summand(C.algebra, C.m, x) for x in C.roots)
    return TiltingState(C.algebra, C.m, C.quiver, summands)


def from_state(s: TiltingState) -> OrderedMCluster:
    roots = tuple(_summand_to_root(s.algebra, s.m, x) for x in s.summands)
    return OrderedMCluster(s.algebra, s.m, roots, s.quiver)


def initial_cluster(algebra: AlgebraData, m: int) -> OrderedMCluster:
    """The all-negative cluster: every entry -alpha_i, over the quiver of
    the seed (shifting a whole tilting object does not change its quiver)."""
    base = initial_state(algebra, m)
    summands = tuple(
        DecoratedSummand.of_root(p, m) for p in algebra.projectives
    )
    return from_state(TiltingState(algebra, m, base.quiver, summands))


def quiver_of_cluster(C: OrderedMCluster) -> ColouredQuiver:
    return C.quiver


def r_map(algebra: AlgebraData, m: int, x: ColouredRoot) -> ColouredRoot:
    """The shift bijection on coloured almost positive roots: bump the
    colour; from the top colour go to the negative simple (projectives) or
    apply the translate and restart at colour 1; negative simples come back
    in as injectives at colour 1."""
    _check_root(algebra, m, x)
    if x.is_negative:
        return ColouredRoot.positive(algebra.injectives[x.neg_simple], 1)
    if x.colour < m:
        return ColouredRoot.positive(x.root, x.colour + 1)
    if x.root in algebra.proj_index:
        return ColouredRoot.negative_simple(algebra.proj_index[x.root])
    image = coxeter_apply(algebra, x.root)
    if not algebra.is_positive_root(image):
        raise CorruptStateError(f"translate of {x.root} is not a positive root")
    return ColouredRoot.positive(image, 1)


def all_coloured_roots(algebra: AlgebraData, m: int) -> list[ColouredRoot]:
    """The whole ground set: m * (number of positive roots) + rank elements."""
    out = [
        ColouredRoot.positive(beta, c)
        for beta in algebra.pos_roots
        for c in range(1, m + 1)
    ]
    out.extend(ColouredRoot.negative_simple(i) for i in range(algebra.rank))
    return out


def _direct_rule(C: OrderedMCluster, j: int) -> ColouredRoot | None:
    """The stated exchange rule for a positive pivot, natural unsigned
    reading: beta = -C_j + sum of colour-0 arrow multiplicities times C_k,
    with negative simples entering as -e_i.  Returns None when the result is
    mixed-sign, which the rule does not cover."""
    alg, m = C.algebra, C.m
    n = alg.rank
    vec = [0] * n

    def add(target, scalar, x: ColouredRoot):
        if x.is_negative:
            target[x.neg_simple] -= scalar
        else:
            for r, val in enumerate(x.root):
                target[r] += scalar * val

    add(vec, -1, C.roots[j])
    for k in range(n):
        if k == j:
            continue
        mult = C.quiver.q[j][k][0]
        if mult:
            add(vec, mult, C.roots[k])
    if any(vec) and all(x >= 0 for x in vec):
        return ColouredRoot.positive(tuple(vec), C.roots[j].colour)
    if any(vec) and all(x <= 0 for x in vec):
        flipped = tuple(-x for x in vec)
        if not alg.is_positive_root(flipped):
            return None
        return r_map(alg, m, ColouredRoot.positive(flipped, C.roots[j].colour))
    return None


def mu_cluster(
    C: OrderedMCluster, j: int, *, strict_cross_check: bool = False
) -> OrderedMCluster:
    """Mutate the ordered cluster at slot j via the state translation; for
    positive pivots also evaluates the direct rule and reports mismatches."""
    result = from_state(mutate_state(to_state(C), j))
    if not C.roots[j].is_negative:
        direct = _direct_rule(C, j)
        if direct != result.roots[j]:
            message = (
                f"direct exchange rule disagrees at slot {j}: "
                f"{direct} vs {result.roots[j]}"
            )
            if strict_cross_check:
                raise CrossCheckMismatch(message)
            log.info(message)
    return result


def enumerate_clusters(algebra: AlgebraData, m: int, bound: int = 200_000):
    """All m-clusters reachable from the initial one, as ordered clusters in
    enumeration order."""
    result = enumerate_tilting_states(algebra, m, bound)
    return [from_state(s) for s in result.states]


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def cluster_to_list(C: OrderedMCluster) -> list[dict]:
    out = []
    for x in C.roots:
        if x.is_negative:
            out.append({"negSimple": x.neg_simple})
        else:
            out.append({"root": list(x.root), "colour": x.colour})
    return out


def cluster_from_list(
    algebra: AlgebraData, m: int, items: list[dict], quiver: ColouredQuiver
) -> OrderedMCluster:
    roots = []
    for item in items:
        if "negSimple" in item:
            roots.append(ColouredRoot.negative_simple(int(item["negSimple"])))
        else:
            roots.append(
                ColouredRoot.positive(tuple(item["root"]), int(item["colour"]))
            )
    return OrderedMCluster(algebra, m, tuple(roots), quiver)
