"""Combinatorial tracking of tilting-object summands through mutation.

A tilting state pairs a coloured quiver with one decorated summand per
vertex.  A decorated summand is the Grothendieck class of an indecomposable
in the standard fundamental domain (modules in degrees 0..m-1, shifted
projectives in degree m) together with that degree; the stored class vector
already carries the sign (-1)^degree.

Replacing one summand is possible in two directions:

* forward (``step_lemma_one``) via the colour-0 arrows:
      [new] = [B_i^(0)] - [old],  degree rises by 0 or 1;
* backward (``step_lemma_two``) via the colour-m arrows:
      [new] = [B_i^(m)] - [old],  degree drops by 0 or 1.

Each direction fails when the result would leave the fundamental domain
(degree m+1, a non-projective at degree m, or degree -1) and also when the
arithmetic is inconclusive because the exchange middle term sits outside the
fundamental domain, which shows up as a mixed-sign or non-root difference.
Forward failure is handled by walking backward m times, which provably lands
on the same complement the forward step was after; a backward failure during
that walk is what genuinely identifies corrupt input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from mquiver.dynkin import AlgebraData, algebra_from_dict, algebra_to_dict
from mquiver.quiver import (
    ColouredQuiver,
    canonical_form_matrix,
    colour0_matrix,
    inverse_mutate,
    mutate,
    opposite_matrix,
    quiver_from_dict,
    quiver_to_dict,
    relabel,
    seed_from_acyclic,
)

__all__ = [
    "CorruptStateError",
    "DecoratedSummand",
    "EnumerationResult",
    "TiltingState",
    "class_of_B",
    "enumerate_tilting_states",
    "initial_state",
    "mutate_state",
    "state_key",
    "state_key_str",
    "state_to_dict",
    "step_lemma_one",
    "step_lemma_two",
]


class CorruptStateError(RuntimeError):
    """The class arithmetic contradicts every consistent reading; the input
    was not the data of a genuine tilting object."""


@dataclass(frozen=True)
class DecoratedSummand:
    """(signed class, degree) of an indecomposable in the fundamental domain."""

    class_vec: tuple[int, ...]
    degree: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "class_vec", tuple(int(x) for x in self.class_vec))

    @property
    def root(self) -> tuple[int, ...]:
        """The underlying positive root: (-1)^degree times the class."""
        if self.degree % 2 == 0:
            return self.class_vec
        return tuple(-x for x in self.class_vec)

    @classmethod
    def of_root(cls, root: Sequence[int], degree: int) -> "DecoratedSummand":
        sign = 1 if degree % 2 == 0 else -1
        return cls(tuple(sign * int(x) for x in root), degree)


@dataclass(frozen=True)
class TiltingState:
    algebra: AlgebraData
    m: int
    quiver: ColouredQuiver
    summands: tuple[DecoratedSummand, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "summands", tuple(self.summands))
        n = self.algebra.rank
        if self.quiver.m != self.m:
            raise ValueError("quiver colour count does not match m")
        if self.quiver.n != n or len(self.summands) != n:
            raise ValueError("state needs exactly one summand per vertex")
        seen = set()
        for s in self.summands:
            if not (0 <= s.degree <= self.m):
                raise ValueError(f"degree {s.degree} outside 0..{self.m}")
            if not self.algebra.is_positive_root(s.root):
                raise ValueError(f"{s.root} is not a positive root")
            if s.degree == self.m and s.root not in self.algebra.proj_index:
                raise ValueError(
                    f"degree {self.m} is reserved for projectives, got {s.root}"
                )
            if s in seen:
                raise ValueError(f"repeated summand {s}")
            seen.add(s)


def initial_state(algebra: AlgebraData, m: int) -> TiltingState:
    """The state of the canonical tilting object: all projectives in degree
    0, quiver seeded from the opposite orientation (irreducible maps between
    projectives run against the algebra's arrows)."""
    if m < 1:
        raise ValueError("m must be positive")
    quiver = seed_from_acyclic(opposite_matrix(algebra.gamma()), m)
    summands = tuple(
        DecoratedSummand.of_root(p, 0) for p in algebra.projectives
    )
    return TiltingState(algebra, m, quiver, summands)


def class_of_B(state: TiltingState, i: int, c: int) -> tuple[int, ...]:
    """Class of the colour-c exchange middle term at vertex i:
    sum over k of q[i][k][c] * [summand k]."""
    n = state.algebra.rank
    total = [0] * n
    for k in range(n):
        mult = state.quiver.q[i][k][c]
        if mult:
            for r, x in enumerate(state.summands[k].class_vec):
                total[r] += mult * x
    return tuple(total)


def _signed_degree(
    v: tuple[int, ...], candidates: tuple[int, int]
) -> int | None:
    """Pick whichever candidate degree has the sign of v, or None when v is
    zero or mixed-sign (no consistent choice exists)."""
    nonneg = all(x >= 0 for x in v)
    nonpos = all(x <= 0 for x in v)
    if nonneg == nonpos:
        return None
    want_even = nonneg
    for d in candidates:
        if (d % 2 == 0) == want_even:
            return d
    return None  # unreachable: candidates are consecutive


def step_lemma_one(state: TiltingState, i: int) -> DecoratedSummand | None:
    """Forward complement step at vertex i.

    Returns None whenever the class arithmetic is inconclusive: the middle
    term wrapped around the fundamental domain (mixed-sign or non-root
    difference), the result would sit at degree m+1, or a non-projective
    would land at degree m.  Callers recover by walking backwards.
    """
    old = state.summands[i]
    b = class_of_B(state, i, 0)
    v = tuple(b[r] - old.class_vec[r] for r in range(len(b)))
    d = _signed_degree(v, (old.degree, old.degree + 1))
    if d is None or d == state.m + 1:
        return None
    cand = DecoratedSummand(v, d)
    if not state.algebra.is_positive_root(cand.root):
        return None
    if d == state.m and cand.root not in state.algebra.proj_index:
        return None
    return cand


def step_lemma_two(state: TiltingState, i: int) -> DecoratedSummand | None:
    """Backward complement step at vertex i; mirror of step_lemma_one.

    None signals the same kinds of inconclusive arithmetic, with degree -1
    playing the role of the overflow.
    """
    old = state.summands[i]
    b = class_of_B(state, i, state.m)
    v = tuple(b[r] - old.class_vec[r] for r in range(len(b)))
    d = _signed_degree(v, (old.degree, old.degree - 1))
    if d is None or d == -1:
        return None
    cand = DecoratedSummand(v, d)
    if not state.algebra.is_positive_root(cand.root):
        return None
    if d == state.m and cand.root not in state.algebra.proj_index:
        return None
    return cand


def _with_summand(
    state: TiltingState, i: int, s: DecoratedSummand, quiver: ColouredQuiver
) -> TiltingState:
    summands = list(state.summands)
    summands[i] = s
    return TiltingState(state.algebra, state.m, quiver, tuple(summands))


def mutate_state(state: TiltingState, j: int) -> TiltingState:
    """Exchange summand j for the next complement and mutate the quiver.

    The forward step usually answers directly.  When it reports a wrap, the
    next complement is reached by going the long way round: m backward steps,
    each one re-reading the colour-m arrows of its own intermediate state and
    undoing one quiver mutation.
    """
    if not (0 <= j < state.algebra.rank):
        raise IndexError(f"vertex {j} out of range")
    forward = step_lemma_one(state, j)
    mutated_quiver = mutate(state.quiver, j)
    if forward is not None:
        return _with_summand(state, j, forward, mutated_quiver)
    cur = state
    for _ in range(state.m):
        backward = step_lemma_two(cur, j)
        if backward is None:
            raise CorruptStateError(
                f"summand {j} is determined by neither direction"
            )
        cur = _with_summand(cur, j, backward, inverse_mutate(cur.quiver, j))
    # m backward hops from T^(0) stop at T^(1); the quiver is pinned to the
    # forward mutation of the original (identical on reachable states).
    return _with_summand(cur, j, cur.summands[j], mutated_quiver)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

StateKey = tuple[tuple[tuple[int, ...], int], ...]


def state_key(state: TiltingState) -> StateKey:
    """Order-free dedup key: the sorted (class, degree) pairs."""
    return tuple(sorted((s.class_vec, s.degree) for s in state.summands))


def state_key_str(key: StateKey) -> str:
    return "|".join(f"{','.join(map(str, vec))}@{deg}" for vec, deg in key)


@dataclass
class EnumerationResult:
    states: list[TiltingState]
    adjacency: dict[StateKey, list[StateKey]]
    quiver_classes: set[bytes]
    edge_count: int = field(init=False)

    def __post_init__(self) -> None:
        self.edge_count = sum(len(v) for v in self.adjacency.values()) // 2

    @property
    def count(self) -> int:
        return len(self.states)


def _slot_permutation(
    from_state: TiltingState, to_state: TiltingState
) -> list[int]:
    lookup = {s: idx for idx, s in enumerate(to_state.summands)}
    return [lookup[s] for s in from_state.summands]


def enumerate_tilting_states(
    algebra: AlgebraData, m: int, bound: int = 200_000
) -> EnumerationResult:
    """Breadth-first closure of the initial state under mutation at every
    vertex.  States are deduplicated by their unordered summand sets; every
    duplicate hit is checked for path independence (the revisited state's
    quiver must match the stored one under the slot permutation).  Also
    collects the isomorphism classes of the colour-0 subquivers, i.e. the
    ordinary quivers of all endomorphism algebras in the mutation class."""
    start = initial_state(algebra, m)
    start_key = state_key(start)
    states: dict[StateKey, TiltingState] = {start_key: start}
    order = [start]
    adjacency: dict[StateKey, set[StateKey]] = {start_key: set()}
    quiver_classes = {canonical_form_matrix(colour0_matrix(start.quiver))}
    frontier = [start]
    while frontier:
        nxt_frontier = []
        for state in frontier:
            key = state_key(state)
            for j in range(algebra.rank):
                neighbour = mutate_state(state, j)
                nkey = state_key(neighbour)
                known = states.get(nkey)
                if known is None:
                    if len(states) >= bound:
                        raise ValueError(f"enumeration exceeded bound {bound}")
                    states[nkey] = neighbour
                    order.append(neighbour)
                    adjacency[nkey] = set()
                    quiver_classes.add(
                        canonical_form_matrix(colour0_matrix(neighbour.quiver))
                    )
                    nxt_frontier.append(neighbour)
                else:
                    # path independence: same summand set must carry the
                    # same quiver, up to matching the slots
                    perm = _slot_permutation(neighbour, known)
                    if relabel(neighbour.quiver, perm).q != known.quiver.q:
                        raise CorruptStateError(
                            "same summand set reached with different quivers"
                        )
                adjacency[key].add(nkey)
                adjacency[nkey].add(key)
        frontier = nxt_frontier
    return EnumerationResult(
        states=order,
        adjacency={k: sorted(v) for k, v in adjacency.items()},
        quiver_classes=quiver_classes,
    )


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def state_to_dict(state: TiltingState) -> dict:
    return {
        "algebra": algebra_to_dict(state.algebra),
        "m": state.m,
        "quiver": quiver_to_dict(state.quiver),
        "summands": [
            {"root": list(s.root), "degree": s.degree} for s in state.summands
        ],
    }


def state_from_dict(d: dict) -> TiltingState:
    try:
        algebra = algebra_from_dict(d["algebra"])
        m = int(d["m"])
        quiver = quiver_from_dict(d["quiver"])
        summands = tuple(
            DecoratedSummand.of_root(tuple(s["root"]), int(s["degree"]))
            for s in d["summands"]
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed state JSON: {exc}") from exc
    return TiltingState(algebra, m, quiver, summands)
