"""Verification suites for the whole stack.

Each check cross-validates one layer against an independent computation:
the two mutation algorithms against each other, coloured mutation against
plain exchange-matrix mutation at m=1, the summand tracker against the
polygon model, and the enumerations against closed-form counts.  The CLI
`check` subcommand and the acceptance tests both run these functions, so
there is a single definition of "everything works".
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from mquiver.dynkin import AlgebraData, build_algebra, linear_orientation
from mquiver.polygon import (
    Polygon,
    complements_of,
    count_angulations,
    enumerate_angulations,
    mutate_angulation,
    quiver_from_angulation,
)
from mquiver.quiver import (
    ColouredQuiver,
    colour0_matrix,
    fz_mutate,
    mutate,
    mutate_alt,
    relabel,
    seed_from_acyclic,
    validate,
)
from mquiver.tracker import (
    DecoratedSummand,
    TiltingState,
    enumerate_tilting_states,
    mutate_state,
    state_key,
)

__all__ = [
    "CheckResult",
    "RUNNING_EXAMPLE",
    "RUNNING_EXAMPLE_MUTATED",
    "check_complement_sharing",
    "check_counting",
    "check_cycle_law",
    "check_fz_reduction",
    "check_geometric_commutation",
    "check_golden_mutation",
    "check_oracle_equivalence",
    "check_quiver_conditions",
    "check_tracker_golden",
    "run_checks",
]

# The three-summand, m=2 quiver used as a running example everywhere, and
# its mutation at vertex 1.
RUNNING_EXAMPLE = ColouredQuiver.from_arrows(
    2, 3, [(0, 1, 0), (1, 0, 2), (1, 2, 0), (2, 1, 2)]
)
RUNNING_EXAMPLE_MUTATED = ColouredQuiver.from_arrows(
    2,
    3,
    [(0, 1, 1), (1, 0, 1), (0, 2, 0), (2, 0, 2), (1, 2, 2), (2, 1, 0)],
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    @property
    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def _linear(rank: int) -> AlgebraData:
    return build_algebra("A", rank, linear_orientation(rank))


def _enumeration_specs(full: bool):
    specs = [("A2/m=1", 2, 1), ("A2/m=2", 2, 2), ("A2/m=3", 2, 3),
             ("A3/m=1", 3, 1), ("A3/m=2", 3, 2)]
    if full:
        specs.append(("A4/m=2", 4, 2))
    return [(label, _linear(rank), m) for label, rank, m in specs]


def check_golden_mutation() -> CheckResult:
    got = mutate(RUNNING_EXAMPLE, 1)
    ok = got == RUNNING_EXAMPLE_MUTATED
    alt = mutate_alt(RUNNING_EXAMPLE, 1) == RUNNING_EXAMPLE_MUTATED
    return CheckResult(
        "golden-mutation",
        ok and alt,
        "vertex-1 mutation of the running example reproduced by both algorithms"
        if ok and alt
        else f"mismatch: {sorted(got.arrows())}",
    )


def check_oracle_equivalence(full: bool = True) -> CheckResult:
    checked = 0
    for label, algebra, m in _enumeration_specs(full):
        for state in enumerate_tilting_states(algebra, m).states:
            for j in range(algebra.rank):
                if mutate(state.quiver, j) != mutate_alt(state.quiver, j):
                    return CheckResult(
                        "oracle-equivalence", False, f"{label} vertex {j} disagrees"
                    )
                checked += 1
    return CheckResult(
        "oracle-equivalence", True, f"two mutation algorithms agree on {checked} cases"
    )


def check_fz_reduction(sequences: int = 1000, max_len: int = 20,
                       seed: int = 20250814) -> CheckResult:
    rng = random.Random(seed)
    steps = 0
    for _ in range(sequences):
        n = rng.randint(2, 6)
        order = list(range(n))
        rng.shuffle(order)
        mat = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a + 1, n):
                if rng.random() < 0.5:
                    mat[order[a]][order[b]] = rng.randint(1, 2)
        Q = seed_from_acyclic(mat, 1)
        exchange = colour0_matrix(Q)
        for _ in range(rng.randint(1, max_len)):
            j = rng.randrange(n)
            Q = mutate(Q, j)
            exchange = fz_mutate(exchange, j)
            steps += 1
            if colour0_matrix(Q) != exchange:
                return CheckResult(
                    "fz-reduction", False,
                    f"colour-0 arrows diverged from exchange-matrix mutation at vertex {j}",
                )
    return CheckResult(
        "fz-reduction", True,
        f"{sequences} random m=1 sequences ({steps} mutations) track exchange matrices",
    )


def check_cycle_law() -> CheckResult:
    checked = 0
    for label, algebra, m in _enumeration_specs(full=False):
        for state in enumerate_tilting_states(algebra, m).states:
            for j in range(algebra.rank):
                Q = state.quiver
                s = state
                for _ in range(m + 1):
                    Q = mutate(Q, j)
                    s = mutate_state(s, j)
                if Q != state.quiver or s.summands != state.summands:
                    return CheckResult(
                        "cycle-law", False, f"{label}: order of mutation at {j} is not {m + 1}"
                    )
                checked += 1
    return CheckResult(
        "cycle-law", True, f"mutation has order m+1 at all {checked} state/vertex pairs"
    )


def _colour_limits_hold(Q: ColouredQuiver) -> bool:
    n, m = Q.n, Q.m
    for i in range(n):
        for j in range(n):
            if j == i:
                continue
            for k in range(n):
                if k in (i, j):
                    continue
                if not Q.q[j][k][0]:
                    continue
                for e in range(m + 1):
                    if not Q.q[i][j][e]:
                        continue
                    allowed = {e, (e + 1) % (m + 1)}
                    for c in range(m + 1):
                        if Q.q[i][k][c] and c not in allowed:
                            return False
    return True


def check_quiver_conditions(full: bool = True) -> CheckResult:
    checked = 0
    for label, algebra, m in _enumeration_specs(full):
        for state in enumerate_tilting_states(algebra, m).states:
            if validate(state.quiver):
                return CheckResult(
                    "quiver-conditions", False, f"{label}: structural violation"
                )
            if not _colour_limits_hold(state.quiver):
                return CheckResult(
                    "quiver-conditions", False,
                    f"{label}: colour of a composable pair outside {{e, e+1}}",
                )
            checked += 1
    return CheckResult(
        "quiver-conditions", True,
        f"conditions (I)(II)(III) and the composable-colour restriction hold on {checked} quivers",
    )


def check_counting() -> CheckResult:
    facts = []
    tilting = enumerate_tilting_states(_linear(3), 2).count
    polygons = len(enumerate_angulations(Polygon(3, 2)))
    facts.append(("A3/m=2", tilting, 55))
    facts.append(("decagon", polygons, 55))
    facts.append(("A2/m=1", enumerate_tilting_states(_linear(2), 1).count, 5))
    for m in (1, 2, 3):
        facts.append(
            (f"A1/m={m}", enumerate_tilting_states(_linear(1), m).count, m + 1)
        )
    facts.append(("closed-form decagon", count_angulations(3, 2), 55))
    bad = [f"{label}: {got} != {want}" for label, got, want in facts if got != want]
    if bad:
        return CheckResult("counting", False, "; ".join(bad))
    return CheckResult(
        "counting", True,
        "55 tilting states = 55 quadrangulations; 5 for A2/m=1; m+1 for A1",
    )


def check_geometric_commutation() -> CheckResult:
    P = Polygon(3, 2)
    checked = 0
    for ang in enumerate_angulations(P):
        old = sorted(ang)
        Q = quiver_from_angulation(P, ang)
        for j, gamma in enumerate(old):
            delta = complements_of(P, ang, gamma)[1]
            new_ang = mutate_angulation(P, ang, gamma)
            target = {d: i for i, d in enumerate(sorted(new_ang))}
            perm = tuple(target[delta if d == gamma else d] for d in old)
            if relabel(mutate(Q, j), perm).q != quiver_from_angulation(P, new_ang).q:
                return CheckResult(
                    "geometric-commutation", False,
                    f"rotating {gamma} disagrees with mutation at vertex {j}",
                )
            checked += 1
    return CheckResult(
        "geometric-commutation", True,
        f"diagonal rotation matches quiver mutation in all {checked} decagon cases",
    )


def check_tracker_golden() -> CheckResult:
    algebra = build_algebra("A", 3, ((1, 0), (1, 2)))
    # the running-example state: summands I1, I2 and a shifted projective
    state = TiltingState(
        algebra,
        2,
        RUNNING_EXAMPLE,
        (
            DecoratedSummand((1, 1, 0), 0),
            DecoratedSummand((0, 1, 0), 0),
            DecoratedSummand((0, 0, -1), 1),
        ),
    )
    new = mutate_state(state, 1).summands[1]
    ok = new.class_vec == (0, -1, -1) and new.degree == 1
    return CheckResult(
        "tracker-golden",
        ok,
        "exchange at the middle summand lands on class -(0,1,1) in degree 1"
        if ok
        else f"got {new}",
    )


def check_complement_sharing() -> CheckResult:
    for label, algebra, m in _enumeration_specs(full=False):
        result = enumerate_tilting_states(algebra, m)
        keys = {state_key(s) for s in result.states}
        faces: Counter = Counter()
        for s in result.states:
            pairs = [(x.class_vec, x.degree) for x in s.summands]
            for j in range(algebra.rank):
                faces[frozenset(pairs[:j] + pairs[j + 1:])] += 1
        if set(faces.values()) != {m + 1}:
            return CheckResult(
                "complement-sharing", False,
                f"{label}: an almost-complete object is not in exactly m+1 states",
            )
        for s in result.states:
            for j in range(algebra.rank):
                orbit = set()
                cur = s
                for _ in range(m + 1):
                    orbit.add(state_key(cur))
                    cur = mutate_state(cur, j)
                pairs = [(x.class_vec, x.degree) for x in s.summands]
                face = frozenset(pairs[:j] + pairs[j + 1:])
                sharing = {
                    state_key(t)
                    for t in result.states
                    if face
                    <= {(x.class_vec, x.degree) for x in t.summands}
                }
                if len(orbit) != m + 1 or orbit != sharing or not orbit <= keys:
                    return CheckResult(
                        "complement-sharing", False,
                        f"{label}: mutation orbit at {j} is not the sharing class",
                    )
    return CheckResult(
        "complement-sharing", True,
        "every almost-complete object lies in exactly m+1 states, reached by iterated mutation",
    )


def run_checks(full: bool = True, sequences: int = 1000) -> list[CheckResult]:
    return [
        check_golden_mutation(),
        check_oracle_equivalence(full),
        check_fz_reduction(sequences),
        check_cycle_law(),
        check_quiver_conditions(full),
        check_counting(),
        check_geometric_commutation(),
        check_tracker_golden(),
        check_complement_sharing(),
    ]
