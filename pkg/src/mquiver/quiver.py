"""m-coloured quivers and their mutation rules.

An m-coloured quiver has n vertices and, for every ordered pair of distinct
vertices (i, k) and every colour c in 0..m, a nonnegative arrow multiplicity
q[i][k][c].  Valid quivers satisfy three conditions:

  (I)   no loops:            q[i][i][c] = 0,
  (II)  monochromaticity:    for each ordered pair (i, k) at most one colour
                             carries arrows,
  (III) skew-symmetry:       q[i][k][c] = q[k][i][m - c].

The colour-0 arrows form the underlying ordinary (Gabriel) quiver; the other
colours record where each multiplicity sits in the exchange cycle.  For m = 1
the whole structure is equivalent to an ordinary loop-free, 2-cycle-free
integer quiver (colour 1 holds the reversed arrows), and coloured mutation
reduces to classical integer-quiver mutation (``fz_mutate``).

All values here are immutable; every operation returns a new quiver.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "ColouredQuiver",
    "ContradictionError",
    "Violation",
    "canonical_form",
    "canonical_form_matrix",
    "colour0_matrix",
    "fz_mutate",
    "inverse_mutate",
    "mutate",
    "mutate_alt",
    "opposite_matrix",
    "quiver_from_dict",
    "quiver_from_json",
    "quiver_to_dict",
    "quiver_to_dot",
    "quiver_to_json",
    "relabel",
    "seed_from_acyclic",
    "two_colour_encoding",
    "validate",
]

CANONICAL_BOUND = 8


class ContradictionError(RuntimeError):
    """The procedural mutation met a situation the theory rules out.

    Raised when step 2 of ``mutate_alt`` finds three or more colours on one
    vertex pair; this cannot happen for quivers reachable from a tilting
    seed, so it signals that the input was not such a quiver.
    """


@dataclass(frozen=True)
class Violation:
    """One failed validity condition instance."""

    condition: str  # "no-loops" | "monochromaticity" | "skew-symmetry"
    i: int
    k: int
    detail: str


@dataclass(frozen=True)
class ColouredQuiver:
    """Immutable m-coloured quiver.

    ``q`` is an n x n x (m+1) nested tuple of multiplicities; ``labels`` are
    display names only and never affect the mathematics.
    """

    m: int
    labels: tuple[str, ...]
    q: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("m must be a positive integer")
        labels = tuple(str(x) for x in self.labels)
        n = len(labels)
        if n < 1:
            raise ValueError("quiver needs at least one vertex")
        rows = []
        if len(self.q) != n:
            raise ValueError("multiplicity table does not match vertex count")
        for i, row in enumerate(self.q):
            if len(row) != n:
                raise ValueError("multiplicity table is not square")
            cells = []
            for k, cell in enumerate(row):
                if len(cell) != self.m + 1:
                    raise ValueError(
                        f"expected {self.m + 1} colours at pair ({i},{k})"
                    )
                if any((not isinstance(x, int)) or x < 0 for x in cell):
                    raise ValueError("multiplicities must be nonnegative ints")
                cells.append(tuple(int(x) for x in cell))
            rows.append(tuple(cells))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "q", tuple(rows))

    @property
    def n(self) -> int:
        return len(self.labels)

    @classmethod
    def from_arrows(
        cls,
        m: int,
        labels: Sequence[str] | int,
        arrows: Sequence[tuple[int, int, int]] | Sequence[tuple[int, int, int, int]],
    ) -> "ColouredQuiver":
        """Build a quiver from (from, to, colour[, mult]) tuples.

        ``labels`` may be an integer vertex count, in which case the labels
        default to "0", "1", ...
        """
        if isinstance(labels, int):
            labels = [str(i) for i in range(labels)]
        n = len(labels)
        table = [[[0] * (m + 1) for _ in range(n)] for _ in range(n)]
        for arrow in arrows:
            if len(arrow) == 3:
                i, k, c = arrow  # type: ignore[misc]
                mult = 1
            else:
                i, k, c, mult = arrow  # type: ignore[misc]
            if not (0 <= i < n and 0 <= k < n):
                raise IndexError(f"vertex out of range in arrow {arrow}")
            if not (0 <= c <= m):
                raise ValueError(f"colour out of range in arrow {arrow}")
            table[i][k][c] += mult
        return cls(m, tuple(labels), tuple(tuple(tuple(c) for c in r) for r in table))

    def arrows(self) -> Iterator[tuple[int, int, int, int]]:
        """Yield (from, to, colour, mult) with mult > 0, sorted."""
        for i in range(self.n):
            for k in range(self.n):
                for c in range(self.m + 1):
                    mult = self.q[i][k][c]
                    if mult:
                        yield (i, k, c, mult)


def validate(Q: ColouredQuiver) -> list[Violation]:
    """Check conditions (I), (II), (III); empty list means valid."""
    out: list[Violation] = []
    n, m = Q.n, Q.m
    for i in range(n):
        for c in range(m + 1):
            if Q.q[i][i][c]:
                out.append(Violation("no-loops", i, i, f"loop of colour {c}"))
    for i in range(n):
        for k in range(n):
            if i == k:
                continue
            coloured = [c for c in range(m + 1) if Q.q[i][k][c]]
            if len(coloured) > 1:
                out.append(
                    Violation(
                        "monochromaticity", i, k, f"colours {coloured} all present"
                    )
                )
            for c in range(m + 1):
                if Q.q[i][k][c] != Q.q[k][i][m - c]:
                    out.append(
                        Violation(
                            "skew-symmetry",
                            i,
                            k,
                            f"q[{i}][{k}][{c}]={Q.q[i][k][c]} but "
                            f"q[{k}][{i}][{m - c}]={Q.q[k][i][m - c]}",
                        )
                    )
    return out


def _require_valid(Q: ColouredQuiver) -> None:
    bad = validate(Q)
    if bad:
        raise ValueError(
            "invalid coloured quiver: "
            + "; ".join(f"{v.condition}({v.i},{v.k}): {v.detail}" for v in bad)
        )


def _require_vertex(Q: ColouredQuiver, j: int) -> None:
    if not (0 <= j < Q.n):
        raise IndexError(f"vertex {j} out of range for n={Q.n}")


def mutate(Q: ColouredQuiver, j: int) -> ColouredQuiver:
    """Coloured mutation at vertex j.

    Arrows into j gain one colour, arrows out of j lose one (mod m+1).  For
    i != j != k the new multiplicity is

        max{0, q_ik^c - sum_{t != c} q_ik^t
               + (q_ij^c - q_ij^{c-1}) * q_jk^0
               + q_ij^m * (q_jk^c - q_jk^{c+1})}.
    """
    _require_vertex(Q, j)
    _require_valid(Q)
    n, m = Q.n, Q.m
    mm = m + 1
    q = Q.q
    new = [[[0] * mm for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if i == k:
                continue
            if i == j:
                for c in range(mm):
                    new[i][k][c] = q[j][k][(c + 1) % mm]
            elif k == j:
                for c in range(mm):
                    new[i][k][c] = q[i][j][(c - 1) % mm]
            else:
                total = sum(q[i][k])
                for c in range(mm):
                    val = (
                        q[i][k][c]
                        - (total - q[i][k][c])
                        + (q[i][j][c] - q[i][j][(c - 1) % mm]) * q[j][k][0]
                        + q[i][j][m] * (q[j][k][c] - q[j][k][(c + 1) % mm])
                    )
                    new[i][k][c] = max(0, val)
    return ColouredQuiver(m, Q.labels, tuple(tuple(tuple(c) for c in r) for r in new))


def inverse_mutate(Q: ColouredQuiver, j: int) -> ColouredQuiver:
    """Inverse of ``mutate`` at the same vertex.

    Same structure with the colour shifts reversed and the roles of the
    colour-0 and colour-m arrows at j exchanged; equal to mutate applied m
    times at j on every quiver reachable from a tilting seed.
    """
    _require_vertex(Q, j)
    _require_valid(Q)
    n, m = Q.n, Q.m
    mm = m + 1
    q = Q.q
    new = [[[0] * mm for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if i == k:
                continue
            if i == j:
                for c in range(mm):
                    new[i][k][c] = q[j][k][(c - 1) % mm]
            elif k == j:
                for c in range(mm):
                    new[i][k][c] = q[i][j][(c + 1) % mm]
            else:
                total = sum(q[i][k])
                for c in range(mm):
                    val = (
                        q[i][k][c]
                        - (total - q[i][k][c])
                        + q[i][j][0] * (q[j][k][c] - q[j][k][(c - 1) % mm])
                        + (q[i][j][c] - q[i][j][(c + 1) % mm]) * q[j][k][m]
                    )
                    new[i][k][c] = max(0, val)
    return ColouredQuiver(m, Q.labels, tuple(tuple(tuple(c) for c in r) for r in new))


def mutate_alt(Q: ColouredQuiver, j: int) -> ColouredQuiver:
    """Procedural mutation at j: add paths, cancel, shift colours.

    (1) for every path i -(c)-> j -(0)-> k with i != k add arrows i -> k of
    colour c and k -> i of colour m-c; (2) on every pair carrying two
    colours, cancel equal numbers of both until one colour remains; (3)
    shift colours at j exactly as ``mutate`` does.  Three or more colours on
    a pair in step 2 raise :class:`ContradictionError`.
    """
    _require_vertex(Q, j)
    _require_valid(Q)
    n, m = Q.n, Q.m
    mm = m + 1
    work = [[list(cell) for cell in row] for row in Q.q]

    # step 1: compose arrows through j
    for i in range(n):
        if i == j:
            continue
        for k in range(n):
            if k == j or k == i:
                continue
            paths_c = Q.q[j][k][0]
            if not paths_c:
                continue
            for c in range(mm):
                count = Q.q[i][j][c] * paths_c
                if count:
                    work[i][k][c] += count
                    work[k][i][m - c] += count

    # step 2: cancellation until monochromatic
    for i in range(n):
        for k in range(n):
            if i == k:
                continue
            present = [c for c in range(mm) if work[i][k][c]]
            if len(present) > 2:
                raise ContradictionError(
                    f"pair ({i},{k}) carries colours {present}; "
                    "input was not a reachable tilting quiver"
                )
            if len(present) == 2:
                c1, c2 = present
                drop = min(work[i][k][c1], work[i][k][c2])
                work[i][k][c1] -= drop
                work[i][k][c2] -= drop

    # step 3: colour shift at j
    final = [[list(cell) for cell in row] for row in work]
    for k in range(n):
        if k == j:
            continue
        for c in range(mm):
            final[k][j][c] = work[k][j][(c - 1) % mm]
            final[j][k][c] = work[j][k][(c + 1) % mm]
    return ColouredQuiver(
        m, Q.labels, tuple(tuple(tuple(c) for c in r) for r in final)
    )


# ---------------------------------------------------------------------------
# ordinary integer quivers (used as seeds and as the m=1 reduction target)
# ---------------------------------------------------------------------------


def _check_matrix(b: Sequence[Sequence[int]]) -> int:
    n = len(b)
    for row in b:
        if len(row) != n:
            raise ValueError("arrow matrix must be square")
        if any((not isinstance(x, int)) or x < 0 for x in row):
            raise ValueError("arrow multiplicities must be nonnegative ints")
    return n


def _is_acyclic(b: Sequence[Sequence[int]]) -> bool:
    n = len(b)
    indeg = [0] * n
    for i in range(n):
        for k in range(n):
            if b[i][k]:
                indeg[k] += 1
    queue = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for k in range(n):
            if b[v][k]:
                indeg[k] -= 1
                if indeg[k] == 0:
                    queue.append(k)
    return seen == n


def fz_mutate(
    b: Sequence[Sequence[int]], j: int
) -> tuple[tuple[int, ...], ...]:
    """Classical integer-quiver mutation at j (no loops, no 2-cycles).

    q~_ik = q_ki if j in {i,k}, else max{0, q_ik - q_ki + q_ij*q_jk - q_kj*q_ji}.
    """
    n = _check_matrix(b)
    if not (0 <= j < n):
        raise IndexError(f"vertex {j} out of range")
    for i in range(n):
        if b[i][i]:
            raise ValueError("loops are not allowed")
        for k in range(n):
            if i != k and b[i][k] and b[k][i]:
                raise ValueError(f"2-cycle between {i} and {k}")
    new = [[0] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if i == k:
                continue
            if i == j or k == j:
                new[i][k] = b[k][i]
            else:
                new[i][k] = max(
                    0, b[i][k] - b[k][i] + b[i][j] * b[j][k] - b[k][j] * b[j][i]
                )
    return tuple(tuple(r) for r in new)


def seed_from_acyclic(
    gamma: Sequence[Sequence[int]], m: int, labels: Sequence[str] | None = None
) -> ColouredQuiver:
    """Coloured seed of an acyclic quiver: colour-0 arrows from gamma plus
    their colour-m reverses (the completion forced by skew-symmetry)."""
    n = _check_matrix(gamma)
    for i in range(n):
        if gamma[i][i]:
            raise ValueError("seed quiver must have no loops")
    if not _is_acyclic(gamma):
        raise ValueError("seed quiver must be acyclic")
    if labels is None:
        labels = [str(i) for i in range(n)]
    table = [[[0] * (m + 1) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if gamma[i][k]:
                table[i][k][0] = gamma[i][k]
                table[k][i][m] = gamma[i][k]
    return ColouredQuiver(
        m, tuple(labels), tuple(tuple(tuple(c) for c in r) for r in table)
    )


def two_colour_encoding(b: Sequence[Sequence[int]]) -> ColouredQuiver:
    """Encode a loop-free, 2-cycle-free integer quiver as a 1-coloured quiver
    (colour 0 = arrows, colour 1 = reversed arrows)."""
    n = _check_matrix(b)
    for i in range(n):
        if b[i][i]:
            raise ValueError("loops are not allowed")
        for k in range(n):
            if i != k and b[i][k] and b[k][i]:
                raise ValueError(f"2-cycle between {i} and {k}")
    table = [[[0, 0] for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if b[i][k]:
                table[i][k][0] = b[i][k]
                table[k][i][1] = b[i][k]
    return ColouredQuiver(
        1,
        tuple(str(i) for i in range(n)),
        tuple(tuple(tuple(c) for c in r) for r in table),
    )


def colour0_matrix(Q: ColouredQuiver) -> tuple[tuple[int, ...], ...]:
    """The colour-0 (Gabriel) arrow matrix of a coloured quiver."""
    return tuple(tuple(Q.q[i][k][0] for k in range(Q.n)) for i in range(Q.n))


def opposite_matrix(b: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    n = _check_matrix(b)
    return tuple(tuple(b[k][i] for k in range(n)) for i in range(n))


# ---------------------------------------------------------------------------
# canonical forms & relabelling
# ---------------------------------------------------------------------------


def relabel(
    Q: ColouredQuiver,
    perm: Sequence[int],
    labels: Sequence[str] | None = None,
) -> ColouredQuiver:
    """Rename vertices: old vertex i becomes perm[i]."""
    n = Q.n
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    table = [[[0] * (Q.m + 1) for _ in range(n)] for _ in range(n)]
    new_labels = [""] * n
    for i in range(n):
        new_labels[perm[i]] = Q.labels[i]
        for k in range(n):
            for c in range(Q.m + 1):
                table[perm[i]][perm[k]][c] = Q.q[i][k][c]
    if labels is not None:
        new_labels = list(labels)
    return ColouredQuiver(
        Q.m, tuple(new_labels), tuple(tuple(tuple(c) for c in r) for r in table)
    )


def canonical_form(Q: ColouredQuiver, bound: int = CANONICAL_BOUND) -> bytes:
    """Lexicographically minimal serialization over all vertex relabellings.

    Two valid quivers get equal strings iff they are isomorphic as coloured
    quivers (labels ignored).  Brute force, so n is capped at ``bound``.
    """
    n = Q.n
    if n > bound:
        raise ValueError(f"canonical_form is brute force; n={n} exceeds {bound}")
    arrows = [(i, k, c, mult) for (i, k, c, mult) in Q.arrows()]
    best: list[tuple[int, int, int, int]] | None = None
    for perm in itertools.permutations(range(n)):
        relisted = sorted(
            (perm[i], perm[k], c, mult) for (i, k, c, mult) in arrows
        )
        if best is None or relisted < best:
            best = relisted
    body = ",".join(f"{i}>{k}:{c}x{mult}" for (i, k, c, mult) in best or [])
    return f"m={Q.m};n={n};{body}".encode()


def canonical_form_matrix(
    b: Sequence[Sequence[int]], bound: int = CANONICAL_BOUND
) -> bytes:
    """Canonical form of a plain integer quiver (same brute-force approach)."""
    n = _check_matrix(b)
    if n > bound:
        raise ValueError(f"canonical_form_matrix: n={n} exceeds {bound}")
    arrows = [
        (i, k, b[i][k]) for i in range(n) for k in range(n) if b[i][k]
    ]
    best: list[tuple[int, int, int]] | None = None
    for perm in itertools.permutations(range(n)):
        relisted = sorted((perm[i], perm[k], mult) for (i, k, mult) in arrows)
        if best is None or relisted < best:
            best = relisted
    body = ",".join(f"{i}>{k}x{mult}" for (i, k, mult) in best or [])
    return f"n={n};{body}".encode()


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def quiver_to_dict(Q: ColouredQuiver) -> dict:
    arrows = [
        {"from": i, "to": k, "colour": c, "mult": mult}
        for (i, k, c, mult) in Q.arrows()
    ]
    return {"m": Q.m, "labels": list(Q.labels), "arrows": arrows}


def quiver_to_json(Q: ColouredQuiver) -> str:
    """The canonical JSON text (fixed key order, 2-space indent, trailing
    newline); every interface that prints a quiver prints exactly this."""
    return json.dumps(quiver_to_dict(Q), indent=2) + "\n"


def quiver_from_dict(d: dict) -> ColouredQuiver:
    try:
        m = int(d["m"])
        labels = [str(x) for x in d["labels"]]
        arrows = [
            (int(a["from"]), int(a["to"]), int(a["colour"]), int(a["mult"]))
            for a in d["arrows"]
        ]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed quiver JSON: {exc}") from exc
    return ColouredQuiver.from_arrows(m, labels, arrows)


def quiver_from_json(text: str) -> ColouredQuiver:
    return quiver_from_dict(json.loads(text))


def quiver_to_dot(Q: ColouredQuiver) -> str:
    """DOT digraph with one edge per arrow unit, labelled by colour."""
    lines = ["digraph mquiver {"]
    for i, label in enumerate(Q.labels):
        safe = label.replace('"', '\\"')
        lines.append(f'  {i} [label="{safe}"];')
    for (i, k, c, mult) in Q.arrows():
        for _ in range(mult):
            lines.append(f'  {i} -> {k} [label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
