"""Root-system and path-algebra data for simply-laced Dynkin trees.

Everything downstream (summand tracking, the cluster complex) only needs
exact integer data about the hereditary algebra: positive roots as dimension
vectors, projective/injective vectors, and the Coxeter matrix giving the
class action of the translate.  All of it is small and computed once here.

Vertex numbering (0-based):
  A_n : chain 0 - 1 - ... - n-1
  D_n : chain 0 - ... - n-2 with the extra vertex n-1 attached to n-3
  E_n : chain 0 - 2 - 3 - 4 - 5 (- 6 - 7) with vertex 1 attached to 3
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

__all__ = [
    "AlgebraData",
    "bipartite_orientation",
    "build_algebra",
    "coxeter_apply",
    "dynkin_edges",
    "linear_orientation",
    "positive_roots",
]

_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
}


def dynkin_edges(type_: str, rank: int) -> tuple[tuple[int, int], ...]:
    """Undirected tree edges of the Dynkin diagram, 0-based."""
    t = type_.upper()
    if t == "A":
        if rank < 1:
            raise ValueError("A_n needs rank >= 1")
        return tuple((i, i + 1) for i in range(rank - 1))
    if t == "D":
        if rank < 4:
            raise ValueError("D_n needs rank >= 4")
        chain = [(i, i + 1) for i in range(rank - 2)]
        return tuple(chain + [(rank - 3, rank - 1)])
    if t == "E":
        if rank not in (6, 7, 8):
            raise ValueError("E_n needs rank in {6, 7, 8}")
        chain = [(0, 2)] + [(i, i + 1) for i in range(2, rank - 1)]
        return tuple(chain + [(1, 3)])
    raise ValueError(f"unknown simply-laced type {type_!r}")


def linear_orientation(rank: int) -> tuple[tuple[int, int], ...]:
    """The chain orientation 0 -> 1 -> ... -> rank-1 (type A only)."""
    return tuple((i, i + 1) for i in range(rank - 1))


def bipartite_orientation(type_: str, rank: int) -> tuple[tuple[int, int], ...]:
    """Alternating orientation: 2-colour the tree with vertex 0 in the plus
    class, then point every arrow at the plus class (plus vertices are
    sinks).  For A_3 this is the orientation 0 <- 1 -> 2."""
    edges = dynkin_edges(type_, rank)
    colour = _two_colouring(rank, edges)
    return tuple((b, a) if colour[a] == 0 else (a, b) for (a, b) in edges)


def _two_colouring(rank: int, edges: Sequence[tuple[int, int]]) -> list[int]:
    adj = [[] for _ in range(rank)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    colour = [-1] * rank
    colour[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if colour[w] == -1:
                colour[w] = 1 - colour[v]
                stack.append(w)
    return colour


def positive_roots(
    rank: int, edges: Sequence[tuple[int, int]]
) -> tuple[tuple[int, ...], ...]:
    """All positive roots of the simply-laced root system on the given tree,
    as dimension vectors, by closing the simple roots under reflections."""
    cartan = [[2 if i == k else 0 for k in range(rank)] for i in range(rank)]
    for a, b in edges:
        cartan[a][b] = -1
        cartan[b][a] = -1
    simples = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    found = set(simples)
    frontier = list(simples)
    while frontier:
        root = frontier.pop()
        for i in range(rank):
            pairing = sum(cartan[i][k] * root[k] for k in range(rank))
            image = list(root)
            image[i] -= pairing
            if all(x >= 0 for x in image) and any(image):
                t = tuple(image)
                if t not in found:
                    found.add(t)
                    frontier.append(t)
    return tuple(sorted(found))


@dataclass(frozen=True)
class AlgebraData:
    """Precomputed data of a hereditary algebra on a Dynkin tree.

    ``orientation`` lists the arrows (i, k) of the quiver; ``projectives``
    and ``injectives`` hold one dimension vector per vertex; ``coxeter`` is
    the matrix sending each projective class to minus the matching injective
    class, which is exactly the translate's action on classes of
    non-projective indecomposables.
    """

    type_: str
    rank: int
    orientation: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int], ...] = field(compare=False)
    pos_roots: tuple[tuple[int, ...], ...] = field(compare=False)
    root_set: frozenset = field(compare=False)
    projectives: tuple[tuple[int, ...], ...] = field(compare=False)
    injectives: tuple[tuple[int, ...], ...] = field(compare=False)
    coxeter: tuple[tuple[int, ...], ...] = field(compare=False)
    proj_index: dict = field(compare=False)
    inj_index: dict = field(compare=False)

    def gamma(self) -> tuple[tuple[int, ...], ...]:
        """Arrow matrix of the orientation."""
        g = [[0] * self.rank for _ in range(self.rank)]
        for i, k in self.orientation:
            g[i][k] = 1
        return tuple(tuple(r) for r in g)

    def is_positive_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self.root_set


def _reachable(rank: int, arrows: Sequence[tuple[int, int]], start: int) -> tuple[int, ...]:
    out = [[] for _ in range(rank)]
    for i, k in arrows:
        out[i].append(k)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in out[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return tuple(1 if i in seen else 0 for i in range(rank))


def _invert_fraction_matrix(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [row[:] + [Fraction(int(i == r)) for i in range(n)] for r, row in enumerate(mat)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def build_algebra(
    type_: str,
    rank: int,
    orientation: Sequence[tuple[int, int]] | None = None,
) -> AlgebraData:
    """Assemble the full algebra data for a Dynkin type, rank and acyclic
    orientation (default: the bipartite one)."""
    t = type_.upper()
    edges = dynkin_edges(t, rank)
    if orientation is None:
        orientation = bipartite_orientation(t, rank)
    arrows = tuple(sorted((int(i), int(k)) for (i, k) in orientation))
    wanted = {frozenset(e) for e in edges}
    got = [frozenset(a) for a in arrows]
    if len(got) != len(wanted) or set(got) != wanted or len(set(got)) != len(got):
        raise ValueError("orientation must direct each Dynkin edge exactly once")

    roots = positive_roots(rank, edges)
    expected = _ROOT_COUNT[t](rank)
    if len(roots) != expected:
        raise AssertionError(
            f"root closure produced {len(roots)} roots, expected {expected}"
        )

    projectives = tuple(_reachable(rank, arrows, i) for i in range(rank))
    reversed_arrows = tuple((k, i) for (i, k) in arrows)
    injectives = tuple(_reachable(rank, reversed_arrows, i) for i in range(rank))

    root_set = frozenset(roots)
    for vec in projectives + injectives:
        if vec not in root_set:
            raise AssertionError(f"vector {vec} is not a positive root")

    # coxeter = -(injective columns) @ (projective columns)^{-1}
    p_cols = [[Fraction(projectives[c][r]) for c in range(rank)] for r in range(rank)]
    p_inv = _invert_fraction_matrix(p_cols)
    coxeter_rows = []
    for r in range(rank):
        row = []
        for c in range(rank):
            val = -sum(
                Fraction(injectives[mid][r]) * p_inv[mid][c] for mid in range(rank)
            )
            if val.denominator != 1:
                raise AssertionError("coxeter matrix came out non-integer")
            row.append(int(val))
        coxeter_rows.append(tuple(row))

    return AlgebraData(
        type_=t,
        rank=rank,
        orientation=arrows,
        edges=edges,
        pos_roots=roots,
        root_set=root_set,
        projectives=projectives,
        injectives=injectives,
        coxeter=tuple(coxeter_rows),
        proj_index={vec: i for i, vec in enumerate(projectives)},
        inj_index={vec: i for i, vec in enumerate(injectives)},
    )


def coxeter_apply(alg: AlgebraData, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(
        sum(alg.coxeter[r][c] * v[c] for c in range(alg.rank)) for r in range(alg.rank)
    )


def algebra_to_dict(alg: AlgebraData) -> dict:
    return {
        "type": alg.type_,
        "rank": alg.rank,
        "orientation": [[i, k] for (i, k) in alg.orientation],
    }


def algebra_from_dict(d: dict) -> AlgebraData:
    try:
        type_ = str(d["type"])
        rank = int(d["rank"])
        orientation = d.get("orientation")
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed algebra JSON: {exc}") from exc
    if orientation is not None:
        orientation = [(int(i), int(k)) for i, k in orientation]
    return build_algebra(type_, rank, orientation)
