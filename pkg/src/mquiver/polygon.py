"""Angulations of a convex polygon and their coloured quivers.

A polygon with (n+1)*m + 2 vertices, labelled 1..N clockwise, is cut by n
pairwise non-crossing admissible diagonals into n+1 cells of m+2 sides each.
These angulations mirror the mutation combinatorics of the algebraic layer
and serve as an independent oracle for it: each angulation carries a coloured
quiver on its diagonals, and replacing one diagonal by a rotated diameter of
the cell-pair it separates corresponds to quiver mutation.

Diagonals are normalized (a, b) pairs with a < b; an angulation is a
frozenset of them.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from mquiver.quiver import ColouredQuiver


@dataclass(frozen=True)
class Polygon:
    n: int  # number of diagonals in an angulation (= quiver vertices)
    m: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.m < 1:
            raise ValueError("m must be positive")

    @property
    def size(self) -> int:
        """Number of polygon vertices."""
        return (self.n + 1) * self.m + 2


def _norm(d) -> tuple[int, int]:
    a, b = d
    return (a, b) if a < b else (b, a)


def is_admissible(P: Polygon, d) -> bool:
    """True iff the diagonal cuts the polygon into two parts whose side
    counts are both congruent to 2 modulo m."""
    a, b = _norm(d)
    N = P.size
    if not (1 <= a <= N and 1 <= b <= N):
        raise ValueError(f"vertex out of range in {d}")
    arc = b - a
    if arc == 0:
        raise ValueError(f"degenerate diagonal {d}")
    if arc == 1 or arc == N - 1:
        raise ValueError(f"{d} is a boundary edge, not a diagonal")
    # one part has arc+1 sides, the other N-arc+1; N = 2 (mod m) makes the
    # two conditions equivalent
    return (arc + 1) % P.m == 2 % P.m


def admissible_diagonals(P: Polygon) -> list[tuple[int, int]]:
    N = P.size
    out = []
    for a in range(1, N + 1):
        for b in range(a + 2, N + 1):
            if (a, b) == (1, N):
                continue
            if is_admissible(P, (a, b)):
                out.append((a, b))
    return out


def crosses(d1, d2) -> bool:
    """Do two diagonals cross in the interior?  Sharing an endpoint is fine."""
    a, b = _norm(d1)
    c, d = _norm(d2)
    return (a < c < b < d) or (c < a < d < b)


def validate_angulation(P: Polygon, angulation) -> frozenset[tuple[int, int]]:
    """Normalize and check; returns the canonical frozenset form."""
    items = [_norm(d) for d in angulation]
    diags = frozenset(items)
    if len(diags) != P.n or len(diags) != len(items):
        raise ValueError(f"an angulation here has exactly {P.n} distinct diagonals")
    for d in diags:
        if not is_admissible(P, d):
            raise ValueError(f"diagonal {d} is not admissible")
    ds = sorted(diags)
    for i, d1 in enumerate(ds):
        for d2 in ds[i + 1:]:
            if crosses(d1, d2):
                raise ValueError(f"diagonals {d1} and {d2} cross")
    return diags


def cells(P: Polygon, angulation) -> list[tuple[int, ...]]:
    """The faces the diagonals cut the polygon into, each as its clockwise
    vertex tuple (increasing labels)."""
    out = []

    def split(cycle, diags):
        if not diags:
            i = cycle.index(min(cycle))
            out.append(tuple(cycle[i:] + cycle[:i]))
            return
        a, b = diags[0]
        ia, ib = sorted((cycle.index(a), cycle.index(b)))
        first = cycle[ia:ib + 1]
        second = cycle[ib:] + cycle[:ia + 1]
        inside = set(first)
        left, right = [], []
        for d in diags[1:]:
            (left if d[0] in inside and d[1] in inside else right).append(d)
        split(first, left)
        split(second, right)

    split(list(range(1, P.size + 1)), sorted(angulation))
    return sorted(out)


def _sides(cell):
    r = len(cell)
    return [(cell[i], cell[(i + 1) % r]) for i in range(r)]


def quiver_from_angulation(P: Polygon, angulation) -> ColouredQuiver:
    """Coloured quiver on the diagonals (sorted order = vertex order).

    Two diagonals get arrows iff they bound a common cell; the colour of the
    arrow from g to d counts the cell's sides strictly between them, walking
    the cell counterclockwise (against the vertex labelling) from g to d.
    The walk back supplies the partner arrow with colour m - c.  This is the
    orientation under which one-step rotation of a diagonal matches quiver
    mutation at its vertex.
    """
    diags = sorted(validate_angulation(P, angulation))
    index = {d: i for i, d in enumerate(diags)}
    arrows = []
    for cell in cells(P, diags):
        sides = _sides(cell)
        r = len(sides)
        on_cell = [(pos, _norm(s)) for pos, s in enumerate(sides) if _norm(s) in index]
        for pg, g in on_cell:
            for pd, d in on_cell:
                if g != d:
                    arrows.append((index[g], index[d], (pg - pd - 1) % r))
    labels = [f"{a}-{b}" for a, b in diags]
    return ColouredQuiver.from_arrows(P.m, labels, arrows)


def complements_of(P: Polygon, angulation, gamma) -> list[tuple[int, int]]:
    """The m+1 diameters of the 2m+2-gon uncovered by deleting gamma, in
    rotation order: element 0 is gamma itself, element i is gamma with both
    endpoints moved i steps counterclockwise (against the labelling)."""
    gamma = _norm(gamma)
    diags = validate_angulation(P, angulation)
    if gamma not in diags:
        raise ValueError(f"{gamma} is not one of the diagonals")
    touching = [c for c in cells(P, diags) if gamma in map(_norm, _sides(c))]
    merged = sorted(set(touching[0]) | set(touching[1]))
    size = len(merged)  # 2m+2
    a = merged.index(gamma[0])
    half = P.m + 1
    out = []
    for i in range(half):
        out.append(_norm((merged[(a - i) % size], merged[(a - i + half) % size])))
    return out


def mutate_angulation(P: Polygon, angulation, gamma) -> frozenset[tuple[int, int]]:
    """Replace gamma by its one-step rotation."""
    gamma = _norm(gamma)
    delta = complements_of(P, angulation, gamma)[1]
    return frozenset(d for d in map(_norm, angulation) if d != gamma) | {delta}


def enumerate_angulations(P: Polygon, bound: int = 500_000) -> list[frozenset]:
    """All angulations, by backtracking over the admissible diagonals."""
    cands = admissible_diagonals(P)
    out = []
    chosen = []

    def extend(start):
        if len(chosen) == P.n:
            out.append(frozenset(chosen))
            if len(out) > bound:
                raise RuntimeError(f"more than {bound} angulations")
            return
        if len(cands) - start < P.n - len(chosen):
            return
        for idx in range(start, len(cands)):
            d = cands[idx]
            if all(not crosses(d, c) for c in chosen):
                chosen.append(d)
                extend(idx + 1)
                chosen.pop()

    extend(0)
    return out


def count_angulations(n: int, m: int) -> int:
    """Closed form for the number of angulations: one short independent
    check against the backtracking enumerator."""
    k = n + 1
    return math.comb((m + 1) * k, k - 1) // k


def fan_angulation(P: Polygon) -> frozenset[tuple[int, int]]:
    """The fan at vertex 1: diagonals (1, i*m+2) for i = 1..n."""
    return frozenset((1, i * P.m + 2) for i in range(1, P.n + 1))


# ---------------------------------------------------------------------------
# serialization / drawing
# ---------------------------------------------------------------------------


def angulation_to_dict(P: Polygon, angulation) -> dict:
    return {
        "n": P.n,
        "m": P.m,
        "diagonals": [list(d) for d in sorted(map(_norm, angulation))],
    }


def angulation_from_dict(data: dict) -> tuple[Polygon, frozenset]:
    P = Polygon(int(data["n"]), int(data["m"]))
    diags = validate_angulation(P, [tuple(d) for d in data["diagonals"]])
    return P, diags


def angulation_to_json(P: Polygon, angulation) -> str:
    return json.dumps(angulation_to_dict(P, angulation), indent=2) + "\n"


def angulation_from_json(text: str) -> tuple[Polygon, frozenset]:
    return angulation_from_dict(json.loads(text))


def angulation_to_svg(P: Polygon, angulation, size: int = 360) -> str:
    """Standalone SVG drawing: labelled vertices clockwise from the top,
    boundary in grey, diagonals in black."""
    diags = sorted(validate_angulation(P, angulation))
    N = P.size
    cx = cy = size / 2
    radius = size / 2 - 28

    def at(v):
        theta = 2 * math.pi * (v - 1) / N
        return (cx + radius * math.sin(theta), cy - radius * math.cos(theta))

    points = " ".join(f"{x:.1f},{y:.1f}" for x, y in (at(v) for v in range(1, N + 1)))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}">',
        f'<polygon points="{points}" fill="none" stroke="#999" stroke-width="1"/>',
    ]
    for a, b in diags:
        (x1, y1), (x2, y2) = at(a), at(b)
        parts.append(
            f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
            f'stroke="#000" stroke-width="1.5"/>'
        )
    for v in range(1, N + 1):
        x, y = at(v)
        lx = cx + (radius + 14) * math.sin(2 * math.pi * (v - 1) / N)
        ly = cy - (radius + 14) * math.cos(2 * math.pi * (v - 1) / N)
        parts.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="2.5"/>')
        parts.append(
            f'<text x="{lx:.1f}" y="{ly:.1f}" font-size="11" '
            f'text-anchor="middle" dominant-baseline="middle">{v}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
