"""Explorer sessions shared by the CLI and the HTTP service.

A session is a seed (an algebra or a raw coloured quiver) plus the history
of vertices mutated so far.  Undo works by popping the history and replaying
from the seed, so the current position is always a pure function of
(seed, history).

Type-A algebra sessions additionally carry a polygon model: an angulation of
the matching polygon together with a slot assignment that keeps diagonal i
aligned with summand i.  The angulation for the seed is found by walking
source reflections from the fan; after that, every mutation rotates the
matching diagonal, and the quivers of the two models are re-compared on
every step.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from mquiver.dynkin import AlgebraData, algebra_from_dict, algebra_to_dict, build_algebra
from mquiver.polygon import (
    Polygon,
    angulation_to_dict,
    angulation_to_svg,
    complements_of,
    fan_angulation,
    mutate_angulation,
    quiver_from_angulation,
)
from mquiver.quiver import ColouredQuiver, mutate, quiver_to_dict, relabel
from mquiver.tracker import (
    DecoratedSummand,
    TiltingState,
    initial_state,
    mutate_state,
    state_to_dict,
)

__all__ = ["Session", "SessionStore", "companion_angulation"]

Diagonal = tuple[int, int]


def _slot_quiver(P: Polygon, angulation, slots: tuple[Diagonal, ...]):
    """The angulation's quiver re-indexed so vertex i is the slot-i diagonal."""
    Q = quiver_from_angulation(P, angulation)
    index = {d: pos for pos, d in enumerate(sorted(angulation))}
    perm = [0] * len(slots)
    for slot, d in enumerate(slots):
        perm[index[d]] = slot
    return relabel(Q, tuple(perm))


def companion_angulation(
    algebra: AlgebraData, m: int
) -> tuple[Polygon, frozenset, tuple[Diagonal, ...]]:
    """Angulation and slot assignment whose quiver matches the initial state
    of the algebra.  Starting from the fan (slot i holding the (n-i)-th fan
    diagonal realizes the descending linear orientation), mutating at any
    colour-0 source just reverses that vertex's arrows, and such reversals
    reach every orientation of the path."""
    if algebra.type_ != "A":
        raise ValueError("the polygon model only exists for type A")
    P = Polygon(algebra.rank, m)
    target = initial_state(algebra, m).quiver.q
    fan = fan_angulation(P)
    order = sorted(fan)
    slots = tuple(order[len(order) - 1 - i] for i in range(len(order)))
    seen = {slots}
    queue = [(fan, slots)]
    while queue:
        ang, cur = queue.pop(0)
        Q = _slot_quiver(P, ang, cur)
        if Q.q == target:
            return P, ang, cur
        for v in range(algebra.rank):
            if not any(Q.q[v][k][0] for k in range(algebra.rank)):
                continue
            if any(Q.q[i][v][0] for i in range(algebra.rank)):
                continue
            nxt = list(cur)
            nxt[v] = complements_of(P, ang, cur[v])[1]
            nxt = tuple(nxt)
            if nxt not in seen:
                seen.add(nxt)
                queue.append((mutate_angulation(P, ang, cur[v]), nxt))
    raise RuntimeError("no angulation matches the seed quiver")


@dataclass
class Session:
    id: str
    m: int
    state: TiltingState | None = None
    raw_quiver: ColouredQuiver | None = None
    seed_quiver: ColouredQuiver | None = None
    polygon: Polygon | None = None
    angulation: frozenset | None = None
    slots: tuple[Diagonal, ...] | None = None
    history: list[int] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def quiver(self) -> ColouredQuiver:
        return self.state.quiver if self.state is not None else self.raw_quiver

    def seed_payload(self) -> dict:
        if self.state is not None:
            return {"algebra": algebra_to_dict(self.state.algebra), "m": self.m}
        return {"quiver": quiver_to_dict(self.seed_quiver)}

    def payload(self) -> dict:
        out = {
            "id": self.id,
            "kind": "algebra" if self.state is not None else "quiver",
            "m": self.m,
            "history": list(self.history),
            "quiver": quiver_to_dict(self.quiver),
            "state": state_to_dict(self.state) if self.state is not None else None,
            "angulation": None,
            "svg": None,
        }
        if self.angulation is not None:
            out["angulation"] = angulation_to_dict(self.polygon, self.angulation)
            out["svg"] = angulation_to_svg(self.polygon, self.angulation)
        return out


def _apply(session: Session, j: int) -> None:
    n = session.quiver.n
    if not 0 <= j < n:
        raise ValueError(f"vertex {j} outside 0..{n - 1}")
    if session.state is None:
        session.raw_quiver = mutate(session.raw_quiver, j)
    else:
        session.state = mutate_state(session.state, j)
        if session.angulation is not None:
            gamma = session.slots[j]
            nxt = list(session.slots)
            nxt[j] = complements_of(session.polygon, session.angulation, gamma)[1]
            session.angulation = mutate_angulation(
                session.polygon, session.angulation, gamma
            )
            session.slots = tuple(nxt)
            mirror = _slot_quiver(session.polygon, session.angulation, session.slots)
            if mirror.q != session.state.quiver.q:
                raise RuntimeError(
                    "polygon model diverged from the quiver at vertex "
                    f"{j}; this is a bug"
                )
    session.history.append(j)


class SessionStore:
    """In-memory sessions with optional JSON snapshots.  Every operation
    that moves a session takes that session's lock, so concurrent requests
    against one session serialize."""

    def __init__(self, snapshot_path: str | Path | None = None):
        self._sessions: dict[str, Session] = {}
        self._registry_lock = threading.Lock()
        self.snapshot_path = Path(snapshot_path) if snapshot_path else None
        if self.snapshot_path and self.snapshot_path.exists():
            self._restore(json.loads(self.snapshot_path.read_text()))

    # -- creation -----------------------------------------------------------

    def create_algebra_session(
        self,
        type_: str,
        rank: int,
        m: int,
        orientation=None,
        session_id: str | None = None,
    ) -> Session:
        algebra = build_algebra(type_, rank, orientation)
        if m < 1:
            raise ValueError("m must be at least 1")
        session = Session(
            id=session_id or uuid.uuid4().hex[:12],
            m=m,
            state=initial_state(algebra, m),
        )
        if algebra.type_ == "A":
            session.polygon, session.angulation, session.slots = companion_angulation(
                algebra, m
            )
        return self._register(session)

    def create_quiver_session(
        self, quiver: ColouredQuiver, session_id: str | None = None
    ) -> Session:
        session = Session(
            id=session_id or uuid.uuid4().hex[:12],
            m=quiver.m,
            raw_quiver=quiver,
            seed_quiver=quiver,
        )
        return self._register(session)

    def _register(self, session: Session) -> Session:
        with self._registry_lock:
            self._sessions[session.id] = session
        self._snapshot()
        return session

    # -- access -------------------------------------------------------------

    def get(self, session_id: str) -> Session:
        with self._registry_lock:
            return self._sessions[session_id]

    def ids(self) -> list[str]:
        with self._registry_lock:
            return sorted(self._sessions)

    # -- moves --------------------------------------------------------------

    def mutate(self, session_id: str, j: int) -> Session:
        session = self.get(session_id)
        with session.lock:
            _apply(session, j)
        self._snapshot()
        return session

    def undo(self, session_id: str) -> Session:
        session = self.get(session_id)
        with session.lock:
            if not session.history:
                raise ValueError("nothing to undo")
            history = session.history[:-1]
            self._reseed(session)
            for j in history:
                _apply(session, j)
            session.history = history
        self._snapshot()
        return session

    def complements(self, session_id: str, j: int) -> dict:
        """The full exchange cycle at slot j: the m+1 decorated summands that
        complete the other n-1, in mutation order, starting with the current
        one, plus the matching diagonals when the polygon model is active."""
        session = self.get(session_id)
        with session.lock:
            if session.state is None:
                raise ValueError("complements need an algebra-backed session")
            n = session.quiver.n
            if not 0 <= j < n:
                raise ValueError(f"vertex {j} outside 0..{n - 1}")
            cycle: list[DecoratedSummand] = []
            cur = session.state
            for _ in range(session.m + 1):
                cycle.append(cur.summands[j])
                cur = mutate_state(cur, j)
            out = {
                "vertex": j,
                "cycle": [
                    {"root": list(s.root), "degree": s.degree} for s in cycle
                ],
                "diagonals": None,
            }
            if session.angulation is not None:
                out["diagonals"] = [
                    list(d)
                    for d in complements_of(
                        session.polygon, session.angulation, session.slots[j]
                    )
                ]
            return out

    # -- replay and persistence ----------------------------------------------

    def _reseed(self, session: Session) -> None:
        if session.state is not None:
            algebra = session.state.algebra
            session.state = initial_state(algebra, session.m)
            if session.polygon is not None:
                _, session.angulation, session.slots = companion_angulation(
                    algebra, session.m
                )
        else:
            session.raw_quiver = session.seed_quiver
        session.history = []

    def _restore(self, snapshot: dict) -> None:
        from mquiver.quiver import quiver_from_dict

        for entry in snapshot.get("sessions", []):
            if "algebra" in entry["seed"]:
                algebra = algebra_from_dict(entry["seed"]["algebra"])
                session = self.create_algebra_session(
                    algebra.type_,
                    algebra.rank,
                    int(entry["seed"]["m"]),
                    algebra.orientation,
                    session_id=entry["id"],
                )
            else:
                session = self.create_quiver_session(
                    quiver_from_dict(entry["seed"]["quiver"]), session_id=entry["id"]
                )
            for j in entry["history"]:
                _apply(session, int(j))

    def _snapshot(self) -> None:
        if not self.snapshot_path:
            return
        with self._registry_lock:
            sessions = list(self._sessions.values())
        body = {
            "sessions": [
                {
                    "id": s.id,
                    "seed": s.seed_payload(),
                    "history": list(s.history),
                }
                for s in sessions
            ]
        }
        self.snapshot_path.write_text(json.dumps(body, indent=2) + "\n")
