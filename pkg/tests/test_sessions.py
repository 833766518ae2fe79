import pytest

from mquiver.dynkin import build_algebra
from mquiver.polygon import complements_of, validate_angulation
from mquiver.quiver import ColouredQuiver, mutate
from mquiver.sessions import SessionStore, companion_angulation
from mquiver.tracker import initial_state

QT = ColouredQuiver.from_arrows(2, 3, [(0, 1, 0), (1, 0, 2), (1, 2, 0), (2, 1, 2)])

ORIENTATIONS_A3 = [
    ((0, 1), (1, 2)),
    ((1, 0), (2, 1)),
    ((1, 0), (1, 2)),
    ((0, 1), (2, 1)),
]


@pytest.mark.parametrize("orientation", ORIENTATIONS_A3)
def test_companion_matches_every_a3_seed(orientation):
    algebra = build_algebra("A", 3, orientation)
    for m in (1, 2):
        P, ang, slots = companion_angulation(algebra, m)
        validate_angulation(P, ang)
        assert sorted(slots) == sorted(ang)


def test_companion_rejects_other_types():
    with pytest.raises(ValueError):
        companion_angulation(build_algebra("D", 4), 1)


def test_algebra_session_tracks_polygon_through_walks():
    store = SessionStore()
    s = store.create_algebra_session("A", 3, 2, ((1, 0), (1, 2)))
    for j in [0, 1, 2, 1, 0, 2, 1]:
        store.mutate(s.id, j)
        validate_angulation(s.polygon, s.angulation)
        assert sorted(s.slots) == sorted(s.angulation)
    assert s.history == [0, 1, 2, 1, 0, 2, 1]


def test_undo_replays_to_the_previous_position():
    store = SessionStore()
    s = store.create_algebra_session("A", 3, 2)
    store.mutate(s.id, 1)
    store.mutate(s.id, 2)
    expected = s.payload()
    store.mutate(s.id, 0)
    assert store.undo(s.id).payload() == expected


def test_undo_on_fresh_session_fails():
    store = SessionStore()
    s = store.create_algebra_session("A", 2, 1)
    with pytest.raises(ValueError):
        store.undo(s.id)


def test_raw_quiver_session_round_trip():
    store = SessionStore()
    s = store.create_quiver_session(QT)
    assert s.state is None and s.angulation is None
    start = s.payload()
    assert start["kind"] == "quiver"
    for _ in range(3):  # order m+1 at a fixed vertex
        store.mutate(s.id, 1)
    assert s.quiver == QT
    store.mutate(s.id, 0)
    assert s.quiver == mutate(QT, 0)
    for _ in range(4):
        store.undo(s.id)
    assert store.get(s.id).payload() == start


def test_vertex_bounds_checked():
    store = SessionStore()
    s = store.create_quiver_session(QT)
    with pytest.raises(ValueError):
        store.mutate(s.id, 3)
    with pytest.raises(ValueError):
        store.mutate(s.id, -1)


def test_complement_cycle_lists_all_exchanges():
    store = SessionStore()
    s = store.create_algebra_session("A", 3, 2, ((1, 0), (1, 2)))
    gamma = s.slots[1]
    out = store.complements(s.id, 1)
    assert out["vertex"] == 1
    assert len(out["cycle"]) == 3
    assert out["cycle"][0] == {
        "root": list(s.state.summands[1].root),
        "degree": s.state.summands[1].degree,
    }
    assert len({(tuple(x["root"]), x["degree"]) for x in out["cycle"]}) == 3
    assert out["diagonals"] == [
        list(d) for d in complements_of(s.polygon, s.angulation, gamma)
    ]
    # asking for the cycle must not move the session
    assert s.history == [] and s.state == initial_state(s.state.algebra, 2)


def test_complements_need_summand_data():
    store = SessionStore()
    s = store.create_quiver_session(QT)
    with pytest.raises(ValueError):
        store.complements(s.id, 0)


def test_type_d_sessions_have_no_polygon():
    store = SessionStore()
    s = store.create_algebra_session("D", 4, 1)
    assert s.angulation is None
    store.mutate(s.id, 3)
    assert s.payload()["angulation"] is None


def test_snapshot_restores_sessions(tmp_path):
    path = tmp_path / "sessions.json"
    store = SessionStore(path)
    a = store.create_algebra_session("A", 3, 2)
    store.mutate(a.id, 1)
    store.mutate(a.id, 0)
    b = store.create_quiver_session(QT)
    store.mutate(b.id, 2)
    reloaded = SessionStore(path)
    assert reloaded.ids() == sorted([a.id, b.id])
    assert reloaded.get(a.id).payload() == a.payload()
    assert reloaded.get(b.id).payload() == b.payload()
