import json

from click.testing import CliRunner

from mquiver.cli import main
from mquiver.quiver import ColouredQuiver, quiver_to_json
from mquiver.tracker import state_from_dict

QT = ColouredQuiver.from_arrows(2, 3, [(0, 1, 0), (1, 0, 2), (1, 2, 0), (2, 1, 2)])
QT_PRIME = ColouredQuiver.from_arrows(
    2, 3, [(0, 1, 1), (1, 0, 1), (0, 2, 0), (2, 0, 2), (1, 2, 2), (2, 1, 0)]
)


def run(*args, **kw):
    return CliRunner().invoke(main, list(args), **kw)


def test_empty_sequence_echoes_the_initial_state():
    res = run("mutate", "--rank", "3", "--m", "2", "--seq", "")
    assert res.exit_code == 0, res.output
    state = state_from_dict(json.loads(res.output))
    assert [s["degree"] for s in json.loads(res.output)["summands"]] == [0, 0, 0]
    assert state.m == 2


def test_quiver_output_is_the_canonical_text():
    res = run("mutate", "--rank", "3", "--m", "2", "--what", "quiver")
    state = run("mutate", "--rank", "3", "--m", "2")
    quiver = state_from_dict(json.loads(state.output)).quiver
    assert res.output == quiver_to_json(quiver)


def test_full_cycle_on_a_raw_quiver_echoes_the_input(tmp_path):
    src = tmp_path / "q.json"
    src.write_text(quiver_to_json(QT))
    res = run("mutate", "--quiver", str(src), "--seq", "1,1,1")
    assert res.exit_code == 0, res.output
    assert res.output == quiver_to_json(QT)


def test_single_mutation_golden(tmp_path):
    src = tmp_path / "q.json"
    src.write_text(quiver_to_json(QT))
    res = run("mutate", "--quiver", str(src), "--seq", "1")
    assert res.output == quiver_to_json(QT_PRIME)


def test_quiver_from_stdin():
    res = run("mutate", "--quiver", "-", "--seq", "1,1,1", input=quiver_to_json(QT))
    assert res.exit_code == 0
    assert res.output == quiver_to_json(QT)


def test_states_track_the_orientation_flag():
    res = run("mutate", "--rank", "3", "--m", "2", "--orientation", "1>0,1>2")
    data = json.loads(res.output)
    assert data["algebra"]["orientation"] == [[1, 0], [1, 2]]


def test_angulation_views(tmp_path):
    res = run("mutate", "--rank", "3", "--m", "2", "--what", "angulation")
    data = json.loads(res.output)
    assert data["n"] == 3 and data["m"] == 2 and len(data["diagonals"]) == 3
    svg = run("export", "--rank", "3", "--m", "2", "--seq", "1,0",
              "--what", "angulation", "--format", "svg")
    assert svg.output.startswith("<svg")
    out = tmp_path / "pic.svg"
    file_run = run("export", "--rank", "3", "--m", "2", "--seq", "1,0",
                   "--what", "angulation", "--format", "svg", "--out", str(out))
    assert file_run.exit_code == 0
    assert out.read_text() == svg.output


def test_dot_output_lists_one_edge_per_arrow():
    res = run("mutate", "--rank", "2", "--m", "1", "--what", "quiver",
              "--format", "dot")
    assert res.output.startswith("digraph")
    assert res.output.count("->") == 2


def test_enumerate_reports_counts():
    res = run("enumerate", "--rank", "3", "--m", "2")
    report = json.loads(res.output)
    assert report["states"] == 55
    assert report["quiverClasses"] == 5
    assert report["edges"] == 165
    assert report["wallTimeSeconds"] >= 0


def test_enumerate_adjacency_and_dot():
    res = run("enumerate", "--rank", "2", "--m", "1", "--adjacency")
    report = json.loads(res.output)
    assert len(report["adjacency"]) == 5
    assert all(len(v) == 2 for v in report["adjacency"].values())
    dot = run("enumerate", "--rank", "2", "--m", "1", "--format", "dot")
    assert dot.output.startswith("graph exchange {")
    assert dot.output.count("--") == 5


def test_check_accepts_a_valid_quiver(tmp_path):
    src = tmp_path / "q.json"
    src.write_text(quiver_to_json(QT))
    res = run("check", "--quiver", str(src))
    assert res.exit_code == 0
    assert res.output.startswith("PASS")


def test_check_rejects_a_corrupted_quiver(tmp_path):
    broken = {
        "m": 2,
        "labels": ["0", "1", "2"],
        "arrows": [
            {"from": 0, "to": 1, "colour": 0, "mult": 1},
            {"from": 2, "to": 2, "colour": 0, "mult": 1},
        ],
    }
    src = tmp_path / "bad.json"
    src.write_text(json.dumps(broken))
    res = run("check", "--quiver", str(src))
    assert res.exit_code == 1
    assert "FAIL" in res.output
    assert "no-loops" in res.output or "skew-symmetry" in res.output


def test_errors_are_reported_cleanly():
    assert run("mutate", "--rank", "3", "--seq", "2,x").exit_code != 0
    assert run("mutate", "--seq", "1").exit_code != 0  # no rank, no quiver
    assert run("mutate", "--rank", "3", "--orientation", "junk").exit_code != 0
    res = run("mutate", "--rank", "3", "--m", "2", "--seq", "5")
    assert res.exit_code != 0 and "vertex 5" in res.output
