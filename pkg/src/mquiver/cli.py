"""Command line for the explorer: mutate, check, enumerate, serve, export.

Vertices are 0-based everywhere.  `mutate` and `export` share one rendering
path with the HTTP service, so a quiver printed here is byte-identical to
the text served at /sessions/{id}/quiver.
"""

from __future__ import annotations

import json
import os
import sys
import time

import click

from mquiver.checks import run_checks
from mquiver.dynkin import build_algebra
from mquiver.polygon import angulation_to_json, angulation_to_svg
from mquiver.quiver import (
    quiver_from_json,
    quiver_to_dot,
    quiver_to_json,
    validate,
)
from mquiver.sessions import Session, SessionStore
from mquiver.tracker import enumerate_tilting_states, state_key_str, state_to_dict


def _parse_seq(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise click.ClickException(f"--seq must be comma-separated integers, got {text!r}")


def _parse_orientation(text: str | None):
    """Arrows like "1>0,1>2" (vertex 1 points at 0 and at 2)."""
    if text is None:
        return None
    arrows = []
    for part in text.split(","):
        try:
            i, k = part.split(">")
            arrows.append((int(i), int(k)))
        except ValueError:
            raise click.ClickException(
                f"--orientation wants comma-separated arrows like 1>0,1>2, got {text!r}"
            )
    return tuple(arrows)


def _read_quiver(path: str):
    text = sys.stdin.read() if path == "-" else open(path).read()
    return quiver_from_json(text)


def _open_session(type_, rank, m, orientation, quiver) -> tuple[SessionStore, Session]:
    store = SessionStore()
    try:
        if quiver is not None:
            return store, store.create_quiver_session(_read_quiver(quiver))
        if rank is None:
            raise click.ClickException("need --rank (or --quiver FILE)")
        return store, store.create_algebra_session(
            type_, rank, m, _parse_orientation(orientation)
        )
    except (ValueError, OSError) as exc:
        raise click.ClickException(str(exc))


def _walk(store: SessionStore, session: Session, seq: list[int]) -> None:
    for j in seq:
        try:
            store.mutate(session.id, j)
        except ValueError as exc:
            raise click.ClickException(str(exc))


def _render(session: Session, what: str, format_: str) -> str:
    if what == "quiver":
        if format_ == "dot":
            return quiver_to_dot(session.quiver)
        if format_ == "json":
            return quiver_to_json(session.quiver)
        raise click.ClickException("quivers render as json or dot")
    if what == "state":
        if session.state is None:
            raise click.ClickException("raw quiver sessions carry no summand state")
        if format_ != "json":
            raise click.ClickException("states render as json")
        return json.dumps(state_to_dict(session.state), indent=2) + "\n"
    if what == "angulation":
        if session.angulation is None:
            raise click.ClickException("no polygon model for this seed")
        if format_ == "svg":
            return angulation_to_svg(session.polygon, session.angulation)
        if format_ == "json":
            return angulation_to_json(session.polygon, session.angulation)
        raise click.ClickException("angulations render as json or svg")
    raise click.ClickException(f"unknown --what {what!r}")


seed_options = [
    click.option("--type", "type_", default="A", show_default=True,
                 help="Dynkin type of the seed algebra"),
    click.option("--rank", type=int, default=None, help="number of vertices"),
    click.option("--m", type=int, default=1, show_default=True,
                 help="number of colours minus one"),
    click.option("--orientation", default=None,
                 help='arrows of the algebra, e.g. "1>0,1>2" (default: bipartite)'),
]


def with_seed_options(f):
    for option in reversed(seed_options):
        f = option(f)
    return f


@click.group()
def main():
    """Coloured quiver mutation explorer."""


@main.command()
@with_seed_options
@click.option("--quiver", default=None, metavar="FILE",
              help="mutate a raw quiver JSON file instead of an algebra seed ('-' for stdin)")
@click.option("--seq", default="", help="comma-separated 0-based vertices, applied left to right")
@click.option("--what", type=click.Choice(["state", "quiver", "angulation"]),
              default=None, help="what to print (default: state, or quiver for raw seeds)")
@click.option("--format", "format_", type=click.Choice(["json", "dot", "svg"]),
              default="json", show_default=True)
def mutate(type_, rank, m, orientation, quiver, seq, what, format_):
    """Apply a mutation sequence and print the result."""
    store, session = _open_session(type_, rank, m, orientation, quiver)
    _walk(store, session, _parse_seq(seq))
    if what is None:
        what = "quiver" if session.state is None else "state"
    click.echo(_render(session, what, format_), nl=False)


@main.command()
@click.option("--scope", type=click.Choice(["quick", "full"]), default="quick",
              show_default=True, help="full adds the larger enumerations")
@click.option("--quiver", default=None, metavar="FILE",
              help="instead of the suites, validate one quiver JSON file")
def check(scope, quiver):
    """Run the cross-validation suites (or validate one quiver file)."""
    if quiver is not None:
        try:
            Q = _read_quiver(quiver)
        except (ValueError, OSError) as exc:
            raise click.ClickException(str(exc))
        problems = validate(Q)
        for v in problems:
            click.echo(f"FAIL {v.condition} at ({v.i},{v.k}): {v.detail}")
        if problems:
            sys.exit(1)
        click.echo("PASS structure: conditions (I)(II)(III) hold")
        return
    full = scope == "full"
    results = run_checks(full=full, sequences=1000 if full else 200)
    for r in results:
        click.echo(r.line)
    if not all(r.passed for r in results):
        sys.exit(1)


@main.command("enumerate")
@with_seed_options
@click.option("--adjacency", is_flag=True, help="include the exchange graph's adjacency lists")
@click.option("--format", "format_", type=click.Choice(["json", "dot"]),
              default="json", show_default=True)
def enumerate_cmd(type_, rank, m, orientation, adjacency, format_):
    """Enumerate the whole mutation class from the algebra seed."""
    if rank is None:
        raise click.ClickException("need --rank")
    try:
        algebra = build_algebra(type_, rank, _parse_orientation(orientation))
        t0 = time.perf_counter()
        result = enumerate_tilting_states(algebra, m)
        wall = time.perf_counter() - t0
    except ValueError as exc:
        raise click.ClickException(str(exc))
    if format_ == "dot":
        lines = ["graph exchange {"]
        names = {k: idx for idx, k in enumerate(sorted(result.adjacency))}
        for k, idx in names.items():
            lines.append(f'  {idx} [label="{state_key_str(k)}"];')
        for k, neighbours in result.adjacency.items():
            for v in neighbours:
                if names[k] < names[v]:
                    lines.append(f"  {names[k]} -- {names[v]};")
        lines.append("}")
        click.echo("\n".join(lines))
        return
    report = {
        "states": result.count,
        "quiverClasses": len(result.quiver_classes),
        "edges": result.edge_count,
        "wallTimeSeconds": round(wall, 3),
    }
    if adjacency:
        report["adjacency"] = {
            state_key_str(k): [state_key_str(v) for v in neighbours]
            for k, neighbours in sorted(result.adjacency.items())
        }
    click.echo(json.dumps(report, indent=2))


@main.command()
@with_seed_options
@click.option("--quiver", default=None, metavar="FILE",
              help="start from a raw quiver JSON file ('-' for stdin)")
@click.option("--seq", default="", help="comma-separated 0-based vertices")
@click.option("--what", type=click.Choice(["state", "quiver", "angulation"]),
              default="quiver", show_default=True)
@click.option("--format", "format_", type=click.Choice(["json", "dot", "svg"]),
              default="json", show_default=True)
@click.option("--out", default="-", show_default=True, metavar="FILE",
              help="output file ('-' for stdout)")
def export(type_, rank, m, orientation, quiver, seq, what, format_, out):
    """Like mutate, but aimed at files: write the rendered artifact."""
    store, session = _open_session(type_, rank, m, orientation, quiver)
    _walk(store, session, _parse_seq(seq))
    text = _render(session, what, format_)
    if out == "-":
        click.echo(text, nl=False)
    else:
        with open(out, "w") as fh:
            fh.write(text)
        click.echo(f"wrote {out}", err=True)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=None,
              help="default: $MQUIVER_PORT or 8642")
@click.option("--snapshot", default=None, metavar="FILE",
              help="persist sessions to this JSON file and restore from it on start")
def serve(host, port, snapshot):
    """Run the HTTP explorer service."""
    import uvicorn

    from mquiver.service import create_app

    if port is None:
        port = int(os.environ.get("MQUIVER_PORT", "8642"))
    uvicorn.run(create_app(SessionStore(snapshot)), host=host, port=port)


if __name__ == "__main__":
    main()
