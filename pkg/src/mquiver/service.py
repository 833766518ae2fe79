"""HTTP face of the explorer.

Thin wrapper over SessionStore: every response that shows a quiver embeds
the same dict as the CLI's JSON, and GET /sessions/{id}/quiver returns the
canonical text itself (so a browser client can byte-compare against
`mquiver mutate --what quiver`).  Enumerations run on a small worker pool
and are polled through /jobs/{id}.
"""

from __future__ import annotations

import threading
import time
import uuid
from concurrent.futures import ThreadPoolExecutor

from fastapi import Body, FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse

from mquiver.dynkin import build_algebra
from mquiver.quiver import quiver_from_dict, quiver_to_json
from mquiver.sessions import SessionStore
from mquiver.tracker import CorruptStateError, enumerate_tilting_states

__all__ = ["create_app"]


def _parse_orientation(raw):
    if raw is None:
        return None
    try:
        return tuple((int(i), int(k)) for i, k in raw)
    except (TypeError, ValueError):
        raise HTTPException(422, "orientation must be a list of [from, to] pairs")


def create_app(store: SessionStore | None = None, workers: int = 2) -> FastAPI:
    app = FastAPI(title="mquiver explorer")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions = store if store is not None else SessionStore()
    pool = ThreadPoolExecutor(max_workers=workers)
    jobs: dict[str, dict] = {}
    jobs_lock = threading.Lock()

    def _session(sid: str):
        try:
            return sessions.get(sid)
        except KeyError:
            raise HTTPException(404, f"no session {sid}")

    @app.get("/health")
    def health():
        return {"ok": True}

    @app.post("/sessions", status_code=201)
    def create_session(payload: dict = Body(...)):
        try:
            if "quiver" in payload:
                session = sessions.create_quiver_session(
                    quiver_from_dict(payload["quiver"])
                )
            else:
                session = sessions.create_algebra_session(
                    str(payload.get("type", "A")),
                    int(payload["rank"]),
                    int(payload.get("m", 1)),
                    _parse_orientation(payload.get("orientation")),
                )
        except KeyError as exc:
            raise HTTPException(422, f"missing field {exc}")
        except (TypeError, ValueError) as exc:
            raise HTTPException(422, str(exc))
        return session.payload()

    @app.get("/sessions/{sid}")
    def show_session(sid: str):
        return _session(sid).payload()

    @app.get("/sessions/{sid}/quiver", response_class=PlainTextResponse)
    def show_quiver(sid: str):
        return quiver_to_json(_session(sid).quiver)

    @app.post("/sessions/{sid}/mutate")
    def mutate_session(sid: str, payload: dict = Body(...)):
        _session(sid)
        try:
            vertex = int(payload["vertex"])
        except (KeyError, TypeError, ValueError):
            raise HTTPException(422, "body must carry an integer 'vertex'")
        try:
            return sessions.mutate(sid, vertex).payload()
        except ValueError as exc:
            raise HTTPException(400, str(exc))
        except CorruptStateError as exc:
            raise HTTPException(409, str(exc))

    @app.post("/sessions/{sid}/undo")
    def undo_session(sid: str):
        _session(sid)
        try:
            return sessions.undo(sid).payload()
        except ValueError as exc:
            raise HTTPException(400, str(exc))

    @app.get("/sessions/{sid}/complements")
    def complements(sid: str, vertex: int = Query(...)):
        _session(sid)
        try:
            return sessions.complements(sid, vertex)
        except ValueError as exc:
            raise HTTPException(400, str(exc))

    def _run_enumeration(job_id: str, type_: str, rank: int, m: int, orientation):
        try:
            algebra = build_algebra(type_, rank, orientation)
            t0 = time.perf_counter()
            result = enumerate_tilting_states(algebra, m)
            report = {
                "states": result.count,
                "quiverClasses": len(result.quiver_classes),
                "edges": result.edge_count,
                "wallTimeSeconds": round(time.perf_counter() - t0, 3),
            }
            with jobs_lock:
                jobs[job_id] = {"status": "done", "report": report}
        except Exception as exc:  # surfaced through polling, not the log
            with jobs_lock:
                jobs[job_id] = {"status": "error", "error": str(exc)}

    @app.post("/enumerate", status_code=202)
    def start_enumeration(payload: dict = Body(...)):
        try:
            type_ = str(payload.get("type", "A"))
            rank = int(payload["rank"])
            m = int(payload.get("m", 1))
        except (KeyError, TypeError, ValueError):
            raise HTTPException(422, "need integer 'rank' (and optional 'type', 'm')")
        orientation = _parse_orientation(payload.get("orientation"))
        job_id = uuid.uuid4().hex[:12]
        with jobs_lock:
            jobs[job_id] = {"status": "running"}
        pool.submit(_run_enumeration, job_id, type_, rank, m, orientation)
        return {"job": job_id}

    @app.get("/jobs/{job_id}")
    def show_job(job_id: str):
        with jobs_lock:
            job = jobs.get(job_id)
        if job is None:
            raise HTTPException(404, f"no job {job_id}")
        return job

    return app
