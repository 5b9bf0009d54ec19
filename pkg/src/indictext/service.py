"""HTTP service: IME sessions, rendering, transliteration, glossing.

Every endpoint is a thin wrapper over one pipeline or session operation;
field names are fixed in API.md.  Module data errors map to 422 with the
error name in the body, malformed requests to 400, unknown sessions to
404.  The session store allows concurrent access with per-session
exclusive mutation; idle sessions expire.
"""

from __future__ import annotations

import threading
import time
import uuid

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import pipeline
from .errors import DataError
from .ime import ImeSession
from .registry import ResourceRegistry
from .textfmt import render_text

DEFAULT_SESSION_TTL = 1800.0  # seconds


class SessionStore:
    def __init__(self, registry: ResourceRegistry, ttl: float):
        self._registry = registry
        self._ttl = ttl
        self._lock = threading.Lock()
        self._sessions: dict[str, tuple[ImeSession, threading.Lock, float]] = {}

    def create(self, table_name: str) -> str:
        session = ImeSession(self._registry.ime_table(table_name))
        session_id = uuid.uuid4().hex
        with self._lock:
            self._sessions[session_id] = (session, threading.Lock(), time.monotonic())
        return session_id

    def acquire(self, session_id: str) -> tuple[ImeSession, threading.Lock] | None:
        now = time.monotonic()
        with self._lock:
            expired = [
                sid for sid, (_, _, seen) in self._sessions.items()
                if now - seen > self._ttl
            ]
            for sid in expired:
                del self._sessions[sid]
            item = self._sessions.get(session_id)
            if item is None:
                return None
            session, lock, _ = item
            self._sessions[session_id] = (session, lock, now)
            return session, lock


class CreateSessionBody(BaseModel):
    table: str = "hindi"


class KeyBody(BaseModel):
    key: str


class SelectBody(BaseModel):
    index: int


class RenderBody(BaseModel):
    text: str
    font: str = "reference16"
    rules: str = "devanagari"


class GlossBody(BaseModel):
    pair: str
    sentence: str


class TranslitBody(BaseModel):
    text: str
    from_script: str
    to_script: str
    fallback: str = "strict"
    table: str | None = None


def _session_state(session_id: str, session: ImeSession) -> dict:
    return {
        "session_id": session_id,
        "buffer": session.buffer,
        "candidates": [
            {
                "output": list(c.output),
                "text": render_text(list(c.output)),
                "key": c.key,
                "frequency": c.frequency,
            }
            for c in session.candidates
        ],
        "committed": list(session.committed),
        "committed_text": render_text(session.committed),
        "committed_reading": session.committed_reading,
    }


def create_app(registry: ResourceRegistry | None = None,
               session_ttl: float = DEFAULT_SESSION_TTL) -> FastAPI:
    registry = registry if registry is not None else ResourceRegistry()
    store = SessionStore(registry, session_ttl)
    app = FastAPI(title="indictext", version="0.1.0")

    @app.exception_handler(DataError)
    async def data_error_handler(request: Request, exc: DataError):
        body = {"error": exc.error_name, "message": str(exc)}
        if exc.offset is not None:
            body["offset"] = exc.offset
        return JSONResponse(status_code=422, content=body)

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error": "MalformedBody", "message": str(exc.errors())},
        )

    def with_session(session_id: str, mutate):
        item = store.acquire(session_id)
        if item is None:
            return JSONResponse(
                status_code=404,
                content={"error": "UnknownSession", "message": session_id},
            )
        session, lock = item
        with lock:
            mutate(session)
            return _session_state(session_id, session)

    @app.post("/ime/session")
    def create_session(body: CreateSessionBody | None = None):
        table = body.table if body is not None else "hindi"
        session_id = store.create(table)
        item = store.acquire(session_id)
        assert item is not None
        return _session_state(session_id, item[0])

    @app.get("/ime/{session_id}")
    def get_session(session_id: str):
        return with_session(session_id, lambda s: None)

    @app.post("/ime/{session_id}/key")
    def post_key(session_id: str, body: KeyBody):
        return with_session(session_id, lambda s: s.feed_key(body.key))

    @app.post("/ime/{session_id}/select")
    def post_select(session_id: str, body: SelectBody):
        return with_session(session_id, lambda s: s.select(body.index))

    @app.post("/ime/{session_id}/backspace")
    def post_backspace(session_id: str):
        return with_session(session_id, lambda s: s.backspace())

    @app.post("/ime/{session_id}/commit")
    def post_commit(session_id: str):
        return with_session(session_id, lambda s: s.commit_raw())

    @app.post("/render")
    def post_render(body: RenderBody):
        pbm = pipeline.render_pbm(
            body.text, registry.rule_set(body.rules), registry.font(body.font)
        )
        return Response(content=pbm, media_type="image/x-portable-bitmap")

    @app.post("/gloss")
    def post_gloss(body: GlossBody):
        return {"pair": body.pair,
                "gloss": pipeline.gloss_text(registry, body.pair, body.sentence)}

    @app.post("/translit")
    def post_translit(body: TranslitBody):
        result = pipeline.translit_text(
            body.text, body.from_script, body.to_script,
            registry.table(body.table), fallback=body.fallback,
        )
        return {"text": result}

    @app.get("/resources")
    def get_resources():
        return {"resources": registry.listing()}

    return app
