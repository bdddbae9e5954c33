"""HTTP API over the store: stories, views, questions, exercise sessions."""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from ..errors import (
    AlreadySubmitted,
    NewsAssemblyError,
    NotFound,
    SchemaError,
    SessionClosed,
    ViewsIncomplete,
)
from .sessions import export_responses, start_exercise, submit_exercise
from .store import Store

_STATUS = {
    NotFound: 404,
    ViewsIncomplete: 409,
    AlreadySubmitted: 409,
    SessionClosed: 409,
    SchemaError: 400,
}


def _http(error: NewsAssemblyError) -> HTTPException:
    status = _STATUS.get(type(error), 500)
    return HTTPException(status_code=status, detail=f"{type(error).__name__}: {error}")


class StartSessionBody(BaseModel):
    participant_id: str = Field(min_length=1)
    story_choices: list[str]


class SubmitBody(BaseModel):
    answers: list[str]
    links_opened: int = 0
    tab_switches: int = 0
    duration_seconds: float = 0.0


def create_app(data_dir: str | None = None, frontend_dir: str | None = None) -> FastAPI:
    store = Store(data_dir)
    app = FastAPI(title="newsassembly", version="0.1.0")
    app.state.store = store

    @app.get("/stories")
    def list_stories() -> dict:
        return {"stories": store.list_stories()}

    @app.get("/stories/{story_id}/views/{kind}")
    def get_view(story_id: str, kind: str) -> dict:
        try:
            return store.get_view(story_id, kind)
        except NewsAssemblyError as error:
            raise _http(error) from error

    @app.get("/stories/{story_id}/questions")
    def get_questions(story_id: str) -> dict:
        try:
            return {"story_id": story_id, "questions": store.get_questions(story_id)}
        except NewsAssemblyError as error:
            raise _http(error) from error

    @app.post("/sessions", status_code=201)
    def post_session(body: StartSessionBody) -> dict:
        try:
            return start_exercise(store, body.participant_id, body.story_choices)
        except NewsAssemblyError as error:
            raise _http(error) from error

    @app.post("/sessions/{session_id}/assignments/{index}/submit")
    def post_submission(session_id: str, index: int, body: SubmitBody) -> dict:
        try:
            return submit_exercise(
                store,
                session_id,
                index,
                body.answers,
                links_opened=body.links_opened,
                tab_switches=body.tab_switches,
                duration_seconds=body.duration_seconds,
            )
        except NewsAssemblyError as error:
            raise _http(error) from error

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        try:
            return store.get_session(session_id)
        except NewsAssemblyError as error:
            raise _http(error) from error

    @app.get("/export/responses")
    def get_export() -> list[dict]:
        return export_responses(store)

    if frontend_dir and Path(frontend_dir).is_dir():
        app.mount("/", StaticFiles(directory=frontend_dir, html=True), name="frontend")
    return app
