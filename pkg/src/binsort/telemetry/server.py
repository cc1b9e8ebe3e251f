"""HTTP + WebSocket front of the fleet service.

Routes:

* ``POST /bins`` register (201 created, 200 idempotent repeat, 409 conflict)
* ``GET /bins`` / ``GET /bins/{id}`` / ``DELETE /bins/{id}``
* ``PUT /bins/{id}/status`` apply a device message; duplicates answer
  ``{"applied": false}`` with no side effect
* ``GET /events?since=N`` logged frames after offset N
* ``WS /events?since=N`` replay after N, then live frames
"""

from __future__ import annotations

from typing import Optional

from fastapi import Body, Depends, FastAPI, HTTPException, Query, Request, WebSocket
from fastapi.responses import JSONResponse
from starlette.websockets import WebSocketDisconnect

from .records import BinRecord, message_from_payload
from .registry import BinConflictError, FleetService, UnknownBinError


def create_app(
    service: FleetService,
    token: Optional[str] = None,
    ui_dir: Optional[str] = None,
) -> FastAPI:
    app = FastAPI(title="binsort telemetry", docs_url=None, redoc_url=None)
    app.state.service = service

    def check_token(request: Request) -> None:
        if token is None:
            return
        supplied = None
        auth = request.headers.get("authorization", "")
        if auth.startswith("Bearer "):
            supplied = auth[len("Bearer ") :]
        supplied = supplied or request.query_params.get("token")
        if supplied != token:
            raise HTTPException(status_code=401, detail="missing or bad token")

    guarded = [Depends(check_token)]

    @app.get("/healthz")
    def healthz():
        return {"ok": True}

    @app.post("/bins", dependencies=guarded)
    def register_bin(payload: dict = Body(...)):
        try:
            record = BinRecord.from_dict(payload)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        try:
            created, frame = service.register(record)
        except BinConflictError as exc:
            raise HTTPException(status_code=409, detail=str(exc))
        body = {"id": record.id, "created": created, "offset": frame.offset if frame else None}
        return JSONResponse(body, status_code=201 if created else 200)

    @app.get("/bins", dependencies=guarded)
    def list_bins():
        return [r.to_dict() for r in service.list_bins()]

    @app.get("/bins/{bin_id}", dependencies=guarded)
    def get_bin(bin_id: str):
        try:
            record = service.get_bin(bin_id)
        except UnknownBinError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        body = record.to_dict()
        body["levels"] = service.levels_of(bin_id)
        return body

    @app.delete("/bins/{bin_id}", dependencies=guarded)
    def remove_bin(bin_id: str):
        try:
            frame = service.remove(bin_id)
        except UnknownBinError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        return {"removed": bin_id, "offset": frame.offset}

    @app.put("/bins/{bin_id}/status", dependencies=guarded)
    def update_status(bin_id: str, payload: dict = Body(...)):
        try:
            msg = message_from_payload(bin_id, payload)
        except (ValueError, KeyError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        try:
            applied, frame = service.update(msg)
        except UnknownBinError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        return {"applied": applied, "offset": frame.offset if frame else None}

    @app.get("/events", dependencies=guarded)
    def list_events(since: int = Query(default=0, ge=0)):
        return [f.to_dict() for f in service.frames_after(since)]

    @app.websocket("/events")
    async def events(ws: WebSocket, since: Optional[int] = Query(default=None, ge=0)):
        if token is not None:
            supplied = ws.query_params.get("token")
            auth = ws.headers.get("authorization", "")
            if auth.startswith("Bearer "):
                supplied = supplied or auth[len("Bearer ") :]
            if supplied != token:
                await ws.close(code=4401)
                return
        await ws.accept()
        queue, backlog = service.attach_subscriber(since)
        last_sent = since or 0
        try:
            for frame in backlog:
                await ws.send_json(frame.to_dict())
                last_sent = max(last_sent, frame.offset)
            while True:
                frame = await queue.get()
                if frame.offset <= last_sent:
                    continue  # already replayed from the backlog
                await ws.send_json(frame.to_dict())
                last_sent = frame.offset
        except WebSocketDisconnect:
            pass
        finally:
            service.detach_subscriber(queue)

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/app", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
