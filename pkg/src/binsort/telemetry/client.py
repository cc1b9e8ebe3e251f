"""Device-side HTTP client and the event-stream watcher."""

from __future__ import annotations

import json
from typing import Callable, Optional

import httpx

from .records import BinRecord, DeviceMessage, EventFrame, message_to_payload


class DeviceClient:
    """Speaks the fleet HTTP API for one bin; assigns sequence numbers.

    ``send`` returns False on timeout or transport failure so the caller
    can flag the delivery without aborting the sort.
    """

    def __init__(self, base_url: str, token: Optional[str] = None, timeout: float = 5.0):
        headers = {"Authorization": f"Bearer {token}"} if token else {}
        self._http = httpx.Client(base_url=base_url, headers=headers, timeout=timeout)
        self._seq = 0

    def close(self) -> None:
        self._http.close()

    def next_seq(self) -> int:
        self._seq += 1
        return self._seq

    def register(self, record: BinRecord) -> bool:
        resp = self._http.post("/bins", json=record.to_dict())
        if resp.status_code == 409:
            raise ValueError(resp.json().get("detail", "conflict"))
        resp.raise_for_status()
        return resp.status_code == 201

    def send(self, msg: DeviceMessage) -> bool:
        try:
            resp = self._http.put(f"/bins/{msg.bin_id}/status", json=message_to_payload(msg))
            resp.raise_for_status()
        except httpx.HTTPError:
            return False
        return True


class RecordingSink:
    """In-memory stand-in for a server: keeps what would have been sent."""

    def __init__(self):
        self.registered: list[BinRecord] = []
        self.messages: list[DeviceMessage] = []
        self._seq = 0

    def next_seq(self) -> int:
        self._seq += 1
        return self._seq

    def register(self, record: BinRecord) -> bool:
        self.registered.append(record)
        return True

    def send(self, msg: DeviceMessage) -> bool:
        self.messages.append(msg)
        return True


def watch_events(
    server_url: str,
    on_frame: Callable[[EventFrame], None],
    since: Optional[int] = None,
    token: Optional[str] = None,
) -> None:
    """Stream frames from ``WS /events`` until the connection closes."""
    from websockets.sync.client import connect

    ws_url = server_url.replace("http://", "ws://").replace("https://", "wss://")
    ws_url = ws_url.rstrip("/") + "/events"
    params = []
    if since is not None:
        params.append(f"since={since}")
    if token is not None:
        params.append(f"token={token}")
    if params:
        ws_url += "?" + "&".join(params)
    with connect(ws_url) as ws:
        for raw in ws:
            on_frame(EventFrame.from_dict(json.loads(raw)))
