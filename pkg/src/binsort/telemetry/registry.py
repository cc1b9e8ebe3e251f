"""Fleet state: a registry that is always a fold of the event log.

``FleetRegistry`` holds pure state and knows how to apply one frame.
``FleetService`` owns the log, assigns offsets and timestamps, enforces
idempotence and duplicate suppression, and fans frames out to
subscribers.  All mutations serialize through one lock; a restarted
service rebuilds the registry by replaying the log.
"""

from __future__ import annotations

import asyncio
import json
import threading
from dataclasses import replace
from datetime import datetime, timezone
from typing import Callable, Optional

from ..taxonomy import BinKind
from .eventlog import EventLog
from .records import (
    FRAME_ADDED,
    FRAME_FULL,
    FRAME_GAP,
    FRAME_HEARTBEAT,
    FRAME_REMOVED,
    FRAME_STATUS,
    BinRecord,
    DeviceMessage,
    EventFrame,
    FullAlert,
    Heartbeat,
    StatusUpdate,
    message_to_payload,
)


class UnknownBinError(KeyError):
    def __init__(self, bin_id: str):
        super().__init__(bin_id)
        self.bin_id = bin_id

    def __str__(self) -> str:
        return f"no such bin: {self.bin_id}"


class BinConflictError(ValueError):
    def __init__(self, bin_id: str):
        super().__init__(f"bin {bin_id} already registered with different fields")
        self.bin_id = bin_id


def _zero_levels() -> dict[str, int]:
    return {kind.slug: 0 for kind in BinKind}


class FleetRegistry:
    """Replayable registry state; mutate only through ``apply_frame``."""

    def __init__(self):
        self.records: dict[str, BinRecord] = {}
        self.levels: dict[str, dict[str, int]] = {}
        self.last_seq: dict[str, int] = {}
        self.last_heartbeat: dict[str, str] = {}

    def apply_frame(self, frame: EventFrame) -> None:
        bin_id = frame.bin_id
        if frame.type == FRAME_ADDED:
            self.records[bin_id] = BinRecord.from_dict(frame.payload)
            self.levels[bin_id] = _zero_levels()
            self.last_seq[bin_id] = 0
        elif frame.type == FRAME_REMOVED:
            self.records.pop(bin_id, None)
            self.levels.pop(bin_id, None)
            self.last_seq.pop(bin_id, None)
            self.last_heartbeat.pop(bin_id, None)
        elif frame.type == FRAME_STATUS:
            levels = {slug: int(v) for slug, v in frame.payload["levels"].items()}
            self.levels[bin_id] = levels
            status = "full" if any(v >= 100 for v in levels.values()) else "normal"
            self.records[bin_id] = replace(self.records[bin_id], status=status)
            self.last_seq[bin_id] = int(frame.payload["seq"])
        elif frame.type == FRAME_FULL:
            self.records[bin_id] = replace(self.records[bin_id], status="full")
            self.levels.setdefault(bin_id, _zero_levels())[frame.payload["bin"]] = 100
            self.last_seq[bin_id] = int(frame.payload["seq"])
        elif frame.type == FRAME_HEARTBEAT:
            self.last_heartbeat[bin_id] = str(frame.payload["ts"])
            self.last_seq[bin_id] = int(frame.payload["seq"])
        else:
            raise ValueError(f"cannot apply frame type {frame.type!r}")

    def snapshot(self) -> dict:
        """Deterministic full-state dict; bins keep registration order."""
        return {
            "bins": [self.records[bin_id].to_dict() for bin_id in self.records],
            "levels": {bin_id: dict(lv) for bin_id, lv in self.levels.items()},
            "last_seq": dict(self.last_seq),
            "last_heartbeat": dict(self.last_heartbeat),
        }

    def snapshot_bytes(self) -> bytes:
        return json.dumps(self.snapshot(), sort_keys=True).encode("utf-8")


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat()


class FleetService:
    """Single-writer apply path over registry + log, with subscriber fan-out."""

    def __init__(self, log: Optional[EventLog] = None, clock: Callable[[], str] = _utc_now):
        self._log = log if log is not None else EventLog()
        self._clock = clock
        self._lock = threading.Lock()
        self._subscribers: list[asyncio.Queue] = []
        self.registry = FleetRegistry()
        for frame in self._log.frames():
            self.registry.apply_frame(frame)

    # -- commands ------------------------------------------------------

    def register(self, record: BinRecord) -> tuple[bool, Optional[EventFrame]]:
        """Store a new bin (status starts normal).  Re-registering with the
        same identity fields is an idempotent no-op; with different fields
        it raises ``BinConflictError``."""
        stored_record = replace(record, status="normal")
        with self._lock:
            existing = self.registry.records.get(record.id)
            if existing is not None:
                same = (
                    existing.date == record.date
                    and existing.locate == record.locate
                    and existing.description == record.description
                    and existing.image == record.image
                )
                if same:
                    return False, None
                raise BinConflictError(record.id)
            frame = self._emit(FRAME_ADDED, record.id, stored_record.to_dict())
            return True, frame

    def update(self, msg: DeviceMessage) -> tuple[bool, Optional[EventFrame]]:
        """Apply a device message.  Stale sequence numbers (<= last seen for
        the device) are rejected as duplicates: no state change, no frame."""
        with self._lock:
            if msg.bin_id not in self.registry.records:
                raise UnknownBinError(msg.bin_id)
            if msg.seq <= self.registry.last_seq.get(msg.bin_id, 0):
                return False, None
            kind = {
                StatusUpdate: FRAME_STATUS,
                FullAlert: FRAME_FULL,
                Heartbeat: FRAME_HEARTBEAT,
            }[type(msg)]
            frame = self._emit(kind, msg.bin_id, message_to_payload(msg))
            return True, frame

    def remove(self, bin_id: str) -> EventFrame:
        with self._lock:
            if bin_id not in self.registry.records:
                raise UnknownBinError(bin_id)
            return self._emit(FRAME_REMOVED, bin_id, {})

    def _emit(self, frame_type: str, bin_id: str, payload: dict) -> EventFrame:
        # callers hold the lock
        frame = EventFrame(
            offset=self._log.next_offset(),
            type=frame_type,
            bin_id=bin_id,
            payload=payload,
            ts=self._clock(),
        )
        self.registry.apply_frame(frame)
        self._log.append(frame)
        for queue in self._subscribers:
            queue.put_nowait(frame)
        return frame

    # -- queries -------------------------------------------------------

    def list_bins(self) -> list[BinRecord]:
        with self._lock:
            return list(self.registry.records.values())

    def get_bin(self, bin_id: str) -> BinRecord:
        with self._lock:
            record = self.registry.records.get(bin_id)
            if record is None:
                raise UnknownBinError(bin_id)
            return record

    def levels_of(self, bin_id: str) -> dict[str, int]:
        with self._lock:
            if bin_id not in self.registry.records:
                raise UnknownBinError(bin_id)
            return dict(self.registry.levels.get(bin_id, _zero_levels()))

    def frames_after(self, offset: int) -> list[EventFrame]:
        with self._lock:
            return self._log.frames_after(offset)

    @property
    def head_offset(self) -> int:
        with self._lock:
            return self._log.head_offset

    # -- subscriptions -------------------------------------------------

    def attach_subscriber(
        self, since: Optional[int] = None
    ) -> tuple[asyncio.Queue, list[EventFrame]]:
        """Register a live queue and return the backlog to replay first.

        ``since`` is the last offset the subscriber has seen; the backlog
        holds every logged frame after it.  ``None`` means live-only.  An
        offset past the log head yields a gap-notice control frame.
        """
        with self._lock:
            queue: asyncio.Queue = asyncio.Queue()
            self._subscribers.append(queue)
            if since is None:
                return queue, []
            head = self._log.head_offset
            if since > head:
                gap = EventFrame(
                    offset=head,
                    type=FRAME_GAP,
                    bin_id="",
                    payload={"requested": since, "head": head},
                    ts=self._clock(),
                )
                return queue, [gap]
            return queue, self._log.frames_after(since)

    def detach_subscriber(self, queue: asyncio.Queue) -> None:
        with self._lock:
            if queue in self._subscribers:
                self._subscribers.remove(queue)
