"""Fleet registry records, device messages, and event-stream frames.

Wire JSON for a bin record uses exactly the field names ``id``, ``date``,
``locate``, ``status``, ``description``, ``image``.  Event frames are
``{offset, type, bin_id, payload, ts}`` with type one of ``added``,
``removed``, ``status``, ``full``, ``heartbeat``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from ..taxonomy import BinKind

VALID_STATUSES = ("normal", "full")

FRAME_ADDED = "added"
FRAME_REMOVED = "removed"
FRAME_STATUS = "status"
FRAME_FULL = "full"
FRAME_HEARTBEAT = "heartbeat"
FRAME_GAP = "gap"  # control frame sent when a subscriber's offset is past the log head


@dataclass(frozen=True)
class BinRecord:
    id: str
    date: str  # creation timestamp, ISO-8601 UTC
    locate: str = ""
    status: str = "normal"
    description: str = ""
    image: Optional[str] = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("bin id must be non-empty")
        if self.status not in VALID_STATUSES:
            raise ValueError(f"status must be one of {VALID_STATUSES}")

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "date": self.date,
            "locate": self.locate,
            "status": self.status,
            "description": self.description,
            "image": self.image,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "BinRecord":
        unknown = set(raw) - {"id", "date", "locate", "status", "description", "image"}
        if unknown:
            raise ValueError(f"unknown bin record fields: {sorted(unknown)}")
        if "id" not in raw or "date" not in raw:
            raise ValueError("bin record needs at least id and date")
        return cls(
            id=str(raw["id"]),
            date=str(raw["date"]),
            locate=str(raw.get("locate", "")),
            status=str(raw.get("status", "normal")),
            description=str(raw.get("description", "")),
            image=raw.get("image"),
        )


def _check_seq(seq: int) -> None:
    if seq < 1:
        raise ValueError("device sequence numbers start at 1")


@dataclass(frozen=True)
class Register:
    record: BinRecord
    seq: int = 0  # operator registrations carry no device sequence


@dataclass(frozen=True)
class StatusUpdate:
    bin_id: str
    seq: int
    levels: dict[BinKind, int]
    status: str = "normal"

    def __post_init__(self):
        _check_seq(self.seq)
        if self.status not in VALID_STATUSES:
            raise ValueError(f"status must be one of {VALID_STATUSES}")
        for kind, level in self.levels.items():
            if not isinstance(kind, BinKind):
                raise ValueError("levels must be keyed by BinKind")
            if not (0 <= level <= 100):
                raise ValueError("levels are percentages in [0, 100]")


@dataclass(frozen=True)
class FullAlert:
    bin_id: str
    seq: int
    bin: BinKind

    def __post_init__(self):
        _check_seq(self.seq)


@dataclass(frozen=True)
class Heartbeat:
    bin_id: str
    seq: int
    ts: str

    def __post_init__(self):
        _check_seq(self.seq)


DeviceMessage = Union[StatusUpdate, FullAlert, Heartbeat]


def message_to_payload(msg: DeviceMessage) -> dict:
    if isinstance(msg, StatusUpdate):
        return {
            "type": FRAME_STATUS,
            "seq": msg.seq,
            "levels": {kind.slug: level for kind, level in msg.levels.items()},
            "status": msg.status,
        }
    if isinstance(msg, FullAlert):
        return {"type": FRAME_FULL, "seq": msg.seq, "bin": msg.bin.slug}
    if isinstance(msg, Heartbeat):
        return {"type": FRAME_HEARTBEAT, "seq": msg.seq, "ts": msg.ts}
    raise TypeError(f"not a device message: {msg!r}")


def message_from_payload(bin_id: str, raw: dict) -> DeviceMessage:
    kind = raw.get("type")
    if kind == FRAME_STATUS:
        levels = {
            BinKind.from_slug(slug): int(level)
            for slug, level in raw.get("levels", {}).items()
        }
        return StatusUpdate(
            bin_id=bin_id,
            seq=int(raw.get("seq", 0)),
            levels=levels,
            status=raw.get("status", "normal"),
        )
    if kind == FRAME_FULL:
        return FullAlert(bin_id=bin_id, seq=int(raw.get("seq", 0)), bin=BinKind.from_slug(raw["bin"]))
    if kind == FRAME_HEARTBEAT:
        return Heartbeat(bin_id=bin_id, seq=int(raw.get("seq", 0)), ts=str(raw.get("ts", "")))
    raise ValueError(f"unknown message type: {kind!r}")


@dataclass(frozen=True)
class EventFrame:
    offset: int
    type: str
    bin_id: str
    payload: dict = field(default_factory=dict)
    ts: str = ""

    def to_dict(self) -> dict:
        return {
            "offset": self.offset,
            "type": self.type,
            "bin_id": self.bin_id,
            "payload": self.payload,
            "ts": self.ts,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "EventFrame":
        return cls(
            offset=int(raw["offset"]),
            type=str(raw["type"]),
            bin_id=str(raw["bin_id"]),
            payload=dict(raw.get("payload", {})),
            ts=str(raw.get("ts", "")),
        )
