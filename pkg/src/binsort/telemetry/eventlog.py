"""Append-only JSON-lines event log with dense offsets starting at 1."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from .records import EventFrame


class EventLog:
    """Durable ordered frames.  With ``path=None`` the log is memory-only,
    which the simulator and tests use."""

    def __init__(self, path: Optional[str | Path] = None):
        self._path = Path(path) if path is not None else None
        self._frames: list[EventFrame] = []
        if self._path is not None and self._path.exists():
            with open(self._path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        self._frames.append(EventFrame.from_dict(json.loads(line)))
        self._verify_offsets()

    def _verify_offsets(self) -> None:
        for i, frame in enumerate(self._frames, start=1):
            if frame.offset != i:
                raise ValueError(
                    f"corrupt event log: entry {i} has offset {frame.offset}"
                )

    @property
    def head_offset(self) -> int:
        return len(self._frames)

    def next_offset(self) -> int:
        return len(self._frames) + 1

    def append(self, frame: EventFrame) -> None:
        if frame.offset != self.next_offset():
            raise ValueError(
                f"expected offset {self.next_offset()}, got {frame.offset}"
            )
        self._frames.append(frame)
        if self._path is not None:
            with open(self._path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(frame.to_dict(), sort_keys=True) + "\n")

    def frames(self) -> list[EventFrame]:
        return list(self._frames)

    def frames_after(self, offset: int) -> list[EventFrame]:
        """Frames with offset strictly greater than ``offset``."""
        if offset < 0:
            offset = 0
        return self._frames[offset:]
