"""Abstract hardware ports the control loop drives.

A port call either succeeds or raises ``PortFault`` carrying the port
name.  Implementations: the simulator's virtual ports for desk runs; a
GPIO-backed set could slot in behind the same protocol.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol

from ..taxonomy import BinKind
from ..imaging.image import Image


class PortFault(RuntimeError):
    def __init__(self, port: str, detail: str = ""):
        super().__init__(f"{port}: {detail}" if detail else port)
        self.port = port
        self.detail = detail


@dataclass(frozen=True)
class Capture:
    id: str
    image: Image


class HardwarePorts(Protocol):
    def now(self) -> float:
        """Current time in seconds (logical for virtual ports)."""
        ...

    def wait_motion(self) -> None:
        """Block until the motion sensor fires.  Port name: ``motion``."""
        ...

    def capture(self) -> Capture:
        """Take a picture of the item on the plate.  Port name: ``camera``."""
        ...

    def set_sorter_angle(self, angle: int) -> None:
        """Rotate the sorter container.  Port name: ``sorter``."""
        ...

    def release_drop(self) -> None:
        """Open the drop servo, letting the item fall.  Port name: ``dropper``."""
        ...

    def read_fill(self, bin: BinKind) -> bool:
        """IR fill sensor; True means blocked (full).  Port name: ``fill``."""
        ...

    def send_status(self, bin: BinKind, blocked: bool) -> bool:
        """Report a routine fill reading; False means delivery timed out.
        Port name: ``reporter``."""
        ...

    def send_full_alert(self, bin: BinKind) -> bool:
        """Report a full bin; False means delivery timed out.
        Port name: ``reporter``."""
        ...
