"""Virtual hardware: logical clock, fill model, and simulated ports.

Time is event-driven.  Each port call advances the clock by that port's
latency, then fires any injected fault whose time has come.  The reporter
is special: an injected "reporter" fault is delivered as a send timeout
(the item is still sorted), not as a hardware fault.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Protocol

from ..taxonomy import BinKind
from ..device.machine import ANGLE_BIN1, ANGLE_BIN2
from ..device.ports import Capture, PortFault
from ..imaging.image import Image
from ..telemetry.records import BinRecord, DeviceMessage, FullAlert, StatusUpdate
from .scenario import FaultInjection, ScenarioItem


class LogicalClock:
    def __init__(self, start: float = 0.0):
        self._t = float(start)

    def now(self) -> float:
        return self._t

    def advance(self, dt: float) -> None:
        self._t += dt

    def advance_to(self, t: float) -> None:
        self._t = max(self._t, t)


@dataclass
class BinFillState:
    item_count: int = 0
    capacity: int = 1

    @property
    def blocked(self) -> bool:
        return self.item_count >= self.capacity

    @property
    def level_percent(self) -> int:
        return min(100, round(100 * self.item_count / self.capacity))


class Sink(Protocol):
    """Where telemetry goes: a DeviceClient or an in-memory recorder."""

    def next_seq(self) -> int: ...

    def register(self, record: BinRecord) -> bool: ...

    def send(self, msg: DeviceMessage) -> bool: ...


DEFAULT_LATENCIES = {
    "motion": 0.05,
    "camera": 0.5,
    "sorter": 0.4,
    "dropper": 0.3,
    "fill": 0.1,
    "reporter": 0.2,
}

_BIN_BY_ANGLE = {ANGLE_BIN1: BinKind.RECYCLABLE, ANGLE_BIN2: BinKind.NON_RECYCLABLE}


class VirtualPorts:
    """Deterministic HardwarePorts implementation over scripted items."""

    def __init__(
        self,
        clock: LogicalClock,
        images: dict[str, Image],
        fill: dict[BinKind, BinFillState],
        sink: Sink,
        bin_id: str,
        faults: tuple[FaultInjection, ...] = (),
        latencies: Optional[dict[str, float]] = None,
    ):
        self.clock = clock
        self.images = images
        self.fill = fill
        self.sink = sink
        self.bin_id = bin_id
        self.latencies = dict(DEFAULT_LATENCIES)
        if latencies:
            self.latencies.update(latencies)
        self._pending_faults = list(faults)
        self._staged: Optional[ScenarioItem] = None
        self.sorter_angle = 90
        self.angle_history: list[int] = [90]
        self.emitted: list[DeviceMessage] = []
        self.alerted: set[BinKind] = set()
        self._last_drop: Optional[BinKind] = None

    # -- scripting ------------------------------------------------------

    def stage(self, item: ScenarioItem) -> None:
        self._staged = item
        self._last_drop = None

    def take_last_drop(self) -> Optional[BinKind]:
        drop, self._last_drop = self._last_drop, None
        return drop

    def _tick(self, port: str) -> None:
        self.clock.advance(self.latencies[port])
        for inj in self._pending_faults:
            if inj.port == port and self.clock.now() >= inj.time:
                self._pending_faults.remove(inj)
                raise PortFault(port, f"injected fault at t={inj.time}")

    # -- HardwarePorts --------------------------------------------------

    def now(self) -> float:
        return self.clock.now()

    def wait_motion(self) -> None:
        self._tick("motion")
        if self._staged is None:
            raise PortFault("motion", "no item staged")

    def capture(self) -> Capture:
        self._tick("camera")
        assert self._staged is not None
        image = self.images.get(self._staged.image_id)
        if image is None:
            raise PortFault("camera", f"no frame for {self._staged.image_id}")
        return Capture(id=self._staged.image_id, image=image)

    def set_sorter_angle(self, angle: int) -> None:
        self._tick("sorter")
        self.sorter_angle = angle
        self.angle_history.append(angle)

    def release_drop(self) -> None:
        self._tick("dropper")
        target = _BIN_BY_ANGLE.get(self.sorter_angle)
        if target is None:
            raise PortFault("dropper", "sorter is not over a bin")
        self.fill[target].item_count += 1
        self._last_drop = target

    def read_fill(self, bin: BinKind) -> bool:
        self._tick("fill")
        return self.fill[bin].blocked

    def _levels(self) -> dict[BinKind, int]:
        return {kind: state.level_percent for kind, state in self.fill.items()}

    def _deliver(self, msg: DeviceMessage) -> bool:
        try:
            self._tick("reporter")
        except PortFault:
            return False  # injected reporter fault = delivery timeout
        if not self.sink.send(msg):
            return False
        self.emitted.append(msg)
        return True

    def send_status(self, bin: BinKind, blocked: bool) -> bool:
        levels = self._levels()
        status = "full" if any(v >= 100 for v in levels.values()) else "normal"
        msg = StatusUpdate(
            bin_id=self.bin_id, seq=self.sink.next_seq(), levels=levels, status=status
        )
        return self._deliver(msg)

    def send_full_alert(self, bin: BinKind) -> bool:
        # one alert per capacity crossing; repeats while still blocked are
        # ordinary status traffic
        if bin in self.alerted:
            msg: DeviceMessage = StatusUpdate(
                bin_id=self.bin_id, seq=self.sink.next_seq(), levels=self._levels(), status="full"
            )
            return self._deliver(msg)
        msg = FullAlert(bin_id=self.bin_id, seq=self.sink.next_seq(), bin=bin)
        delivered = self._deliver(msg)
        if delivered:
            self.alerted.add(bin)
        return delivered
