"""Single-item control loop: drives the machine with port-produced events."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, TypeVar

from ..classifier.baseline import Classifier
from ..taxonomy import BinKind, TrashCategory
from .config import DeviceConfig
from .events import (
    CaptureImage,
    Classified,
    DeviceEvent,
    DeviceState,
    DropComplete,
    FillLevel,
    ImageReady,
    MotionDetected,
    ReadFill,
    ReleaseDrop,
    ReportAck,
    ReportTimeout,
    RotateSorter,
    RunClassifier,
    SendFullAlert,
    SendStatus,
    SensorFault,
    ServoInPosition,
)
from .machine import MachineState, step
from .ports import HardwarePorts, PortFault

T = TypeVar("T")


@dataclass
class CycleReport:
    """What one pass through the control loop did."""

    image_id: Optional[str] = None
    category: Optional[TrashCategory] = None
    confidence: Optional[float] = None
    target_bin: Optional[BinKind] = None
    fill_blocked: Optional[bool] = None
    delivery: str = "none"  # none | delivered | timed-out
    fault: Optional[str] = None
    completed: bool = False
    started_at: float = 0.0
    finished_at: float = 0.0
    phases: list[tuple[str, float]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "image_id": self.image_id,
            "category": self.category.slug if self.category else None,
            "confidence": self.confidence,
            "target_bin": self.target_bin.slug if self.target_bin else None,
            "fill_blocked": self.fill_blocked,
            "delivery": self.delivery,
            "fault": self.fault,
            "completed": self.completed,
            "started_at": self.started_at,
            "finished_at": self.finished_at,
            "phases": [[name, t] for name, t in self.phases],
        }


def run_cycle(ports: HardwarePorts, classifier: Classifier, config: DeviceConfig) -> CycleReport:
    """Process one item: wait for motion, then run the machine until it is
    back to idle or faulted.

    A port call that out-lasts ``config.phase_timeout_s`` is treated as a
    sensor fault.  A report timeout is not a fault: the item was sorted,
    only the status delivery is flagged as timed out.
    """
    report = CycleReport(started_at=ports.now())
    state = MachineState()

    def timed(port: str, call: Callable[[], T]) -> tuple[Optional[T], Optional[SensorFault]]:
        t0 = ports.now()
        try:
            value = call()
        except PortFault as pf:
            return None, SensorFault(pf.port, pf.detail)
        if ports.now() - t0 > config.phase_timeout_s:
            return None, SensorFault(port, "timeout")
        return value, None

    _, fault = timed("motion", ports.wait_motion)
    event: Optional[DeviceEvent] = fault or MotionDetected()

    while event is not None:
        state, action = step(state, event)
        report.phases.append((state.phase.value, ports.now()))

        if isinstance(event, Classified):
            report.category = event.result.category
            report.confidence = event.result.confidence
        elif isinstance(event, FillLevel):
            report.fill_blocked = event.blocked

        if state.phase is DeviceState.FAULT:
            assert isinstance(event, SensorFault)
            report.fault = f"{event.port}: {event.detail}" if event.detail else event.port
            break

        event = None
        if isinstance(action, CaptureImage):
            cap, fault = timed("camera", ports.capture)
            if cap is not None:
                report.image_id = cap.id
            event = fault or ImageReady(cap.image)
        elif isinstance(action, RunClassifier):
            try:
                event = Classified(classifier.classify(action.image))
            except Exception as exc:
                event = SensorFault("classifier", str(exc))
        elif isinstance(action, RotateSorter):
            _, fault = timed("sorter", lambda: ports.set_sorter_angle(action.angle))
            if fault is not None:
                event = fault
            elif state.phase is DeviceState.ROUTING:
                report.target_bin = state.target
                event = ServoInPosition()
            # re-centering on the way to idle produces no further event
        elif isinstance(action, ReleaseDrop):
            _, fault = timed("dropper", ports.release_drop)
            event = fault or DropComplete()
        elif isinstance(action, ReadFill):
            blocked, fault = timed("fill", lambda: ports.read_fill(action.bin))
            event = fault or FillLevel(action.bin, bool(blocked))
        elif isinstance(action, (SendStatus, SendFullAlert)):
            if isinstance(action, SendFullAlert):
                acked, fault = timed("reporter", lambda: ports.send_full_alert(action.bin))
            else:
                acked, fault = timed(
                    "reporter", lambda: ports.send_status(action.bin, action.blocked)
                )
            if fault is not None:
                event = fault
            else:
                report.delivery = "delivered" if acked else "timed-out"
                event = ReportAck() if acked else ReportTimeout()
        # NoAction: no follow-up event; loop ends

    report.completed = state.phase is DeviceState.IDLE
    report.finished_at = ports.now()
    return report
