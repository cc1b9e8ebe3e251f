"""The bin's transition function: wake, capture, classify, route, drop,
check fill, report, and back to idle.

``step`` is pure and total over every state/event pair.  The machine state
carries the routed bin alongside the phase because the fill check after a
drop targets the bin the sorter just used, which no later event names.
Unexpected events leave the state unchanged and ask for nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..taxonomy import BinKind, bin_for
from .events import (
    Action,
    CaptureImage,
    Classified,
    DeviceEvent,
    DeviceState,
    DropComplete,
    FillLevel,
    ImageReady,
    MotionDetected,
    NoAction,
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

ANGLE_BIN1 = 45  # recyclable
ANGLE_NEUTRAL = 90
ANGLE_BIN2 = 135  # non-recyclable


@dataclass(frozen=True)
class MachineState:
    phase: DeviceState = DeviceState.IDLE
    target: Optional[BinKind] = None  # bin routed to in the cycle under way


def step(state: MachineState, event: DeviceEvent) -> tuple[MachineState, Action]:
    phase, target = state.phase, state.target

    if isinstance(event, SensorFault):
        return MachineState(DeviceState.FAULT, target), NoAction()

    if phase is DeviceState.IDLE and isinstance(event, MotionDetected):
        return MachineState(DeviceState.CAPTURING, None), CaptureImage()

    if phase is DeviceState.CAPTURING and isinstance(event, ImageReady):
        return MachineState(DeviceState.CLASSIFYING, None), RunClassifier(event.image)

    if phase is DeviceState.CLASSIFYING and isinstance(event, Classified):
        routed = bin_for(event.result.category)
        angle = ANGLE_BIN1 if routed is BinKind.RECYCLABLE else ANGLE_BIN2
        return MachineState(DeviceState.ROUTING, routed), RotateSorter(angle)

    if phase is DeviceState.ROUTING and isinstance(event, ServoInPosition):
        return MachineState(DeviceState.DROPPING, target), ReleaseDrop()

    if phase is DeviceState.DROPPING and isinstance(event, DropComplete) and target is not None:
        return MachineState(DeviceState.FILL_CHECKING, target), ReadFill(target)

    if phase is DeviceState.FILL_CHECKING and isinstance(event, FillLevel):
        action: Action = (
            SendFullAlert(event.bin) if event.blocked else SendStatus(event.bin, event.blocked)
        )
        return MachineState(DeviceState.REPORTING, target), action

    if phase is DeviceState.REPORTING and isinstance(event, (ReportAck, ReportTimeout)):
        # re-center the sorter on the way back to idle
        return MachineState(DeviceState.IDLE, None), RotateSorter(ANGLE_NEUTRAL)

    return state, NoAction()
