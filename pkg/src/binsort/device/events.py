"""States, events, and actions of the bin control loop."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from ..classifier.baseline import ClassificationResult
from ..taxonomy import BinKind
from ..imaging.image import Image


class DeviceState(enum.Enum):
    IDLE = "idle"
    CAPTURING = "capturing"
    CLASSIFYING = "classifying"
    ROUTING = "routing"
    DROPPING = "dropping"
    FILL_CHECKING = "fill_checking"
    REPORTING = "reporting"
    FAULT = "fault"


# --- events delivered to the machine ---------------------------------------


@dataclass(frozen=True)
class MotionDetected:
    pass


@dataclass(frozen=True)
class ImageReady:
    image: Image


@dataclass(frozen=True)
class Classified:
    result: ClassificationResult


@dataclass(frozen=True)
class ServoInPosition:
    pass


@dataclass(frozen=True)
class DropComplete:
    pass


@dataclass(frozen=True)
class FillLevel:
    bin: BinKind
    blocked: bool


@dataclass(frozen=True)
class ReportAck:
    pass


@dataclass(frozen=True)
class ReportTimeout:
    pass


@dataclass(frozen=True)
class SensorFault:
    port: str
    detail: str = ""


DeviceEvent = Union[
    MotionDetected,
    ImageReady,
    Classified,
    ServoInPosition,
    DropComplete,
    FillLevel,
    ReportAck,
    ReportTimeout,
    SensorFault,
]


# --- actions the machine asks the hardware to perform ----------------------


@dataclass(frozen=True)
class CaptureImage:
    pass


@dataclass(frozen=True)
class RunClassifier:
    image: Image


@dataclass(frozen=True)
class RotateSorter:
    angle: int

    def __post_init__(self):
        if self.angle not in (45, 90, 135):
            raise ValueError("sorter angle must be 45, 90, or 135 degrees")


@dataclass(frozen=True)
class ReleaseDrop:
    pass


@dataclass(frozen=True)
class ReadFill:
    bin: BinKind


@dataclass(frozen=True)
class SendStatus:
    """Report the fill reading for the bin just used."""

    bin: BinKind
    blocked: bool


@dataclass(frozen=True)
class SendFullAlert:
    bin: BinKind


@dataclass(frozen=True)
class NoAction:
    pass


Action = Union[
    CaptureImage,
    RunClassifier,
    RotateSorter,
    ReleaseDrop,
    ReadFill,
    SendStatus,
    SendFullAlert,
    NoAction,
]
