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
from .machine import ANGLE_BIN1, ANGLE_BIN2, ANGLE_NEUTRAL, MachineState, step
from .ports import Capture, HardwarePorts, PortFault
from .controller import CycleReport, run_cycle
from .config import DeviceConfig, load_device_config

__all__ = [
    "DeviceState",
    "DeviceEvent",
    "Action",
    "MotionDetected",
    "ImageReady",
    "Classified",
    "ServoInPosition",
    "DropComplete",
    "FillLevel",
    "ReportAck",
    "ReportTimeout",
    "SensorFault",
    "CaptureImage",
    "RunClassifier",
    "RotateSorter",
    "ReleaseDrop",
    "ReadFill",
    "SendStatus",
    "SendFullAlert",
    "NoAction",
    "MachineState",
    "step",
    "ANGLE_BIN1",
    "ANGLE_NEUTRAL",
    "ANGLE_BIN2",
    "HardwarePorts",
    "Capture",
    "PortFault",
    "CycleReport",
    "run_cycle",
    "DeviceConfig",
    "load_device_config",
]
