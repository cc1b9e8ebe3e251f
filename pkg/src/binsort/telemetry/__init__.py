from .records import (
    BinRecord,
    DeviceMessage,
    EventFrame,
    FullAlert,
    Heartbeat,
    Register,
    StatusUpdate,
)
from .eventlog import EventLog
from .registry import BinConflictError, FleetRegistry, FleetService, UnknownBinError
from .server import create_app
from .client import DeviceClient

__all__ = [
    "BinRecord",
    "StatusUpdate",
    "FullAlert",
    "Heartbeat",
    "Register",
    "DeviceMessage",
    "EventFrame",
    "EventLog",
    "FleetRegistry",
    "FleetService",
    "BinConflictError",
    "UnknownBinError",
    "create_app",
    "DeviceClient",
]
