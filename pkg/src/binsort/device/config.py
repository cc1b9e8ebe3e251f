"""Device configuration, loadable from a TOML file.

Example::

    bin_id = "bin-01"
    server_addr = "http://127.0.0.1:8765"
    model_path = "model.bin"

    [angles]
    recyclable = 45
    neutral = 90
    non_recyclable = 135

    [timeouts]
    phase_s = 5.0

    [capacity]
    recyclable = 10
    non_recyclable = 10
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

_ALLOWED_ANGLES = (45, 90, 135)


@dataclass(frozen=True)
class DeviceConfig:
    bin_id: str = "bin-01"
    server_addr: str = "http://127.0.0.1:8765"
    model_path: str = ""
    angle_recyclable: int = 45
    angle_neutral: int = 90
    angle_non_recyclable: int = 135
    phase_timeout_s: float = 5.0
    capacity_recyclable: int = 10
    capacity_non_recyclable: int = 10

    def __post_init__(self):
        if not self.bin_id:
            raise ValueError("bin_id must be non-empty")
        for angle in (self.angle_recyclable, self.angle_neutral, self.angle_non_recyclable):
            if angle not in _ALLOWED_ANGLES:
                raise ValueError(f"sorter angles must be one of {_ALLOWED_ANGLES}")
        if self.phase_timeout_s <= 0:
            raise ValueError("phase timeout must be positive")
        if self.capacity_recyclable < 1 or self.capacity_non_recyclable < 1:
            raise ValueError("bin capacities must be at least 1")


def load_device_config(path: str | Path) -> DeviceConfig:
    with open(path, "rb") as fh:
        raw = tomllib.load(fh)
    angles = raw.get("angles", {})
    timeouts = raw.get("timeouts", {})
    capacity = raw.get("capacity", {})
    return DeviceConfig(
        bin_id=raw.get("bin_id", DeviceConfig.bin_id),
        server_addr=raw.get("server_addr", DeviceConfig.server_addr),
        model_path=raw.get("model_path", DeviceConfig.model_path),
        angle_recyclable=angles.get("recyclable", DeviceConfig.angle_recyclable),
        angle_neutral=angles.get("neutral", DeviceConfig.angle_neutral),
        angle_non_recyclable=angles.get("non_recyclable", DeviceConfig.angle_non_recyclable),
        phase_timeout_s=timeouts.get("phase_s", DeviceConfig.phase_timeout_s),
        capacity_recyclable=capacity.get("recyclable", DeviceConfig.capacity_recyclable),
        capacity_non_recyclable=capacity.get("non_recyclable", DeviceConfig.capacity_non_recyclable),
    )
