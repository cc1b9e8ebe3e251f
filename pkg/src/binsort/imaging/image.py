"""Raster image values.

An ``Image`` is an immutable row-major grid of 8-bit intensities, either
grayscale (1 channel) or RGB (3 channels).  ``NormalizedImage`` holds the
same grid rescaled to floats in ``[0, 1]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True, eq=False)
class Image:
    """8-bit raster image; ``pixels`` is flat row-major, length w*h*c."""

    width: int
    height: int
    channels: int
    pixels: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("image dimensions must be positive")
        if self.channels not in (1, 3):
            raise ValueError("channels must be 1 (grayscale) or 3 (RGB)")
        px = np.ascontiguousarray(self.pixels, dtype=np.uint8).reshape(-1)
        if px.size != self.width * self.height * self.channels:
            raise ValueError(
                f"pixel buffer has {px.size} values, expected "
                f"{self.width * self.height * self.channels}"
            )
        px.flags.writeable = False
        object.__setattr__(self, "pixels", px)

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "Image":
        """Build from an (h, w) or (h, w, c) uint8-compatible array."""
        a = np.asarray(arr)
        if a.ndim == 2:
            a = a[:, :, None]
        if a.ndim != 3:
            raise ValueError("expected a 2-D or 3-D array")
        h, w, c = a.shape
        return cls(width=w, height=h, channels=c, pixels=a.astype(np.uint8).reshape(-1))

    def as_array(self) -> np.ndarray:
        """Read-only view shaped (height, width, channels)."""
        return self.pixels.reshape(self.height, self.width, self.channels)

    def tobytes(self) -> bytes:
        return self.pixels.tobytes()

    def get(self, x: int, y: int, ch: int = 0) -> int:
        return int(self.pixels[(y * self.width + x) * self.channels + ch])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Image):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and self.channels == other.channels
            and self.pixels.tobytes() == other.pixels.tobytes()
        )

    def __hash__(self) -> int:
        return hash((self.width, self.height, self.channels, self.pixels.tobytes()))


@dataclass(frozen=True, eq=False)
class NormalizedImage:
    """Float image with every value in [0, 1]; same layout as ``Image``."""

    width: int
    height: int
    channels: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        vals = np.ascontiguousarray(self.values, dtype=np.float64).reshape(-1)
        if vals.size != self.width * self.height * self.channels:
            raise ValueError("value buffer does not match dimensions")
        if vals.size and (vals.min() < 0.0 or vals.max() > 1.0):
            raise ValueError("normalized values must lie in [0, 1]")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def as_array(self) -> np.ndarray:
        return self.values.reshape(self.height, self.width, self.channels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormalizedImage):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and self.channels == other.channels
            and np.array_equal(self.values, other.values)
        )
