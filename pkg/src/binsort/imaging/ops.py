"""Pixel operations: warping, resizing, rescaling, flips, random rotation.

Warps use inverse mapping with nearest-neighbor sampling.  "Nearest" is
``floor(v + 0.5)`` (half rounds up), and source coordinates are computed
as ``a*x + b*y + c`` in that order; callers checking results pixel by
pixel must follow the same two conventions.
"""

from __future__ import annotations

import numpy as np

from .affine import AffineMatrix, invert
from .image import Image, NormalizedImage
from ..rng import SplitMix64


def warp_affine(img: Image, m: AffineMatrix, fill: int = 0) -> Image:
    """Apply ``m`` to the image; out-of-bounds pixels get ``fill``.

    The output has the input's dimensions.  Each output pixel (x, y) takes
    the input pixel nearest to ``m⁻¹(x, y)``.
    """
    if not (0 <= fill <= 255):
        raise ValueError("fill must be an intensity in [0, 255]")
    inv = invert(m)  # raises ValueError when singular
    w, h, c = img.width, img.height, img.channels
    xs = np.arange(w, dtype=np.float64)
    ys = np.arange(h, dtype=np.float64)
    gx, gy = np.meshgrid(xs, ys)
    sx = inv.a * gx + inv.b * gy + inv.c
    sy = inv.d * gx + inv.e * gy + inv.f
    ix = np.floor(sx + 0.5).astype(np.int64)
    iy = np.floor(sy + 0.5).astype(np.int64)
    inside = (ix >= 0) & (ix < w) & (iy >= 0) & (iy < h)
    src = img.as_array()
    out = np.full((h, w, c), fill, dtype=np.uint8)
    out[inside] = src[iy[inside], ix[inside]]
    return Image(width=w, height=h, channels=c, pixels=out.reshape(-1))


def resize(img: Image, new_w: int, new_h: int) -> Image:
    """Nearest-neighbor resize: output (x, y) reads input (x*w//new_w, y*h//new_h)."""
    if new_w < 1 or new_h < 1:
        raise ValueError("target dimensions must be at least 1")
    src = img.as_array()
    col_idx = (np.arange(new_w, dtype=np.int64) * img.width) // new_w
    row_idx = (np.arange(new_h, dtype=np.int64) * img.height) // new_h
    out = src[row_idx][:, col_idx]
    return Image(width=new_w, height=new_h, channels=img.channels, pixels=out.reshape(-1))


def rescale(img: Image) -> NormalizedImage:
    """Map intensities to [0, 1] by dividing by 255."""
    vals = img.pixels.astype(np.float64) / 255.0
    return NormalizedImage(width=img.width, height=img.height, channels=img.channels, values=vals)


def flip_horizontal(img: Image) -> Image:
    """Mirror left-right: output (x, y) = input (width-1-x, y)."""
    out = img.as_array()[:, ::-1]
    return Image(
        width=img.width,
        height=img.height,
        channels=img.channels,
        pixels=np.ascontiguousarray(out).reshape(-1),
    )


def random_rotation(img: Image, rng: SplitMix64, max_deg: float, fill: int = 0) -> Image:
    """Rotate about the image center by an angle drawn uniform in [-max_deg, +max_deg]."""
    if max_deg < 0:
        raise ValueError("max_deg must be non-negative")
    from .affine import make_rotation

    theta = rng.uniform(-max_deg, max_deg)
    cx, cy = (img.width - 1) / 2.0, (img.height - 1) / 2.0
    return warp_affine(img, make_rotation(theta, cx, cy), fill=fill)
