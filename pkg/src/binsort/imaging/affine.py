"""Affine maps over pixel coordinates.

A matrix ``(a, b, c, d, e, f)`` sends ``(x, y)`` to
``(a*x + b*y + c, d*x + e*y + f)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

SINGULAR_EPS = 1e-9

# cos/sin snapped for exact quarter turns so 90/180/270 degree rotations
# produce exact coefficients instead of ~1e-16 trig residue
_EXACT_TURNS = {0.0: (1.0, 0.0), 90.0: (0.0, 1.0), 180.0: (-1.0, 0.0), 270.0: (0.0, -1.0)}


@dataclass(frozen=True)
class AffineMatrix:
    a: float
    b: float
    c: float
    d: float
    e: float
    f: float

    def __post_init__(self):
        for coeff in (self.a, self.b, self.c, self.d, self.e, self.f):
            if not math.isfinite(coeff):
                raise ValueError("affine coefficients must be finite")

    @property
    def determinant(self) -> float:
        return self.a * self.e - self.b * self.d

    def is_invertible(self) -> bool:
        return abs(self.determinant) > SINGULAR_EPS

    def apply(self, x: float, y: float) -> tuple[float, float]:
        return (self.a * x + self.b * y + self.c, self.d * x + self.e * y + self.f)


IDENTITY = AffineMatrix(1.0, 0.0, 0.0, 0.0, 1.0, 0.0)


def make_translation(dx: float, dy: float) -> AffineMatrix:
    """Shift by (dx, dy) pixels."""
    if not (math.isfinite(dx) and math.isfinite(dy)):
        raise ValueError("translation offsets must be finite")
    return AffineMatrix(1.0, 0.0, float(dx), 0.0, 1.0, float(dy))


def make_rotation(angle_deg: float, cx: float = 0.0, cy: float = 0.0) -> AffineMatrix:
    """Counterclockwise rotation by ``angle_deg`` keeping (cx, cy) fixed."""
    if not (math.isfinite(angle_deg) and math.isfinite(cx) and math.isfinite(cy)):
        raise ValueError("rotation parameters must be finite")
    key = angle_deg % 360.0
    if key in _EXACT_TURNS:
        cos_t, sin_t = _EXACT_TURNS[key]
    else:
        theta = math.radians(angle_deg)
        cos_t, sin_t = math.cos(theta), math.sin(theta)
    a, b = cos_t, -sin_t
    d, e = sin_t, cos_t
    c = cx - (a * cx + b * cy)
    f = cy - (d * cx + e * cy)
    return AffineMatrix(a, b, c, d, e, f)


def make_shear(shx: float, shy: float = 0.0, cx: float = 0.0, cy: float = 0.0) -> AffineMatrix:
    """Shear with factors (shx, shy) keeping (cx, cy) fixed."""
    for v in (shx, shy, cx, cy):
        if not math.isfinite(v):
            raise ValueError("shear parameters must be finite")
    a, b, d, e = 1.0, float(shx), float(shy), 1.0
    c = cx - (a * cx + b * cy)
    f = cy - (d * cx + e * cy)
    return AffineMatrix(a, b, c, d, e, f)


def compose(outer: AffineMatrix, inner: AffineMatrix) -> AffineMatrix:
    """Map applying ``inner`` first, then ``outer``."""
    return AffineMatrix(
        outer.a * inner.a + outer.b * inner.d,
        outer.a * inner.b + outer.b * inner.e,
        outer.a * inner.c + outer.b * inner.f + outer.c,
        outer.d * inner.a + outer.e * inner.d,
        outer.d * inner.b + outer.e * inner.e,
        outer.d * inner.c + outer.e * inner.f + outer.f,
    )


def invert(m: AffineMatrix) -> AffineMatrix:
    det = m.determinant
    if abs(det) <= SINGULAR_EPS:
        raise ValueError("matrix is singular, cannot invert")
    return AffineMatrix(
        m.e / det,
        -m.b / det,
        (m.b * m.f - m.e * m.c) / det,
        -m.d / det,
        m.a / det,
        (m.d * m.c - m.a * m.f) / det,
    )
