"""Four-variant augmentation: one input image yields four new ones."""

from __future__ import annotations

from ..rng import SplitMix64
from .affine import make_shear, make_translation
from .dataset import LabeledImage
from .ops import flip_horizontal, random_rotation, warp_affine

MAX_TRANSLATE_FRACTION = 0.10
MAX_ROTATION_DEG = 25.0
MAX_SHEAR = 0.20


def augment_one(item: LabeledImage, rng: SplitMix64, fill: int = 0) -> list[LabeledImage]:
    """Produce the four augmented variants of ``item``.

    Variants, in order, with their draws from ``rng``:

    0. translation, dx then dy uniform within ±10% of width/height
    1. rotation about the center, angle uniform within ±25 degrees
    2. horizontal shear about the center, factor uniform within ±0.2
    3. horizontal flip (no draw)

    Labels are copied; output ids are ``<source_id>-aug<k>``.
    """
    img = item.image
    cx, cy = (img.width - 1) / 2.0, (img.height - 1) / 2.0

    dx = rng.uniform(-MAX_TRANSLATE_FRACTION * img.width, MAX_TRANSLATE_FRACTION * img.width)
    dy = rng.uniform(-MAX_TRANSLATE_FRACTION * img.height, MAX_TRANSLATE_FRACTION * img.height)
    translated = warp_affine(img, make_translation(dx, dy), fill=fill)

    rotated = random_rotation(img, rng, MAX_ROTATION_DEG, fill=fill)

    shear = rng.uniform(-MAX_SHEAR, MAX_SHEAR)
    sheared = warp_affine(img, make_shear(shear, 0.0, cx, cy), fill=fill)

    flipped = flip_horizontal(img)

    return [
        LabeledImage(image=out, label=item.label, source_id=f"{item.source_id}-aug{k}")
        for k, out in enumerate((translated, rotated, sheared, flipped))
    ]
