"""Procedural labeled corpus: one drawable motif per trash category.

Every image is 64x64 RGB.  Categories differ in background tone and in the
shape, position, and brightness of the foreground motif, so they stay
separable in 32x32 grayscale feature space by construction.  Per-image
position jitter and pixel noise come from generators split off the corpus
seed, making the corpus byte-identical for a given seed.
"""

from __future__ import annotations

import numpy as np

from ..taxonomy import TrashCategory
from ..imaging.dataset import LabeledImage
from ..imaging.image import Image
from ..rng import SplitMix64

SIDE = 64
NOISE_SPAN = 12  # uniform pixel noise in [-12, 12]
JITTER = 3  # motif offset in [-3, 3] per axis

_X, _Y = np.meshgrid(np.arange(SIDE), np.arange(SIDE))


def _base(rgb: tuple[int, int, int]) -> np.ndarray:
    img = np.empty((SIDE, SIDE, 3), dtype=np.float64)
    img[:, :] = rgb
    return img


def _paint(img: np.ndarray, mask: np.ndarray, rgb: tuple[int, int, int]) -> None:
    img[mask] = rgb


def _draw_motif(cat: TrashCategory, jx: int, jy: int) -> np.ndarray:
    x, y = _X - jx, _Y - jy
    if cat is TrashCategory.PLASTIC_BOTTLE:
        img = _base((205, 225, 240))
        body = (x >= 26) & (x <= 37) & (y >= 12) & (y <= 55)
        neck = (x >= 29) & (x <= 34) & (y >= 5) & (y < 12)
        _paint(img, body | neck, (25, 80, 190))
    elif cat is TrashCategory.CAN:
        img = _base((150, 145, 140))
        disc = (x - 32) ** 2 + (y - 32) ** 2 <= 14**2
        _paint(img, disc, (210, 60, 50))
    elif cat is TrashCategory.PAPER:
        img = _base((70, 65, 75))
        page = (x >= 16) & (x <= 47) & (y >= 8) & (y <= 55)
        _paint(img, page, (240, 240, 232))
    elif cat is TrashCategory.PEN:
        img = _base((195, 205, 170))
        band = np.abs(x - y) <= 3
        _paint(img, band, (30, 30, 45))
    elif cat is TrashCategory.PLASTIC_BAG:
        img = _base((250, 245, 250))
        tri = (y >= 16) & (y <= 56) & ((y - 16) >= 1.1 * np.abs(x - 32))
        _paint(img, tri, (160, 70, 170))
    elif cat is TrashCategory.STYROFOAM_CONTAINER:
        img = _base((35, 40, 38))
        box = (x >= 12) & (x <= 51) & (y >= 22) & (y <= 42)
        _paint(img, box, (225, 228, 222))
    elif cat is TrashCategory.FOOD_PACKET:
        img = _base((245, 200, 110))
        stripes = (x >= 10) & (x <= 53) & (y >= 14) & (y <= 50) & ((y // 6) % 2 == 0)
        _paint(img, stripes, (175, 55, 25))
    else:  # PLASTIC_GLASS
        img = _base((215, 240, 245))
        cup = (y >= 12) & (y <= 52) & (np.abs(x - 32) <= 8 + 0.22 * (y - 12))
        _paint(img, cup, (45, 155, 170))
    return img


def generate_synthetic_corpus(seed: int, per_class: int) -> list[LabeledImage]:
    """``per_class`` images for each of the 8 categories, seed-deterministic."""
    if per_class < 1:
        raise ValueError("per_class must be at least 1")
    root = SplitMix64(seed)
    items: list[LabeledImage] = []
    for cat in TrashCategory:
        for i in range(per_class):
            child = root.split()
            jx = child.below(2 * JITTER + 1) - JITTER
            jy = child.below(2 * JITTER + 1) - JITTER
            noise_rng = np.random.Generator(np.random.PCG64(child.next_u64()))
            img = _draw_motif(cat, jx, jy)
            noise = noise_rng.integers(-NOISE_SPAN, NOISE_SPAN + 1, size=img.shape)
            pixels = np.clip(img + noise, 0, 255).astype(np.uint8)
            items.append(
                LabeledImage(
                    image=Image.from_array(pixels),
                    label=cat,
                    source_id=f"{cat.slug}-{i:04d}",
                )
            )
    return items
