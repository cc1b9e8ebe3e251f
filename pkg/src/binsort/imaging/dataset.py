"""Labeled images and the stratified train/validation split."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..taxonomy import TrashCategory
from ..rng import SplitMix64
from .image import Image


@dataclass(frozen=True)
class LabeledImage:
    image: Image
    label: TrashCategory
    source_id: str

    def __post_init__(self):
        if not isinstance(self.label, TrashCategory):
            raise ValueError(f"label must be a TrashCategory, got {self.label!r}")


@dataclass(frozen=True)
class SplitResult:
    train: list[LabeledImage]
    validation: list[LabeledImage]


def split_dataset(
    items: list[LabeledImage], train_fraction: float, seed: int
) -> SplitResult:
    """Stratified split: per category, a seeded shuffle sends
    ``round(n * train_fraction)`` items to train, the rest to validation.

    Rounding is half-up.  Whenever a category has at least two items, at
    least one goes to validation.  Deterministic given ``seed``: one child
    generator is derived per taxonomy category (in ordinal order), so the
    assignment within a category does not depend on which other categories
    are present.
    """
    if not items:
        raise ValueError("cannot split an empty dataset")
    if not (0.0 < train_fraction < 1.0):
        raise ValueError("train_fraction must be strictly between 0 and 1")

    by_cat: dict[TrashCategory, list[LabeledImage]] = {cat: [] for cat in TrashCategory}
    for item in items:
        by_cat[item.label].append(item)

    root = SplitMix64(seed)
    train: list[LabeledImage] = []
    validation: list[LabeledImage] = []
    for cat in TrashCategory:
        child = root.split()
        group = by_cat[cat]
        if not group:
            continue
        shuffled = list(group)
        child.shuffle(shuffled)
        n = len(shuffled)
        n_train = math.floor(n * train_fraction + 0.5)
        if n >= 2:
            n_train = min(n_train, n - 1)
        train.extend(shuffled[:n_train])
        validation.extend(shuffled[n_train:])
    return SplitResult(train=train, validation=validation)
