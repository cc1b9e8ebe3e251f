"""Nearest-centroid baseline classifier over 32x32 grayscale features.

The feature vector of an image is: resize to 32x32 (nearest neighbor),
average the channels, divide by 255, flatten row-major.  Training stores
one per-category mean vector; prediction picks the centroid at minimum
Euclidean distance, breaking ties toward the lower category ordinal.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

import numpy as np

from ..imaging.dataset import LabeledImage
from ..imaging.image import Image
from ..imaging.ops import resize
from ..taxonomy import TrashCategory

FEATURE_SIDE = 32
FEATURE_DIM = FEATURE_SIDE * FEATURE_SIDE

MODEL_MAGIC = b"BINSORT-MODEL v1"


class MissingClassError(ValueError):
    """Raised when training data lacks one of the taxonomy categories."""

    def __init__(self, category: TrashCategory):
        super().__init__(f"no training images for category {category.slug}")
        self.category = category


@dataclass(frozen=True)
class ClassificationResult:
    category: TrashCategory
    confidence: float

    def __post_init__(self):
        if not (0.0 <= self.confidence <= 1.0):
            raise ValueError("confidence must lie in [0, 1]")


class Classifier(Protocol):
    """Anything that can turn an image into a category prediction."""

    name: str

    def classify(self, img: Image) -> ClassificationResult: ...


def features(img: Image) -> np.ndarray:
    """32x32 grayscale feature vector with components in [0, 1]."""
    small = resize(img, FEATURE_SIDE, FEATURE_SIDE)
    gray = small.as_array().astype(np.float64).mean(axis=2)
    return gray.reshape(-1) / 255.0


@dataclass(frozen=True)
class BaselineModel:
    """Per-category centroids, ordered by category ordinal."""

    categories: tuple[TrashCategory, ...]
    centroids: np.ndarray  # shape (len(categories), FEATURE_DIM)

    name: str = "nearest-centroid"

    def __post_init__(self):
        cents = np.asarray(self.centroids, dtype=np.float64)
        if cents.shape != (len(self.categories), FEATURE_DIM):
            raise ValueError("centroid matrix shape does not match category list")
        if cents.size and (cents.min() < 0.0 or cents.max() > 1.0):
            raise ValueError("centroid components must lie in [0, 1]")
        if list(self.categories) != sorted(self.categories, key=lambda c: c.ordinal):
            raise ValueError("categories must be in ordinal order")
        if len(set(self.categories)) != len(self.categories):
            raise ValueError("duplicate category in model")
        cents.flags.writeable = False
        object.__setattr__(self, "centroids", cents)

    def classify(self, img: Image) -> ClassificationResult:
        vec = features(img)
        dists = np.sqrt(((self.centroids - vec) ** 2).sum(axis=1))
        winner = int(np.argmin(dists))  # first minimum = lowest ordinal
        z = dists - dists.min()
        weights = np.exp(-z)
        confidence = float(weights[winner] / weights.sum())
        return ClassificationResult(category=self.categories[winner], confidence=confidence)


def train_baseline(train: list[LabeledImage]) -> BaselineModel:
    """Average the feature vectors of each category's images."""
    if not train:
        raise ValueError("training set is empty")
    sums = {cat: np.zeros(FEATURE_DIM) for cat in TrashCategory}
    counts = {cat: 0 for cat in TrashCategory}
    for item in train:
        sums[item.label] += features(item.image)
        counts[item.label] += 1
    for cat in TrashCategory:
        if counts[cat] == 0:
            raise MissingClassError(cat)
    cents = np.stack([sums[cat] / counts[cat] for cat in TrashCategory])
    return BaselineModel(categories=tuple(TrashCategory), centroids=cents)


def classify(model: Classifier, img: Image) -> ClassificationResult:
    if img.width < 1 or img.height < 1:
        raise ValueError("malformed image")
    return model.classify(img)


def save_model(model: BaselineModel, path: str | Path) -> None:
    """Write the documented v1 layout: magic line, counts line, one slug
    per line, then centroids as little-endian float64."""
    lines = [MODEL_MAGIC, b"%d %d" % (len(model.categories), FEATURE_DIM)]
    lines += [cat.slug.encode("ascii") for cat in model.categories]
    header = b"\n".join(lines) + b"\n"
    body = model.centroids.astype("<f8").tobytes()
    Path(path).write_bytes(header + body)


def load_model(path: str | Path) -> BaselineModel:
    data = Path(path).read_bytes()
    if not data.startswith(MODEL_MAGIC + b"\n"):
        raise ValueError(f"{path}: not a {MODEL_MAGIC.decode()} file")
    pos = len(MODEL_MAGIC) + 1
    end = data.index(b"\n", pos)
    n_cats, dim = (int(v) for v in data[pos:end].split())
    if dim != FEATURE_DIM:
        raise ValueError(f"{path}: unsupported feature dimension {dim}")
    cats = []
    pos = end + 1
    for _ in range(n_cats):
        end = data.index(b"\n", pos)
        cats.append(TrashCategory.from_slug(data[pos:end].decode("ascii")))
        pos = end + 1
    body = data[pos:]
    expected = n_cats * dim * struct.calcsize("<d")
    if len(body) != expected:
        raise ValueError(f"{path}: centroid payload is {len(body)} bytes, expected {expected}")
    cents = np.frombuffer(body, dtype="<f8").reshape(n_cats, dim)
    return BaselineModel(categories=tuple(cats), centroids=cents)
