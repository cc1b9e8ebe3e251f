"""Accuracy and confusion-matrix evaluation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..imaging.dataset import LabeledImage
from .baseline import Classifier, classify
from ..taxonomy import TrashCategory

N_CATEGORIES = len(TrashCategory)


@dataclass(frozen=True)
class EvalReport:
    accuracy: float
    confusion: np.ndarray  # (true, predicted) counts, 8x8

    def __post_init__(self):
        conf = np.asarray(self.confusion, dtype=np.int64)
        if conf.shape != (N_CATEGORIES, N_CATEGORIES):
            raise ValueError("confusion matrix must be 8x8")
        conf.flags.writeable = False
        object.__setattr__(self, "confusion", conf)

    @property
    def total(self) -> int:
        return int(self.confusion.sum())


def evaluate(model: Classifier, items: list[LabeledImage]) -> EvalReport:
    if not items:
        raise ValueError("nothing to evaluate")
    confusion = np.zeros((N_CATEGORIES, N_CATEGORIES), dtype=np.int64)
    for item in items:
        predicted = classify(model, item.image).category
        confusion[item.label.ordinal, predicted.ordinal] += 1
    accuracy = float(np.trace(confusion)) / len(items)
    return EvalReport(accuracy=accuracy, confusion=confusion)
