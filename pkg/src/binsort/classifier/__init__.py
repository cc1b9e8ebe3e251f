from ..taxonomy import TrashCategory, BinKind, bin_for
from .baseline import (
    BaselineModel,
    ClassificationResult,
    Classifier,
    MissingClassError,
    classify,
    load_model,
    save_model,
    train_baseline,
)
from .evaluate import EvalReport, evaluate
from .oracle import GroundTruthOracle

__all__ = [
    "TrashCategory",
    "BinKind",
    "bin_for",
    "BaselineModel",
    "ClassificationResult",
    "Classifier",
    "MissingClassError",
    "classify",
    "train_baseline",
    "save_model",
    "load_model",
    "EvalReport",
    "evaluate",
    "GroundTruthOracle",
]
