from .image import Image, NormalizedImage
from .affine import AffineMatrix, make_translation, make_rotation, make_shear, compose, invert
from .ops import warp_affine, resize, rescale, flip_horizontal, random_rotation
from .augment import augment_one
from .dataset import LabeledImage, SplitResult, split_dataset
from .pnm import read_pnm, write_pnm, load_corpus, save_corpus

__all__ = [
    "Image",
    "NormalizedImage",
    "AffineMatrix",
    "make_translation",
    "make_rotation",
    "make_shear",
    "compose",
    "invert",
    "warp_affine",
    "resize",
    "rescale",
    "flip_horizontal",
    "random_rotation",
    "augment_one",
    "LabeledImage",
    "SplitResult",
    "split_dataset",
    "read_pnm",
    "write_pnm",
    "load_corpus",
    "save_corpus",
]
