import numpy as np
import pytest

from binsort.imaging import Image
from binsort.rng import SplitMix64


def make_image(rows, channels=1):
    """Image from nested lists: rows of pixels, each pixel an int or a
    channel tuple."""
    arr = np.asarray(rows, dtype=np.uint8)
    if arr.ndim == 2 and channels == 1:
        arr = arr[:, :, None]
    return Image.from_array(arr)


def random_image(rng: SplitMix64, width: int, height: int, channels: int = 1) -> Image:
    px = [rng.below(256) for _ in range(width * height * channels)]
    return Image(width=width, height=height, channels=channels, pixels=px)


@pytest.fixture
def rng():
    return SplitMix64(0xC0FFEE)
