"""Binary PGM (P5) and PPM (P6) files, and the directory-per-category corpus.

Corpus layout: ``<root>/<category-slug>/<source_id>.pgm`` for grayscale or
``.ppm`` for RGB.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from ..taxonomy import TrashCategory
from .dataset import LabeledImage
from .image import Image

_MAGIC_BY_CHANNELS = {1: b"P5", 3: b"P6"}
_CHANNELS_BY_MAGIC = {b"P5": 1, b"P6": 3}
_EXT_BY_CHANNELS = {1: ".pgm", 3: ".ppm"}


def write_pnm(img: Image, path: str | Path) -> None:
    path = Path(path)
    header = b"%s\n%d %d\n255\n" % (_MAGIC_BY_CHANNELS[img.channels], img.width, img.height)
    path.write_bytes(header + img.tobytes())


def read_pnm(path: str | Path) -> Image:
    data = Path(path).read_bytes()
    magic = data[:2]
    if magic not in _CHANNELS_BY_MAGIC:
        raise ValueError(f"{path}: not a binary PGM/PPM file (magic {magic!r})")
    channels = _CHANNELS_BY_MAGIC[magic]
    fields, pos = _read_header_fields(data, 2, count=3)
    width, height, maxval = fields
    if maxval != 255:
        raise ValueError(f"{path}: only maxval 255 supported, got {maxval}")
    n = width * height * channels
    raw = data[pos : pos + n]
    if len(raw) != n:
        raise ValueError(f"{path}: truncated pixel data ({len(raw)} of {n} bytes)")
    return Image(width=width, height=height, channels=channels,
                 pixels=np.frombuffer(raw, dtype=np.uint8))


def _read_header_fields(data: bytes, pos: int, count: int) -> tuple[list[int], int]:
    """Parse whitespace-separated ints, skipping '#' comments, then one
    whitespace byte before the raster."""
    fields: list[int] = []
    while len(fields) < count:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos < len(data) and data[pos] == ord("#"):
            while pos < len(data) and data[pos] != ord("\n"):
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        if start == pos:
            raise ValueError("malformed PNM header")
        fields.append(int(data[start:pos]))
    return fields, pos + 1  # skip the single whitespace after maxval


def save_corpus(items: list[LabeledImage], root: str | Path) -> None:
    root = Path(root)
    for item in items:
        cat_dir = root / item.label.slug
        cat_dir.mkdir(parents=True, exist_ok=True)
        write_pnm(item.image, cat_dir / f"{item.source_id}{_EXT_BY_CHANNELS[item.image.channels]}")


def load_corpus(root: str | Path) -> list[LabeledImage]:
    """Load every image under ``root``; unknown directories are an error."""
    root = Path(root)
    if not root.is_dir():
        raise FileNotFoundError(f"corpus directory not found: {root}")
    by_slug = {cat.slug: cat for cat in TrashCategory}
    items: list[LabeledImage] = []
    for cat_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        cat = by_slug.get(cat_dir.name)
        if cat is None:
            raise ValueError(f"{cat_dir}: not a known trash category")
        for path in sorted(cat_dir.iterdir()):
            if path.suffix not in (".pgm", ".ppm"):
                continue
            items.append(LabeledImage(image=read_pnm(path), label=cat, source_id=path.stem))
    return items
