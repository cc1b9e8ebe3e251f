import pytest

from binsort.imaging import LabeledImage, load_corpus, read_pnm, save_corpus, write_pnm
from binsort.rng import SplitMix64
from binsort.taxonomy import TrashCategory

from conftest import random_image


def test_pgm_round_trip(tmp_path, rng):
    img = random_image(rng, 7, 5, 1)
    path = tmp_path / "gray.pgm"
    write_pnm(img, path)
    assert read_pnm(path) == img
    assert path.read_bytes().startswith(b"P5\n7 5\n255\n")


def test_ppm_round_trip(tmp_path, rng):
    img = random_image(rng, 4, 6, 3)
    path = tmp_path / "color.ppm"
    write_pnm(img, path)
    assert read_pnm(path) == img
    assert path.read_bytes().startswith(b"P6\n4 6\n255\n")


def test_reader_skips_comments(tmp_path):
    raw = b"P5\n# a comment\n2 1\n# another\n255\n\x07\x09"
    path = tmp_path / "c.pgm"
    path.write_bytes(raw)
    img = read_pnm(path)
    assert (img.width, img.height) == (2, 1)
    assert list(img.pixels) == [7, 9]


def test_reader_rejects_bad_magic(tmp_path):
    path = tmp_path / "bad.pgm"
    path.write_bytes(b"P2\n1 1\n255\n0")
    with pytest.raises(ValueError):
        read_pnm(path)


def test_reader_rejects_truncated_raster(tmp_path):
    path = tmp_path / "short.pgm"
    path.write_bytes(b"P5\n2 2\n255\n\x00\x01")
    with pytest.raises(ValueError):
        read_pnm(path)


def test_corpus_round_trip(tmp_path):
    rng = SplitMix64(12)
    items = [
        LabeledImage(image=random_image(rng, 4, 4, 3), label=TrashCategory.CAN, source_id="can-0"),
        LabeledImage(image=random_image(rng, 4, 4, 1), label=TrashCategory.PEN, source_id="pen-0"),
        LabeledImage(image=random_image(rng, 4, 4, 3), label=TrashCategory.CAN, source_id="can-1"),
    ]
    save_corpus(items, tmp_path / "corpus")
    loaded = load_corpus(tmp_path / "corpus")
    assert {(it.source_id, it.label) for it in loaded} == {
        ("can-0", TrashCategory.CAN),
        ("can-1", TrashCategory.CAN),
        ("pen-0", TrashCategory.PEN),
    }
    by_id = {it.source_id: it.image for it in loaded}
    for item in items:
        assert by_id[item.source_id] == item.image


def test_load_corpus_rejects_unknown_directory(tmp_path):
    bad = tmp_path / "corpus" / "mystery_meat"
    bad.mkdir(parents=True)
    with pytest.raises(ValueError):
        load_corpus(tmp_path / "corpus")


def test_load_corpus_missing_root(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_corpus(tmp_path / "nope")
