#!/usr/bin/env python3
"""Desk-scale classifier experiment.

Generates the synthetic corpus, makes an 80/20 split, then compares the
baseline trained on raw images against one trained with four augmented
variants per image.  Prints validation accuracy and confusion for both.
"""

import argparse

from binsort.classifier import evaluate, train_baseline
from binsort.imaging import augment_one, split_dataset
from binsort.rng import SplitMix64
from binsort.simulator import generate_synthetic_corpus
from binsort.taxonomy import TrashCategory


def confusion_lines(report):
    slugs = [c.slug for c in TrashCategory]
    width = max(len(s) for s in slugs)
    for i, slug in enumerate(slugs):
        row = " ".join(f"{int(n):>3d}" for n in report.confusion[i])
        yield f"  {slug:<{width}} {row}"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--per-class", type=int, default=25)
    parser.add_argument("--split-seed", type=int, default=13)
    args = parser.parse_args()

    corpus = generate_synthetic_corpus(args.seed, args.per_class)
    split = split_dataset(corpus, 0.8, args.split_seed)
    print(f"corpus: {len(corpus)} images, split {len(split.train)}/{len(split.validation)}")

    plain = train_baseline(split.train)
    plain_report = evaluate(plain, split.validation)
    print(f"\nraw training set -> validation accuracy {plain_report.accuracy:.4f}")
    for line in confusion_lines(plain_report):
        print(line)

    root = SplitMix64(args.seed ^ 0xAAAA)
    augmented = list(split.train)
    for item in split.train:
        augmented.extend(augment_one(item, root.split()))
    boosted = train_baseline(augmented)
    boosted_report = evaluate(boosted, split.validation)
    print(
        f"\nwith 4 variants per image ({len(augmented)} images) -> "
        f"validation accuracy {boosted_report.accuracy:.4f}"
    )
    for line in confusion_lines(boosted_report):
        print(line)


if __name__ == "__main__":
    main()
