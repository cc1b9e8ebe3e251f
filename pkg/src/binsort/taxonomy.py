"""The eight trash categories and their recyclable / non-recyclable split."""

from __future__ import annotations

import enum


class TrashCategory(enum.Enum):
    PLASTIC_BOTTLE = 0
    CAN = 1
    PAPER = 2
    PEN = 3
    PLASTIC_BAG = 4
    STYROFOAM_CONTAINER = 5
    FOOD_PACKET = 6
    PLASTIC_GLASS = 7

    @property
    def ordinal(self) -> int:
        return self.value

    @property
    def slug(self) -> str:
        """Lowercase identifier used in corpus directories and wire formats."""
        return self.name.lower()

    @classmethod
    def from_slug(cls, slug: str) -> "TrashCategory":
        try:
            return cls[slug.upper()]
        except KeyError:
            raise ValueError(f"unknown trash category: {slug!r}") from None


class BinKind(enum.Enum):
    RECYCLABLE = "recyclable"  # Bin 1
    NON_RECYCLABLE = "non_recyclable"  # Bin 2

    @property
    def slug(self) -> str:
        return self.value

    @classmethod
    def from_slug(cls, slug: str) -> "BinKind":
        for kind in cls:
            if kind.value == slug:
                return kind
        raise ValueError(f"unknown bin kind: {slug!r}")


_RECYCLABLE = frozenset(
    {
        TrashCategory.PLASTIC_BOTTLE,
        TrashCategory.CAN,
        TrashCategory.PAPER,
        TrashCategory.PEN,
    }
)


def bin_for(cat: TrashCategory) -> BinKind:
    """Bin 1 takes plastic bottles, cans, paper, and pens; Bin 2 the rest."""
    return BinKind.RECYCLABLE if cat in _RECYCLABLE else BinKind.NON_RECYCLABLE
