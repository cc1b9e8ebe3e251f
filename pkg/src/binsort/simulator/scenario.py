"""Scripted item arrivals for the simulator.

Scenario files are JSON::

    {
      "seed": 7,
      "capacities": {"recyclable": 3, "non_recyclable": 5},
      "items": [{"t": 1.0, "image": "can-0001", "category": "can"}, ...],
      "faults": [{"t": 9.5, "port": "camera"}]
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..taxonomy import BinKind, TrashCategory, bin_for
from ..imaging.dataset import LabeledImage
from ..rng import SplitMix64


class ScenarioError(ValueError):
    pass


@dataclass(frozen=True)
class ScenarioItem:
    arrival_time: float
    image_id: str
    true_category: TrashCategory


@dataclass(frozen=True)
class FaultInjection:
    time: float
    port: str


@dataclass(frozen=True)
class Scenario:
    seed: int
    items: tuple[ScenarioItem, ...]
    capacities: dict[BinKind, int]
    faults: tuple[FaultInjection, ...] = field(default_factory=tuple)

    def __post_init__(self):
        times = [item.arrival_time for item in self.items]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ScenarioError("arrival times must be strictly increasing")
        for kind in BinKind:
            if self.capacities.get(kind, 0) < 1:
                raise ScenarioError(f"capacity for {kind.slug} must be at least 1")

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "capacities": {kind.slug: self.capacities[kind] for kind in BinKind},
            "items": [
                {"t": it.arrival_time, "image": it.image_id, "category": it.true_category.slug}
                for it in self.items
            ],
            "faults": [{"t": f.time, "port": f.port} for f in self.faults],
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "Scenario":
        try:
            items = tuple(
                ScenarioItem(
                    arrival_time=float(entry["t"]),
                    image_id=str(entry["image"]),
                    true_category=TrashCategory.from_slug(entry["category"]),
                )
                for entry in raw.get("items", [])
            )
            capacities = {
                BinKind.from_slug(slug): int(v) for slug, v in raw.get("capacities", {}).items()
            }
            faults = tuple(
                FaultInjection(time=float(entry["t"]), port=str(entry["port"]))
                for entry in raw.get("faults", [])
            )
            return cls(seed=int(raw.get("seed", 0)), items=items, capacities=capacities, faults=faults)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ScenarioError):
                raise
            raise ScenarioError(f"malformed scenario: {exc}") from exc


def load_scenario(path: str | Path) -> Scenario:
    with open(path, "r", encoding="utf-8") as fh:
        return Scenario.from_dict(json.load(fh))


def save_scenario(scenario: Scenario, path: str | Path) -> None:
    Path(path).write_text(json.dumps(scenario.to_dict(), indent=2, sort_keys=True) + "\n")


def scenario_from_corpus(
    items: list[LabeledImage],
    seed: int,
    capacities: dict[BinKind, int],
    count: int | None = None,
    spacing: float = 10.0,
) -> Scenario:
    """Draw ``count`` items (with replacement) from a corpus at fixed spacing."""
    if not items:
        raise ScenarioError("corpus is empty")
    rng = SplitMix64(seed)
    count = count if count is not None else len(items)
    chosen = [items[rng.below(len(items))] for _ in range(count)]
    scripted = tuple(
        ScenarioItem(
            arrival_time=spacing * (i + 1),
            image_id=item.source_id,
            true_category=item.label,
        )
        for i, item in enumerate(chosen)
    )
    return Scenario(seed=seed, items=scripted, capacities=dict(capacities))


def expected_bin(item: ScenarioItem) -> BinKind:
    return bin_for(item.true_category)
