"""Seeded pseudo-random generator used throughout the project.

The algorithm is SplitMix64 (Steele, Lea, Flood 2014): a 64-bit counter
advanced by the golden-ratio increment, finalized by two xor-shift-multiply
rounds.  It is tiny, splittable, and trivially portable, so runs are
reproducible bit-for-bit from a single integer seed regardless of platform
or library versions.

Conventions fixed here and relied on by tests:

* ``next_float`` uses the top 53 bits of ``next_u64``, giving a double in
  ``[0, 1)``.
* ``uniform(lo, hi)`` is ``lo + (hi - lo) * next_float()``.
* ``below(n)`` is the multiply-shift reduction ``(next_u64() * n) >> 64``.
* ``shuffle`` is a backward Fisher-Yates drawing ``below(i + 1)``.
* ``split`` seeds a child generator from one ``next_u64`` draw.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """Deterministic 64-bit-state generator, splittable per work item."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.next_float()

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return (self.next_u64() * n) >> 64

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def split(self) -> "SplitMix64":
        """Derive an independent child generator; advances this one once."""
        return SplitMix64(self.next_u64())
