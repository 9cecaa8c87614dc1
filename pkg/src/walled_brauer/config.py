"""Parameter sweeps shared by the experiment scripts."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Sweep:
    """All ``(r, s)`` with ``min_total <= r+s <= max_total`` crossed with ``n_values``."""

    max_total: int = 5
    min_total: int = 1
    n_values: tuple[int, ...] = (1, 2, 3, 4, 5)

    def __post_init__(self):
        if self.min_total < 0 or self.max_total < self.min_total:
            raise ValueError("need 0 <= min_total <= max_total")
        if any(n < 1 for n in self.n_values):
            raise ValueError("n must be positive")

    def pairs(self) -> list[tuple[int, int]]:
        return [
            (r, total - r)
            for total in range(self.min_total, self.max_total + 1)
            for r in range(total, -1, -1)
        ]

    def points(self) -> list[tuple[int, int, int]]:
        return [(r, s, n) for r, s in self.pairs() for n in self.n_values]


@dataclass(frozen=True)
class ShadingConfig:
    r: int = 2
    s: int = 2
    n_values: tuple[int, ...] = (1, 2, 3, 4)
    killed: str = "#"
    kept: str = "."


@dataclass(frozen=True)
class AcceptanceConfig:
    criteria: tuple[int, ...] = field(default_factory=lambda: tuple(range(1, 13)))
