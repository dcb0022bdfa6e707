"""Two-colorings of set families and posets."""

from dataclasses import dataclass
from typing import Mapping


@dataclass(frozen=True)
class Partition:
    """A total 2-coloring, keyed by member name or poset element."""

    assignment: Mapping[object, int]

    def __post_init__(self):
        bad = {k for k, v in self.assignment.items() if v not in (0, 1)}
        if bad:
            raise ValueError(f"colors must be 0 or 1, got bad keys {sorted(map(repr, bad))[:3]}")

    def color(self, key):
        return self.assignment[key]

    def side(self, i):
        return frozenset(k for k, v in self.assignment.items() if v == i)

    def is_total_on(self, keys):
        return all(k in self.assignment for k in keys)

    def restrict(self, keys):
        keys = set(keys)
        return Partition({k: v for k, v in self.assignment.items() if k in keys})

    def __len__(self):
        return len(self.assignment)
