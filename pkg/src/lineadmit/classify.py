"""The class C_k of an arrangement: fewest lines covering all points of multiplicity >= 3."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .arrangement import Arrangement, ArrangementError, multiple_points


@dataclass(frozen=True)
class CkClassification:
    k: int
    minimal_covers: tuple[tuple[int, ...], ...]
    concurrent_flag: bool = False

    @property
    def label(self) -> str:
        return f"C_{self.k}"


def covers(arr: Arrangement, s: Iterable[int]) -> bool:
    s = set(s)
    for i in s:
        if not 0 <= i < arr.n_lines:
            raise ArrangementError(f"line index {i} out of range")
    return all(s.intersection(mp.incident) for mp in multiple_points(arr))


def common_point(arr: Arrangement, idx: Iterable[int]):
    """The point shared by all the given lines, or None."""
    idx = set(idx)
    for ip in arr.points:
        if idx.issubset(ip.incident):
            return ip
    return None


def classify(arr: Arrangement) -> CkClassification:
    """Exhaustive search by increasing cover size; every minimal cover is kept."""
    targets = [frozenset(mp.incident) for mp in multiple_points(arr)]
    if not targets:
        return CkClassification(0, ((),), False)
    for size in range(1, arr.n_lines + 1):
        found = tuple(
            s for s in combinations(range(arr.n_lines), size)
            if all(t.intersection(s) for t in targets)
        )
        if found:
            concurrent = size == 3 and any(common_point(arr, s) is not None for s in found)
            return CkClassification(size, found, concurrent)
    raise AssertionError("the full line set always covers")
