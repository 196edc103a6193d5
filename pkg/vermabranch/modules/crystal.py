"""Lakshmibai-Seshadri path crystals.

Paths are piecewise linear with directions written in fundamental-weight coordinates of
the (Levi) Cartan matrix. Root operators follow the usual min-of-height rule, so the
crystal of a dominant weight is generated from the straight path by the lowering operators.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass

from ..algebra.exact import QQ, Rational, to_int
from ..algebra.roots import longest_word
from ..errors import ConstructionError

Direction = tuple[int, ...]
Segment = tuple[Direction, Rational]


@dataclass(frozen=True, slots=True)
class LSPath:
    segments: tuple[Segment, ...]

    @classmethod
    def straight(cls, weight: Sequence[int]) -> LSPath:
        return cls(((tuple(weight), QQ(1)),))

    @property
    def endpoint(self) -> tuple[Rational, ...]:
        size = len(self.segments[0][0])
        total = [QQ(0)] * size
        for direction, length in self.segments:
            total = [t + length * d for t, d in zip(total, direction, strict=True)]
        return tuple(total)


class PathCrystal:
    """Crystal of LS paths of a dominant integral weight."""

    def __init__(self, cartan: Sequence[Sequence[int]], highest: Sequence[int]) -> None:
        if any(value < 0 for value in highest):
            raise ConstructionError(f"{tuple(highest)} is not dominant")
        self.cartan = tuple(tuple(row) for row in cartan)
        self.highest = LSPath.straight(highest)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def heights(self, path: LSPath, index: int) -> list[Rational]:
        values = [QQ(0)]
        for direction, length in path.segments:
            values.append(values[-1] + length * direction[index])
        return values

    def epsilon(self, path: LSPath, index: int) -> int:
        return to_int(-min(self.heights(path, index)))

    def phi(self, path: LSPath, index: int) -> int:
        heights = self.heights(path, index)
        return to_int(heights[-1] - min(heights))

    def lower(self, path: LSPath, index: int) -> LSPath | None:
        """Apply f_index, or return None."""

        heights = self.heights(path, index)
        minimum = min(heights)
        if heights[-1] - minimum < 1:
            return None
        start = max(k for k, h in enumerate(heights) if h == minimum)
        target = minimum + 1
        segments: list[Segment] = list(path.segments[:start])
        for k in range(start, len(path.segments)):
            direction, length = path.segments[k]
            if heights[k + 1] < target:
                segments.append((self._reflect(direction, index), length))
                continue
            portion = (target - heights[k]) / direction[index]
            segments.append((self._reflect(direction, index), portion))
            if length - portion > 0:
                segments.append((direction, length - portion))
            segments.extend(path.segments[k + 1 :])
            break
        return LSPath(_merge(segments))

    def raise_(self, path: LSPath, index: int) -> LSPath | None:
        """Apply e_index, or return None."""

        heights = self.heights(path, index)
        minimum = min(heights)
        if minimum > -1:
            return None
        stop = min(k for k, h in enumerate(heights) if h == minimum)
        target = minimum + 1
        segments: list[Segment] = list(path.segments[stop:])
        head: list[Segment] = []
        for k in range(stop - 1, -1, -1):
            direction, length = path.segments[k]
            if heights[k] < target:
                head.append((self._reflect(direction, index), length))
                continue
            portion = length * (heights[k] - target) / (heights[k] - heights[k + 1])
            head.append((self._reflect(direction, index), length - portion))
            if portion > 0:
                head.append((direction, portion))
            head.extend(reversed(path.segments[:k]))
            break
        return LSPath(_merge([*reversed(head), *segments]))

    def elements(self) -> tuple[LSPath, ...]:
        """All paths, breadth first from the highest weight path."""

        seen = {self.highest}
        order = [self.highest]
        queue = deque([self.highest])
        while queue:
            path = queue.popleft()
            for index in range(self.rank):
                lowered = self.lower(path, index)
                if lowered is not None and lowered not in seen:
                    seen.add(lowered)
                    order.append(lowered)
                    queue.append(lowered)
        return tuple(order)

    def string(self, path: LSPath, word: Sequence[int]) -> tuple[int, ...]:
        """String parametrization of ``path`` along ``word``."""

        exponents = []
        current = path
        for index in word:
            steps = self.epsilon(current, index)
            exponents.append(steps)
            for _ in range(steps):
                raised = self.raise_(current, index)
                assert raised is not None
                current = raised
        if current != self.highest:
            raise ConstructionError("word does not raise the path to the highest weight")
        return tuple(exponents)

    def longest_word(self) -> tuple[int, ...]:
        return longest_word(self.cartan)

    def _reflect(self, direction: Direction, index: int) -> Direction:
        value = direction[index]
        return tuple(d - value * a for d, a in zip(direction, self.cartan[index], strict=True))


def _merge(segments: Sequence[Segment]) -> tuple[Segment, ...]:
    merged: list[Segment] = []
    for direction, length in segments:
        if length == 0:
            continue
        if merged and merged[-1][0] == direction:
            merged[-1] = (direction, merged[-1][1] + length)
        else:
            merged.append((direction, length))
    return tuple(merged)
