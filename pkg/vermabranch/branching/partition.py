"""Vector partition functions over finite multisets of integral weights."""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from functools import lru_cache

from ..algebra.exact import QQ, Rational, to_int
from ..errors import UsageError
from .cones import separating_functional

DEFAULT_SEARCH_BOUND = 16


@dataclass(frozen=True, slots=True)
class Multiplicity:
    """A nonnegative count, or the flag for infinitely many."""

    count: int = 0
    infinite: bool = False

    @classmethod
    def finite(cls, count: int) -> Multiplicity:
        return cls(count, False)

    def __add__(self, other: Multiplicity) -> Multiplicity:
        if self.infinite or other.infinite:
            return INFINITE
        return Multiplicity(self.count + other.count)

    def __bool__(self) -> bool:
        return self.infinite or self.count != 0

    def __str__(self) -> str:
        return "∞" if self.infinite else str(self.count)

    def to_json(self) -> int | str:
        return "inf" if self.infinite else self.count


INFINITE = Multiplicity(0, True)


@dataclass(frozen=True, slots=True)
class PartitionContext:
    """The vectors to partition with, plus a functional that is >= 1 on each of them."""

    vectors: tuple[tuple[int, ...], ...]
    functional: tuple[Rational, ...] | None

    @classmethod
    def build(cls, vectors: Sequence[Sequence[Rational | int]]) -> PartitionContext:
        integral = tuple(tuple(to_int(QQ(c)) for c in v) for v in vectors)
        if any(not any(v) for v in integral):
            raise UsageError("partition vectors must be nonzero")
        return cls(integral, separating_functional(integral) if integral else None)

    @property
    def zero_in_cone(self) -> bool:
        return bool(self.vectors) and self.functional is None


def kostant_partition(
    context: PartitionContext, target: Sequence[int], bound: int | None = None
) -> Multiplicity:
    """Number of ways to write ``target`` as a nonnegative integral combination.

    When zero lies in the cone of the vectors every representable target has infinitely
    many representations; representability is then searched with at most ``bound``
    summands. A finite ``bound`` also caps the number of summands in the ordinary count.
    """

    goal = tuple(int(c) for c in target)
    vectors = context.vectors
    if not vectors:
        return Multiplicity.finite(1 if not any(goal) else 0)
    if context.zero_in_cone:
        limit = DEFAULT_SEARCH_BOUND if bound is None else bound
        return INFINITE if _representable(vectors, goal, limit) else Multiplicity.finite(0)
    functional = context.functional
    assert functional is not None

    def level(point: tuple[int, ...]) -> Rational:
        return sum((h * c for h, c in zip(functional, point, strict=True)), QQ(0))

    @lru_cache(maxsize=None)
    def count(position: int, remainder: tuple[int, ...], budget: int) -> int:
        if position == len(vectors):
            return 1 if not any(remainder) else 0
        vector = vectors[position]
        total = 0
        current = remainder
        used = 0
        while level(current) >= 0 and used <= budget:
            total += count(position + 1, current, budget - used)
            current = tuple(r - v for r, v in zip(current, vector, strict=True))
            used += 1
        return total

    cap = bound if bound is not None else _natural_cap(level, goal)
    return Multiplicity.finite(count(0, goal, cap))


def naive_partition(vectors: Sequence[Sequence[int]], target: Sequence[int], limit: int) -> int:
    """Brute force count with each coefficient below ``limit``; used as a cross-check."""

    goal = tuple(target)
    total = 0

    def walk(position: int, remainder: tuple[int, ...]) -> None:
        nonlocal total
        if position == len(vectors):
            total += not any(remainder)
            return
        for times in range(limit):
            walk(
                position + 1,
                tuple(r - times * v for r, v in zip(remainder, vectors[position], strict=True)),
            )

    walk(0, goal)
    return total


def _natural_cap(level: Callable[[tuple[int, ...]], Rational], goal: tuple[int, ...]) -> int:
    # each summand raises the functional by at least one
    value = level(goal)
    return max(int(value.numerator) // int(value.denominator), 0)


def _representable(vectors: Sequence[tuple[int, ...]], goal: tuple[int, ...], limit: int) -> bool:
    seen = {tuple(0 for _ in goal)}
    frontier = deque([(tuple(0 for _ in goal), 0)])
    while frontier:
        point, used = frontier.popleft()
        if point == goal:
            return True
        if used == limit:
            continue
        for vector in vectors:
            step = tuple(p + v for p, v in zip(point, vector, strict=True))
            if step not in seen:
                seen.add(step)
                frontier.append((step, used + 1))
    return False
