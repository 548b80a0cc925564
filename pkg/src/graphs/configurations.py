"""
Pebble configuration enumeration (stars and bars)
"""
from math import comb
from typing import Iterator, List

from .graph import Configuration
from ..utils.errors import InvalidGraphError


def count_configurations(n: int, size: int) -> int:
    """Number of compositions of size into n non-negative parts"""
    return comb(size + n - 1, n - 1)


def enumerate_configurations(n: int, size: int) -> Iterator[Configuration]:
    """
    Yield every composition of size into n non-negative parts exactly once

    Order is lexicographic descending on the count vector, so
    (size, 0, ..., 0) comes first and (0, ..., 0, size) last. Each call
    returns a fresh, independent generator.

    Args:
        n: Vertex count (>= 1)
        size: Total pebbles (>= 0)
    """
    if n < 1 or size < 0:
        raise InvalidGraphError(f"need n >= 1 and size >= 0, got n={n}, size={size}")
    counts: List[int] = [0] * n

    def fill(index: int, remaining: int) -> Iterator[Configuration]:
        if index == n - 1:
            counts[index] = remaining
            yield tuple(counts)
            return
        for value in range(remaining, -1, -1):
            counts[index] = value
            yield from fill(index + 1, remaining - value)

    return fill(0, size)
