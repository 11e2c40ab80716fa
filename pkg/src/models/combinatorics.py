"""
Partition enumeration used for Fock bases and dimension oracles.
"""

from functools import lru_cache
from itertools import product
from typing import List, Optional, Sequence, Tuple

from sympy.utilities.iterables import partitions

Partition = Tuple[int, ...]


@lru_cache(maxsize=None)
def partitions_of(n: int, max_parts: Optional[int] = None) -> Tuple[Partition, ...]:
    """
    Partitions of n as weakly decreasing tuples, in reverse-lexicographic order.

    Args:
        n: The integer to partition
        max_parts: Upper bound on the number of parts

    Returns:
        Tuple of partitions; () is the only partition of 0
    """
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    if max_parts is not None and max_parts <= 0:
        return ()
    out = []
    for p in partitions(n, m=max_parts):
        parts = []
        for part, mult in sorted(dict(p).items(), reverse=True):
            parts.extend([part] * mult)
        out.append(tuple(parts))
    return tuple(sorted(out, reverse=True))


def partition_count(n: int, max_parts: Optional[int] = None) -> int:
    return len(partitions_of(n, max_parts))


def colored_partitions(n: int, colors: int) -> List[Tuple[Partition, ...]]:
    """
    Tuples of partitions, one per color, whose sizes add up to n.

    Ordered by the size vector (descending on the first color) and then by
    the partitions themselves.
    """
    if colors == 0:
        return [()] if n == 0 else []
    out = []
    for sizes in compositions(n, colors):
        out.extend(product(*(partitions_of(k) for k in sizes)))
    return out


def compositions(n: int, slots: int) -> List[Tuple[int, ...]]:
    """Weak compositions of n into the given number of slots, first slot descending."""
    if slots == 1:
        return [(n,)]
    out = []
    for first in range(n, -1, -1):
        for rest in compositions(n - first, slots - 1):
            out.append((first,) + rest)
    return out


def bounded_multiset_count(n: int, slots: Sequence[int]) -> int:
    """
    Number of ways to write n as a sum of non-negative integers placed in
    slots grouped by color, where slots of one color are unordered.

    Args:
        n: Total
        slots: Number of slots of each color

    Returns:
        The count
    """
    counts = [1] + [0] * n
    for k in slots:
        if k == 0:
            continue
        # multisets of k non-negative integers with sum s = partitions of s into at most k parts
        color = [partition_count(s, k) for s in range(n + 1)]
        counts = [sum(counts[i] * color[s - i] for i in range(s + 1)) for s in range(n + 1)]
    return counts[n]
