"""Vertex sets as integer bitmasks.

Every vertex set in this package is a plain Python int whose bit i is set
iff vertex i belongs to the set.  Graphs are capped at 64 vertices by the
table builders, so masks always fit machine words in CPython's small-int
fast path, but nothing here depends on that cap.
"""

from typing import Iterator, List


def mask_of(vertices) -> int:
    """Build a mask from an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: int) -> List[int]:
    return list(bits(mask))


def lowest_bit(mask: int) -> int:
    """Index of the least significant set bit.  mask must be nonzero."""
    return (mask & -mask).bit_length() - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, descending, including mask itself and 0."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def popcount(mask: int) -> int:
    return mask.bit_count()
