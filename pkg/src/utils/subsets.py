from itertools import combinations
from typing import Iterable, Iterator, Sequence, TypeVar

T = TypeVar('T')


def to_mask(items: Iterable[int]) -> int:
    mask = 0
    for item in items:
        mask |= 1 << item
    return mask


def mask_items(mask: int) -> list[int]:
    items = []
    while mask:
        low = mask & -mask
        items.append(low.bit_length() - 1)
        mask ^= low
    return items


def nonempty_subsets_by_size(items: Sequence[T]) -> Iterator[tuple[T, ...]]:
    """
    All nonempty subsets, smallest first. Within one size the order is lexicographic
    in the positions of `items`, so a sorted input gives lexicographically sorted tuples.
    """
    for size in range(1, len(items) + 1):
        yield from combinations(items, size)
