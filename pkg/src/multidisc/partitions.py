"""Integer partitions: enumeration, conjugation, and the classification order."""

from __future__ import annotations

Partition = tuple[int, ...]


def is_valid_partition(parts) -> bool:
    """True when ``parts`` is a nonempty weakly decreasing tuple of positive ints."""
    parts = tuple(parts)
    if not parts:
        return False
    if any(not isinstance(p, int) or p < 1 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in descending lexicographic order.

    The first entry is ``(n,)`` and the last is ``(1,) * n``.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    result: list[Partition] = []
    prefix: list[int] = []

    def extend(remaining: int, cap: int) -> None:
        if remaining == 0:
            result.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            extend(remaining - part, part)
            prefix.pop()

    extend(n, n)
    return result


def conjugate(parts: Partition) -> Partition:
    """Conjugate partition: entry i counts the parts that are >= i+1.

    Transposes the Young diagram; applying it twice gives back the input.
    """
    parts = tuple(parts)
    if not is_valid_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    return tuple(sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1))


def lex_compare(p: Partition, q: Partition) -> int:
    """Lexicographic comparison of two partitions of the same integer.

    Shorter part sequences are padded with zeros, so e.g. (3, 2) > (3, 1, 1).
    Returns -1, 0, or 1.
    """
    p, q = tuple(p), tuple(q)
    if sum(p) != sum(q):
        raise ValueError(f"partitions of different integers: {p!r} vs {q!r}")
    width = max(len(p), len(q))
    a = p + (0,) * (width - len(p))
    b = q + (0,) * (width - len(q))
    return (a > b) - (a < b)


def classification_order(n: int) -> list[tuple[Partition, Partition]]:
    """Pairs (mu, gamma) with gamma = conjugate(mu), sorted by gamma descending lex.

    Every partition of ``n`` appears exactly once in each column.  The gamma
    column starts at ``(n,)`` and ends at ``(1,) * n``; since conjugation is an
    involution, pairing each enumerated gamma with its conjugate already yields
    the required order without a separate sort.
    """
    return [(conjugate(g), g) for g in partitions_of(n)]
