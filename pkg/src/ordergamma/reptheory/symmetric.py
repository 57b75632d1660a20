"""Characters of symmetric groups and standard Young tableaux."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from functools import cache

from ..errors import SizeMismatch

Partition = tuple[int, ...]


def _check_partition(lam: Sequence[int]) -> Partition:
    lam = tuple(int(x) for x in lam if x)
    if any(x < 0 for x in lam) or list(lam) != sorted(lam, reverse=True):
        raise ValueError(f"not a partition: {lam}")
    return lam


def symmetric_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """``chi^lam`` evaluated at a permutation of cycle type ``mu``.

    >>> symmetric_character((2, 1), (3,))
    -1
    """
    lam = _check_partition(lam)
    mu = tuple(sorted((int(x) for x in mu if x), reverse=True))
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| = {sum(lam)} but |{mu}| = {sum(mu)}")
    return _mn(lam, mu)


def _beta(lam: Partition) -> tuple[int, ...]:
    n = len(lam)
    return tuple(lam[i] + (n - 1 - i) for i in range(n))


def _from_beta(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    n = len(b)
    return tuple(x for x in (b[i] - (n - 1 - i) for i in range(n)) if x)


@cache
def _mn(lam: Partition, mu: Partition) -> int:
    # strip border strips of length mu[0] by sliding beads on the abacus
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    beta = _beta(lam)
    present = set(beta)
    total = 0
    for b in beta:
        if b - k >= 0 and b - k not in present:
            height = sum(1 for c in beta if b - k < c < b)
            moved = [c for c in beta if c != b] + [b - k]
            total += (-1) ** height * _mn(_from_beta(moved), rest)
    return total


def standard_tableaux(lam: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All standard Young tableaux of shape ``lam`` filled with ``1..|lam|``.

    Rows are listed top to bottom (English convention).
    """
    lam = _check_partition(lam)
    d = sum(lam)
    rows: list[list[int]] = [[] for _ in lam]

    def place(v: int):
        if v > d:
            yield tuple(tuple(r) for r in rows)
            return
        for i, length in enumerate(lam):
            if len(rows[i]) < length and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(v)
                yield from place(v + 1)
                rows[i].pop()

    yield from place(1)


def row_of(tableau: Sequence[Sequence[int]]) -> dict[int, int]:
    return {v: i for i, row in enumerate(tableau) for v in row}


def tableau_descents(tableau: Sequence[Sequence[int]]) -> list[int]:
    """``i`` is a descent when ``i + 1`` sits in a strictly lower row than ``i``."""
    row = row_of(tableau)
    d = len(row)
    return [i for i in range(1, d) if row[i + 1] > row[i]]


def hook_length_count(lam: Sequence[int]) -> int:
    """Number of standard tableaux of shape ``lam`` (the degree of ``chi^lam``)."""
    from math import factorial

    lam = _check_partition(lam)
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, li in enumerate(lam):
        for j in range(li):
            hooks *= li - j + conj[j] - i - 1
    return factorial(sum(lam)) // hooks
