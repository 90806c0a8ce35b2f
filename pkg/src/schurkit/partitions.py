"""Partitions, multipartitions, hooks, beta sets and symbols.

A partition is stored as a tuple of weakly decreasing positive integers;
the empty tuple is the empty partition.  A multipartition is a tuple of
partitions.  Rows, columns and components are 1-based everywhere.
"""

from __future__ import annotations

import itertools
from math import factorial
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Build a partition from an iterable, stripping trailing zeros."""
    p = tuple(int(v) for v in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"parts must be weakly decreasing, got {p}")
    if p and p[-1] < 0:
        raise ValueError(f"parts must be non-negative, got {p}")
    return p


def multipartition(components: Iterable[Iterable[int]]) -> Multipartition:
    """Build a multipartition (tuple of partitions)."""
    mp = tuple(partition(c) for c in components)
    if not mp:
        raise ValueError("a multipartition needs at least one component")
    return mp


def mp_size(mp: Multipartition) -> int:
    return sum(sum(lam) for lam in mp)


def mp_length(mp: Multipartition) -> int:
    """Maximum number of rows over the components."""
    return max((len(lam) for lam in mp), default=0)


def part(lam: Partition, i: int) -> int:
    """The i-th part (1-based), zero beyond the last row."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def conjugate(lam: Partition) -> Partition:
    """Column counts of the diagram: result_j = #{i : lam_i >= j}."""
    if not lam:
        return ()
    return tuple(sum(1 for v in lam if v >= j) for j in range(1, lam[0] + 1))


def conjugate_part(lam: Partition, j: int) -> int:
    """The j-th part of the conjugate, zero when j exceeds the first row."""
    return sum(1 for v in lam if v >= j)


def nodes(lam: Partition) -> Iterator[tuple[int, int]]:
    """All nodes (i, j) of the diagram, row by row."""
    for i, row in enumerate(lam, 1):
        for j in range(1, row + 1):
            yield (i, j)


def hook_length(lam: Partition, i: int, j: int) -> int:
    """Number of nodes at, right of and below (i, j): lam_i - i + lam'_j - j + 1."""
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"node ({i},{j}) outside the diagram of {lam}")
    return lam[i - 1] - i + conjugate_part(lam, j) - j + 1


def generalized_hook_length(lam: Partition, mu: Partition, i: int, j: int) -> int:
    """Mixed arm/leg statistic lam_i - i + mu'_j - j + 1; may be non-positive.

    The node must lie in the diagram of lam; mu is arbitrary and its
    conjugate contributes zero in columns beyond mu_1.  Coincides with
    the ordinary hook length when mu == lam.
    """
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"node ({i},{j}) outside the diagram of {lam}")
    return lam[i - 1] - i + conjugate_part(mu, j) - j + 1


def removable_nodes(lam: Partition) -> list[tuple[int, int]]:
    """The nodes (i, lam_i) whose removal leaves a partition."""
    out = []
    for i, row in enumerate(lam, 1):
        below = lam[i] if i < len(lam) else 0
        if row > below:
            out.append((i, row))
    return out


def remove_node(lam: Partition, i: int) -> Partition:
    """Remove the removable node in row i."""
    return partition(lam[: i - 1] + (lam[i - 1] - 1,) + lam[i:])


def beta_set(lam: Partition, length: int) -> tuple[int, ...]:
    """Beta numbers lam_i + L - i for i = 1..L, strictly decreasing.

    L must be at least the number of rows; the result determines both
    lam and L (its own length).
    """
    if length < len(lam):
        raise ValueError(f"L={length} too small for a partition of length {len(lam)}")
    return tuple(part(lam, i) + length - i for i in range(1, length + 1))


def partition_from_beta(beta: Sequence[int]) -> Partition:
    """Inverse of beta_set: recover the partition from its beta numbers."""
    length = len(beta)
    for a, b in zip(beta, beta[1:]):
        if a <= b:
            raise ValueError(f"beta numbers must be strictly decreasing, got {tuple(beta)}")
    if length and beta[-1] < 0:
        raise ValueError(f"beta numbers must be non-negative, got {tuple(beta)}")
    return partition(beta[i - 1] - length + i for i in range(1, length + 1))


def shift_beta(beta: Sequence[int]) -> tuple[int, ...]:
    """Increase L by one: add 1 to every entry and append a fresh 0."""
    return tuple(b + 1 for b in beta) + (0,)


def l_symbol(mp: Multipartition, length: int) -> tuple[tuple[int, ...], ...]:
    """The m x L matrix whose row s is the beta set of component s."""
    if length < mp_length(mp):
        raise ValueError(f"L={length} too small for a multipartition of length {mp_length(mp)}")
    return tuple(beta_set(lam, length) for lam in mp)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in decreasing lexicographic order: (n) first, (1,..,1) last."""
    if n == 0:
        yield ()
        return
    cap = n if max_part is None else min(max_part, n)
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def compositions(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Ordered m-tuples of non-negative integers summing to n, decreasing lex."""
    if m == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, m - 1):
            yield (first,) + rest


def enumerate_multipartitions(m: int, n: int) -> Iterator[Multipartition]:
    """All m-multipartitions of n, each exactly once.

    Order: decreasing lex on the size composition (|lam^1|,..,|lam^m|),
    then decreasing lex on each component's parts, last component
    varying fastest.  The order is fixed so that serialized output is
    stable across runs.
    """
    if m < 1:
        raise ValueError("level m must be at least 1")
    if n < 0:
        raise ValueError("size n must be non-negative")
    for comp in compositions(n, m):
        pools = [list(partitions_of(k)) for k in comp]
        for combo in itertools.product(*pools):
            yield combo


def permute_components(mp: Multipartition, sigma: Sequence[int]) -> Multipartition:
    """Move component s to position sigma(s); sigma is 1-based images."""
    m = len(mp)
    if sorted(sigma) != list(range(1, m + 1)):
        raise ValueError(f"{tuple(sigma)} is not a permutation of 1..{m}")
    out: list[Partition] = [()] * m
    for s in range(1, m + 1):
        out[sigma[s - 1] - 1] = mp[s - 1]
    return tuple(out)


def hook_product(lam: Partition) -> int:
    """Product of all hook lengths of the diagram."""
    prod = 1
    for i, j in nodes(lam):
        prod *= hook_length(lam, i, j)
    return prod


def num_standard_tableaux(mp: Multipartition) -> int:
    """Number of standard fillings of the multidiagram with 1..n.

    Equals multinomial(n; |lam^1|,..,|lam^m|) times the product of the
    per-component hook-length counts, i.e. n! over the product of all
    hook lengths.
    """
    n = mp_size(mp)
    denom = 1
    for lam in mp:
        denom *= hook_product(lam)
    count, rem = divmod(factorial(n), denom)
    if rem:
        raise ArithmeticError("hook product does not divide n!")
    return count


def multipartition_count(m: int, n: int) -> int:
    """Number of m-multipartitions of n via the partition-count convolution."""
    counts = [1] + [0] * n
    for _ in range(m):
        counts = _convolve_partition_counts(counts, n)
    return counts[n]


def _convolve_partition_counts(counts: list[int], n: int) -> list[int]:
    p = [_partition_count(k) for k in range(n + 1)]
    return [sum(counts[j] * p[k - j] for j in range(k + 1)) for k in range(n + 1)]


def _partition_count(n: int) -> int:
    table = [1] + [0] * n
    for k in range(1, n + 1):
        for v in range(k, n + 1):
            table[v] += table[v - k]
    return table[n]
