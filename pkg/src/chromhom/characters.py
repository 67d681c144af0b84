"""Irreducible characters of the symmetric group (Murnaghan-Nakayama) and class sizes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache
from math import factorial, prod
from typing import Sequence

from .partitions import Partition, partitions_of


@dataclass(frozen=True)
class ClassLabel:
    """A conjugacy class of S_n, named by its cycle type."""

    cycle_type: Partition

    @property
    def n(self) -> int:
        return self.cycle_type.n

    def __str__(self) -> str:
        return str(self.cycle_type)


def _as_partition(mu) -> Partition:
    if isinstance(mu, ClassLabel):
        return mu.cycle_type
    if isinstance(mu, Partition):
        return mu
    return Partition.of(mu)


def _beta_set(parts: tuple[int, ...]) -> tuple[int, ...]:
    k = len(parts)
    return tuple(p + (k - 1 - i) for i, p in enumerate(parts))


def _from_beta(beta: tuple[int, ...]) -> tuple[int, ...]:
    k = len(beta)
    parts = tuple(b - (k - 1 - i) for i, b in enumerate(beta))
    return tuple(p for p in parts if p)


@cache
def _mn(parts: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not parts else 0
    r, rest = cycles[0], cycles[1:]
    beta = _beta_set(parts)
    occupied = set(beta)
    total = 0
    # a rim hook of length r <-> moving a bead from b to the free position b - r;
    # its height is the number of beads strictly between.
    for idx, b in enumerate(beta):
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beta if target < x < b)
        new_beta = tuple(sorted((x if j != idx else target for j, x in enumerate(beta)), reverse=True))
        total += (-1) ** height * _mn(_from_beta(new_beta), rest)
    return total


def character(lam: Partition, mu: ClassLabel | Partition | Sequence[int]) -> int:
    """chi_lam evaluated on the class of cycle type ``mu``."""
    mu = _as_partition(mu)
    if lam.n != mu.n:
        raise ValueError(f"|lam| = {lam.n} differs from |mu| = {mu.n}")
    return _mn(lam.parts, mu.parts)


def z_factor(mu: ClassLabel | Partition) -> int:
    """Centralizer order prod_i i^{m_i} m_i!."""
    mu = _as_partition(mu)
    return prod(i**m * factorial(m) for i, m in Counter(mu.parts).items())


def class_size(mu: ClassLabel | Partition) -> int:
    mu = _as_partition(mu)
    return factorial(mu.n) // z_factor(mu)


def cycle_type(perm: Sequence[int]) -> Partition:
    """Cycle type of a permutation given in one-line notation on 0..n-1 or 1..n."""
    n = len(perm)
    offset = 1 if n and min(perm) == 1 else 0
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x] - offset
            length += 1
        lengths.append(length)
    return Partition.of(lengths)


def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    return {(lam, mu): character(lam, mu) for lam in partitions_of(n) for mu in partitions_of(n)}
