"""Integer partitions: the immutable value type, text formats, and enumeration."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cache, cached_property
from typing import Iterable, Iterator


class PartitionParseError(ValueError):
    """Raised for malformed partition text; ``position`` is a 0-based column."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} at column {position + 1} in {text!r}")


@dataclass(frozen=True, order=False)
class Partition:
    """A weakly decreasing tuple of positive integers.

    >>> Partition((3, 2, 2)).n
    7
    >>> str(Partition.parse("3 2^2"))
    '3,2,2'
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> Partition:
        """Sort arbitrary positive parts into a partition."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_exponents(cls, pairs: Iterable[tuple[int, int]]) -> Partition:
        """Build ``i1^j1 i2^j2 ...`` from ``(part, multiplicity)`` pairs."""
        parts: list[int] = []
        for part, mult in pairs:
            parts.extend([part] * mult)
        return cls.of(parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        return parse_partition(text)

    @cached_property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero past the end."""
        return self.parts[i] if i < len(self.parts) else 0

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def exponent_pairs(self) -> list[tuple[int, int]]:
        """``[(part, multiplicity), ...]`` with parts decreasing."""
        counts = Counter(self.parts)
        return [(p, counts[p]) for p in sorted(counts, reverse=True)]

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def dominates(self, other: Partition) -> bool:
        """Dominance order ``self >= other`` for partitions of the same size."""
        if self.n != other.n:
            raise ValueError("dominance compares partitions of equal size")
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self.part(i)
            b += other.part(i)
            if a < b:
                return False
        return True

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, length in enumerate(self.parts):
            for c in range(length):
                yield r, c

    def exponent_str(self) -> str:
        """Exponent notation, e.g. ``3 2^2`` or ``2^2 1^3``; the empty partition is ``0``."""
        if not self.parts:
            return "0"
        return " ".join(str(p) if m == 1 else f"{p}^{m}" for p, m in self.exponent_pairs())

    def compact_str(self) -> str:
        """Concatenated exponent form, e.g. ``32^2`` or ``2^21^3``."""
        if not self.parts:
            return "0"
        return "".join(str(p) if m == 1 else f"{p}^{m}" for p, m in self.exponent_pairs())

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "0"

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def sort_key(self) -> tuple[int, ...]:
        """Key for reverse-lexicographic listings: sort with ``reverse=True``."""
        return self.parts


EMPTY = Partition(())

_TOKEN = re.compile(r"\s*(\d+)(?:\s*\^\s*(\d+))?\s*")


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,2"``, ``"3 2^2"`` or ``"2^2 1^3"``.

    ``"0"`` and the empty string denote the empty partition. Parts given in
    exponent or space-separated form may appear in any order; a comma list
    must already be weakly decreasing.
    """
    stripped = text.strip()
    if stripped in ("", "0", "()", "∅"):
        return EMPTY
    if "," in stripped:
        parts = []
        pos = 0
        for piece in text.split(","):
            start = pos + (len(piece) - len(piece.lstrip()))
            if not piece.strip():
                raise PartitionParseError(text, start, "empty part")
            if not piece.strip().isdigit():
                bad = next(i for i, ch in enumerate(piece.strip()) if not ch.isdigit())
                raise PartitionParseError(text, start + bad, f"unexpected character {piece.strip()[bad]!r}")
            value = int(piece)
            if value < 1:
                raise PartitionParseError(text, start, "parts must be positive")
            if parts and value > parts[-1]:
                raise PartitionParseError(text, start, "parts must be weakly decreasing")
            parts.append(value)
            pos += len(piece) + 1
        return Partition(tuple(parts))
    pairs = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PartitionParseError(text, pos, f"unexpected character {text[pos]!r}")
        part, mult = int(m.group(1)), int(m.group(2) or 1)
        if part < 1:
            raise PartitionParseError(text, m.start(1), "parts must be positive")
        if mult < 1:
            raise PartitionParseError(text, m.start(2), "exponent must be positive")
        pairs.append((part, mult))
        pos = m.end()
    return Partition.from_exponents(pairs)


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@cache
def _partitions_tuple(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order (``(n)`` first, ``1^n`` last)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions_tuple(n))


def star_shape(n: int, ell: int, k: int) -> Partition:
    """The partition ``ell 2^k 1^(n - ell - 2k)``."""
    ones = n - ell - 2 * k
    if ell < 2 or k < 0 or ones < 0:
        raise ValueError(f"no partition ell 2^k 1^m with n={n}, ell={ell}, k={k}")
    return Partition((ell,) + (2,) * k + (1,) * ones)
