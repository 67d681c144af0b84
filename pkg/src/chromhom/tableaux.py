"""Young tableaux, hook lengths, SYT/SSYT enumeration and Kostka numbers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property
from math import factorial, prod
from typing import Iterator, Sequence

from .partitions import Partition


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram, stored row by row."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        lengths = [len(r) for r in rows]
        if any(length == 0 for length in lengths):
            raise ValueError("tableau rows must be nonempty")
        # Partition() validates that row lengths weakly decrease.
        object.__setattr__(self, "_shape", Partition(tuple(lengths)))

    @classmethod
    def of_shape(cls, shape: Partition, rows: Sequence[Sequence[int]]) -> Tableau:
        t = cls(tuple(tuple(r) for r in rows))
        if t.shape != shape:
            raise ValueError(f"rows {rows} do not have shape {shape}")
        return t

    @property
    def shape(self) -> Partition:
        return self._shape

    @property
    def n(self) -> int:
        return self.shape.n

    def entry(self, r: int, c: int) -> int:
        return self.rows[r][c]

    def columns(self) -> list[tuple[int, ...]]:
        conj = self.shape.conjugate()
        return [tuple(self.rows[r][c] for r in range(conj[c])) for c in range(len(conj))]

    @cached_property
    def content(self) -> tuple[int, ...]:
        """``content[i]`` counts entries equal to ``i + 1``."""
        entries = [x for row in self.rows for x in row]
        if not entries:
            return ()
        top = max(entries)
        return tuple(entries.count(v) for v in range(1, top + 1))

    def is_ssyt(self) -> bool:
        if any(x < 1 for row in self.rows for x in row):
            return False
        for row in self.rows:
            if any(a > b for a, b in zip(row, row[1:])):
                return False
        for col in self.columns():
            if any(a >= b for a, b in zip(col, col[1:])):
                return False
        return True

    def is_syt(self) -> bool:
        return self.is_ssyt() and self.content == (1,) * self.n

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, r)) for r in self.rows)


def hook_lengths(shape: Partition) -> tuple[tuple[int, ...], ...]:
    """Hook length of every box, laid out like the diagram."""
    parts = shape.parts
    out = []
    for r, length in enumerate(parts):
        row = []
        for c in range(length):
            arm = length - c - 1
            leg = sum(1 for rr in range(r + 1, len(parts)) if parts[rr] > c)
            row.append(arm + leg + 1)
        out.append(tuple(row))
    return tuple(out)


@cache
def f_syt(shape: Partition) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    denom = prod(h for row in hook_lengths(shape) for h in row)
    num = factorial(shape.n)
    q, rem = divmod(num, denom)
    if rem:
        raise ArithmeticError(f"hook product {denom} does not divide {shape.n}! for {shape}")
    return q


def enumerate_syt(shape: Partition) -> list[Tableau]:
    """All SYT of ``shape``, sorted lexicographically by rows."""
    if shape.n == 0:
        return [Tableau(())]
    target = shape.parts
    found: list[tuple[tuple[int, ...], ...]] = []
    filling: list[list[int]] = [[] for _ in target]

    def place(value: int):
        if value > shape.n:
            found.append(tuple(tuple(r) for r in filling))
            return
        for r in range(len(target)):
            length = len(filling[r])
            if length < target[r] and (r == 0 or len(filling[r - 1]) > length):
                filling[r].append(value)
                place(value + 1)
                filling[r].pop()

    place(1)
    return [Tableau(rows) for rows in sorted(found)]


def enumerate_ssyt(shape: Partition, content: Sequence[int] | Partition) -> list[Tableau]:
    """All SSYT of ``shape`` whose entry ``v`` occurs ``content[v-1]`` times.

    Cells are filled in row-major order with a per-value budget, so the
    result comes out sorted lexicographically by reading word.
    """
    content = tuple(content)
    if sum(content) != shape.n:
        raise ValueError(f"|shape| = {shape.n} but |content| = {sum(content)}")
    if shape.n == 0:
        return [Tableau(())]
    parts = shape.parts
    cells = list(shape.cells())
    budget = list(content)
    grid: list[list[int]] = [[0] * p for p in parts]
    top = len(content)
    out: list[Tableau] = []

    def fill(idx: int):
        if idx == len(cells):
            out.append(Tableau(tuple(tuple(r) for r in grid)))
            return
        r, c = cells[idx]
        lo = grid[r][c - 1] if c else 1
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, top + 1):
            if budget[v - 1]:
                budget[v - 1] -= 1
                grid[r][c] = v
                fill(idx + 1)
                budget[v - 1] += 1
        grid[r][c] = 0

    fill(0)
    return out


def _horizontal_strips(outer: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """Partitions ``inner`` with ``outer / inner`` a horizontal strip of ``size`` boxes."""

    def rec(i: int, left: int, acc: tuple[int, ...]):
        if i == len(outer):
            if left == 0:
                yield acc
            return
        nxt = outer[i + 1] if i + 1 < len(outer) else 0
        # inner_i ranges over [outer_{i+1}, outer_i]
        for removed in range(0, min(left, outer[i] - nxt) + 1):
            yield from rec(i + 1, left - removed, acc + (outer[i] - removed,))

    for inner in rec(0, size, ()):
        yield tuple(p for p in inner if p)


@cache
def _kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not shape else 0
    last = content[-1]
    return sum(_kostka(inner, content[:-1]) for inner in _horizontal_strips(shape, last))


def kostka(shape: Partition, content: Sequence[int] | Partition) -> int:
    """Number of SSYT of ``shape`` and ``content`` (memoized).

    Counted by peeling horizontal strips for the largest value, which avoids
    materializing the tableaux; ``enumerate_ssyt`` gives the same count.
    """
    content = tuple(c for c in content)
    if sum(content) != shape.n:
        raise ValueError(f"|shape| = {shape.n} but |content| = {sum(content)}")
    if any(c < 0 for c in content):
        raise ValueError("content entries must be nonnegative")
    return _kostka(shape.parts, tuple(c for c in content if c))


def superstandard(shape: Partition) -> Tableau:
    """Row ``i`` filled with ``i + 1``: the unique SSYT of shape and content ``shape``."""
    return Tableau(tuple((i + 1,) * p for i, p in enumerate(shape.parts)))
