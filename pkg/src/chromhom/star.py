"""Closed-form H_{1,0} multiplicities for star graphs and the vanishing-conjecture checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterator

from .chain import ChainComplex, MultiplicityTable
from .graphs import star
from .linalg import RankBackend
from .partitions import Partition, parse_partition, star_shape
from .tableaux import f_syt


class FormulaDomainError(ValueError):
    """A closed form was evaluated where it does not apply."""


@dataclass(frozen=True)
class StarShape:
    """``lam = ell 2^k 1^(n - ell - 2k)`` on ``n`` boxes."""

    n: int
    ell: int
    k: int

    def __post_init__(self):
        if self.ell < 2 or self.k < 0 or self.n - self.ell - 2 * self.k < 0:
            raise FormulaDomainError(f"invalid star shape n={self.n}, ell={self.ell}, k={self.k}")

    @property
    def ones(self) -> int:
        return self.n - self.ell - 2 * self.k

    @property
    def partition(self) -> Partition:
        return star_shape(self.n, self.ell, self.k)

    @property
    def tail(self) -> Partition:
        """The shape below the first row, ``2^k 1^ones``."""
        return Partition((2,) * self.k + (1,) * self.ones)

    @classmethod
    def from_partition(cls, lam: Partition) -> StarShape:
        """Inverse of ``partition``; ``2^k 1^m`` reads as ``ell = 2`` with ``k - 1`` further 2-rows."""
        if not lam.parts or lam.parts[0] < 2 or lam.part(1) > 2:
            raise FormulaDomainError(f"{lam} is not of the form ell 2^k 1^m with ell >= 2")
        rest = lam.parts[1:]
        return cls(lam.n, lam.parts[0], rest.count(2))


def star_shapes(n: int) -> Iterator[StarShape]:
    """Every valid ``(ell, k)`` for ``n`` boxes, each partition once."""
    for ell in range(2, n + 1):
        for k in range(0, (n - ell) // 2 + 1):
            yield StarShape(n, ell, k)


def mult_general(shape: StarShape) -> int:
    """C(n-1, ell-1) f^{2^k 1^m} - f^{ell 2^k 1^m}; a negative value raises."""
    value = comb(shape.n - 1, shape.ell - 1) * f_syt(shape.tail) - f_syt(shape.partition)
    if value < 0:
        raise FormulaDomainError(f"negative multiplicity {value} for {shape}")
    return value


def mult_hook_case(n: int, ell: int) -> int:
    """Multiplicity of ``ell 2 1^(n-ell-2)``: C(n-2, ell)."""
    if not 2 <= ell <= n - 2:
        raise FormulaDomainError(f"need 2 <= ell <= n-2, got n={n}, ell={ell}")
    return comb(n - 2, ell)


def mult_two_column(n: int, k: int) -> int:
    """Multiplicity of ``2^k 1^(n-2k)``: (n-2k+1)(C(n-1,k-1) - C(n,k-1)/k).

    Evaluated in exact rationals; the 1/k term is not integral on its own.
    """
    if k < 1 or 2 * k > n:
        raise FormulaDomainError(f"need 1 <= k and 2k <= n, got n={n}, k={k}")
    value = (n - 2 * k + 1) * (Fraction(comb(n - 1, k - 1)) - Fraction(comb(n, k - 1), k))
    if value.denominator != 1:
        raise FormulaDomainError(f"non-integral value {value} for n={n}, k={k}")
    return int(value)


def predict_h10_star(n: int) -> MultiplicityTable:
    """H_{1,0}(star(n)) assuming every shape outside ell 2^k 1^m vanishes."""
    if n < 4:
        raise FormulaDomainError("prediction is defined for n >= 4")
    return MultiplicityTable(n, {s.partition: mult_general(s) for s in star_shapes(n)})


def _table(n: int, values: dict[str, int]) -> MultiplicityTable:
    return MultiplicityTable(n, {parse_partition(k): v for k, v in values.items()})


# H_{1,0} of stars on 4..7 vertices as published.
TABLE1: dict[int, MultiplicityTable] = {
    4: _table(4, {"2^2": 1}),
    5: _table(5, {"2^2 1": 3, "3 2": 1}),
    6: _table(6, {"2^2 1^2": 6, "2^3": 5, "3 2 1": 4, "4 2": 1}),
    7: _table(7, {"2^2 1^3": 10, "2^3 1": 16, "3 2 1^2": 10, "3 2^2": 9, "4 2 1": 5, "5 2": 1}),
}


@dataclass
class ConjectureReport:
    """Outcome of checking vanishing of H_{i,0}(star(n)) for ``i >= 2`` or ``lam_2 >= 3``."""

    n: int
    homology: dict[int, MultiplicityTable] = field(default_factory=dict)
    violations: list[tuple[int, Partition, int]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    @property
    def indices_checked(self) -> list[int]:
        return sorted(self.homology)

    def to_dict(self) -> dict:
        return {
            "n": str(self.n),
            "indices_checked": [str(i) for i in self.indices_checked],
            "violations": [
                {"i": str(i), "partition": str(lam), "multiplicity": str(m)} for i, lam, m in self.violations
            ],
            "homology": {str(i): t.to_records() for i, t in sorted(self.homology.items())},
        }


def is_conjecture_violation(i: int, lam: Partition, mult: int) -> bool:
    if mult == 0:
        return False
    if i == 0 and lam == Partition((1,) * lam.n):
        return False
    return i >= 2 or lam.part(1) >= 3


def check_conjecture(
    n: int, backend: RankBackend | None = None, allow_large: bool = False, complex_: ChainComplex | None = None
) -> ConjectureReport:
    """Compute H_{i,0}(star(n)) for all ``0 <= i <= n-1`` and list nonzero forbidden entries.

    A nonempty violation list is a finding, not an error.
    """
    cc = complex_ or ChainComplex(star(n), backend=backend, allow_large=allow_large)
    report = ConjectureReport(n)
    for i in range(0, n):
        table = cc.homology(i)
        report.homology[i] = table
        for lam, m in table.items():
            if is_conjecture_violation(i, lam, m):
                report.violations.append((i, lam, m))
    return report
