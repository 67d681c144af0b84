"""Chromatic symmetric function in the monomial and Schur bases."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Literal

from .graphs import Graph
from .partitions import Partition, partitions_of
from .tableaux import kostka

CSF_MAX_N = 8

Basis = Literal["monomial", "schur"]


class SizeBoundError(ValueError):
    """Input exceeds a configured size cap."""


@dataclass(frozen=True)
class CsfExpansion:
    basis: Basis
    n: int
    coefficients: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in ("monomial", "schur"):
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.coefficients.items():
            if lam.n != self.n:
                raise ValueError(f"{lam} is not a partition of {self.n}")
            if self.basis == "monomial" and c < 0:
                raise ValueError("monomial coefficients of a chromatic symmetric function are nonnegative")
            if c:
                clean[lam] = int(c)
        object.__setattr__(self, "coefficients", clean)

    def __getitem__(self, lam: Partition) -> int:
        return self.coefficients.get(lam, 0)

    def items(self):
        """Nonzero terms in reverse-lexicographic order."""
        return sorted(self.coefficients.items(), key=lambda kv: kv[0].parts, reverse=True)

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.items())


def chromatic_symmetric_function(G: Graph, max_n: int = CSF_MAX_N) -> CsfExpansion:
    """X_G in the monomial basis.

    The coefficient of m_mu counts proper colorings in which color ``i`` is
    used exactly ``mu_i`` times, colors drawn from ``1..len(mu)``.
    """
    if G.n > max_n:
        raise SizeBoundError(f"n={G.n} exceeds the chromatic symmetric function bound {max_n}")
    adj: list[list[int]] = [[] for _ in range(G.n + 1)]
    for u, v in G.edges:
        adj[u].append(v)
        adj[v].append(u)
    coeffs: dict[Partition, int] = {}
    for mu in partitions_of(G.n):
        budget = list(mu.parts)
        color = [0] * (G.n + 1)

        def count(v: int) -> int:
            if v > G.n:
                return 1
            total = 0
            for c in range(1, len(budget) + 1):
                if budget[c - 1] and all(color[w] != c for w in adj[v] if w < v):
                    budget[c - 1] -= 1
                    color[v] = c
                    total += count(v + 1)
                    color[v] = 0
                    budget[c - 1] += 1
            return total

        coeffs[mu] = count(1)
    return CsfExpansion("monomial", G.n, coeffs)


def csf_to_schur(e: CsfExpansion) -> CsfExpansion:
    """Invert the unitriangular Kostka matrix: m-coefficients to s-coefficients.

    Reverse-lexicographic order extends dominance, so every s_lam that can
    contribute to m_mu has been resolved before mu is reached.
    """
    if e.basis != "monomial":
        raise ValueError("expected a monomial-basis expansion")
    schur: dict[Partition, int] = {}
    for mu in partitions_of(e.n):
        c = e[mu] - sum(cl * kostka(lam, mu) for lam, cl in schur.items())
        schur[mu] = c
    return CsfExpansion("schur", e.n, schur)


def schur_to_monomial(e: CsfExpansion) -> CsfExpansion:
    if e.basis != "schur":
        raise ValueError("expected a Schur-basis expansion")
    mono = {mu: sum(c * kostka(lam, mu) for lam, c in e.coefficients.items()) for mu in partitions_of(e.n)}
    return CsfExpansion("monomial", e.n, mono)


def monomial_at_ones(mu: Partition, k: int) -> int:
    """m_mu(1, ..., 1) with ``k`` ones: distinct rearrangements of ``mu`` padded to length ``k``."""
    if len(mu) > k:
        return 0
    mults = Counter(mu.parts)
    return factorial(k) // (factorial(k - len(mu)) * prod(factorial(m) for m in mults.values()))


def chromatic_polynomial_from_csf(e: CsfExpansion, k: int) -> int:
    """Number of proper colorings with ``k`` colors, read off X_G."""
    if e.basis != "monomial":
        e = schur_to_monomial(e)
    return sum(c * monomial_at_ones(mu, k) for mu, c in e.coefficients.items())
