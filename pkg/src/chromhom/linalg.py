"""Exact sparse matrices and rank over Q or modulo primes near 2^31."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Literal

import numpy as np
import scipy.sparse as sp

log = logging.getLogger(__name__)

RankMode = Literal["exact", "modular", "auto"]

# "auto" runs exact arithmetic up to this dimension, modular beyond it.
EXACT_AUTO_LIMIT = 2000
# Beyond this, exact isotypic ranks are certified rather than eliminated directly.
DIRECT_EXACT_LIMIT = 600


@dataclass
class SparseMatrix:
    """Integer matrix stored as ``{(row, col): value}`` with no explicit zeros."""

    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), v in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
            if v:
                clean[(i, j)] = int(v)
        self.entries = clean

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return len(self.entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> SparseMatrix:
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> SparseMatrix:
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_scipy(cls, m) -> SparseMatrix:
        coo = sp.coo_matrix(m)
        entries: dict[tuple[int, int], int] = {}
        for i, j, v in zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist()):
            entries[(i, j)] = entries.get((i, j), 0) + int(v)
        return cls(coo.shape[0], coo.shape[1], entries)

    @classmethod
    def from_dense(cls, a) -> SparseMatrix:
        a = np.asarray(a)
        return cls(a.shape[0], a.shape[1], {(int(i), int(j)): int(a[i, j]) for i, j in zip(*np.nonzero(a))})

    def add(self, i: int, j: int, v: int) -> None:
        s = self.entries.get((i, j), 0) + v
        if s:
            self.entries[(i, j)] = s
        else:
            self.entries.pop((i, j), None)

    def to_scipy(self) -> sp.csr_matrix:
        if not self.entries:
            return sp.csr_matrix((self.rows, self.cols), dtype=np.int64)
        (ri, ci), vals = zip(*self.entries.keys()), list(self.entries.values())
        return sp.csr_matrix(
            (np.array(vals, dtype=np.int64), (np.array(ri), np.array(ci))), shape=self.shape
        )

    def to_dense(self) -> np.ndarray:
        a = np.zeros(self.shape, dtype=np.int64)
        for (i, j), v in self.entries.items():
            a[i, j] = v
        return a

    def row_dicts(self) -> list[dict[int, int]]:
        out: list[dict[int, int]] = [{} for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def transpose(self) -> SparseMatrix:
        return SparseMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def scale(self, c: int) -> SparseMatrix:
        return SparseMatrix(self.rows, self.cols, {k: c * v for k, v in self.entries.items()})

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict[tuple[int, int], int] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + a * b
        return SparseMatrix(self.rows, other.cols, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def is_zero(self) -> bool:
        return not self.entries


# ---------------------------------------------------------------- exact rank


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def rank_exact(rows: Iterable[dict[int, int]]) -> int:
    """Rank over Q of an integer matrix given as sparse row dicts.

    Fraction-free elimination: each reduction ``r <- p*r - c*pivot`` stays in
    Z and rows are divided by their content to keep entries small.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {k: v for k, v in row.items() if v}
        while r:
            col = min(r)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = _primitive(r)
                break
            a, b = piv[col], r[col]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {k: fa * v for k, v in r.items()}
            for k, v in piv.items():
                s = new.get(k, 0) - fb * v
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            r = _primitive(new)
    return len(pivots)


# -------------------------------------------------------------- modular rank

PRIME_FLOOR = 2**31 - 2**24
PRIME_CEIL = 2**31 - 1


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3.2e9."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pick_primes(seed: int | None = 0, count: int = 2) -> tuple[int, ...]:
    """Distinct primes in ``[2^31 - 2^24, 2^31)`` chosen reproducibly from ``seed``."""
    rng = random.Random(seed)
    chosen: list[int] = []
    while len(chosen) < count:
        q = rng.randrange(PRIME_FLOOR, PRIME_CEIL) | 1
        while not is_prime(q):
            q += 2
        if q < 2**31 and q not in chosen:
            chosen.append(q)
    return tuple(chosen)


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p), ``p < 2^31``, by vectorized elimination."""
    if p >= 2**31:
        raise ValueError("int64 elimination needs p < 2^31")
    m = np.mod(np.asarray(a, dtype=np.int64), p)
    if m.ndim != 2 or 0 in m.shape:
        return 0
    if m.shape[0] < m.shape[1]:
        m = np.ascontiguousarray(m.T)
    # keep only nonzero rows/cols
    m = m[m.any(axis=1)]
    rank = 0
    nrows, ncols = m.shape
    for c in range(ncols):
        if rank == nrows:
            break
        col = m[rank:, c]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        inv = pow(int(m[rank, c]), -1, p)
        prow = (m[rank, c:] * inv) % p
        m[rank, c:] = prow
        below = rank + 1 + np.flatnonzero(m[rank + 1 :, c])
        if below.size:
            f = m[below, c][:, None]
            m[np.ix_(below, np.arange(c, ncols))] = (m[below, c:] - f * prow[None, :]) % p
        rank += 1
    return rank


@dataclass
class RankBackend:
    """Chooses between exact and two-prime modular rank and keeps a log of what it did."""

    mode: RankMode = "auto"
    seed: int | None = 0
    exact_limit: int = EXACT_AUTO_LIMIT
    direct_exact_limit: int = DIRECT_EXACT_LIMIT
    primes: tuple[int, ...] = ()
    calls: dict[str, int] = field(default_factory=lambda: {"exact": 0, "modular": 0})
    disagreements: int = 0
    certified: int = 0
    certification_failures: int = 0

    def __post_init__(self):
        if self.mode not in ("exact", "modular", "auto"):
            raise ValueError(f"unknown rank mode {self.mode!r}")
        if not self.primes:
            self.primes = pick_primes(self.seed, 2)

    def use_exact(self, shape: tuple[int, int]) -> bool:
        if self.mode == "exact":
            return True
        if self.mode == "modular":
            return False
        return max(shape) <= self.exact_limit

    def rank(self, a, exact: bool | None = None) -> int:
        """Rank of an integer matrix (dense ndarray, scipy sparse, or SparseMatrix).

        ``exact=None`` defers to the mode; modular results are lower bounds
        that equal the rational rank unless both primes are unlucky.
        """
        shape = a.shape
        if 0 in shape:
            return 0
        if exact is None:
            exact = self.use_exact(shape)
        if exact:
            self.calls["exact"] += 1
            return rank_exact(_rows_of(a))
        self.calls["modular"] += 1
        dense = a.to_dense() if isinstance(a, SparseMatrix) else (a.toarray() if sp.issparse(a) else np.asarray(a))
        ranks = [rank_mod_p(dense, p) for p in self.primes]
        if len(set(ranks)) > 1:
            # rank mod p never exceeds the rational rank
            self.disagreements += 1
            log.warning("modular ranks disagree across primes %s: %s", self.primes, ranks)
        return max(ranks)

    def metadata(self) -> dict:
        return {
            "rank_mode": self.mode,
            "exact_limit": self.exact_limit,
            "direct_exact_limit": self.direct_exact_limit,
            "primes": [str(p) for p in self.primes],
            "exact_calls": self.calls["exact"],
            "modular_calls": self.calls["modular"],
            "prime_disagreements": self.disagreements,
            "certified_boundaries": self.certified,
            "certification_failures": self.certification_failures,
        }


def _rows_of(a) -> list[dict[int, int]]:
    if isinstance(a, SparseMatrix):
        return a.row_dicts()
    if sp.issparse(a):
        a = sp.csr_matrix(a)
        out = []
        for i in range(a.shape[0]):
            lo, hi = a.indptr[i], a.indptr[i + 1]
            out.append({int(j): int(v) for j, v in zip(a.indices[lo:hi], a.data[lo:hi]) if v})
        return out
    a = np.asarray(a)
    return [{int(j): int(row[j]) for j in np.flatnonzero(row)} for row in a]
