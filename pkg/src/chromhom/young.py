"""Specht multiplicities of an image from Young-subgroup fixed points.

For a representation W and the Young subgroup Y_mu,

    dim W^{Y_mu}          = sum_lam K_{lam, mu}  m_lam(W)
    dim W^{Y_mu, sign}    = sum_lam K_{lam', mu} m_lam(W)

If W = im(d) with d equivariant between permutation modules, both
dimensions are ranks of d restricted to (signed) orbit sums, which are small
sparse integer matrices. Solving the unitriangular systems top-down (trivial
side) or bottom-up (sign side) recovers every m_lam without class sums.
"""

from __future__ import annotations

from math import factorial, prod

import numpy as np
import scipy.sparse as sp

from .linalg import RankBackend, SparseMatrix
from .partitions import Partition, partitions_of
from .tableaux import kostka


def _segments(mu: Partition) -> list[tuple[int, int]]:
    out, start = [], 0
    for p in mu.parts:
        out.append((start, start + p))
        start += p
    return out


class OrbitData:
    """Orbits of Y_mu on a layer basis given by ``(summand_id, word)`` rows."""

    def __init__(self, words: np.ndarray, summand: np.ndarray, mu: Partition):
        n = words.shape[1]
        sorted_w = words.copy()
        sign = np.ones(words.shape[0], dtype=np.int64)
        repeats = np.zeros(words.shape[0], dtype=bool)
        for a, b in _segments(mu):
            seg = words[:, a:b]
            s = np.sort(seg, axis=1)
            sorted_w[:, a:b] = s
            if b - a > 1:
                repeats |= (s[:, 1:] == s[:, :-1]).any(axis=1)
                inv = np.zeros(words.shape[0], dtype=np.int64)
                for x in range(b - a):
                    for y in range(x + 1, b - a):
                        inv += seg[:, x] > seg[:, y]
                sign *= np.where(inv % 2, -1, 1)
        weights = n ** np.arange(n, dtype=np.int64)
        keys = summand * n**n + sorted_w @ weights
        _, self.orbit = np.unique(keys, return_inverse=True)
        self.count = int(self.orbit.max()) + 1 if len(keys) else 0
        self.is_rep = (words == sorted_w).all(axis=1)
        # a repeated block label means an odd stabilizer element: no signed orbit sum
        self.alive = ~repeats
        self.sign = np.where(self.alive, sign, 0)
        alive_orbits = np.zeros(self.count, dtype=bool)
        alive_orbits[self.orbit[self.alive]] = True
        self.alive_index = np.cumsum(alive_orbits) - 1
        self.alive_count = int(alive_orbits.sum())


def restricted_matrix(d: SparseMatrix, dom: OrbitData, cod: OrbitData, twisted: bool) -> sp.csr_matrix:
    """Matrix of ``d`` on (signed) orbit sums, read off at codomain representatives."""
    coo = d.to_scipy().tocoo()
    r, c, v = coo.row, coo.col, coo.data
    if twisted:
        keep = cod.is_rep[r] & cod.alive[r] & dom.alive[c]
        rows = cod.alive_index[cod.orbit[r[keep]]]
        cols = dom.alive_index[dom.orbit[c[keep]]]
        vals = v[keep] * dom.sign[c[keep]]
        shape = (cod.alive_count, dom.alive_count)
    else:
        keep = cod.is_rep[r]
        rows, cols, vals = cod.orbit[r[keep]], dom.orbit[c[keep]], v[keep]
        shape = (cod.count, dom.count)
    m = sp.coo_matrix((vals, (rows, cols)), shape=shape).tocsr()
    m.sum_duplicates()
    m.eliminate_zeros()
    return m


def _split_point(n: int) -> int:
    """Index into ``partitions_of(n)``: earlier shapes use fixed points, later ones the sign twist."""
    lams = partitions_of(n)
    cost_triv = [1 / prod(factorial(p) for p in lam.parts) for lam in lams]
    cost_sign = [1 / prod(factorial(p) for p in lam.conjugate().parts) for lam in lams]
    best, best_k = None, 0
    for k in range(len(lams) + 1):
        cost = max(cost_triv[:k] + cost_sign[k:], default=0)
        if best is None or cost < best:
            best, best_k = cost, k
    return best_k


def image_multiplicities(
    d: SparseMatrix,
    dom_words: np.ndarray,
    dom_summand: np.ndarray,
    cod_words: np.ndarray,
    cod_summand: np.ndarray,
    n: int,
    backend: RankBackend | None = None,
) -> dict[Partition, int]:
    """``m_lam(im d)`` for every ``lam`` of ``n``."""
    backend = backend or RankBackend()
    lams = partitions_of(n)
    if d.nnz == 0:
        return {lam: 0 for lam in lams}
    k = _split_point(n)
    mult: dict[Partition, int] = {}

    def rank_for(mu: Partition, twisted: bool) -> int:
        dom = OrbitData(dom_words, dom_summand, mu)
        cod = OrbitData(cod_words, cod_summand, mu)
        m = restricted_matrix(d, dom, cod, twisted)
        return backend.rank(m) if m.nnz else 0

    for lam in lams[:k]:
        r = rank_for(lam, twisted=False)
        mult[lam] = r - sum(kostka(nu, lam) * m for nu, m in mult.items())
    lower: dict[Partition, int] = {}
    for lam in reversed(lams[k:]):
        conj = lam.conjugate()
        s = rank_for(conj, twisted=True)
        lower[lam] = s - sum(kostka(nu.conjugate(), conj) * m for nu, m in lower.items())
    mult.update(lower)
    for lam, m in mult.items():
        if m < 0:
            raise ArithmeticError(f"negative image multiplicity {m} for {lam}")
    return {lam: mult[lam] for lam in lams}
