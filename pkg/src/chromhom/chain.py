"""Degree-0 chromatic symmetric chain complex in tabloid bases.

Each spanning subgraph ``F`` contributes the permutation module spanned by
tabloids of shape ``lambda(F)``: ordered set partitions whose ``j``-th block
is the image of row ``j`` of the canonical tableau ``T(F)``. Removing an edge
maps a tabloid to the sum of all its refinements along the split component.
Specht multiplicities come from ranks of ``d @ Q_lam`` where ``Q_lam`` is the
(unnormalized) central idempotent assembled from class-sum matrices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cache, cached_property
from itertools import combinations, permutations
from math import factorial, prod
from typing import Literal, Sequence

import numpy as np
import scipy.sparse as sp

from .characters import character, cycle_type
from .csf import SizeBoundError
from .graphs import Edge, Graph, SpanningSubgraph, spanning_subgraphs
from .linalg import RankBackend, SparseMatrix
from .partitions import Partition, partitions_of
from .tableaux import f_syt, kostka
from .young import image_multiplicities

log = logging.getLogger(__name__)

ORACLE_MAX_N = 6
LARGE_MAX_N = 7

# "projector": ranks of d @ Q_lam from class sums (needs |S_n| x dim images).
# "young": ranks on Young-subgroup orbit sums plus Kostka inversion.
Method = Literal["projector", "young"]


# ------------------------------------------------------------------ tabloids


@dataclass(frozen=True)
class Tabloid:
    """Ordered set partition of ``1..n``; block sizes weakly decrease."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        sizes = [len(b) for b in blocks]
        if any(s == 0 for s in sizes) or any(a < b for a, b in zip(sizes, sizes[1:])):
            raise ValueError(f"block sizes must be positive and weakly decreasing: {blocks}")
        flat = sorted(x for b in blocks for x in b)
        if flat != list(range(1, len(flat) + 1)):
            raise ValueError(f"blocks must partition 1..n: {blocks}")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(b) for b in self.blocks))

    def word(self) -> tuple[int, ...]:
        """``word[x - 1]`` is the index of the block holding ``x``."""
        w = [0] * self.n
        for j, b in enumerate(self.blocks):
            for x in b:
                w[x - 1] = j
        return tuple(w)

    @classmethod
    def from_word(cls, word: Sequence[int]) -> Tabloid:
        r = max(word) + 1 if len(word) else 0
        blocks: list[list[int]] = [[] for _ in range(r)]
        for x, j in enumerate(word, start=1):
            blocks[j].append(x)
        return cls(tuple(tuple(b) for b in blocks))


def _ordered_set_partitions(items: tuple[int, ...], sizes: tuple[int, ...]):
    if not sizes:
        yield ()
        return
    for first in combinations(items, sizes[0]):
        rest = tuple(x for x in items if x not in first)
        for tail in _ordered_set_partitions(rest, sizes[1:]):
            yield (first,) + tail


@cache
def tabloids_of_shape(shape: Partition) -> tuple[Tabloid, ...]:
    """Tabloids of ``shape`` in lexicographic order of their block sequences."""
    return tuple(Tabloid(b) for b in _ordered_set_partitions(tuple(range(1, shape.n + 1)), shape.parts))


def tabloid_basis(F: SpanningSubgraph) -> list[Tabloid]:
    return list(tabloids_of_shape(F.partition_type))


def permutation_action(sigma: Sequence[int], t: Tabloid) -> Tabloid:
    """Left action; ``sigma`` is one-line notation on ``1..n``."""
    if sorted(sigma) != list(range(1, len(sigma) + 1)) or len(sigma) != t.n:
        raise ValueError(f"{sigma} is not a permutation of 1..{t.n}")
    return Tabloid(tuple(tuple(sorted(sigma[x - 1] for x in b)) for b in t.blocks))


# ---------------------------------------------------------------- group data


@cache
def symmetric_group(n: int) -> tuple[np.ndarray, np.ndarray, tuple[Partition, ...]]:
    """``(perms, inverses, class_of)``: all of S_n as 0-based one-line arrays.

    ``class_of[k]`` indexes ``partitions_of(n)`` and gives the cycle type of
    ``perms[k]``.
    """
    perms = np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)
    inv = np.empty_like(perms)
    rows = np.arange(perms.shape[0])[:, None]
    inv[rows, perms] = np.arange(n)[None, :]
    classes = partitions_of(n)
    index = {mu: k for k, mu in enumerate(classes)}
    class_of = np.array([index[cycle_type(p)] for p in perms.tolist()], dtype=np.int64)
    return perms, inv, class_of


# -------------------------------------------------------------- differentials


def _refinement_plan(F: SpanningSubgraph, e: Edge):
    """How rows of ``T(F)`` map onto rows of ``T(F - e)``.

    Returns ``(Fp, parent_of, split)`` where ``parent_of[a]`` is the row of
    ``T(F)`` containing row ``a`` of ``T(F - e)``, and ``split`` is ``None`` or
    ``(j, a, b)`` when row ``j`` splits into rows ``a`` and ``b``.
    """
    Fp = F.remove(e)
    rows, rows_p = F.components, Fp.components
    where = {}
    for j, row in enumerate(rows):
        for x in row:
            where[x] = j
    parent_of = [where[row[0]] for row in rows_p]
    children: dict[int, list[int]] = {}
    for a, j in enumerate(parent_of):
        children.setdefault(j, []).append(a)
    split = None
    for j, kids in children.items():
        if len(kids) == 2:
            split = (j, kids[0], kids[1])
    return Fp, parent_of, split


def _refine(t_blocks, parent_of, split, sizes_p):
    """All tabloids of the smaller subgraph refining ``t_blocks``."""
    base = [t_blocks[j] for j in parent_of]
    if split is None:
        yield tuple(base)
        return
    j, a, b = split
    pool = t_blocks[j]
    for chosen in combinations(pool, sizes_p[a]):
        rest = tuple(x for x in pool if x not in chosen)
        out = list(base)
        out[a], out[b] = chosen, rest
        yield tuple(out)


def differential_block(F: SpanningSubgraph, e: Edge) -> SparseMatrix:
    """Matrix of the inclusion M_F -> M_{F - e} in tabloid bases (all coefficients +1)."""
    if tuple(sorted(e)) not in F.edge_subset:
        raise ValueError(f"edge {e} is not in F")
    Fp, parent_of, split = _refinement_plan(F, e)
    basis = tabloids_of_shape(F.partition_type)
    basis_p = tabloids_of_shape(Fp.partition_type)
    index_p = {t.blocks: k for k, t in enumerate(basis_p)}
    sizes_p = Fp.partition_type.parts
    entries: dict[tuple[int, int], int] = {}
    for col, t in enumerate(basis):
        for blocks in _refine(t.blocks, parent_of, split, sizes_p):
            entries[(index_p[blocks], col)] = 1
    return SparseMatrix(len(basis_p), len(basis), entries)


# -------------------------------------------------------------- chain layers


@dataclass
class Summand:
    subgraph: SpanningSubgraph
    basis: tuple[Tabloid, ...]
    offset: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def words(self) -> np.ndarray:
        return np.array([t.word() for t in self.basis], dtype=np.int64).reshape(len(self.basis), -1)


@dataclass
class ChainLayer:
    i: int
    summands: list[Summand]
    n: int

    @property
    def dim(self) -> int:
        return sum(s.dim for s in self.summands)

    @cached_property
    def by_edges(self) -> dict[tuple[Edge, ...], int]:
        return {s.subgraph.edge_subset: k for k, s in enumerate(self.summands)}

    def stacked_words(self) -> tuple[np.ndarray, np.ndarray]:
        """All basis words in layer order, with the summand index of each."""
        if not self.summands:
            return np.zeros((0, self.n), dtype=np.int64), np.zeros(0, dtype=np.int64)
        words = np.concatenate([s.words for s in self.summands])
        ids = np.concatenate([np.full(s.dim, k, dtype=np.int64) for k, s in enumerate(self.summands)])
        return words, ids

    def action_images(self, inverses: np.ndarray, chunk: int = 720) -> np.ndarray:
        """``img[k, j]``: global index of ``perms[k]`` applied to basis vector ``j``."""
        P = inverses.shape[0]
        out = np.empty((P, self.dim), dtype=np.int64)
        weights = self.n ** np.arange(self.n, dtype=np.int64)
        for s in self.summands:
            keys = s.words @ weights
            order = np.argsort(keys)
            sorted_keys = keys[order]
            for lo in range(0, P, chunk):
                pinv = inverses[lo : lo + chunk]
                # (pi . w)(y) = w(pi^{-1}(y))
                moved = s.words[:, pinv]  # (N, chunk, n)
                new_keys = moved @ weights  # (N, chunk)
                pos = np.searchsorted(sorted_keys, new_keys)
                out[lo : lo + chunk, s.offset : s.offset + s.dim] = (order[pos] + s.offset).T
        return out

    def action_matrix(self, sigma: Sequence[int]) -> SparseMatrix:
        """Permutation matrix of ``sigma`` (one-line on 1..n) on this layer."""
        p = np.array(sigma, dtype=np.int64) - 1
        inv = np.empty_like(p)
        inv[p] = np.arange(self.n)
        img = self.action_images(inv[None, :])[0]
        return SparseMatrix(self.dim, self.dim, {(int(img[j]), j): 1 for j in range(self.dim)})


def build_layer(G: Graph, i: int, edge_order: Sequence[Edge] | None = None) -> ChainLayer:
    summands = []
    offset = 0
    for F in spanning_subgraphs(G, i, edge_order):
        basis = tabloids_of_shape(F.partition_type)
        summands.append(Summand(F, basis, offset))
        offset += len(basis)
    return ChainLayer(i, summands, G.n)


def _sign(F_edges_ordered: Sequence[Edge], e: Edge) -> int:
    after = len(F_edges_ordered) - 1 - F_edges_ordered.index(e)
    return -1 if after % 2 else 1


def _assemble_boundary(G, i, order, dom: ChainLayer, cod: ChainLayer) -> SparseMatrix:
    rank_in_order = {e: k for k, e in enumerate(order)}
    entries: dict[tuple[int, int], int] = {}
    for s in dom.summands:
        F = s.subgraph
        ordered = sorted(F.edge_subset, key=rank_in_order.__getitem__)
        for e in ordered:
            Fp = F.remove(e)
            t = cod.summands[cod.by_edges[Fp.edge_subset]]
            sign = _sign(ordered, e)
            for (r, c), v in differential_block(F, e).entries.items():
                key = (t.offset + r, s.offset + c)
                entries[key] = entries.get(key, 0) + sign * v
    return SparseMatrix(cod.dim, dom.dim, entries)


def _check_order(G: Graph, edge_order: Sequence[Edge] | None) -> tuple[Edge, ...]:
    if edge_order is None:
        return G.edges
    order = tuple(tuple(sorted(e)) for e in edge_order)
    if sorted(order) != list(G.edges):
        raise ValueError("edge_order must be a permutation of the graph's edges")
    return order


def boundary_matrix(G: Graph, i: int, edge_order: Sequence[Edge] | None = None) -> SparseMatrix:
    """d_i : C_i -> C_{i-1}, columns in C_i layout, rows in C_{i-1} layout."""
    order = _check_order(G, edge_order)
    if not 1 <= i <= G.m:
        raise ValueError(f"d_{i} undefined for a graph with {G.m} edges")
    return _assemble_boundary(G, i, order, build_layer(G, i, order), build_layer(G, i - 1, order))


def chain_multiplicity(G: Graph, i: int, lam: Partition) -> int:
    """Multiplicity of S_lam in C_i: sum of Kostka numbers over ``i``-edge subgraphs."""
    if not 0 <= i <= G.m:
        raise ValueError(f"i={i} outside 0..{G.m}")
    return sum(kostka(lam, F.partition_type) for F in spanning_subgraphs(G, i))


# --------------------------------------------------------- isotypic projection


def class_sum_matrices(layer: ChainLayer) -> dict[Partition, sp.csr_matrix]:
    """For each cycle type mu, the action of the class sum on the layer."""
    n = layer.n
    perms, inv, class_of = symmetric_group(n)
    classes = partitions_of(n)
    dim = layer.dim
    img = layer.action_images(inv)
    cols = np.broadcast_to(np.arange(dim), img.shape)
    out = {}
    for k, mu in enumerate(classes):
        sel = class_of == k
        r = img[sel].ravel()
        c = cols[sel].ravel()
        m = sp.coo_matrix((np.ones(r.size, dtype=np.int64), (r, c)), shape=(dim, dim)).tocsr()
        m.sum_duplicates()
        out[mu] = m
    return out


def scaled_projector(class_sums: dict[Partition, sp.csr_matrix], lam: Partition) -> sp.csr_matrix:
    """``Q_lam = sum_mu chi_lam(mu) C_mu``; the isotypic projector is ``(f^lam / n!) Q_lam``."""
    total = None
    for mu, c in class_sums.items():
        chi = character(lam, mu)
        if chi:
            total = c * chi if total is None else total + c * chi
    if total is None:
        dim = next(iter(class_sums.values())).shape[0]
        return sp.csr_matrix((dim, dim), dtype=np.int64)
    return sp.csr_matrix(total)


def isotypic_rank(
    M: SparseMatrix | sp.spmatrix,
    lam: Partition,
    class_sums: dict[Partition, sp.csr_matrix],
    backend: RankBackend | None = None,
    exact: bool | None = None,
) -> int:
    """Multiplicity of S_lam in the image of an equivariant ``M``.

    ``class_sums`` act on the domain of ``M``.
    """
    backend = backend or RankBackend()
    m = M.to_scipy() if isinstance(M, SparseMatrix) else sp.csr_matrix(M)
    if m.nnz == 0:
        return 0
    product = (m @ scaled_projector(class_sums, lam)).tocsr()
    product.eliminate_zeros()
    r = backend.rank(product, exact=exact) if product.nnz else 0
    f = f_syt(lam)
    q, rem = divmod(r, f)
    if rem:
        raise ArithmeticError(f"rank {r} on the {lam}-isotypic part is not a multiple of f^lam = {f}")
    return q


# --------------------------------------------------------------- homology


@dataclass
class MultiplicityTable:
    """Specht multiplicities of a representation of S_n."""

    n: int
    entries: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, m in self.entries.items():
            if lam.n != self.n:
                raise ValueError(f"{lam} is not a partition of {self.n}")
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {lam}")
            if m:
                clean[lam] = int(m)
        self.entries = clean

    def __getitem__(self, lam: Partition) -> int:
        return self.entries.get(lam, 0)

    def items(self) -> list[tuple[Partition, int]]:
        """Nonzero entries in reverse-lexicographic order."""
        return sorted(self.entries.items(), key=lambda kv: kv[0].parts, reverse=True)

    def dimension(self) -> int:
        return sum(m * f_syt(lam) for lam, m in self.entries.items())

    def to_text(self) -> str:
        return "".join(f'"{lam}": {m}\n' for lam, m in self.items())

    def to_records(self) -> list[dict[str, str]]:
        return [{"partition": str(lam), "multiplicity": str(m)} for lam, m in self.items()]

    @classmethod
    def parse(cls, text: str) -> MultiplicityTable:
        entries = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            key, _, value = line.rpartition(":")
            lam = Partition.parse(key.strip().strip('"'))
            entries[lam] = int(value)
        n = next(iter(entries)).n if entries else 0
        return cls(n, entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiplicityTable):
            return self.n == other.n and self.entries == other.entries
        if isinstance(other, dict):
            return self.entries == {k: v for k, v in other.items() if v}
        return NotImplemented


class ChainComplex:
    """Degree-0 chain complex of a graph with cached layers, boundaries and class sums.

    ``edge_order`` fixes the signs; homology does not depend on it. ``method``
    defaults to class-sum projectors up to the oracle bound and to Young
    fixed points beyond it.
    """

    def __init__(
        self,
        G: Graph,
        edge_order: Sequence[Edge] | None = None,
        backend: RankBackend | None = None,
        max_n: int = ORACLE_MAX_N,
        allow_large: bool = False,
        method: Method | None = None,
    ):
        limit = max(max_n, LARGE_MAX_N) if allow_large else max_n
        if G.n > limit:
            hint = "" if allow_large else " (use --allow-large for n=7)"
            raise SizeBoundError(f"n={G.n} exceeds the oracle bound {limit}{hint}")
        self.G = G
        self.order = _check_order(G, edge_order)
        self.backend = backend or RankBackend()
        if G.n > max_n and self.backend.mode == "exact":
            raise SizeBoundError("graphs beyond the default bound run with the modular backend only")
        if G.n > max_n:
            self.backend.mode = "modular"
        if method not in (None, "projector", "young"):
            raise ValueError(f"unknown method {method!r}")
        self.method: Method = method or ("projector" if G.n <= max_n else "young")
        self._layers: dict[int, ChainLayer] = {}
        self._boundaries: dict[int, SparseMatrix] = {}
        self._class_sums: dict[int, dict[Partition, sp.csr_matrix]] = {}
        self._images: dict[int, dict[Partition, int]] = {}

    @property
    def n(self) -> int:
        return self.G.n

    def layer(self, i: int) -> ChainLayer:
        if i not in self._layers:
            self._layers[i] = build_layer(self.G, i, self.order)
        return self._layers[i]

    def dims(self) -> list[int]:
        return [self.layer(i).dim for i in range(self.G.m + 1)]

    def boundary(self, i: int) -> SparseMatrix:
        """d_i; zero maps for ``i = 0`` and ``i = m + 1``."""
        if i <= 0:
            return SparseMatrix.zeros(0, self.layer(0).dim)
        if i > self.G.m:
            return SparseMatrix.zeros(self.layer(self.G.m).dim, 0)
        if i not in self._boundaries:
            self._boundaries[i] = _assemble_boundary(self.G, i, self.order, self.layer(i), self.layer(i - 1))
        return self._boundaries[i]

    def class_sums(self, i: int) -> dict[Partition, sp.csr_matrix]:
        if i not in self._class_sums:
            self._class_sums[i] = class_sum_matrices(self.layer(i))
        return self._class_sums[i]

    def isotypic_rank(self, i: int, lam: Partition) -> int:
        """Multiplicity of S_lam in im(d_i)."""
        if i <= 0 or i > self.G.m:
            return 0
        if i not in self._images:
            self._images[i] = self._image_multiplicities(i)
        return self._images[i].get(lam, 0)

    def _image_multiplicities(self, i: int) -> dict[Partition, int]:
        d = self.boundary(i)
        lams = [lam for lam in partitions_of(self.n) if self.chain_multiplicity(i, lam)]
        if d.nnz == 0:
            return {lam: 0 for lam in lams}
        backend = self.backend
        if self.method == "young":
            dom_w, dom_s = self.layer(i).stacked_words()
            cod_w, cod_s = self.layer(i - 1).stacked_words()
            full = image_multiplicities(d, dom_w, dom_s, cod_w, cod_s, self.n, backend)
            return {lam: full[lam] for lam in lams}
        sums = self.class_sums(i)
        exact = backend.use_exact(d.shape)
        if not exact or max(d.shape) <= backend.direct_exact_limit:
            return {lam: isotypic_rank(d, lam, sums, backend, exact=exact) for lam in lams}
        # Modular ranks bound the rational ones from below and the f-weighted
        # isotypic ranks add up to rank(d), so equality with the exact plain
        # rank proves every term exact.
        lower = {lam: isotypic_rank(d, lam, sums, backend, exact=False) for lam in lams}
        total = backend.rank(d, exact=True)
        if sum(m * f_syt(lam) for lam, m in lower.items()) == total:
            backend.certified += 1
            return lower
        backend.certification_failures += 1
        log.warning("modular isotypic ranks of d_%d failed certification; eliminating exactly", i)
        return {lam: isotypic_rank(d, lam, sums, backend, exact=True) for lam in lams}

    def chain_multiplicity(self, i: int, lam: Partition) -> int:
        return sum(kostka(lam, s.subgraph.partition_type) for s in self.layer(i).summands)

    def homology(self, i: int) -> MultiplicityTable:
        if not 0 <= i <= self.G.m:
            raise ValueError(f"i={i} outside 0..{self.G.m}")
        out = {}
        for lam in partitions_of(self.n):
            c = self.chain_multiplicity(i, lam)
            if c == 0:
                continue
            m = c - self.isotypic_rank(i, lam) - self.isotypic_rank(i + 1, lam)
            if m < 0:
                raise ArithmeticError(f"negative multiplicity {m} for {lam} in H_{i},0")
            out[lam] = m
        return MultiplicityTable(self.n, out)

    def plain_rank(self, i: int, exact: bool | None = None) -> int:
        """Rank of d_i ignoring the group action."""
        d = self.boundary(i)
        return self.backend.rank(d, exact=exact) if d.nnz else 0

    def report(self, i: int) -> dict:
        """Homology plus chain dimensions and per-partition image multiplicities."""
        table = self.homology(i)
        ranks = {
            str(lam): {
                "chain": str(self.chain_multiplicity(i, lam)),
                "image_d_i": str(self.isotypic_rank(i, lam)),
                "image_d_next": str(self.isotypic_rank(i + 1, lam)),
            }
            for lam in partitions_of(self.n)
            if self.chain_multiplicity(i, lam)
        }
        return {
            "table": table,
            "chain_dimensions": [str(d) for d in self.dims()],
            "isotypic": ranks,
            "backend": self.backend.metadata(),
            "method": self.method,
        }


def homology_multiplicities(
    G: Graph,
    i: int,
    backend: RankBackend | None = None,
    edge_order: Sequence[Edge] | None = None,
    allow_large: bool = False,
    method: Method | None = None,
) -> MultiplicityTable:
    """Specht multiplicities of H_{i,0}(G; C)."""
    cc = ChainComplex(G, edge_order=edge_order, backend=backend, allow_large=allow_large, method=method)
    return cc.homology(i)


def chain_dimension(G: Graph, i: int) -> int:
    return sum(
        factorial(G.n) // prod(factorial(p) for p in F.partition_type.parts) for F in spanning_subgraphs(G, i)
    )
