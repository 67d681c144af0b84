"""Time the two image-multiplicity methods against each other on stars and random graphs."""

import argparse
import random
import time
from itertools import combinations

from chromhom.chain import ChainComplex
from chromhom.graphs import Graph, star
from chromhom.linalg import RankBackend


def timed(G, method, mode):
    t0 = time.perf_counter()
    cc = ChainComplex(G, backend=RankBackend(mode), method=method)
    tables = [cc.homology(i) for i in range(G.m + 1)]
    return tables, time.perf_counter() - t0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--random", type=int, default=5, help="number of random graphs on 5 vertices")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--rank-mode", default="modular", choices=["exact", "modular", "auto"])
    args = ap.parse_args()

    rng = random.Random(args.seed)
    graphs = [(f"star({n})", star(n)) for n in range(3, args.max_n + 1)]
    for k in range(args.random):
        edges = [e for e in combinations(range(1, 6), 2) if rng.random() < 0.4]
        graphs.append((f"random#{k} m={len(edges)}", Graph.from_edges(5, edges)))

    status = 0
    print(f"{'graph':<18}{'projector':>11}{'young':>9}  agree")
    for name, G in graphs:
        a, ta = timed(G, "projector", args.rank_mode)
        b, tb = timed(G, "young", args.rank_mode)
        agree = a == b
        status |= not agree
        print(f"{name:<18}{ta:>10.2f}s{tb:>8.2f}s  {agree}")
    return int(status)


if __name__ == "__main__":
    raise SystemExit(main())
