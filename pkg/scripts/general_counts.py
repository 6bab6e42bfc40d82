"""Obstacle counts of the recursive construction on random graphs, against
the n*ceil(log2 n) - n + 1 ceiling.  Writes CSV to standard output."""
from __future__ import annotations

import argparse
import csv
import itertools
import math
import random
import sys
import time
from dataclasses import dataclass

from obsrep import Graph, verify
from obsrep.construct import ensure_general_position, represent_general


@dataclass
class Config:
    sizes: tuple[int, ...] = (4, 8, 12, 16)
    graphs: int = 20
    density: float = 0.5
    seed: int = 0


def run(cfg: Config) -> None:
    rng = random.Random(cfg.seed)
    out = csv.writer(sys.stdout)
    out.writerow(["n", "graph", "edges", "obstacles", "bound", "passed", "millis"])
    for n in cfg.sizes:
        bound = n * math.ceil(math.log2(n)) - n + 1 if n > 1 else 0
        for g in range(cfg.graphs):
            G = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < cfg.density])
            t = time.perf_counter()
            rep = ensure_general_position(represent_general(G))
            ms = (time.perf_counter() - t) * 1000
            out.writerow([n, g, len(G.edges), len(rep.obstacles), bound, verify(G, rep).passed, f"{ms:.0f}"])


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--sizes", default="4,8,12,16")
    p.add_argument("--graphs", type=int, default=Config.graphs)
    p.add_argument("--density", type=float, default=Config.density)
    p.add_argument("--seed", type=int, default=Config.seed)
    a = p.parse_args()
    run(Config(tuple(int(s) for s in a.sizes.split(",")), a.graphs, a.density, a.seed))
