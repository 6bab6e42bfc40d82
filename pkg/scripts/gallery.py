"""Render a few representations to SVG for eyeballing."""
from __future__ import annotations

import argparse
import random
from dataclasses import dataclass
from pathlib import Path

from obsrep import Graph, Subcoloring, verify
from obsrep.construct import represent_bipartite, represent_general, represent_subcolored
from obsrep.extremal import matching_graph, random_matching, single_obstacle_family
from obsrep.svg import render


@dataclass
class Config:
    out: Path = Path("gallery")
    seed: int = 1


def cases(rng: random.Random):
    H = Graph(7, [(a, b) for a in range(3) for b in range(3, 7) if rng.random() < 0.5])
    yield "bipartite_3_4", H, represent_bipartite(H, [0, 1, 2], [3, 4, 5, 6])
    G = Graph(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if rng.random() < 0.5])
    yield "general_6", G, represent_general(G)
    t = 3
    C = Graph(t * t, [(i * t + a, i * t + b) for i in range(t) for a in range(t) for b in range(a + 1, t)])
    yield "cliques_3x3", C, represent_subcolored(C, Subcoloring((0,) * 9, tuple(v // 3 for v in range(9))))
    f = random_matching(6, rng)
    yield "single_obstacle_6", matching_graph(6, f), single_obstacle_family(6, f, rng.randrange(100))


def run(cfg: Config) -> None:
    cfg.out.mkdir(parents=True, exist_ok=True)
    for name, G, rep in cases(random.Random(cfg.seed)):
        assert verify(G, rep).passed, name
        path = cfg.out / f"{name}.svg"
        path.write_text(render(rep.placement, rep.obstacles, sorted(G.edges), title=name))
        print(path, len(rep.obstacles), "obstacles")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", type=Path, default=Config.out)
    p.add_argument("--seed", type=int, default=Config.seed)
    a = p.parse_args()
    run(Config(a.out, a.seed))
