"""Face families around uniform crossings: measured complexity next to the
exact per-pair lower bound and the asymptotic reference value."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from obsrep.extremal import thm5_construction


@dataclass
class Config:
    sizes: tuple[int, ...] = (16, 24, 32)
    K: int = 2


def run(cfg: Config) -> None:
    print(f"{'n':>4} {'K':>2} {'faces':>6} {'complexity':>10} {'exact lb':>9} {'reference':>10} {'ratio':>6} {'sec':>6}")
    for n in cfg.sizes:
        t = time.perf_counter()
        r = thm5_construction(n, n * cfg.K ** 3, cfg.K)
        sec = time.perf_counter() - t
        print(f"{n:>4} {cfg.K:>2} {len(r.faces):>6} {r.complexity:>10} {r.exact_lower_bound:>9} "
              f"{r.reference:>10.1f} {r.complexity / r.reference:>6.3f} {sec:>6.1f}")
        for s in r.pairs:
            print(f"      ({s.i},{s.k}) crossings={s.crossings} edges={s.edges_through} "
                  f"complexity={s.complexity} >= {s.lower_bound}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--sizes", default="16,24,32")
    p.add_argument("--K", type=int, default=Config.K)
    a = p.parse_args()
    run(Config(tuple(int(s) for s in a.sizes.split(",")), a.K))
