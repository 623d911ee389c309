"""Compare the minimality verdict with the per-edge certificate test.

Runs every k-extendable graph of order n from the generator plus a random
labeled sample, and prints certificate shape statistics for k = 2.

    python3 scripts/characterization.py --n 8 --samples 500
"""

from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from extendlab.certificate import certify_all_edges, profile_edge
from extendlab.extendability import extendable, is_minimal_k_extendable
from extendlab.graph import build_graph
from extendlab.search import enumerate_graphs


@dataclass(frozen=True)
class Config:
    n: int = 8
    k: int = 2
    samples: int = 500
    seed: int = 0


def random_sample(cfg: Config):
    rng = random.Random(cfg.seed)
    pairs = [(u, v) for u in range(cfg.n) for v in range(u + 1, cfg.n)]
    found = 0
    while found < cfg.samples:
        p = rng.uniform(0.5, 0.95)
        g = build_graph(cfg.n, [e for e in pairs if rng.random() < p])
        if extendable(g, cfg.k):
            found += 1
            yield g


def run(cfg: Config) -> int:
    graphs = [g for g in enumerate_graphs(cfg.n) if extendable(g, cfg.k)]
    graphs += list(random_sample(cfg))
    mismatches = minimal_count = 0
    shapes: Counter = Counter()
    for g in graphs:
        certs = certify_all_edges(g, cfg.k)
        minimal = is_minimal_k_extendable(g, cfg.k).result
        mismatches += minimal != all(certs.values())
        minimal_count += minimal
        if minimal and cfg.k == 2:
            for cert in certs.values():
                prof = profile_edge(g, cert)
                shapes[(len(cert.s), prof.odd_orders, prof.type_tag)] += 1
    print(f"graphs={len(graphs)} minimal={minimal_count} mismatches={mismatches}")
    for (size, orders, tag), count in sorted(shapes.items()):
        print(f"|S|={size}\todd_orders={list(orders)}\t{tag}\t{count}")
    return 1 if mismatches else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--k", type=int, default=Config.k)
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--seed", type=int, default=Config.seed)
    return run(Config(**vars(ap.parse_args())))


if __name__ == "__main__":
    raise SystemExit(main())
