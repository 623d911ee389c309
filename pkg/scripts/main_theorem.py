"""Exhaustive degree scan of claw-free minimal 2-extendable graphs.

    python3 scripts/main_theorem.py --n 8 --jobs 4
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from extendlab.graph import is_connected
from extendlab.search import FilterSpec, enumerate_graphs, run_pipeline


@dataclass(frozen=True)
class Config:
    n: int = 8
    k: int = 2
    claw_free: bool = True
    jobs: int = 1


def run(cfg: Config) -> int:
    start = time.perf_counter()
    graphs = [g for g in enumerate_graphs(cfg.n) if is_connected(g)]
    spec = FilterSpec.extendability(cfg.k, claw_free=cfg.claw_free, minimal=True)
    report = run_pipeline(graphs, spec, cfg.k, jobs=cfg.jobs)
    print(report.to_json())
    print(f"# {len(graphs)} connected graphs, {report.survivor_count} survivors, "
          f"{time.perf_counter() - start:.1f}s")
    return 1 if report.violations else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--k", type=int, default=Config.k)
    ap.add_argument("--no-claw-free", dest="claw_free", action="store_false")
    ap.add_argument("--jobs", type=int, default=Config.jobs)
    return run(Config(**vars(ap.parse_args())))


if __name__ == "__main__":
    raise SystemExit(main())
