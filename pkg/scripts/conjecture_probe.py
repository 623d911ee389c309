"""Min-degree probe for claw-free minimal k-extendable graphs over a range of k.

    python3 scripts/conjecture_probe.py --n 8
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from extendlab.search import conjecture_scan


@dataclass(frozen=True)
class Config:
    n: int = 8
    jobs: int = 1


def run(cfg: Config) -> int:
    status = 0
    print("k\texpected\tobserved\tsurvivors")
    for k in range(1, cfg.n // 2):
        report = conjecture_scan(cfg.n, k, jobs=cfg.jobs)
        observed = ",".join(map(str, report.degrees)) or "-"
        print(f"{k}\t{report.expected_degrees}\t{observed}\t{report.survivor_count}")
        if report.violations or not report.within_expected:
            status = 1
    return status


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--jobs", type=int, default=Config.jobs)
    return run(Config(**vars(ap.parse_args())))


if __name__ == "__main__":
    raise SystemExit(main())
