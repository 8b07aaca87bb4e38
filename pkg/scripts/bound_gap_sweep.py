"""Measure how far the tower bound sits below the relator-length bound.

Runs a seeded random sweep and prints a histogram of the gap
ceil(|r|/2) - tower_bound, plus the verification tally.

    python3 scripts/bound_gap_sweep.py --count 20000 --max-len 16
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass
from random import Random

from asdim import (
    Registry,
    build_tower,
    random_presentation,
    summarize,
    verify_certificate,
)


@dataclass(frozen=True)
class SweepConfig:
    count: int = 10_000
    max_gens: int = 4
    max_len: int = 12
    seed: int = 0


def run_sweep(cfg: SweepConfig) -> tuple[Counter[int], int]:
    rng = Random(cfg.seed)
    gaps: Counter[int] = Counter()
    verified = 0
    for _ in range(cfg.count):
        reg = Registry()
        p = random_presentation(rng, reg, max_gens=cfg.max_gens, max_len=cfg.max_len)
        root = build_tower(p, reg)
        report = summarize(root)
        gaps[report.length_bound - report.tower_bound] += 1
        if verify_certificate(root).ok:
            verified += 1
    return gaps, verified


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    defaults = SweepConfig()
    parser.add_argument("--count", type=int, default=defaults.count)
    parser.add_argument("--max-gens", type=int, default=defaults.max_gens)
    parser.add_argument("--max-len", type=int, default=defaults.max_len)
    parser.add_argument("--seed", type=int, default=defaults.seed)
    args = parser.parse_args()
    cfg = SweepConfig(
        count=args.count, max_gens=args.max_gens, max_len=args.max_len, seed=args.seed
    )

    gaps, verified = run_sweep(cfg)
    total = sum(gaps.values())
    print(f"presentations: {total}   verified: {verified}   seed: {cfg.seed}")
    print("gap (length bound - tower bound):")
    widest = max(gaps.values())
    for gap in sorted(gaps):
        n = gaps[gap]
        bar = "#" * max(1, round(50 * n / widest))
        print(f"  {gap:3d}  {n:7d}  {bar}")


if __name__ == "__main__":
    main()
