"""Tabulate tower bounds over every cyclically reduced relator of each
length on a fixed generator set.

    python3 scripts/exhaustive_table.py --max-len 8 --gens 2
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from asdim import (
    Presentation,
    Registry,
    all_cyclically_reduced_words,
    build_tower,
    ceil_half,
    format_presentation,
    parse_presentation,
    verify_certificate,
)


@dataclass(frozen=True)
class TableConfig:
    max_len: int = 8
    gens: int = 2


def row_for_length(cfg: TableConfig, length: int) -> tuple[int, int, float, int]:
    names = "abcdefgh"[: cfg.gens]
    reg = Registry()
    gens = tuple(reg.declare(n) for n in names)
    count = 0
    worst = 0
    total = 0
    failures = 0
    for w in all_cyclically_reduced_words(gens, length):
        text = format_presentation(Presentation(gens, w))
        run_reg = Registry()
        p = parse_presentation(text, run_reg)
        root = build_tower(p, run_reg)
        count += 1
        worst = max(worst, root.bound)
        total += root.bound
        if root.bound > ceil_half(length) or not verify_certificate(root).ok:
            failures += 1
    return count, worst, total / count if count else 0.0, failures


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    defaults = TableConfig()
    parser.add_argument("--max-len", type=int, default=defaults.max_len)
    parser.add_argument("--gens", type=int, default=defaults.gens)
    args = parser.parse_args()
    cfg = TableConfig(max_len=args.max_len, gens=args.gens)

    print("length  relators  max_bound  mean_bound  length_bound  failures")
    for length in range(1, cfg.max_len + 1):
        count, worst, mean, failures = row_for_length(cfg, length)
        print(
            f"{length:6d}  {count:8d}  {worst:9d}  {mean:10.3f}"
            f"  {ceil_half(length):12d}  {failures:8d}"
        )


if __name__ == "__main__":
    main()
