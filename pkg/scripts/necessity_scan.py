#!/usr/bin/env python3
"""Search every connected graph of small order for a 2-coloring."""

import argparse
import json
import time
from dataclasses import dataclass

from localantimagic.solver import SearchLimits, scan_order


@dataclass
class ScanConfig:
    orders: tuple[int, ...] = (3, 4, 5, 6, 7)
    colors: int = 2
    time_budget: float = 1800.0


def main():
    cfg = ScanConfig()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", type=int, nargs="+", default=list(cfg.orders))
    ap.add_argument("--colors", type=int, default=cfg.colors)
    ap.add_argument("--time-budget", type=float, default=cfg.time_budget)
    args = ap.parse_args()
    cfg = ScanConfig(tuple(args.orders), args.colors, args.time_budget)
    rows = []
    for n in cfg.orders:
        start = time.perf_counter()
        rep = scan_order(n, cfg.colors, SearchLimits(max_edges=n * (n - 1) // 2, time_budget=cfg.time_budget))
        rows.append({"order": n, "graphs": rep.total, "excluded_by_bounds": rep.gated_out,
                     "searched": rep.searched, "undecided": rep.undecided,
                     "found": [list(map(list, g.edges)) for g, _ in rep.found],
                     "seconds": round(time.perf_counter() - start, 2)})
    print(json.dumps(rows, indent=1))


if __name__ == "__main__":
    main()
