#!/usr/bin/env python3
"""Table comparing chi_la(K(1,r) + O_2) with the pendant bound for K(1,r).

K(1,r) joined with two new vertices is K(1,2,r), which gets a 3-coloring,
while K(1,r) itself needs r+1 colors.  So joining can lower chi_la.
"""

import argparse
from dataclasses import dataclass
from pathlib import Path

from localantimagic.constructions import label_k12r
from localantimagic.graphs import join_empty, star
from localantimagic.labeling import pendant_lower_bound


@dataclass
class TableConfig:
    r_min: int = 3
    r_max: int = 20
    output: str | None = None


def build_rows(cfg: TableConfig) -> list[tuple[int, int, int, int]]:
    rows = []
    for r in range(cfg.r_min, cfg.r_max + 1):
        joined = label_k12r(r)
        assert joined.graph.size == join_empty(star(r), 2).size
        base = pendant_lower_bound(star(r))
        rows.append((r, joined.color_count, base, joined.color_count - base))
    return rows


def render(rows) -> str:
    lines = ["| r | colors of K(1,r)+O_2 | chi_la(K(1,r)) | difference |", "|---|---|---|---|"]
    lines += [f"| {r} | {a} | {b} | {d} |" for r, a, b, d in rows]
    return "\n".join(lines) + "\n"


def main():
    cfg = TableConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r-min", type=int, default=cfg.r_min)
    ap.add_argument("--r-max", type=int, default=cfg.r_max)
    ap.add_argument("--output")
    cfg = TableConfig(**vars(ap.parse_args()))
    text = render(build_rows(cfg))
    if cfg.output:
        Path(cfg.output).write_text(text)
    print(text, end="")


if __name__ == "__main__":
    main()
