#!/usr/bin/env python3
"""Recompute the stored 3-color labelings of W_4 and W_8 with the exact solver."""

import argparse
import time

from localantimagic.constructions import label_wheel
from localantimagic.graphs import wheel
from localantimagic.labeling import verify_local_antimagic
from localantimagic.solver import SearchLimits, exists_labeling_with_colors


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ks", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    for k in args.ks:
        g = wheel(4 * k)
        start = time.perf_counter()
        out = exists_labeling_with_colors(g, 3, SearchLimits(max_edges=g.size, time_budget=None,
                                                             workers=args.threads))
        rep = verify_local_antimagic(g, out.witness)
        stored = label_wheel(k).labeling.labels
        print(f"W_{4 * k}: labels {out.witness.labels} colors {rep.colors} "
              f"nodes {out.nodes} {time.perf_counter() - start:.1f} s "
              f"{'matches' if out.witness.labels == stored else 'differs from'} stored labeling")


if __name__ == "__main__":
    main()
