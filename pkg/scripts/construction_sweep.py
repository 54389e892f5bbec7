#!/usr/bin/env python3
"""Build and verify every closed-form family over a parameter range, with timings."""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from localantimagic.constructions import (
    chi2_graph, kpq_color_count, label_coconut, label_k12r, label_kpq, label_wheel,
)


@dataclass
class SweepConfig:
    k12r_max: int = 60
    wheel_max: int = 40
    coconut_max: int = 30
    kpq_max: int = 25
    chi2_max: int = 45


def sweep(cfg: SweepConfig) -> dict:
    jobs = {
        "k12r": [((r,), label_k12r, 3) for r in range(2, cfg.k12r_max + 1)],
        "wheel": [((k,), label_wheel, 3) for k in range(1, cfg.wheel_max + 1)],
        "coconut": [((m, t), label_coconut, t + 2)
                    for m in range(2, cfg.coconut_max + 1) for t in range(1, cfg.coconut_max + 1)],
        "kpq": [((p, q), label_kpq, kpq_color_count(p, q))
                for p in range(1, cfg.kpq_max + 1) for q in range(max(p, 2), cfg.kpq_max + 1)],
        "chi2": [((n,), chi2_graph, 2) for n in range(3, cfg.chi2_max + 1) if n not in (3, 4, 5, 7)],
    }
    report = {}
    for name, items in jobs.items():
        start = time.perf_counter()
        bad = [params for params, build, want in items if build(*params).color_count != want]
        report[name] = {"instances": len(items), "mismatches": bad,
                        "seconds": round(time.perf_counter() - start, 3)}
    return report


def main():
    cfg = SweepConfig()
    ap = argparse.ArgumentParser(description=__doc__)
    for key, value in asdict(cfg).items():
        ap.add_argument("--" + key.replace("_", "-"), type=int, default=value)
    cfg = SweepConfig(**vars(ap.parse_args()))
    print(json.dumps(sweep(cfg), indent=1))


if __name__ == "__main__":
    main()
