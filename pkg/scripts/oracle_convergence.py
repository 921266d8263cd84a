"""Exact distance vs. grid-graph Dijkstra, for a range of grid steps.

    python scripts/oracle_convergence.py steps=0.2,0.1,0.05 pairs=500
"""

import json
import random
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from _overrides import from_argv

from antigeometry.cli import random_point
from antigeometry.metric import distance
from antigeometry.model import DEFAULT, load_config
from antigeometry.oracle import GridOracle


@dataclass
class Config:
    steps: tuple = (0.4, 0.2, 0.1, 0.05)
    pairs: int = 500
    window: float = 10.0
    seed: int = 0
    config: str = ""
    out: str = "results/oracle_convergence.json"


def main(c: Config):
    cfg = load_config(c.config) if c.config else DEFAULT
    rng = random.Random(c.seed)
    pairs = [(random_point(rng, cfg, c.window), random_point(rng, cfg, c.window)) for _ in range(c.pairs)]
    exact = [distance(a, b, cfg) for a, b in pairs]
    rows = []
    for step in c.steps:
        t0 = time.perf_counter()
        oracle = GridOracle(cfg, step=step)
        errs = [abs(oracle.distance(a, b) - d) for (a, b), d in zip(pairs, exact)]
        errs.sort()
        row = {
            "step": step,
            "max_error": errs[-1],
            "median_error": errs[len(errs) // 2],
            "max_over_step": errs[-1] / step,
            "seconds": round(time.perf_counter() - t0, 2),
        }
        rows.append(row)
        print(f"step {step:6.3f}  max {row['max_error']:.4f}  median {row['median_error']:.4f}  max/step {row['max_over_step']:.2f}  ({row['seconds']} s)")
    out = Path(c.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps({"config": asdict(c), "rows": rows}, indent=2) + "\n")


if __name__ == "__main__":
    main(from_argv(Config))
