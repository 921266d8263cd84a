"""Count counter-models by the exact set of counter-axioms they satisfy, per bound.

    python scripts/counter_census.py max_bound=5
"""

import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from _overrides import from_argv

from antigeometry.counter_projective import check_counter_axioms, search_counter_models

REQUIRED = [(1, 2, 3), (1, 2), (1, 3), (2, 3), (1,), (2,), (3,), ()]


@dataclass
class Config:
    min_bound: int = 2
    max_bound: int = 5
    out: str = "results/counter_census.json"
    smallest: bool = True  # also report the smallest model with a line of two or more points


def _name(req) -> str:
    return "{" + ",".join(map(str, req)) + "}"


def main(c: Config):
    table = {}
    print("bound  " + "  ".join(f"{_name(r):>8s}" for r in REQUIRED))
    for n in range(c.min_bound, c.max_bound + 1):
        t0 = time.perf_counter()
        row = {}
        for req in REQUIRED:
            models = search_counter_models(n, n, req)
            assert all(check_counter_axioms(m).holding() == frozenset(req) for m in models)
            row[_name(req)] = len(models)
        table[n] = row
        print(f"({n},{n})  " + "  ".join(f"{row[_name(r)]:8d}" for r in REQUIRED) + f"   {time.perf_counter() - t0:.1f} s")
    smallest = {}
    if c.smallest:
        for req in REQUIRED:
            models = [m for m in search_counter_models(c.max_bound, c.max_bound, req) if m.n_points >= 3 and any(bin(x).count("1") >= 2 for x in m.lines)]
            if models:
                m = min(models, key=lambda m: (m.n_points + m.n_lines, m.n_points, m.lines))
                smallest[_name(req)] = m.to_json()
                print(f"smallest with a 2-point line for {_name(req)}: {m.n_points} points, lines {[bin(x)[2:].zfill(m.n_points)[::-1] for x in m.lines]}")
    out = Path(c.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps({"config": asdict(c), "counts": table, "smallest": smallest}, indent=1) + "\n")


if __name__ == "__main__":
    main(from_argv(Config))
