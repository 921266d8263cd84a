"""How many extra contradictory pairs (t) appear in [I], over random systems.

Groups results by the number of a-axioms and by universe (with or without
disjunctions). The identity cn_I = cn_C u cn_C' is checked on every system.
"""

import json
import random
from collections import Counter, defaultdict
from dataclasses import asdict, dataclass
from pathlib import Path

from _overrides import from_argv

from antigeometry.axioms import PreconditionViolated, analyze_construction, default_universe


@dataclass
class Config:
    systems: int = 400
    max_a: int = 3
    max_vars: int = 4
    k: int = 2
    seed: int = 1
    out: str = "results/axiom_t_stats.json"


def rand_formula(rng, n, depth=2):
    if depth == 0 or rng.random() < 0.3:
        v = ("var", rng.randrange(n))
        return ("not", v) if rng.random() < 0.4 else v
    op = rng.choice(("not", "and", "or", "imp"))
    if op == "not":
        return ("not", rand_formula(rng, n, depth - 1))
    return (op, rand_formula(rng, n, depth - 1), rand_formula(rng, n, depth - 1))


def main(c: Config):
    rng = random.Random(c.seed)
    hist = defaultdict(Counter)
    tried = 0
    done = 0
    while done < c.systems:
        tried += 1
        n = rng.randint(1, c.max_vars)
        a_list = [rand_formula(rng, n) for _ in range(rng.randint(0, c.max_a))]
        b = rand_formula(rng, n)
        bp = ("not", b)
        for label, uni in (("full", default_universe(n)), ("no_or", default_universe(n, disjunctions=False))):
            try:
                rep = analyze_construction(a_list, b, bp, universe=uni, k=c.k, n_vars=n)
            except PreconditionViolated:
                break
            assert rep.identity_holds
            hist[(label, len(a_list))][rep.t] += 1
        else:
            done += 1
    print(f"{done} systems accepted out of {tried} drawn")
    rows = []
    for (label, n_a), cnt in sorted(hist.items()):
        total = sum(cnt.values())
        share = sum(v for t, v in cnt.items() if t >= 1) / total
        mean = sum(t * v for t, v in cnt.items()) / total
        print(f"universe={label:5s} a-axioms={n_a}  systems={total:4d}  mean t={mean:5.2f}  share t>=1: {share:.2f}")
        rows.append({"universe": label, "n_a": n_a, "systems": total, "mean_t": mean, "share_t_pos": share, "hist": dict(cnt)})
    out = Path(c.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps({"config": asdict(c), "rows": rows}, indent=1) + "\n")


if __name__ == "__main__":
    main(from_argv(Config))
