"""Run the fixture catalog and print one row per fixture with its headline values."""

import json
import time
from dataclasses import dataclass
from pathlib import Path

from _overrides import from_argv

from antigeometry.harness import REGISTRY, catalog, replay, run_fixture
from antigeometry.model import DEFAULT, load_config


@dataclass
class Config:
    prefix: str = ""
    config: str = ""
    out: str = "results/fixtures.json"


def _short(values: dict, limit: int = 70) -> str:
    flat = {k: v for k, v in values.items() if isinstance(v, (int, float, str, bool)) or v is None}
    text = ", ".join(f"{k}={round(v, 4) if isinstance(v, float) else v}" for k, v in flat.items())
    return text if len(text) <= limit else text[: limit - 3] + "..."


def main(c: Config):
    cfg = load_config(c.config) if c.config else DEFAULT
    rows = []
    for fid in catalog():
        if c.prefix and not fid.startswith(c.prefix):
            continue
        t0 = time.perf_counter()
        rep = run_fixture(fid, cfg, strict=False)
        replay(json.loads(json.dumps(rep.to_dict())), cfg)
        ms = (time.perf_counter() - t0) * 1000
        ok = rep.status == REGISTRY[fid].expected
        rows.append({"fixture": fid, "status": rep.status, "ok": ok, "ms": round(ms, 1)})
        print(f"{fid:14s} {rep.status:20s} {'ok ' if ok else 'BAD'} {ms:7.1f} ms  {_short(rep.witness['values'])}")
    bad = [r["fixture"] for r in rows if not r["ok"]]
    print(f"{len(rows)} fixtures, {len(bad)} off their expected status {bad if bad else ''}")
    out = Path(c.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(rows, indent=1) + "\n")


if __name__ == "__main__":
    main(from_argv(Config))
