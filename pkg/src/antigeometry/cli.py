"""Command-line entry point: ``antigeometry <command> ...``.

Exit codes: 0 success, 1 fixture or assertion failure, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import re
import sys
import time

from . import __version__
from .axioms import AxiomSystem, FormulaSyntaxError, PreconditionViolated, TooManyVariables, analyze_construction, consequences, default_universe, is_consistent, is_independent, to_text
from .counter_projective import BoundsTooLarge, check_counter_axioms, search_counter_models
from .harness import REGISTRY, FixtureBroken, catalog, replay, run_fixture
from .metric import distance, geodesics_between
from .codec import encode_path
from .model import DEFAULT, ConfigError, Isolated, NotInModel, connectable, load_config, make_point, same_point

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_point(text: str, cfg):
    """``P``, ``Q``, ``I``/``J``/``K``, ``s<id>:<t>`` or ``x,y``."""
    s = text.strip()
    try:
        if s in ("P", "Q"):
            return make_point((s,), cfg)
        if s in ("I", "J", "K"):
            return make_point(Isolated(s), cfg)
        if s.startswith("s") and ":" in s:
            sid, t = s[1:].split(":", 1)
            return make_point(("string", int(sid), float(t)), cfg)
        x, y = (float(v) for v in s.split(","))
        return make_point(("planar", x, y), cfg)
    except NotInModel as exc:
        raise UsageError(f"point {text!r} is not in the model: {exc}") from None
    except ValueError:
        raise UsageError(f"cannot read point {text!r} (use P, Q, I, s1:2.5 or x,y)") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, allow_nan=False) + "\n"


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args):
    return load_config(args.config) if args.config else DEFAULT


# --- commands -------------------------------------------------------------------------


def cmd_report(args) -> int:
    cfg = _config(args)
    ids = [f for f in catalog() if not args.filter or f.startswith(args.filter)]
    if not ids:
        raise UsageError(f"no fixture id starts with {args.filter!r}")
    reports, timings, failed = [], {}, None
    for fid in ids:
        t0 = time.perf_counter()
        rep = run_fixture(fid, cfg, strict=False)
        d = rep.to_dict()
        replay(json.loads(json.dumps(d)), cfg)
        timings[fid] = round((time.perf_counter() - t0) * 1000, 3)
        d["expected"] = REGISTRY[fid].expected
        reports.append(d)
        if failed is None and rep.status != REGISTRY[fid].expected:
            failed = fid
    bundle = {"version": __version__, "config": cfg.to_dict(), "fixtures": reports}
    if args.timings:
        bundle["timings_ms"] = timings
    _write(_dump(bundle), args.out)
    if failed:
        print(f"fixture {failed} did not reach its expected status", file=sys.stderr)
        return EXIT_FAIL
    print(f"{len(reports)} fixtures reached their expected status", file=sys.stderr)
    return EXIT_OK


def cmd_plot(args) -> int:
    from . import svg

    cfg = _config(args)
    what = args.what
    vals = args.args
    need = {"model": 0, "geodesic": 2, "circle": 2, "triangle": 3}[what]
    if len(vals) != need:
        raise UsageError(f"plot {what} takes {need} arguments")
    if what == "model":
        canvas = svg.draw_model(cfg)
    elif what == "geodesic":
        a, b = parse_point(vals[0], cfg), parse_point(vals[1], cfg)
        if same_point(a, b):
            print("geodesic endpoints coincide", file=sys.stderr)
            return EXIT_FAIL
        if not connectable(a, b):
            print("the two points are not joined by any path", file=sys.stderr)
            return EXIT_FAIL
        canvas = svg.draw_geodesics(cfg, a, b)
    elif what == "circle":
        c = parse_point(vals[0], cfg)
        try:
            r = float(vals[1])
        except ValueError:
            raise UsageError(f"bad radius {vals[1]!r}") from None
        if not r > 0:
            raise UsageError("radius must be positive")
        canvas = svg.draw_circle(cfg, c, r)
    else:
        pts = [parse_point(v, cfg) for v in vals]
        if any(not connectable(pts[i], pts[j]) for i in range(3) for j in range(i + 1, 3)):
            print("triangle vertices are not mutually reachable", file=sys.stderr)
            return EXIT_FAIL
        try:
            canvas = svg.draw_triangle(cfg, *pts, tuple(args.side_choice))
        except IndexError:
            print("side choice out of range", file=sys.stderr)
            return EXIT_FAIL
    _write(canvas.render(), args.out)
    return EXIT_OK


def _required(text: str) -> set[int]:
    if text.strip() in ("", "none"):
        return set()
    try:
        req = {int(v) for v in text.split(",")}
    except ValueError:
        raise UsageError(f"bad axiom list {text!r}") from None
    if not req <= {1, 2, 3}:
        raise UsageError("required axioms are drawn from 1,2,3")
    return req


def cmd_counter_search(args) -> int:
    req = _required(args.required)
    models = search_counter_models(args.max_points, args.max_lines, req)
    out = {
        "max_points": args.max_points,
        "max_lines": args.max_lines,
        "required": sorted(req),
        "count": len(models),
        "structures": [m.to_json() for m in models],
    }
    for m in models:
        if check_counter_axioms(m).holding() != frozenset(req):
            print("search returned a structure that fails the check", file=sys.stderr)
            return EXIT_FAIL
    _write(_dump(out), args.out)
    return EXIT_OK


def cmd_axiom_sys(args) -> int:
    try:
        system = AxiomSystem.load(args.system)
    except (OSError, json.JSONDecodeError, FormulaSyntaxError, KeyError) as exc:
        raise UsageError(f"cannot read axiom system: {exc}") from None
    n, axs = system.n_vars, system.axioms
    out = {
        "system": system.to_json(),
        "k": args.k,
        "consistent": is_consistent(axs, n),
        "independent": is_independent(axs, n),
    }
    # the last two axioms are read as the contradictory pair b, b'
    if len(axs) >= 2 and not is_consistent(axs[-2:], n):
        try:
            rep = analyze_construction(axs[:-2], axs[-2], axs[-1], k=args.k, n_vars=n)
        except PreconditionViolated as exc:
            print(f"precondition violated: {exc}", file=sys.stderr)
            return EXIT_FAIL
        out["construction"] = rep.to_dict()
        if not rep.identity_holds:
            _write(_dump(out), args.out)
            return EXIT_FAIL
    else:
        out["consequences"] = [to_text(f) for f in consequences(axs, default_universe(n), args.k, n)]
    _write(_dump(out), args.out)
    return EXIT_OK


def cmd_distance(args) -> int:
    cfg = _config(args)
    a, b = parse_point(args.a, cfg), parse_point(args.b, cfg)
    d = distance(a, b, cfg)
    out = {"distance": "unreachable" if math.isinf(d) else d}
    if args.command == "geodesics":
        out["geodesics"] = [encode_path(p) for p in geodesics_between(a, b, cfg)] if connectable(a, b) else []
    _write(_dump(out), args.out)
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    from .oracle import GridOracle

    cfg = _config(args)
    rng = random.Random(args.seed)
    oracle = GridOracle(cfg, step=args.grid_step)
    worst = 0.0
    for _ in range(args.pairs):
        a, b = (random_point(rng, cfg) for _ in range(2))
        worst = max(worst, abs(distance(a, b, cfg) - oracle.distance(a, b)))
    ok = worst <= 2 * args.grid_step
    _write(_dump({"grid_step": args.grid_step, "pairs": args.pairs, "max_abs_error": worst, "within_tolerance": ok}), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def random_point(rng: random.Random, cfg, window: float = 10.0):
    """A random reachable point in the window x in [-w, g + w], y in [-w, w], or on a string."""
    g = cfg.g
    kind = rng.random()
    if kind < 0.15:
        sid = rng.choice((1, 2, 3))
        return make_point(("string", sid, rng.uniform(0, cfg.length(sid))), cfg)
    if kind < 0.2:
        return make_point((rng.choice("PQ"),), cfg)
    y = rng.uniform(-window, window)
    if rng.random() < 0.5:
        return make_point(("planar1", -rng.uniform(0, window), y), cfg)
    return make_point(("planar2", g + rng.uniform(1e-6, window), y), cfg)


# --- parser -----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="antigeometry", description="Geometry kernel and axiom harness for the discontinuous model space.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, config=True):
        if config:
            sp.add_argument("--config", metavar="PATH", help="model config JSON (default: built-in)")
        sp.add_argument("--out", metavar="PATH", help="output file (default: stdout)")

    r = sub.add_parser("report", help="run the fixture catalog and write a report bundle")
    common(r)
    r.add_argument("--filter", metavar="PREFIX", help="only fixtures whose id starts with PREFIX")
    r.add_argument("--timings", action="store_true", help="include per-fixture timings (not byte-stable)")
    r.set_defaults(func=cmd_report)

    pl = sub.add_parser("plot", help="write an SVG of the model with an optional overlay")
    common(pl)
    pl.add_argument("what", choices=("model", "geodesic", "circle", "triangle"))
    pl.add_argument("args", nargs="*", help="points (P, Q, I, s1:2.5, x,y) and radius")
    pl.add_argument("--side-choice", nargs=3, type=int, default=(0, 0, 0), metavar="N")
    pl.set_defaults(func=cmd_plot)

    cs = sub.add_parser("counter-search", help="search finite counter-models")
    common(cs, config=False)
    cs.add_argument("--max-points", type=int, required=True)
    cs.add_argument("--max-lines", type=int, required=True)
    cs.add_argument("--required", default="1,2,3", help="comma list drawn from 1,2,3 (or 'none')")
    cs.set_defaults(func=cmd_counter_search)

    ax = sub.add_parser("axiom-sys", help="analyze a propositional axiom system")
    common(ax, config=False)
    ax.add_argument("system", help='JSON {"vars": n, "axioms": [...]}')
    ax.add_argument("--k", type=int, default=2, help="largest axiom combination size")
    ax.set_defaults(func=cmd_axiom_sys)

    for name in ("distance", "geodesics"):
        d = sub.add_parser(name, help=f"{name} between two points")
        common(d)
        d.add_argument("a")
        d.add_argument("b")
        d.set_defaults(func=cmd_distance)

    oc = sub.add_parser("oracle-check", help="compare exact distances with the grid oracle")
    common(oc)
    oc.add_argument("--grid-step", type=float, default=0.05)
    oc.add_argument("--pairs", type=int, default=200)
    oc.add_argument("--seed", type=int, default=0)
    oc.set_defaults(func=cmd_oracle_check)
    return p


_COORD = re.compile(r"^-\d*\.?\d*(e-?\d+)?,-?\d*\.?\d*(e-?\d+)?$")


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    # a leading space stops argparse from reading "-1,0" as an option
    argv = [" " + a if _COORD.match(a) else a for a in argv]
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error at {exc.pointer or '/'}: {exc.message}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, BoundsTooLarge, TooManyVariables) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FixtureBroken as exc:
        print(f"fixture failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
