"""Exact distances and geodesics on the model space.

Every shortest path is a chain of straight planar segments and string
traversals meeting at the gates, so geodesics are enumerated exactly as simple
paths in a tiny "key graph" whose nodes are the two endpoints and the gates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .model import (
    TOL,
    Gate,
    Isolated,
    MdConfig,
    OnString,
    P,
    PointRef,
    Q,
    connectable,
    make_point,
    plane_region,
    same_point,
    xy,
)
from .paths import (
    INF,
    EndStatus,
    Infinite,
    Line,
    Loop,
    MalformedPath,
    PathRep,
    PlanarLeg,
    StringLeg,
    Terminal,
    concat,
    end_point,
    is_closed,
    leg_offsets,
    point_at,
    probe_rep,
    start_point,
    validate_path,
)

UNREACHABLE = math.inf


class NoPath(ValueError):
    pass


# --- key graph enumeration ------------------------------------------------------


def _node(pt: PointRef, label: str) -> str:
    return pt.name if isinstance(pt, Gate) else label


def _key_graph(a: PointRef, b: PointRef, cfg: MdConfig):
    nodes = {_node(a, "a"): a, _node(b, "b"): b, "P": P, "Q": Q}
    adj: dict[str, list] = {n: [] for n in nodes}

    def add(u, v, leg):
        adj[u].append((v, leg))
        adj[v].append((u, leg.reversed()))

    for sid in (1, 2, 3):
        chain = [("P", 0.0)]
        for name, pt in nodes.items():
            if isinstance(pt, OnString) and pt.sid == sid:
                chain.append((name, pt.t))
        chain.append(("Q", cfg.length(sid)))
        chain.sort(key=lambda item: item[1])
        for (u, tu), (v, tv) in zip(chain, chain[1:]):
            add(u, v, StringLeg(sid, tu, tv))
    for region in (1, 2):
        members = [n for n, pt in nodes.items() if plane_region(pt) == region]
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                add(u, v, PlanarLeg(region, xy(nodes[u], cfg), xy(nodes[v], cfg)))
    return adj


@lru_cache(maxsize=200_000)
def _enumerate(a: PointRef, b: PointRef, cfg: MdConfig) -> tuple[tuple[float, tuple], ...]:
    """All candidate simple paths from a to b as (length, legs)."""
    if same_point(a, b):
        return ((0.0, ()),)
    if not connectable(a, b):
        return ()
    adj = _key_graph(a, b, cfg)
    src, dst = _node(a, "a"), _node(b, "b")
    found = []

    def dfs(u, visited, legs, length):
        if u == dst:
            found.append((length, tuple(legs)))
            return
        for v, leg in adj[u]:
            if v in visited:
                continue
            # two planar legs in one half-plane are never better than the straight segment
            if legs and isinstance(leg, PlanarLeg) and isinstance(legs[-1], PlanarLeg) and legs[-1].region == leg.region:
                continue
            visited.add(v)
            legs.append(leg)
            dfs(v, visited, legs, length + leg.length)
            legs.pop()
            visited.discard(v)

    dfs(src, {src}, [], 0.0)
    return tuple(found)


def distance(a: PointRef, b: PointRef, cfg: MdConfig) -> float:
    """Length of a shortest path from ``a`` to ``b``; ``UNREACHABLE`` (inf) if none."""
    paths = _enumerate(a, b, cfg)
    if not paths:
        return UNREACHABLE
    return min(length for length, _ in paths)


def geodesics_between(a: PointRef, b: PointRef, cfg: MdConfig) -> list[PathRep]:
    """All distinct shortest paths from ``a`` to ``b``, ordered by the strings they use."""
    if not connectable(a, b):
        raise NoPath(f"{a} and {b} are not connected")
    paths = _enumerate(a, b, cfg)
    best = min(length for length, _ in paths)
    out = [PathRep(legs) if legs else PathRep((), a) for length, legs in paths if length <= best + TOL]
    out.sort(key=lambda p: (p.string_ids(), len(p.legs)))
    return out


# --- geodesic test -------------------------------------------------------------


def _covered(geo: PathRep, path: PathRep) -> bool:
    """Whether every leg of ``geo`` lies inside the point set of ``path``."""
    for leg in geo.legs:
        intervals = []
        if isinstance(leg, PlanarLeg):
            ux, uy = leg.direction
            for m in path.legs:
                if not isinstance(m, PlanarLeg) or m.region != leg.region:
                    continue
                ps = []
                for pt in (m.start, m.end):
                    rx, ry = pt[0] - leg.start[0], pt[1] - leg.start[1]
                    if abs(rx * uy - ry * ux) > 1e-7:
                        break
                    ps.append(rx * ux + ry * uy)
                else:
                    intervals.append((min(ps), max(ps)))
            lo, hi = 0.0, leg.length
        else:
            for m in path.legs:
                if isinstance(m, StringLeg) and m.sid == leg.sid:
                    intervals.append((min(m.t0, m.t1), max(m.t0, m.t1)))
            lo, hi = min(leg.t0, leg.t1), max(leg.t0, leg.t1)
        reach = lo
        for s, e in sorted(intervals):
            if s > reach + 1e-7:
                break
            reach = max(reach, e)
        if reach < hi - 1e-7:
            return False
    return True


def sample_params(path: PathRep, per_leg: int = 4) -> list[float]:
    params = []
    for off, leg in zip(leg_offsets(path), path.legs):
        for k in range(per_leg):
            params.append(off + leg.length * k / per_leg)
    params.append(path.length)
    return params


def geodesic_violation(path: PathRep, cfg: MdConfig, per_leg: int = 4):
    """First sampled pair of points with no shortest connection inside the path, else None."""
    validate_path(path, cfg)
    if path.is_point:
        return None
    closed = is_closed(path, cfg)
    T = path.length
    params = sample_params(path, per_leg)
    pts = [point_at(path, s, cfg) for s in params]
    for i in range(len(params)):
        for j in range(i + 1, len(params)):
            u, v = pts[i], pts[j]
            if same_point(u, v, 1e-9):
                continue
            along = params[j] - params[i]
            if closed:
                along = min(along, T - along)
            d = distance(u, v, cfg)
            if along <= d + TOL:
                continue
            if any(_covered(g, path) for g in geodesics_between(u, v, cfg)):
                continue
            return (u, v, along, d)
    return None


def is_geodesic(path: PathRep, cfg: MdConfig, per_leg: int = 4) -> bool:
    """True iff, for sampled pairs of its points, some shortest connection lies in the path.

    For an open path without self-overlap this is "every sampled sub-path is
    shortest"; closed loops and knotted paths qualify when a shortest curve runs
    inside their point set.
    """
    return geodesic_violation(path, cfg, per_leg) is None


# --- maximal extension ----------------------------------------------------------

DEFAULT_GATE_DIRECTIONS = {"P": ((-1.0, 0.0),), "Q": ((1.0, 0.0),)}
_TINY = 1e-6
_PROBE = 40.0


def _probe_ok(path: PathRep, start_status: EndStatus, cfg: MdConfig) -> bool:
    line = Line(path, start_status, Terminal(None))
    return is_geodesic(probe_rep(line, _PROBE), cfg)


def _max_extension(path, make_leg, e_max, start_status, cfg) -> float:
    """Largest extension length in [0, e_max] keeping the path a geodesic."""

    def ok(e):
        return _probe_ok(concat(path, PathRep((make_leg(e),))), start_status, cfg)

    top = _PROBE if e_max == INF else e_max
    if ok(top):
        return e_max
    if not ok(min(_TINY, top / 2)):
        return 0.0
    lo, hi = min(_TINY, top / 2), top
    for _ in range(60):
        mid = (lo + hi) / 2
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _forward(path: PathRep, start_status: EndStatus, cfg: MdConfig, gate_dirs, depth: int):
    """Extend the end of ``path``; returns a list of (path, end status)."""
    last = path.legs[-1]
    e = end_point(path, cfg)
    if isinstance(e, Gate):
        arrived = last.sid if isinstance(last, StringLeg) else None
        return _gate_branch(path, e.name, arrived, start_status, cfg, gate_dirs, depth)
    if isinstance(last, StringLeg):
        L = cfg.length(last.sid)
        room = L - last.t1 if last.sign > 0 else last.t1
        sid, t1, sign = last.sid, last.t1, last.sign
        ext = _max_extension(path, lambda x: StringLeg(sid, t1, t1 + sign * x), room, start_status, cfg)
        if ext <= 0:
            return [(path, Terminal(e))]
        new = concat(path, PathRep((StringLeg(sid, t1, t1 + sign * ext),)))
        if ext >= room - 1e-12:
            new = concat(path, PathRep((StringLeg(sid, t1, L if sign > 0 else 0.0),)))
            return _forward(new, start_status, cfg, gate_dirs, depth)
        return [(new, Terminal(end_point(new, cfg)))]
    # planar ray
    (ex, ey), (dx, dy), region = last.end, last.direction, last.region
    g = cfg.gap_width
    hit = None
    if region == 1 and dx > 1e-12:
        s_hit = -ex / dx
        hit = (0.0, ey + s_hit * dy)
    elif region == 2 and dx < -1e-12:
        s_hit = (g - ex) / dx
        hit = (g, ey + s_hit * dy)
    if hit is None:
        ext = _max_extension(path, lambda x: PlanarLeg(region, (ex, ey), (ex + x * dx, ey + x * dy)), INF, start_status, cfg)
        if ext == INF:
            return [(path, Infinite())]
        return _planar_stop(path, region, (ex, ey), (dx, dy), ext, cfg)
    gate_hit = abs(hit[1]) <= 1e-9
    if gate_hit:
        hit = cfg.gate_xy("P" if region == 1 else "Q")
    attainable = region == 1 or gate_hit
    reach = s_hit if attainable else s_hit * (1 - 1e-9)
    if reach <= 1e-12:
        # already standing on the frontier
        return [(path, Terminal(e))]
    ext = _max_extension(path, lambda x: PlanarLeg(region, (ex, ey), (ex + x * dx, ey + x * dy)), reach, start_status, cfg)
    if ext < reach:
        return _planar_stop(path, region, (ex, ey), (dx, dy), ext, cfg)
    if gate_hit:
        new = concat(path, PathRep((PlanarLeg(region, (ex, ey), hit),)))
        return _forward(new, start_status, cfg, gate_dirs, depth)
    if region == 1:
        new = concat(path, PathRep((PlanarLeg(region, (ex, ey), hit),)))
        return [(new, Terminal(end_point(new, cfg)))]
    return [(path, Terminal(None, hit, attained=False))]


def _planar_stop(path, region, origin, d, ext, cfg):
    if ext <= 0:
        return [(path, Terminal(end_point(path, cfg)))]
    end = (origin[0] + ext * d[0], origin[1] + ext * d[1])
    new = concat(path, PathRep((PlanarLeg(region, origin, end),)))
    return [(new, Terminal(end_point(new, cfg)))]


def _gate_branch(path, gate, arrived_sid, start_status, cfg, gate_dirs, depth):
    results = []
    used = set(path.string_ids())
    other = "Q" if gate == "P" else "P"
    for sid in (1, 2, 3):
        if sid == arrived_sid or sid in used:
            continue
        L = cfg.length(sid)
        t_from, sign = (0.0, 1) if gate == "P" else (L, -1)
        ext = _max_extension(path, lambda x: StringLeg(sid, t_from, t_from + sign * x), L, start_status, cfg)
        if ext <= 0:
            continue
        if ext >= L - 1e-12:
            new = concat(path, PathRep((StringLeg(sid, t_from, L - t_from),)))
            if is_closed(new, cfg) and isinstance(start_status, Terminal) and start_status.attained:
                results.append((new, Loop()))
            elif depth < 3:
                results.extend(_forward(new, start_status, cfg, gate_dirs, depth + 1))
            else:
                results.append((new, Terminal(Gate(other))))
        else:
            new = concat(path, PathRep((StringLeg(sid, t_from, t_from + sign * ext),)))
            results.append((new, Terminal(end_point(new, cfg))))
    if arrived_sid is not None:
        region = 1 if gate == "P" else 2
        gx, gy = cfg.gate_xy(gate)
        for dx, dy in gate_dirs.get(gate, ()):
            n = math.hypot(dx, dy)
            dx, dy = dx / n, dy / n
            if (region == 1 and dx > 1e-12) or (region == 2 and dx <= 1e-12):
                continue
            ext = _max_extension(path, lambda x: PlanarLeg(region, (gx, gy), (gx + x * dx, gy + x * dy)), INF, start_status, cfg)
            if ext == INF:
                results.append((concat(path, PathRep((PlanarLeg(region, (gx, gy), (gx + dx, gy + dy)),))), Infinite()))
            elif ext > 0:
                results.extend(_planar_stop(path, region, (gx, gy), (dx, dy), ext, cfg))
    if not results:
        results.append((path, Terminal(Gate(gate))))
    return results



def _string_loops(path: PathRep, cfg: MdConfig) -> list[PathRep]:
    """Geodesic loops P -> a -> Q -> b -> P holding a path that runs along strings only.

    Extension alone misses these when the path starts inside a string, because
    the loop closes at the starting point rather than at a gate.
    """
    if not path.legs or not all(isinstance(leg, StringLeg) for leg in path.legs):
        return []
    ids = set(path.string_ids())
    out = []
    for a, b in ((1, 2), (1, 3), (2, 3)):
        if not ids <= {a, b}:
            continue
        rep = concat(PathRep((StringLeg(a, 0.0, cfg.length(a)),)), PathRep((StringLeg(b, cfg.length(b), 0.0),)))
        if is_geodesic(rep, cfg):
            out.append(rep)
    return out


def _inside_loop(rep: PathRep, s: EndStatus, e: EndStatus, loop_ids) -> bool:
    if not all(isinstance(leg, StringLeg) for leg in rep.legs):
        return False
    if not (isinstance(s, Terminal) and isinstance(e, Terminal)):
        return False
    return any(set(rep.string_ids()) <= ids for ids in loop_ids)


def _line_key(rep: PathRep, s: EndStatus, e: EndStatus):
    """Same key for a line and its reversal; loops are keyed by their strings."""
    if isinstance(s, Loop):
        return ("loop", frozenset(rep.string_ids()))
    return min((rep, s, e), (rep.reversed(), e, s), key=repr)


def extend_maximally(path: PathRep, cfg: MdConfig, gate_directions=None) -> list[Line]:
    """All maximal lines obtained by extending both ends of a geodesic path.

    Leaving a gate into a half-plane admits a continuum of directions; only the
    ones listed in ``gate_directions`` (default: the outward frontier normal)
    are explored.
    """
    validate_path(path, cfg)
    if path.is_point:
        if not isinstance(path.origin, Isolated):
            raise MalformedPath("a single planar or string point has no direction to extend")
        return [Line(path, Terminal(path.origin), Terminal(path.origin))]
    if not is_geodesic(path, cfg):
        raise MalformedPath("path is not a geodesic")
    gate_dirs = DEFAULT_GATE_DIRECTIONS if gate_directions is None else gate_directions
    if is_closed(path, cfg):
        return [Line(path, Loop(), Loop())]
    lines = []
    seen = set()
    loops = _string_loops(path, cfg)
    for rep in loops:
        seen.add(_line_key(rep, Loop(), Loop()))
        lines.append(Line(rep, Loop(), Loop()))
    loop_ids = [set(rep.string_ids()) for rep in loops]
    # extending the far end first can stop the near end elsewhere, so try both orders
    for flip in (False, True):
        base = path.reversed() if flip else path
        start = Terminal(start_point(base, cfg))
        for fwd, end_status in _forward(base, start, cfg, gate_dirs, 0):
            if isinstance(end_status, Loop):
                candidates = [(fwd, Loop(), Loop())]
            else:
                candidates = []
                for back, start_status in _forward(fwd.reversed(), end_status, cfg, gate_dirs, 0):
                    if isinstance(start_status, Loop):
                        candidates.append((back.reversed(), Loop(), Loop()))
                    else:
                        candidates.append((back.reversed(), start_status, end_status))
            for rep, s, e in candidates:
                if flip:
                    rep, s, e = rep.reversed(), (Loop() if isinstance(s, Loop) else e), s
                if _inside_loop(rep, s, e, loop_ids):
                    continue
                key = _line_key(rep, s, e)
                if key not in seen:
                    seen.add(key)
                    lines.append(Line(rep, s, e))
    return lines


def line_through(path: PathRep, cfg: MdConfig, index: int = 0, gate_directions=None) -> Line:
    """Convenience: the ``index``-th maximal extension of ``path``."""
    return extend_maximally(path, cfg, gate_directions)[index]


# --- circles ----------------------------------------------------------------------


@dataclass(frozen=True)
class PlanarArc:
    region: int
    center: tuple[float, float]
    radius: float
    theta_lo: float
    theta_hi: float
    closed: bool
    full: bool = False

    def points(self, n: int) -> list[tuple[float, float]]:
        out = []
        for k in range(n):
            frac = (k + 0.5) / n
            th = self.theta_lo + frac * (self.theta_hi - self.theta_lo)
            out.append((self.center[0] + self.radius * math.cos(th), self.center[1] + self.radius * math.sin(th)))
        return out


@dataclass(frozen=True)
class StringPoints:
    sid: int
    ts: tuple[float, ...]


@dataclass(frozen=True)
class CircleDescription:
    components: tuple

    @property
    def is_empty(self) -> bool:
        return not self.components


def _arc(region: int, center, rho: float, cfg: MdConfig) -> PlanarArc | None:
    cx, cy = center
    if rho <= TOL:
        return PlanarArc(region, center, 0.0, 0.0, 2 * math.pi, True, True)
    if region == 1:
        c = -cx / rho
        if c >= 1:
            return PlanarArc(1, center, rho, 0.0, 2 * math.pi, True, True)
        a = math.acos(c)
        return PlanarArc(1, center, rho, a, 2 * math.pi - a, True)
    c = (cfg.gap_width - cx) / rho
    if c < -1:
        return PlanarArc(2, center, rho, -math.pi, math.pi, True, True)
    if c >= 1:
        return None
    b = math.acos(c)
    return PlanarArc(2, center, rho, -b, b, False)


def _string_routes(center: PointRef, sid: int, cfg: MdConfig) -> list[tuple[float, int]]:
    """Linear pieces (offset, slope) whose minimum is the distance to (sid, t)."""
    L = cfg.length(sid)
    if isinstance(center, OnString) and center.sid == sid:
        tc = center.t
        m = min(cfg.length(j) for j in (1, 2, 3) if j != sid)
        return [(-tc, 1), (tc, -1), (tc + m + L, -1), (L - tc + m, 1)]
    dP, dQ = distance(center, P, cfg), distance(center, Q, cfg)
    return [(dP, 1), (dQ + L, -1)]


def circle(center: PointRef, r: float, cfg: MdConfig) -> CircleDescription:
    """All points at distance ``r`` from ``center``, as arcs and string points."""
    if r <= 0:
        raise ValueError("radius must be positive")
    if isinstance(center, Isolated):
        return CircleDescription(())
    comps = []
    for region, gate in ((1, P), (2, Q)):
        if plane_region(center) == region:
            origin, rho = xy(center, cfg), r
        else:
            origin, rho = cfg.gate_xy(gate.name), r - distance(center, gate, cfg)
        if rho < -TOL:
            continue
        arc = _arc(region, origin, max(rho, 0.0), cfg)
        if arc is not None:
            comps.append(arc)
    for sid in (1, 2, 3):
        L = cfg.length(sid)
        ts = []
        for offset, slope in _string_routes(center, sid, cfg):
            t = (r - offset) / slope
            if not (TOL < t < L - TOL):
                continue
            if abs(distance(center, OnString(sid, t), cfg) - r) > 1e-9:
                continue
            if not any(abs(t - u) <= 1e-9 for u in ts):
                ts.append(t)
        if ts:
            comps.append(StringPoints(sid, tuple(sorted(ts))))
    return CircleDescription(tuple(comps))


def circle_sample_points(desc: CircleDescription, cfg: MdConfig, per_arc: int = 16) -> list[PointRef]:
    pts = []
    for comp in desc.components:
        if isinstance(comp, PlanarArc):
            for x, y in comp.points(per_arc):
                if comp.region == 2 and x <= cfg.gap_width:
                    continue
                pts.append(make_point((f"planar{comp.region}", min(x, 0.0) if comp.region == 1 else x, y), cfg))
        else:
            pts.extend(OnString(comp.sid, t) for t in comp.ts)
    return pts
