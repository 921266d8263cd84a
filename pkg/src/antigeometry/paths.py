"""Piecewise paths (planar segments and string traversals) and lines built on them."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

from .model import (
    TOL,
    MdConfig,
    OnString,
    PointRef,
    make_point,
    plane_region,
    same_point,
    string_param,
    xy,
)

INF = math.inf


class MalformedPath(ValueError):
    pass


class PointNotOnLine(ValueError):
    pass


@dataclass(frozen=True)
class PlanarLeg:
    region: int
    start: tuple[float, float]
    end: tuple[float, float]

    @property
    def length(self) -> float:
        return math.hypot(self.end[0] - self.start[0], self.end[1] - self.start[1])

    @property
    def direction(self) -> tuple[float, float]:
        n = self.length
        return ((self.end[0] - self.start[0]) / n, (self.end[1] - self.start[1]) / n)

    def reversed(self) -> "PlanarLeg":
        return PlanarLeg(self.region, self.end, self.start)


@dataclass(frozen=True)
class StringLeg:
    sid: int
    t0: float
    t1: float

    @property
    def length(self) -> float:
        return abs(self.t1 - self.t0)

    @property
    def sign(self) -> int:
        return 1 if self.t1 > self.t0 else -1

    def reversed(self) -> "StringLeg":
        return StringLeg(self.sid, self.t1, self.t0)


Leg = Union[PlanarLeg, StringLeg]


@dataclass(frozen=True)
class PathRep:
    """A directed piecewise path. ``origin`` is only used by single-point paths."""

    legs: tuple[Leg, ...]
    origin: PointRef | None = None

    @property
    def length(self) -> float:
        return sum(leg.length for leg in self.legs)

    @property
    def is_point(self) -> bool:
        return not self.legs

    def reversed(self) -> "PathRep":
        return PathRep(tuple(leg.reversed() for leg in reversed(self.legs)), self.origin)

    def string_ids(self) -> tuple[int, ...]:
        return tuple(leg.sid for leg in self.legs if isinstance(leg, StringLeg))


def leg_start(leg: Leg, cfg: MdConfig) -> PointRef:
    if isinstance(leg, PlanarLeg):
        return make_point((f"planar{leg.region}",) + leg.start, cfg)
    return make_point(("string", leg.sid, leg.t0), cfg)


def leg_end(leg: Leg, cfg: MdConfig) -> PointRef:
    if isinstance(leg, PlanarLeg):
        return make_point((f"planar{leg.region}",) + leg.end, cfg)
    return make_point(("string", leg.sid, leg.t1), cfg)


def leg_point(leg: Leg, u: float, cfg: MdConfig) -> PointRef:
    """Point at arclength ``u`` from the start of ``leg``."""
    if isinstance(leg, PlanarLeg):
        if u >= leg.length:
            return leg_end(leg, cfg)
        dx, dy = leg.direction
        return make_point((f"planar{leg.region}", leg.start[0] + u * dx, leg.start[1] + u * dy), cfg)
    return make_point(("string", leg.sid, leg.t0 + leg.sign * min(u, leg.length)), cfg)


def start_point(path: PathRep, cfg: MdConfig) -> PointRef:
    return path.origin if path.is_point else leg_start(path.legs[0], cfg)


def end_point(path: PathRep, cfg: MdConfig) -> PointRef:
    return path.origin if path.is_point else leg_end(path.legs[-1], cfg)


def is_closed(path: PathRep, cfg: MdConfig) -> bool:
    return not path.is_point and same_point(start_point(path, cfg), end_point(path, cfg))


def point_at(path: PathRep, s: float, cfg: MdConfig) -> PointRef:
    if path.is_point:
        return path.origin
    acc = 0.0
    for leg in path.legs:
        if s <= acc + leg.length + TOL * 1e-3 or leg is path.legs[-1]:
            return leg_point(leg, max(0.0, s - acc), cfg)
        acc += leg.length
    raise AssertionError("unreachable")


def leg_offsets(path: PathRep) -> list[float]:
    out, acc = [], 0.0
    for leg in path.legs:
        out.append(acc)
        acc += leg.length
    return out


def validate_path(path: PathRep, cfg: MdConfig) -> None:
    """Raise MalformedPath unless legs are well formed and chained."""
    if path.is_point:
        if path.origin is None:
            raise MalformedPath("empty path without an origin")
        make_point(path.origin, cfg)
        return
    prev = None
    for i, leg in enumerate(path.legs):
        if leg.length <= TOL:
            raise MalformedPath(f"leg {i} has zero length")
        try:
            a, b = leg_start(leg, cfg), leg_end(leg, cfg)
        except ValueError as exc:
            raise MalformedPath(f"leg {i}: {exc}") from exc
        if isinstance(leg, PlanarLeg):
            if plane_region(a) != leg.region or plane_region(b) != leg.region:
                raise MalformedPath(f"leg {i} leaves half-plane {leg.region}")
        elif leg.sid not in (1, 2, 3):
            raise MalformedPath(f"leg {i}: no string {leg.sid}")
        if prev is not None and not same_point(prev, a):
            raise MalformedPath(f"legs {i - 1} and {i} do not share an endpoint")
        prev = b


def _planar_between(a: PointRef, b: PointRef, cfg: MdConfig) -> PlanarLeg:
    ra, rb = plane_region(a), plane_region(b)
    if ra is None or ra != rb:
        raise MalformedPath(f"no planar segment between {a} and {b}")
    return PlanarLeg(ra, xy(a, cfg), xy(b, cfg))


def _string_between(a: PointRef, b: PointRef, sid: int | None, cfg: MdConfig) -> StringLeg:
    if sid is None:
        for pt in (a, b):
            if isinstance(pt, OnString):
                sid = pt.sid
                break
    if sid is None:
        raise MalformedPath(f"cannot tell which string joins {a} and {b}")
    ta, tb = string_param(a, sid, cfg), string_param(b, sid, cfg)
    if ta is None or tb is None:
        raise MalformedPath(f"{a} and {b} are not both on s{sid}")
    return StringLeg(sid, ta, tb)


def route(cfg: MdConfig, *items) -> PathRep:
    """Build a path from waypoints.

    Items are points, optionally separated by a string id (int) naming the
    string to travel along, e.g. ``route(cfg, A, P, 1, Q, B)``.
    """
    pts, sids = [], []
    pending = None
    for item in items:
        if isinstance(item, int) and not isinstance(item, bool):
            pending = item
            continue
        pt = make_point(item, cfg)
        if pts:
            sids.append(pending)
        pending = None
        pts.append(pt)
    if len(pts) == 1:
        return PathRep((), pts[0])
    legs = []
    for a, b, sid in zip(pts, pts[1:], sids):
        if sid is None and plane_region(a) is not None and plane_region(a) == plane_region(b):
            legs.append(_planar_between(a, b, cfg))
        else:
            legs.append(_string_between(a, b, sid, cfg))
    path = PathRep(tuple(legs))
    validate_path(path, cfg)
    return path


def concat(a: PathRep, b: PathRep) -> PathRep:
    """Join two chained paths, merging collinear planar legs at the seam."""
    if a.is_point:
        return b
    if b.is_point:
        return a
    legs = list(a.legs)
    first = b.legs[0]
    last = legs[-1]
    if isinstance(last, PlanarLeg) and isinstance(first, PlanarLeg) and last.region == first.region:
        d1, d2 = last.direction, first.direction
        if abs(d1[0] * d2[1] - d1[1] * d2[0]) <= 1e-12 and d1[0] * d2[0] + d1[1] * d2[1] > 0:
            legs[-1] = PlanarLeg(last.region, last.start, first.end)
            return PathRep(tuple(legs) + b.legs[1:])
    if isinstance(last, StringLeg) and isinstance(first, StringLeg) and last.sid == first.sid and last.sign == first.sign:
        legs[-1] = StringLeg(last.sid, last.t0, first.t1)
        return PathRep(tuple(legs) + b.legs[1:])
    return PathRep(tuple(legs) + b.legs)


# --- directions ---------------------------------------------------------------

# A direction leaving a point along a curve: ("vec", (x, y, z)) for planar legs and
# gate tangents, or ("str", sid, sign) inside a string, whose embedding is unknown.
Direction = tuple


def leg_direction(leg: Leg, at_start: bool, cfg: MdConfig) -> Direction:
    """Direction pointing into ``leg`` from its start (or from its end)."""
    if isinstance(leg, PlanarLeg):
        dx, dy = leg.direction
        return ("vec", (dx, dy, 0.0)) if at_start else ("vec", (-dx, -dy, 0.0))
    t = leg.t0 if at_start else leg.t1
    sign = leg.sign if at_start else -leg.sign
    if t <= TOL:
        return ("vec", cfg.tangent("P", leg.sid))
    if t >= cfg.length(leg.sid) - TOL:
        return ("vec", cfg.tangent("Q", leg.sid))
    return ("str", leg.sid, sign)


def angle_between_directions(u: Direction, v: Direction) -> float:
    """Angle in degrees between two emanating directions."""
    if u[0] == "vec" and v[0] == "vec":
        dot = sum(a * b for a, b in zip(u[1], v[1]))
        nu = math.sqrt(sum(a * a for a in u[1]))
        nv = math.sqrt(sum(a * a for a in v[1]))
        c = max(-1.0, min(1.0, dot / (nu * nv)))
        return math.degrees(math.acos(c))
    if u[0] == "str" and v[0] == "str" and u[1] == v[1]:
        return 0.0 if u[2] == v[2] else 180.0
    raise ValueError(f"directions {u} and {v} do not meet at a common point")


# --- lines --------------------------------------------------------------------


@dataclass(frozen=True)
class Infinite:
    pass


@dataclass(frozen=True)
class Terminal:
    """The line stops at ``point``; when ``attained`` is False the end is the
    limit ``(x, y)`` on the excluded frontier and ``point`` is None."""

    point: PointRef | None
    limit: tuple[float, float] | None = None
    attained: bool = True


@dataclass(frozen=True)
class Loop:
    pass


EndStatus = Union[Infinite, Terminal, Loop]


@dataclass(frozen=True)
class PlanarPiece:
    region: int
    origin: tuple[float, float]
    u: tuple[float, float]
    lo: float
    hi: float
    s_base: float
    s_sign: int
    open_hi: bool = False

    def at(self, p: float) -> tuple[float, float]:
        return (self.origin[0] + p * self.u[0], self.origin[1] + p * self.u[1])

    def param_of(self, pt: tuple[float, float]) -> float | None:
        rx, ry = pt[0] - self.origin[0], pt[1] - self.origin[1]
        p = rx * self.u[0] + ry * self.u[1]
        off = abs(rx * self.u[1] - ry * self.u[0])
        if off > 1e-7 or p < self.lo - 1e-9 or p > self.hi + 1e-9:
            return None
        if self.open_hi and p > self.hi - 1e-9:
            return None
        return min(max(p, self.lo), self.hi)


@dataclass(frozen=True)
class StringPiece:
    sid: int
    t0: float
    t1: float
    s_base: float

    @property
    def lo(self) -> float:
        return min(self.t0, self.t1)

    @property
    def hi(self) -> float:
        return max(self.t0, self.t1)


@dataclass(frozen=True)
class PointPiece:
    point: PointRef


@dataclass(frozen=True)
class Line:
    """A directed line: a geodesic representation plus the status of each end."""

    rep: PathRep
    start: EndStatus = field(default_factory=lambda: Terminal(None))
    end: EndStatus = field(default_factory=lambda: Terminal(None))

    @property
    def is_loop(self) -> bool:
        return isinstance(self.start, Loop)

    @property
    def length(self) -> float:
        return self.rep.length


def make_line(rep: PathRep, cfg: MdConfig, start: EndStatus | None = None, end: EndStatus | None = None) -> Line:
    """Wrap a representation; unspecified ends are Terminal at the rep's endpoints."""
    validate_path(rep, cfg)
    if start is None:
        start = Terminal(start_point(rep, cfg))
    if end is None:
        end = Terminal(end_point(rep, cfg))
    if isinstance(start, Loop) != isinstance(end, Loop):
        raise MalformedPath("a loop must be a loop at both ends")
    if isinstance(start, Loop) and not is_closed(rep, cfg):
        raise MalformedPath("loop representation is not closed")
    for status, leg in ((start, rep.legs[0] if rep.legs else None), (end, rep.legs[-1] if rep.legs else None)):
        if isinstance(status, Infinite) or (isinstance(status, Terminal) and not status.attained):
            if not isinstance(leg, PlanarLeg):
                raise MalformedPath("only planar ends can continue beyond the representation")
    return Line(rep, start, end)


def _end_reach(status: EndStatus, endpoint: tuple[float, float]) -> tuple[float, bool]:
    if isinstance(status, Infinite):
        return INF, False
    if isinstance(status, Terminal) and not status.attained:
        return math.hypot(status.limit[0] - endpoint[0], status.limit[1] - endpoint[1]), True
    return 0.0, False


def line_pieces(line: Line) -> list:
    """Point-set pieces of a line, each carrying the line parameter mapping."""
    rep = line.rep
    if rep.is_point:
        return [PointPiece(rep.origin)]
    pieces = []
    offsets = leg_offsets(rep)
    first, last = rep.legs[0], rep.legs[-1]
    if isinstance(first, PlanarLeg):
        reach, open_end = _end_reach(line.start, first.start)
        if reach > 0:
            dx, dy = first.direction
            pieces.append(PlanarPiece(first.region, first.start, (-dx, -dy), 0.0, reach, 0.0, -1, open_end))
    for leg, off in zip(rep.legs, offsets):
        if isinstance(leg, PlanarLeg):
            pieces.append(PlanarPiece(leg.region, leg.start, leg.direction, 0.0, leg.length, off, 1))
        else:
            pieces.append(StringPiece(leg.sid, leg.t0, leg.t1, off))
    if isinstance(last, PlanarLeg):
        reach, open_end = _end_reach(line.end, last.end)
        if reach > 0:
            pieces.append(PlanarPiece(last.region, last.end, last.direction, 0.0, reach, rep.length, 1, open_end))
    return pieces


def param_range(line: Line) -> tuple[float, float]:
    lo, hi = 0.0, line.rep.length
    if line.rep.legs:
        first, last = line.rep.legs[0], line.rep.legs[-1]
        if isinstance(first, PlanarLeg):
            lo = -_end_reach(line.start, first.start)[0]
        if isinstance(last, PlanarLeg):
            hi += _end_reach(line.end, last.end)[0]
    return lo, hi


def _piece_params(piece, pt: PointRef, cfg: MdConfig) -> list[float]:
    if isinstance(piece, PointPiece):
        return [0.0] if same_point(piece.point, pt) else []
    if isinstance(piece, PlanarPiece):
        if plane_region(pt) != piece.region:
            return []
        p = piece.param_of(xy(pt, cfg))
        return [] if p is None else [piece.s_base + piece.s_sign * p]
    t = string_param(pt, piece.sid, cfg)
    if t is None or t < piece.lo - 1e-9 or t > piece.hi + 1e-9:
        return []
    return [piece.s_base + abs(t - piece.t0)]


def params_of(line: Line, pt: PointRef, cfg: MdConfig) -> list[float]:
    """All line parameters at which ``line`` passes through ``pt`` (sorted)."""
    found = []
    for piece in line_pieces(line):
        found.extend(_piece_params(piece, pt, cfg))
    if line.is_loop:
        T = line.rep.length
        found = [s % T if s < T - 1e-9 else 0.0 for s in found]
    found.sort()
    out = []
    for s in found:
        if not out or s - out[-1] > 1e-7:
            out.append(s)
    return out


def on_line(line: Line, pt: PointRef, cfg: MdConfig) -> bool:
    return bool(params_of(line, pt, cfg))


def line_point_at(line: Line, s: float, cfg: MdConfig) -> PointRef | None:
    """Point at parameter ``s``, following rays beyond the representation; None if off the line."""
    rep = line.rep
    if rep.is_point:
        return rep.origin if abs(s) <= TOL else None
    if line.is_loop:
        return point_at(rep, s % rep.length, cfg)
    lo, hi = param_range(line)
    if s < lo - TOL or s > hi + TOL:
        return None
    if isinstance(line.end, Terminal) and not line.end.attained and s >= hi - TOL and hi > rep.length:
        return None
    if isinstance(line.start, Terminal) and not line.start.attained and s <= lo + TOL and lo < 0:
        return None
    if s < 0:
        leg = rep.legs[0]
        dx, dy = leg.direction
        return make_point((f"planar{leg.region}", leg.start[0] + s * dx, leg.start[1] + s * dy), cfg)
    if s > rep.length:
        leg = rep.legs[-1]
        dx, dy = leg.direction
        e = s - rep.length
        return make_point((f"planar{leg.region}", leg.end[0] + e * dx, leg.end[1] + e * dy), cfg)
    return point_at(rep, s, cfg)


def probe_rep(line: Line, reach: float = 40.0) -> PathRep:
    """The representation with infinite or open ends materialised to finite length."""
    rep = line.rep
    if rep.is_point:
        return rep
    legs = list(rep.legs)
    first, last = legs[0], legs[-1]
    if isinstance(first, PlanarLeg):
        r, open_end = _end_reach(line.start, first.start)
        r = min(r, reach) * (1 - 1e-9 if open_end else 1)
        if r > 0:
            dx, dy = first.direction
            legs[0] = PlanarLeg(first.region, (first.start[0] - r * dx, first.start[1] - r * dy), first.end)
    last = legs[-1]
    if isinstance(last, PlanarLeg):
        r, open_end = _end_reach(line.end, last.end)
        r = min(r, reach) * (1 - 1e-9 if open_end else 1)
        if r > 0:
            dx, dy = last.direction
            legs[-1] = PlanarLeg(last.region, last.start, (last.end[0] + r * dx, last.end[1] + r * dy))
    return PathRep(tuple(legs))


def emanating_directions(line: Line, pt: PointRef, cfg: MdConfig) -> list[Direction]:
    """Directions in which ``line`` leaves ``pt`` (two at ordinary points, more at knots)."""
    dirs: list[Direction] = []
    for piece in line_pieces(line):
        if isinstance(piece, PointPiece):
            continue
        if isinstance(piece, PlanarPiece):
            if plane_region(pt) != piece.region:
                continue
            p = piece.param_of(xy(pt, cfg))
            if p is None:
                continue
            ux, uy = piece.u
            if p < piece.hi - 1e-9:
                dirs.append(("vec", (ux, uy, 0.0)))
            if p > piece.lo + 1e-9:
                dirs.append(("vec", (-ux, -uy, 0.0)))
        else:
            t = string_param(pt, piece.sid, cfg)
            if t is None or t < piece.lo - 1e-9 or t > piece.hi + 1e-9:
                continue
            L = cfg.length(piece.sid)
            for sign, room in ((1, t < piece.hi - 1e-9), (-1, t > piece.lo + 1e-9)):
                if not room:
                    continue
                if t <= TOL:
                    dirs.append(("vec", cfg.tangent("P", piece.sid)))
                elif t >= L - TOL:
                    dirs.append(("vec", cfg.tangent("Q", piece.sid)))
                else:
                    dirs.append(("str", piece.sid, sign))
    out: list[Direction] = []
    for d in dirs:
        if not any(_same_direction(d, e) for e in out):
            out.append(d)
    return out


def _same_direction(u: Direction, v: Direction) -> bool:
    if u[0] != v[0]:
        return False
    if u[0] == "str":
        return u == v
    return all(abs(a - b) <= 1e-9 for a, b in zip(u[1], v[1]))


def line_label(line: Line) -> str:
    parts = []
    for leg in line.rep.legs:
        parts.append(f"s{leg.sid}" if isinstance(leg, StringLeg) else f"d{leg.region}")
    return "-".join(parts) if parts else "point"
