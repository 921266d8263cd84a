"""Order, intersection, angles and congruence for lines of the model space."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .metric import geodesics_between
from .model import (
    TOL,
    Gate,
    MdConfig,
    NotInModel,
    P,
    Planar,
    PointRef,
    Q,
    make_point,
    plane_region,
    same_point,
    string_param,
    xy,
)
from .paths import (
    Line,
    PathRep,
    PlanarPiece,
    PointNotOnLine,
    PointPiece,
    StringPiece,
    angle_between_directions,
    emanating_directions,
    leg_direction,
    line_pieces,
    line_point_at,
    make_line,
    on_line,
    params_of,
    route,
)


class NotACommonPoint(ValueError):
    pass


class NoCommonPoint(ValueError):
    pass


class DegenerateTriangle(ValueError):
    pass


# --- order ------------------------------------------------------------------------


def _params(line: Line, pt: PointRef, cfg: MdConfig) -> list[float]:
    ps = params_of(line, pt, cfg)
    if not ps:
        raise PointNotOnLine(f"{pt} is not on the line")
    return ps


def betweenness(line: Line, a: PointRef, b: PointRef, c: PointRef, cfg: MdConfig) -> bool:
    """Whether ``b`` lies strictly between ``a`` and ``c`` along the line.

    On a loop the order is cyclic, read in the traversal direction starting
    from ``a``, so it is not symmetric in ``a`` and ``c``.
    """
    pa, pb, pc = _params(line, a, cfg), _params(line, b, cfg), _params(line, c, cfg)
    if line.is_loop:
        T = line.length
        for sa in pa:
            for sb in pb:
                for sc in pc:
                    ob, oc = (sb - sa) % T, (sc - sa) % T
                    if 1e-9 < ob < oc - 1e-9:
                        return True
        return False
    return any(
        (sa < sb - 1e-9 and sb < sc - 1e-9) or (sc < sb - 1e-9 and sb < sa - 1e-9)
        for sa in pa
        for sb in pb
        for sc in pc
    )


def order_tuple(line: Line, pts, cfg: MdConfig) -> list[PointRef]:
    """Points sorted by their (first) parameter along the representation."""
    return sorted(pts, key=lambda pt: _params(line, pt, cfg)[0])


# --- intersection -----------------------------------------------------------------


@dataclass(frozen=True)
class Intersection:
    points: tuple[PointRef, ...]
    arcs: tuple[tuple, ...]

    @property
    def empty(self) -> bool:
        return not self.points and not self.arcs


def _cross(a, b) -> float:
    return a[0] * b[1] - a[1] * b[0]


def _try_point(region: int, x: float, y: float, cfg: MdConfig) -> PointRef | None:
    try:
        return make_point((f"planar{region}", x, y), cfg)
    except NotInModel:
        return None


def _planar_meet(a: PlanarPiece, b: PlanarPiece, cfg: MdConfig):
    """(points, arc pieces) shared by two planar pieces in one half-plane."""
    d = (b.origin[0] - a.origin[0], b.origin[1] - a.origin[1])
    cr = _cross(a.u, b.u)
    if abs(cr) < 1e-12:
        if abs(_cross(d, a.u)) > 1e-9:
            return [], []
        base = d[0] * a.u[0] + d[1] * a.u[1]
        dot = a.u[0] * b.u[0] + a.u[1] * b.u[1]
        ends = [base + dot * q for q in (b.lo, b.hi)]
        lo, hi = max(a.lo, min(ends)), min(a.hi, max(ends))
        if hi - lo > 1e-9:
            return [], [PlanarPiece(a.region, a.origin, a.u, lo, hi, 0.0, 1)]
        if abs(hi - lo) <= 1e-9:
            pt = _try_point(a.region, *a.at(lo), cfg)
            return ([pt] if pt is not None else []), []
        return [], []
    p = _cross(d, b.u) / cr
    q = _cross(d, a.u) / cr
    if a.lo - 1e-9 <= p <= a.hi + 1e-9 and b.lo - 1e-9 <= q <= b.hi + 1e-9:
        pt = _try_point(a.region, *a.at(p), cfg)
        return ([pt] if pt is not None else []), []
    return [], []


def _piece_endpoints(piece, cfg: MdConfig) -> list[PointRef]:
    if isinstance(piece, StringPiece):
        return [make_point(("string", piece.sid, piece.lo), cfg), make_point(("string", piece.sid, piece.hi), cfg)]
    out = []
    for p in (piece.lo, piece.hi):
        if math.isfinite(p):
            pt = _try_point(piece.region, *piece.at(p), cfg)
            if pt is not None:
                out.append(pt)
    return out


def _piece_contains(piece, pt: PointRef, cfg: MdConfig) -> bool:
    if isinstance(piece, StringPiece):
        t = string_param(pt, piece.sid, cfg)
        return t is not None and piece.lo - 1e-9 <= t <= piece.hi + 1e-9
    if plane_region(pt) != piece.region:
        return False
    return piece.param_of(xy(pt, cfg)) is not None


def _chain(pieces, cfg: MdConfig) -> list[tuple]:
    """Group shared pieces into maximal arcs joined at common endpoints."""
    groups = [[p] for p in pieces]
    merged = True
    while merged:
        merged = False
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                ends_i = [e for p in groups[i] for e in _piece_endpoints(p, cfg)]
                if any(_piece_contains(p, e, cfg) for p in groups[j] for e in ends_i) or any(
                    _piece_contains(p, e, cfg) for p in groups[i] for e in (x for q in groups[j] for x in _piece_endpoints(q, cfg))
                ):
                    groups[i].extend(groups.pop(j))
                    merged = True
                    break
            if merged:
                break
    return [tuple(g) for g in groups]


def common_points(h: Line, k: Line, cfg: MdConfig) -> Intersection:
    """Decompose the intersection of two lines into shared arcs and isolated points."""
    hp, kp = line_pieces(h), line_pieces(k)
    points: list[PointRef] = []
    arcs = []
    for a in hp:
        for b in kp:
            if isinstance(a, PointPiece) or isinstance(b, PointPiece):
                pt = a.point if isinstance(a, PointPiece) else b.point
                other = k if isinstance(a, PointPiece) else h
                if on_line(other, pt, cfg):
                    points.append(pt)
            elif isinstance(a, PlanarPiece) and isinstance(b, PlanarPiece):
                if a.region == b.region:
                    pts, arc = _planar_meet(a, b, cfg)
                    points.extend(pts)
                    arcs.extend(arc)
            elif isinstance(a, StringPiece) and isinstance(b, StringPiece) and a.sid == b.sid:
                lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
                if hi - lo > 1e-9:
                    arcs.append(StringPiece(a.sid, lo, hi, 0.0))
                elif abs(hi - lo) <= 1e-9:
                    points.append(make_point(("string", a.sid, lo), cfg))
    for gate in (P, Q):
        if on_line(h, gate, cfg) and on_line(k, gate, cfg):
            points.append(gate)
    chains = _chain(arcs, cfg)
    iso: list[PointRef] = []
    for pt in points:
        if any(_piece_contains(p, pt, cfg) for ch in chains for p in ch):
            continue
        if not any(same_point(pt, q, 1e-7) for q in iso):
            iso.append(pt)
    return Intersection(tuple(iso), tuple(chains))


def meets(h: Line, k: Line, cfg: MdConfig) -> bool:
    return not common_points(h, k, cfg).empty


# --- angles -----------------------------------------------------------------------


@dataclass(frozen=True)
class AngleValue:
    degrees: float


def _on_arc(cp: Intersection, pt: PointRef, cfg: MdConfig) -> bool:
    return any(_piece_contains(p, pt, cfg) for ch in cp.arcs for p in ch)


def angle_at(h: Line, k: Line, o: PointRef, cfg: MdConfig, _cp: Intersection | None = None) -> AngleValue:
    """Angle of two lines at a common point: 0 on a shared arc, otherwise the
    smallest angle between their tangent directions leaving ``o``."""
    if not (on_line(h, o, cfg) and on_line(k, o, cfg)):
        raise NotACommonPoint(f"{o} is not on both lines")
    cp = common_points(h, k, cfg) if _cp is None else _cp
    if _on_arc(cp, o, cfg):
        return AngleValue(0.0)
    dh, dk = emanating_directions(h, o, cfg), emanating_directions(k, o, cfg)
    return AngleValue(min(angle_between_directions(u, v) for u in dh for v in dk))


def angle_between(h: Line, k: Line, cfg: MdConfig) -> AngleValue:
    """Arithmetic mean of the angles at all common points (0 as soon as an arc is shared)."""
    cp = common_points(h, k, cfg)
    if cp.empty:
        raise NoCommonPoint("the lines do not meet")
    if cp.arcs:
        return AngleValue(0.0)
    vals = [angle_at(h, k, o, cfg, cp).degrees for o in cp.points]
    return AngleValue(sum(vals) / len(vals))


# --- segments ---------------------------------------------------------------------


@dataclass(frozen=True)
class Segment:
    """Directed piece of a line between two parameters of its representation."""

    line: Line
    s_from: float
    s_to: float

    @property
    def length(self) -> float:
        if self.line.is_loop:
            return (self.s_to - self.s_from) % self.line.length
        return abs(self.s_to - self.s_from)


def segment(line: Line, a: PointRef, b: PointRef, cfg: MdConfig, occ_a: int = 0, occ_b: int = 0) -> Segment:
    return Segment(line, _params(line, a, cfg)[occ_a], _params(line, b, cfg)[occ_b])


def segment_congruent(u: Segment, v: Segment) -> bool:
    return abs(u.length - v.length) <= TOL


def lay_off(line: Line, a: PointRef, length: float, cfg: MdConfig, direction: int = 1, occurrence: int = 0) -> PointRef | None:
    """Point at distance ``length`` from ``a`` along the line, or None if the line ends first."""
    s = _params(line, a, cfg)[occurrence] + direction * length
    return line_point_at(line, s, cfg)


# --- triangles ----------------------------------------------------------------------


def triangle_sides(a: PointRef, b: PointRef, c: PointRef, cfg: MdConfig, side_choice=(0, 0, 0)) -> tuple[PathRep, PathRep, PathRep]:
    """Chosen geodesics a->b, b->c, c->a (index into the ordered geodesic list)."""
    return (
        geodesics_between(a, b, cfg)[side_choice[0]],
        geodesics_between(b, c, cfg)[side_choice[1]],
        geodesics_between(c, a, cfg)[side_choice[2]],
    )


def _vertex_angle(out1: PathRep, out2: PathRep, cfg: MdConfig) -> float:
    d1 = leg_direction(out1.legs[0], True, cfg)
    d2 = leg_direction(out2.legs[0], True, cfg)
    return angle_between_directions(d1, d2)


def triangle_angles(a: PointRef, b: PointRef, c: PointRef, cfg: MdConfig, side_choice=(0, 0, 0)) -> tuple[AngleValue, AngleValue, AngleValue]:
    """Vertex angles between the chosen side geodesics (0 where two sides leave along a common arc)."""
    verts = (a, b, c)
    for i in range(3):
        if same_point(verts[i], verts[(i + 1) % 3]):
            raise DegenerateTriangle("repeated vertex")
    ab, bc, ca = triangle_sides(a, b, c, cfg, side_choice)
    for side, opposite in ((ab, c), (bc, a), (ca, b)):
        if on_line(make_line(side, cfg), opposite, cfg):
            raise DegenerateTriangle(f"{opposite} lies on the opposite side")
    return (
        AngleValue(_vertex_angle(ab, ca.reversed(), cfg)),
        AngleValue(_vertex_angle(bc, ab.reversed(), cfg)),
        AngleValue(_vertex_angle(ca, bc.reversed(), cfg)),
    )


def _shares_arc(p: PathRep, q: PathRep, cfg: MdConfig) -> bool:
    return bool(common_points(make_line(p, cfg), make_line(q, cfg), cfg).arcs)


def triangle_area(a: PointRef, b: PointRef, c: PointRef, cfg: MdConfig, side_choice=(0, 0, 0)) -> float | None:
    """Area for the two cases that have one: a triangle inside one half-plane, and the
    degenerate case (all angles 0, sides pairwise sharing arcs) whose area is 0."""
    pts = (a, b, c)
    regions = {plane_region(p) for p in pts}
    if len(regions) == 1 and None not in regions and all(isinstance(p, (Planar, Gate)) for p in pts):
        (x1, y1), (x2, y2), (x3, y3) = (xy(p, cfg) for p in pts)
        return abs((x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)) / 2
    angles = triangle_angles(a, b, c, cfg, side_choice)
    sides = triangle_sides(a, b, c, cfg, side_choice)
    if all(v.degrees <= TOL for v in angles) and all(
        _shares_arc(sides[i], sides[j], cfg) for i in range(3) for j in range(i + 1, 3)
    ):
        return 0.0
    return None


def right_angle_witness(x: PointRef, sid: int, cfg: MdConfig) -> AngleValue:
    """Measure of the right angle at P built on the line x-P and string ``sid``:
    half the angle between the planar direction P->x and the string tangent."""
    if not isinstance(x, Planar) or x.region != 1:
        raise ValueError("x must be a point of the left half-plane other than P")
    h = make_line(route(cfg, x, P), cfg)
    k = make_line(route(cfg, P, sid, Q), cfg)
    return AngleValue(angle_at(h, k, P, cfg).degrees / 2)
