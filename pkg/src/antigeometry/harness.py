"""Fixture catalog: each fixture builds a witness configuration from the model
config and checks the claimed (non-)property on it.

A fixture is a pair ``build(cfg) -> inputs`` and ``check(inputs, cfg) ->
(status, values)``. Reports store the encoded inputs, so a report can be
replayed by decoding them and running ``check`` again.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .codec import decode_value, encode_value
from .incidence import (
    angle_between,
    betweenness,
    common_points,
    lay_off,
    order_tuple,
    right_angle_witness,
    segment,
    segment_congruent,
    triangle_angles,
    triangle_area,
)
from .metric import circle, circle_sample_points, distance, extend_maximally, geodesics_between, is_geodesic
from .model import (
    TOL,
    I,
    MdConfig,
    OnString,
    P,
    Q,
    connectable,
    make_point,
    on_string,
    point_label,
    same_point,
    xy,
)
from .parallels import archimedean_reachable, classify_parallels, pencil_through
from .paths import (
    Infinite,
    Line,
    Loop,
    PathRep,
    Terminal,
    line_point_at,
    make_line,
    on_line,
    params_of,
    point_at,
    route,
)
from .planes import PlaneDesc, closure_check, contains, path_in_plane, plane_intersection, point_count

CE = "CounterexampleFound"
HOLDS = "HoldsOnWitness"
UNREALIZED = "Unrealized"
NOT_FOUND = "NotFound"


class UnknownFixture(KeyError):
    pass


class FixtureBroken(AssertionError):
    pass


class ReplayMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class Fixture:
    fid: str
    anchor: str
    expected: str
    build: Callable
    check: Callable


@dataclass
class AxiomReport:
    fixture_id: str
    anchor: str
    status: str
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"fixture_id": self.fixture_id, "anchor": self.anchor, "status": self.status, "witness": self.witness}


REGISTRY: dict[str, Fixture] = {}


def fixture(fid: str, anchor: str, build: Callable, expected: str = CE):
    def wrap(check):
        REGISTRY[fid] = Fixture(fid, anchor, expected, build, check)
        return check

    return wrap


def catalog() -> list[str]:
    return list(REGISTRY)


# --- small helpers ------------------------------------------------------------------


def pt(x: float, y: float, cfg: MdConfig):
    return make_point(("planar", x, y), cfg)


def ray_line(path: PathRep, cfg: MdConfig, index: int = 0) -> Line:
    return extend_maximally(path, cfg)[index]


def full_line(path: PathRep, cfg: MdConfig) -> Line:
    """A planar-ended representation taken as infinite at both ends."""
    return make_line(path, cfg, Infinite(), Infinite())


def loop(path: PathRep, cfg: MdConfig) -> Line:
    return make_line(path, cfg, Loop(), Loop())


def _deg(u, v) -> float:
    c = (u[0] * v[0] + u[1] * v[1]) / (math.hypot(*u) * math.hypot(*v))
    return math.degrees(math.acos(max(-1.0, min(1.0, c))))


def _vec(a, b, cfg):
    (ax, ay), (bx, by) = xy(a, cfg), xy(b, cfg)
    return (bx - ax, by - ay)


def _labels(pts) -> list[str]:
    return [point_label(p) for p in pts]


def _status(ok: bool, yes: str = CE) -> str:
    return yes if ok else NOT_FOUND


# --- Euclid's postulates --------------------------------------------------------------


@fixture("euclid.1", "a line cannot always be drawn between two points", lambda cfg: {"a": I, "b": pt(-1, 0, cfg)})
def _euclid_1(inp, cfg):
    c = connectable(inp["a"], inp["b"])
    return _status(not c), {"connectable": c, "distance": distance(inp["a"], inp["b"], cfg)}


def _build_gf(cfg):
    return {"g": pt(-2, 1, cfg), "f": pt(0, 1, cfg)}


@fixture("euclid.2", "a finite line cannot always be extended to an infinite one", _build_gf)
def _euclid_2(inp, cfg):
    lines = extend_maximally(route(cfg, inp["g"], inp["f"]), cfg)
    both_inf = any(isinstance(l.start, Infinite) and isinstance(l.end, Infinite) for l in lines)
    stops_at_f = all(isinstance(l.end, Terminal) and l.end.point == inp["f"] for l in lines)
    return _status(not both_inf and stops_at_f), {
        "n_extensions": len(lines),
        "end_status": [type(l.end).__name__ for l in lines],
    }


@fixture("euclid.3", "a circle cannot always be drawn about a point", lambda cfg: {"center": I, "r": 0.5})
def _euclid_3(inp, cfg):
    desc = circle(inp["center"], inp["r"], cfg)
    return _status(desc.is_empty), {"n_components": len(desc.components)}


def _build_right(cfg):
    return {"x": pt(-1, 0, cfg), "y": pt(-1, 1, cfg), "sid": 1}


def _check_right(inp, cfg):
    a = right_angle_witness(inp["x"], inp["sid"], cfg).degrees
    b = right_angle_witness(inp["y"], inp["sid"], cfg).degrees
    return _status(abs(a - b) > TOL), {"right_angle_x": a, "right_angle_y": b}


fixture("euclid.4", "right angles are not all congruent", _build_right)(_check_right)


def _build_euclid_5(cfg):
    return {
        "h1": ray_line(route(cfg, pt(-4, 2, cfg), pt(0, 1, cfg)), cfg),
        "h2": ray_line(route(cfg, pt(-4, -2, cfg), pt(0, -1, cfg)), cfg),
        "l": full_line(route(cfg, pt(-1, -3, cfg), pt(-1, 3, cfg)), cfg),
    }


@fixture("euclid.5", "two lines meeting a transversal at interior angles under two right angles need not meet", _build_euclid_5)
def _euclid_5(inp, cfg):
    h1, h2, l = inp["h1"], inp["h2"], inp["l"]
    x1 = common_points(l, h1, cfg).points
    x2 = common_points(l, h2, cfg).points
    if len(x1) != 1 or len(x2) != 1:
        return NOT_FOUND, {"crossings": [len(x1), len(x2)]}
    x1, x2 = x1[0], x2[0]
    # interior angles on the frontier side: along l toward the other crossing, and along h_i toward f1
    d1 = h1.rep.legs[-1].direction
    d2 = h2.rep.legs[-1].direction
    a1 = _deg(_vec(x1, x2, cfg), d1)
    a2 = _deg(_vec(x2, x1, cfg), d2)
    disjoint = common_points(h1, h2, cfg).empty
    ends = [h1.end.point, h2.end.point]
    ends_distinct = not any(same_point(e, P) for e in ends) and not same_point(ends[0], ends[1])
    ok = a1 + a2 < 180 - TOL and disjoint and ends_distinct
    return _status(ok), {"interior_angle_sum": a1 + a2, "h1_meets_h2": not disjoint, "frontier_hits": _labels(ends)}


# --- Group I -------------------------------------------------------------------------


def _build_i1(cfg):
    return {"a": pt(-1, 0, cfg), "b": pt(cfg.g + 1, 0, cfg)}


@fixture("I.1", "two points do not always determine a line", _build_i1)
def _i1(inp, cfg):
    geos = geodesics_between(inp["a"], inp["b"], cfg)
    lengths = [g.length for g in geos]
    ok = len(geos) >= 2 and max(lengths) - min(lengths) <= TOL and all(is_geodesic(g, cfg) for g in geos)
    return _status(ok), {"n_geodesics": len(geos), "lengths": lengths, "strings": [list(g.string_ids()) for g in geos]}


def _build_i2(cfg):
    a, b = pt(-1, 1, cfg), pt(-1, -1, cfg)
    return {"h": make_line(route(cfg, a, P, 1, Q), cfg), "k": make_line(route(cfg, b, P, 1, Q), cfg), "a": a, "b": b}


@fixture("I.2", "a line holds two points that do not determine it", _build_i2)
def _i2(inp, cfg):
    h, k = inp["h"], inp["k"]
    through = all(on_line(x, g, cfg) for x in (h, k) for g in (P, Q))
    geo = is_geodesic(h.rep, cfg) and is_geodesic(k.rep, cfg)
    distinct = not on_line(h, inp["b"], cfg) and not on_line(k, inp["a"], cfg)
    return _status(through and geo and distinct), {"both_through_P_Q": through, "distinct": distinct}


def _build_i3(cfg):
    return {
        "a": pt(-1, 1, cfg),
        "b": pt(-2, -1, cfg),
        "c": P,
        "planes": [
            PlaneDesc.of("Delta1"),
            PlaneDesc.of("Delta1", "String1"),
            PlaneDesc.of("Delta1", "String2"),
            PlaneDesc.of("Delta1", "String1", "String2"),
        ],
    }


def _planes_through(inp, cfg):
    a, b, c = inp["a"], inp["b"], inp["c"]
    u, v = _vec(a, b, cfg), _vec(a, c, cfg)
    noncollinear = abs(u[0] * v[1] - u[1] * v[0]) > TOL
    good = []
    pairs = []
    for plane in inp["planes"]:
        res = closure_check(plane, cfg, n_pairs=200)
        pairs.append(res.pairs_checked)
        if res.ok and all(contains(plane, p) for p in (a, b, c)):
            good.append(plane.label())
    return noncollinear, good, pairs


@fixture("I.3", "three non-collinear points lie in many planes", _build_i3)
def _i3(inp, cfg):
    nc, good, pairs = _planes_through(inp, cfg)
    return _status(nc and len(set(good)) >= 2), {"noncollinear": nc, "planes": good, "closure_pairs": pairs}


@fixture("I.4", "a plane is not determined by three of its non-collinear points", _build_i3)
def _i4(inp, cfg):
    nc, good, pairs = _planes_through(inp, cfg)
    alpha = inp["planes"][0].label()
    others = [p for p in good if p != alpha]
    ok = nc and alpha in good and len(others) >= 1
    return _status(ok), {"alpha": alpha, "other_planes": others, "closure_pairs": pairs}


def _build_i5(cfg):
    a, b, d = pt(-1, 1, cfg), on_string(1, 2.0, cfg), pt(cfg.g + 2, 1, cfg)
    return {"a": a, "b": b, "d": d, "alpha": PlaneDesc.of("Delta1", "String1"), "line": make_line(route(cfg, a, P, 1, Q, d), cfg)}


@fixture("I.5", "two points of a line in a plane do not put the whole line in it", _build_i5)
def _i5(inp, cfg):
    line, alpha = inp["line"], inp["alpha"]
    on = all(on_line(line, inp[k], cfg) for k in ("a", "b", "d"))
    res = closure_check(alpha, cfg, n_pairs=200)
    ok = is_geodesic(line.rep, cfg) and on and res.ok
    ok = ok and contains(alpha, inp["a"]) and contains(alpha, inp["b"]) and not contains(alpha, inp["d"])
    return _status(ok), {"closure_pairs": res.pairs_checked, "d_in_alpha": contains(alpha, inp["d"])}


def _build_i6(cfg):
    return {"alpha": PlaneDesc.of("String1", "String2"), "beta": PlaneDesc.of("Delta1")}


@fixture("I.6", "two planes may share exactly one point", _build_i6)
def _i6(inp, cfg):
    ra = closure_check(inp["alpha"], cfg)
    rb = closure_check(inp["beta"], cfg)
    shared, extra = plane_intersection(inp["alpha"], inp["beta"])
    ok = ra.ok and rb.ok and not shared and list(extra) == [P]
    return _status(ok), {"shared_components": sorted(shared), "shared_points": _labels(extra), "closure_pairs": [ra.pairs_checked, rb.pairs_checked]}


def _build_i7(cfg):
    return {
        "line": Line(PathRep((), I), Terminal(I), Terminal(I)),
        "plane": PlaneDesc.of("Isolated:I", "Isolated:J"),
        "space": PlaneDesc.of("Isolated:I", "Isolated:J", "Isolated:K"),
    }


@fixture("I.7", "a line with one point, a plane with two points", _build_i7)
def _i7(inp, cfg):
    ext = extend_maximally(inp["line"].rep, cfg)
    single = len(ext) == 1 and ext[0].rep == inp["line"].rep
    res = closure_check(inp["plane"], cfg)
    n_plane, n_space = point_count(inp["plane"]), point_count(inp["space"])
    ok = single and res.ok and n_plane == 2 and n_space == 3
    return _status(ok), {"line_is_maximal": single, "plane_points": n_plane, "space_points": n_space}


# --- Group II ------------------------------------------------------------------------


def _build_ii1(cfg):
    L = cfg.length(1)
    return {"line": loop(route(cfg, P, 1, Q, 2, P), cfg), "t": on_string(1, L - 0.5, cfg), "v": on_string(2, L - 0.5, cfg)}


@fixture("II.1", "betweenness is not symmetric", _build_ii1)
def _ii1(inp, cfg):
    line, t, v = inp["line"], inp["t"], inp["v"]
    fwd = betweenness(line, P, t, v, cfg)
    back = betweenness(line, v, t, P, cfg)
    pq1 = segment(make_line(route(cfg, P, 1, Q), cfg), P, Q, cfg)
    qp2 = segment(make_line(route(cfg, Q, 2, P), cfg), Q, P, cfg)
    ok = is_geodesic(line.rep, cfg) and fwd and not back
    return _status(ok), {
        "P_T_V": fwd,
        "V_T_P": back,
        "PQ_on_s1_congruent_QP_on_s2": segment_congruent(pq1, qp2),
        "PQ_on_s1_same_as_QP_on_s2": pq1.line.rep == qp2.line.rep.reversed(),
    }


@fixture("II.2", "a line can end at a point with nothing beyond it", _build_gf)
def _ii2(inp, cfg):
    g, f = inp["g"], inp["f"]
    line = ray_line(route(cfg, g, f), cfg)
    sf = params_of(line, f, cfg)[0]
    mid = line_point_at(line, sf / 2, cfg)
    has_mid = mid is not None and betweenness(line, g, mid, f, cfg)
    beyond = [line_point_at(line, sf + e, cfg) for e in (1e-6, 1e-3, 0.1, 1.0)]
    ok = has_mid and all(b is None for b in beyond)
    return _status(ok), {"point_between": has_mid, "points_beyond": sum(b is not None for b in beyond)}


def _build_ii3(cfg):
    L = cfg.length(1)
    third = 2 * L / 3
    return {"line": loop(route(cfg, P, 1, Q, 2, P), cfg), "r": on_string(1, third, cfg), "t": on_string(2, third, cfg)}


@fixture("II.3", "each of three points of a line lies between the other two", _build_ii3)
def _ii3(inp, cfg):
    line, r, t = inp["line"], inp["r"], inp["t"]
    res = {
        "P_R_T": betweenness(line, P, r, t, cfg),
        "R_T_P": betweenness(line, r, t, P, cfg),
        "T_P_R": betweenness(line, t, P, r, cfg),
    }
    return _status(all(res.values())), res


def _build_ii4(cfg):
    g = cfg.g
    a, b = pt(g + 2, 1, cfg), pt(g + 4, 2, cfg)
    c, d = on_string(1, 1.0, cfg), on_string(2, 1.0, cfg)
    return {
        "a": a,
        "b": b,
        "c": c,
        "d": d,
        "rep1": make_line(route(cfg, a, Q, 1, P, 2, Q, b), cfg),
        "rep2": make_line(route(cfg, a, Q, 2, P, 1, Q, b), cfg),
    }


def _same_point_set(l1: Line, l2: Line, cfg, n: int = 64) -> bool:
    for x, y in ((l1, l2), (l2, l1)):
        T = x.rep.length
        if not all(on_line(y, point_at(x.rep, T * i / n, cfg), cfg) for i in range(n + 1)):
            return False
    return True


@fixture("II.4", "four points of one line in two different orders", _build_ii4)
def _ii4(inp, cfg):
    l1, l2 = inp["rep1"], inp["rep2"]
    pts = [inp["a"], inp["b"], inp["c"], inp["d"]]
    names = {point_label(p): n for p, n in zip(pts, "ABCD")}
    o1 = "".join(names[point_label(p)] for p in order_tuple(l1, pts, cfg))
    o2 = "".join(names[point_label(p)] for p in order_tuple(l2, pts, cfg))
    same = _same_point_set(l1, l2, cfg)
    ok = is_geodesic(l1.rep, cfg) and is_geodesic(l2.rep, cfg) and same and o1 != o2
    return _status(ok), {"order_rep1": o1, "order_rep2": o2, "same_point_set": same}


def _build_ii5(cfg):
    return {
        "a": pt(0, 2, cfg),
        "b": pt(0, -2, cfg),
        "c": pt(-2, 0, cfg),
        "l": make_line(route(cfg, Q, 2, P, 1, Q, pt(cfg.g + 2, 0, cfg)), cfg),
        "plane": PlaneDesc.of("Delta1", "Delta2", "String1", "String2"),
    }


@fixture("II.5", "a line through a side of a triangle need not meet another side", _build_ii5)
def _ii5(inp, cfg):
    a, b, c, l, plane = inp["a"], inp["b"], inp["c"], inp["l"], inp["plane"]
    ab = make_line(route(cfg, a, b), cfg)
    bc = make_line(route(cfg, b, c), cfg)
    ac = make_line(route(cfg, a, c), cfg)
    hits_ab = on_line(ab, P, cfg) and on_line(l, P, cfg)
    misses = common_points(l, bc, cfg).empty and common_points(l, ac, cfg).empty
    avoids = not any(on_line(l, x, cfg) for x in (a, b, c))
    res = closure_check(plane, cfg)
    in_plane = res.ok and path_in_plane(plane, l.rep) and all(contains(plane, x) for x in (a, b, c))
    ok = is_geodesic(l.rep, cfg) and hits_ab and misses and avoids and in_plane
    return _status(ok), {"meets_AB_at_P": hits_ab, "misses_BC_and_AC": misses, "closure_pairs": res.pairs_checked}


# --- Group III -----------------------------------------------------------------------


def _build_iii_zero(cfg):
    g = cfg.g
    return {"l": full_line(route(cfg, pt(-1, 0, cfg), P, 1, Q, pt(g + 2, 0, cfg)), cfg), "a": on_string(2, cfg.length(2) / 2, cfg), "continuous": False}


def _build_iii_one(cfg):
    return {"l": full_line(route(cfg, pt(-1, 0, cfg), pt(-1, 1, cfg)), cfg), "a": pt(-2, 0, cfg), "continuous": True}


def _build_iii_infinite(cfg):
    return {"l": ray_line(route(cfg, pt(-2, 0, cfg), pt(0, 1, cfg)), cfg), "a": pt(-1, -2, cfg), "continuous": True}


def _classify(inp, cfg):
    pencil = pencil_through(inp["a"], cfg)
    return classify_parallels(inp["l"], inp["a"], pencil, cfg, continuous=inp["continuous"])


def _parallel_check(kind):
    def check(inp, cfg):
        c = _classify(inp, cfg)
        return _status(c.cls.kind == kind), {"class": c.cls.label(), "lemma": c.lemma, "pencil": c.n_pencil, "misses": c.n_parallel}

    return check


fixture("III.zero", "no parallel through a point", _build_iii_zero)(_parallel_check("Zero"))
fixture("III.one", "exactly one parallel through a point", _build_iii_one)(_parallel_check("One"))
fixture("III.infinite", "infinitely many, but not all, parallels through a point", _build_iii_infinite)(_parallel_check("InfiniteNotAll"))


def _build_probes(cfg):
    return {"probes": [_build_iii_zero(cfg), _build_iii_one(cfg), _build_iii_infinite(cfg)]}


def _unrealized_check(kind):
    def check(inp, cfg):
        realized = sorted({_classify(p, cfg).cls.kind for p in inp["probes"]})
        return (CE if kind in realized else UNREALIZED), {"target": kind, "realized": realized}

    return check


fixture("III.finite", "finitely many (at least two) parallels: no witness in this model", _build_probes, UNREALIZED)(_unrealized_check("FiniteK"))
fixture("III.all", "every line through the point is parallel: no witness in this model", _build_probes, UNREALIZED)(_unrealized_check("InfiniteAll"))


def _build_iii_theorem(cfg):
    a, d = pt(0, 3, cfg), pt(-1, 6, cfg)
    b, c, e = pt(0, -1, cfg), pt(0, -3, cfg), pt(-2, -2, cfg)
    return {
        "ad": ray_line(route(cfg, a, d), cfg),
        "be": ray_line(route(cfg, b, e), cfg),
        "ce": ray_line(route(cfg, c, e), cfg),
        "e": e,
    }


@fixture("III.theorem", "two parallels to a line can meet each other", _build_iii_theorem)
def _iii_theorem(inp, cfg):
    ad, be, ce = inp["ad"], inp["be"], inp["ce"]
    be_ad = common_points(be, ad, cfg).empty
    ce_ad = common_points(ce, ad, cfg).empty
    x = common_points(be, ce, cfg)
    meet_at_e = not x.arcs and len(x.points) == 1 and same_point(x.points[0], inp["e"])
    return _status(be_ad and ce_ad and meet_at_e), {"BE_misses_AD": be_ad, "CE_misses_AD": ce_ad, "BE_meets_CE": _labels(x.points)}


# --- Group IV ------------------------------------------------------------------------


def _build_iv1(cfg):
    c, a1 = pt(-3, 0, cfg), pt(-1, 0, cfg)
    return {
        "a": pt(-10, 5, cfg),
        "b": pt(-10, 2, cfg),
        "a1": a1,
        "l1": make_line(route(cfg, c, P, 1, Q, 2, P), cfg),
        "l2": make_line(route(cfg, c, P, 2, Q, 1, P), cfg),
        "m_line": ray_line(route(cfg, pt(-2, 1, cfg), pt(0, 1, cfg)), cfg),
        "a2": pt(-1, 1, cfg),
    }


@fixture("IV.1", "laying off a segment can give two points, or none", _build_iv1)
def _iv1(inp, cfg):
    ab = distance(inp["a"], inp["b"], cfg)
    b1 = lay_off(inp["l1"], inp["a1"], ab, cfg)
    b2 = lay_off(inp["l2"], inp["a1"], ab, cfg)
    two = (
        isinstance(b1, OnString) and b1.sid == 1 and isinstance(b2, OnString) and b2.sid == 2
        and is_geodesic(inp["l1"].rep, cfg) and is_geodesic(inp["l2"].rep, cfg)
    )
    none = lay_off(inp["m_line"], inp["a2"], ab, cfg)
    return _status(two and none is None), {
        "AB": ab,
        "B1": point_label(b1) if b1 else None,
        "B2": point_label(b2) if b2 else None,
        "toward_frontier": point_label(none) if none else None,
    }


def _build_iv1b(cfg):
    a, b = on_string(1, 0.5, cfg), on_string(2, 0.5, cfg)
    return {"a": a, "b": b, "rep1": loop(route(cfg, a, Q, b, P, a), cfg), "rep2": loop(route(cfg, a, P, b, Q, a), cfg)}


@fixture("IV.1b", "a segment need not be congruent to itself", _build_iv1b)
def _iv1b(inp, cfg):
    s1 = segment(inp["rep1"], inp["a"], inp["b"], cfg)
    s2 = segment(inp["rep2"], inp["a"], inp["b"], cfg)
    geo = is_geodesic(inp["rep1"].rep, cfg) and is_geodesic(inp["rep2"].rep, cfg)
    same = _same_point_set(inp["rep1"], inp["rep2"], cfg)
    ok = geo and same and not segment_congruent(s1, s2)
    return _status(ok), {"AB_rep1": s1.length, "AB_rep2": s2.length, "same_point_set": same}


def _build_iv2(cfg):
    c, d = pt(0, 1, cfg), pt(0, -1, cfg)
    return {
        "a": pt(-5, 0, cfg),
        "b": pt(-5, 10, cfg),
        "a1": pt(-7, 0, cfg),
        "b1": pt(-7, 10, cfg),
        "c": c,
        "d": d,
        "long": make_line(route(cfg, c, P, 1, Q, 2, P, d), cfg),
        "short": make_line(route(cfg, c, P, d), cfg),
    }


@fixture("IV.2", "congruence of segments is not transitive", _build_iv2)
def _iv2(inp, cfg):
    ab = segment(make_line(route(cfg, inp["a"], inp["b"]), cfg), inp["a"], inp["b"], cfg)
    a1b1 = segment(make_line(route(cfg, inp["a1"], inp["b1"]), cfg), inp["a1"], inp["b1"], cfg)
    cd_long = segment(inp["long"], inp["c"], inp["d"], cfg, occ_b=-1)
    cd_short = segment(inp["short"], inp["c"], inp["d"], cfg)
    ok = (
        is_geodesic(inp["long"].rep, cfg)
        and segment_congruent(ab, cd_long)
        and segment_congruent(ab, a1b1)
        and not segment_congruent(a1b1, cd_short)
    )
    return _status(ok), {"AB": ab.length, "A1B1": a1b1.length, "CD_long": cd_long.length, "CD_short": cd_short.length}


def _build_iv3(cfg):
    a1 = pt(-1, 0, cfg)
    return {
        "a": pt(-10, 0, cfg),
        "b": pt(-7, 0, cfg),
        "c": pt(-3, 0, cfg),
        "a1": a1,
        "l1": make_line(route(cfg, a1, P, 1, Q, 2, P), cfg),
    }


@fixture("IV.3", "adding congruent segments need not give congruent sums", _build_iv3)
def _iv3(inp, cfg):
    a, b, c, a1, l1 = inp["a"], inp["b"], inp["c"], inp["a1"], inp["l1"]
    ab, bc, ac = distance(a, b, cfg), distance(b, c, cfg), distance(a, c, cfg)
    b1 = lay_off(l1, a1, ab, cfg)
    c1 = lay_off(l1, b1, bc, cfg) if b1 is not None else None
    if b1 is None or c1 is None:
        return NOT_FOUND, {"B1": None, "C1": None}
    along = segment(l1, a1, c1, cfg).length
    geo = distance(a1, c1, cfg)
    skips_b1 = all(not on_line(make_line(g, cfg), b1, cfg) for g in geodesics_between(a1, c1, cfg))
    ok = ac > cfg.length(1) and abs(along - ac) <= TOL and geo < ac - TOL and skips_b1
    return _status(ok), {"AC": ac, "A1C1_along_rep": along, "A1C1_geodesic": geo, "B1": point_label(b1), "C1": point_label(c1)}


def _build_iv4(cfg):
    g = cfg.g
    a, a1 = pt(-1, 0, cfg), pt(-2, 1, cfg)
    b1 = pt(g + 2, 2, cfg)
    cands = [pt(g + 2, -1, cfg), pt(g + 3, -3, cfg), pt(g + 1, -2, cfg), pt(g + 4, 0, cfg), pt(g + 5, 4, cfg)]
    return {
        "h": make_line(route(cfg, a, P, 1, Q, pt(g + 2, 1, cfg)), cfg),
        "k": make_line(route(cfg, a, P, 2, Q, pt(g + 2, -1, cfg)), cfg),
        "h1": make_line(route(cfg, a1, P, 1, Q, b1), cfg),
        "k1": [make_line(route(cfg, a1, P, 2, Q, c), cfg) for c in cands],
    }


@fixture("IV.4", "an angle can be laid off along infinitely many half-lines", _build_iv4)
def _iv4(inp, cfg):
    hk = angle_between(inp["h"], inp["k"], cfg).degrees
    vals = [angle_between(inp["h1"], k, cfg).degrees for k in inp["k1"]]
    ks = inp["k1"]
    tips = [k.rep.legs[-1].end for k in ks]
    distinct = all(
        not on_line(ks[i], make_point(("planar2", *tips[j]), cfg), cfg) for i in range(len(ks)) for j in range(len(ks)) if i != j
    )
    ok = hk <= TOL and all(abs(v - hk) <= TOL for v in vals) and distinct and len(ks) >= 2
    return _status(ok), {"angle_hk": hk, "angles_h1k1": vals, "pairwise_distinct": distinct}


def _named_angle(cfg, a, b):
    h = make_line(route(cfg, P, 1, Q, a), cfg)
    return {
        "h": h,
        "k_same": make_line(route(cfg, P, 2, Q, a), cfg),
        "k_other": make_line(route(cfg, P, 2, Q, b), cfg),
    }


@fixture("IV.4b", "an angle need not be congruent to itself", lambda cfg: _named_angle(cfg, pt(cfg.g + 2, 1, cfg), pt(cfg.g + 2, -1, cfg)))
def _iv4b(inp, cfg):
    v0 = angle_between(inp["h"], inp["k_same"], cfg).degrees
    v1 = angle_between(inp["h"], inp["k_other"], cfg).degrees
    return _status(v0 <= TOL and v1 > TOL), {"angle_s1_s2_first": v0, "angle_s1_s2_second": v1}


@fixture("IV.5", "congruence of angles is not transitive", lambda cfg: _named_angle(cfg, pt(cfg.g + 3, 0, cfg), pt(cfg.g + 1, 3, cfg)))
def _iv5(inp, cfg):
    # the named angle (s1, s2) is congruent to each of its two realizations
    v1 = angle_between(inp["h"], inp["k_same"], cfg).degrees
    v2 = angle_between(inp["h"], inp["k_other"], cfg).degrees
    return _status(abs(v1 - v2) > TOL), {"realization_1": v1, "realization_2": v2}


def _build_iv6(cfg):
    g = cfg.g
    m, n = pt(g + 2, 1, cfg), pt(g + 2, -1, cfg)
    pm = make_line(route(cfg, P, 1, Q, m), cfg)
    pn = make_line(route(cfg, P, 2, Q, n), cfg)
    theta = math.radians(angle_between(pm, pn, cfg).degrees)
    r = (-10.0, 0.0)
    m1 = pt(r[0] + pm.length, r[1], cfg)
    n1 = pt(r[0] + pn.length * math.cos(theta), r[1] + pn.length * math.sin(theta), cfg)
    return {"m": m, "n": n, "pm": pm, "pn": pn, "r": pt(*r, cfg), "m1": m1, "n1": n1}


@fixture("IV.6", "side-angle-side does not force congruent triangles", _build_iv6)
def _iv6(inp, cfg):
    m, n, r, m1, n1 = inp["m"], inp["n"], inp["r"], inp["m1"], inp["n1"]
    pm, pn = inp["pm"], inp["pn"]
    sas = (
        abs(pm.length - distance(r, m1, cfg)) <= 1e-9
        and abs(pn.length - distance(r, n1, cfg)) <= 1e-9
        and abs(angle_between(pm, pn, cfg).degrees - _deg(_vec(r, m1, cfg), _vec(r, n1, cfg))) <= 1e-9
    )
    cross = len(common_points(pm, pn, cfg).points)
    t1 = [v.degrees for v in triangle_angles(P, m, n, cfg, (0, 0, 1))]
    t2 = [v.degrees for v in triangle_angles(r, m1, n1, cfg)]
    differ = abs(t1[1] - t2[1]) > TOL or abs(t1[2] - t2[2]) > TOL
    return _status(sas and differ), {"sas_match": sas, "PM_PN_crossings": cross, "angles_PMN": t1, "angles_RMN": t2}


fixture("IV.right", "two right angles with different measures", _build_right)(_check_right)


def _triangle_sum(inp, cfg, choice=(0, 0, 0)):
    return sum(v.degrees for v in triangle_angles(inp["a"], inp["b"], inp["c"], cfg, choice))


@fixture(
    "IV.sum180",
    "triangle angle sum: 180 degrees in one half-plane",
    lambda cfg: {"a": pt(-3, 0, cfg), "b": pt(-1, 2, cfg), "c": pt(-2, -2, cfg)},
    HOLDS,
)
def _sum180(inp, cfg):
    s = _triangle_sum(inp, cfg)
    return (HOLDS if abs(s - 180) <= 1e-9 else NOT_FOUND), {"sum": s}


def _build_sum_less(cfg):
    g = cfg.g
    return {"a": on_string(2, cfg.length(2) / 2, cfg), "b": pt(g + 2, 1, cfg), "c": pt(g + 2, -2, cfg)}


@fixture("IV.sumLess", "triangle angle sum below 180 degrees", _build_sum_less)
def _sum_less(inp, cfg):
    s = _triangle_sum(inp, cfg)
    tqr = _deg(_vec(Q, inp["c"], cfg), _vec(Q, inp["b"], cfg))
    ok = 0 < s < 180 and abs(s - (180 - tqr)) <= 1e-9
    return _status(ok), {"sum": s, "angle_TQR": tqr, "expected": 180 - tqr}


def _build_sum0(cfg):
    return {"a": pt(-1, 0, cfg), "b": pt(cfg.g + 3, 0, cfg), "c": on_string(3, 0.5, cfg)}


@fixture("IV.sum0", "triangle angle sum of zero", _build_sum0)
def _sum0(inp, cfg):
    a, b, c = inp["a"], inp["b"], inp["c"]
    s = _triangle_sum(inp, cfg)
    area = triangle_area(a, b, c, cfg)
    via_s1 = cfg.length(3) - c.t + distance(Q, b, cfg)
    ok = s == 0.0 and area == 0.0 and distance(c, b, cfg) < via_s1 - TOL
    return _status(ok), {"sum": s, "area": area, "CB": distance(c, b, cfg), "CB_along_s3": via_s1}


def _build_sum_more(cfg):
    return {"a": pt(-3, 1, cfg), "b": pt(-3, -1, cfg), "c": Q, "choice": [0, 0, 1]}


@fixture("IV.sumMore", "triangle angle sum above 180 degrees", _build_sum_more)
def _sum_more(inp, cfg):
    a, b = inp["a"], inp["b"]
    s = _triangle_sum(inp, cfg, tuple(inp["choice"]))
    gate = math.degrees(math.acos(max(-1.0, min(1.0, sum(x * y for x, y in zip(cfg.tangent("Q", 1), cfg.tangent("Q", 2)))))))
    pab = _deg(_vec(a, P, cfg), _vec(a, b, cfg))
    pba = _deg(_vec(b, P, cfg), _vec(b, a, cfg))
    ok = s > 180 + TOL and abs(s - (pab + pba + gate)) <= 1e-9
    return _status(ok), {"sum": s, "PAB": pab, "PBA": pba, "gate_angle": gate}


@fixture("IV.circle", "a circle about Q picks up an arc about P", lambda cfg: {"center": Q, "r": cfg.length(1) + 2.0})
def _iv_circle(inp, cfg):
    desc = circle(inp["center"], inp["r"], cfg)
    comps = []
    for c in desc.components:
        if hasattr(c, "radius"):
            comps.append({"region": c.region, "center": list(c.center), "radius": c.radius})
        else:
            comps.append({"string": c.sid, "t": list(c.ts)})
    err = max(abs(distance(inp["center"], x, cfg) - inp["r"]) for x in circle_sample_points(desc, cfg))
    about_p = any(c.get("region") == 1 and c["center"] == [0.0, 0.0] for c in comps)
    ok = about_p and err <= 1e-9
    return _status(ok), {"components": comps, "max_radius_error": err}


# --- Group V -------------------------------------------------------------------------


@fixture("V.1", "laying equal steps toward a point need not pass it", _build_gf)
def _v1(inp, cfg):
    g, f = inp["g"], inp["f"]
    line = ray_line(route(cfg, g, f), cfg)
    reach = archimedean_reachable(line, g, f, 0.3, cfg)
    control = archimedean_reachable(line, f, g, 0.3, cfg)
    return _status(not reach and control), {"reaches_frontier_point": reach, "reverse_direction": control}


# --- running and replay ---------------------------------------------------------------


def get_fixture(fid: str) -> Fixture:
    try:
        return REGISTRY[fid]
    except KeyError:
        raise UnknownFixture(fid) from None


def run_fixture(fid: str, cfg: MdConfig, strict: bool = True) -> AxiomReport:
    fx = get_fixture(fid)
    inputs = fx.build(cfg)
    status, values = fx.check(inputs, cfg)
    if strict and status != fx.expected:
        raise FixtureBroken(f"{fid}: expected {fx.expected}, got {status} ({values})")
    witness = {"inputs": encode_value(inputs), "values": encode_value(values)}
    return AxiomReport(fid, fx.anchor, status, witness)


def _close(a, b, tol: float = 1e-9) -> bool:
    if isinstance(a, dict) and isinstance(b, dict):
        return a.keys() == b.keys() and all(_close(a[k], b[k], tol) for k in a)
    if isinstance(a, list) and isinstance(b, list):
        return len(a) == len(b) and all(_close(x, y, tol) for x, y in zip(a, b))
    if isinstance(a, bool) or isinstance(b, bool):
        return a == b
    if isinstance(a, (int, float)) and isinstance(b, (int, float)):
        if math.isinf(a) or math.isinf(b):
            return a == b
        return abs(a - b) <= tol
    return a == b


def replay(report: dict, cfg: MdConfig) -> bool:
    """Re-run a fixture's check on the serialized witness; raises ReplayMismatch on disagreement."""
    fx = get_fixture(report["fixture_id"])
    inputs = decode_value(report["witness"]["inputs"], cfg)
    status, values = fx.check(inputs, cfg)
    if status != report["status"]:
        raise ReplayMismatch(f"{fx.fid}: status {status} != {report['status']}")
    if not _close(encode_value(values), report["witness"]["values"]):
        raise ReplayMismatch(f"{fx.fid}: values differ on replay")
    return True


def run_all(cfg: MdConfig, prefix: str | None = None, strict: bool = False) -> list[AxiomReport]:
    return [run_fixture(fid, cfg, strict) for fid in catalog() if prefix is None or fid.startswith(prefix)]
