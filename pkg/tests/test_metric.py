import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antigeometry.metric import (
    PlanarArc,
    StringPoints,
    circle,
    distance,
    extend_maximally,
    geodesics_between,
    is_geodesic,
)
from antigeometry.model import DEFAULT, I, J, P, Q, OnString, Planar, make_point, xy
from antigeometry.oracle import GridOracle
from antigeometry.paths import Infinite, Loop, Terminal, route

cfg = DEFAULT
G = cfg.g


def _left():
    return st.builds(lambda x, y: make_point(("planar1", x, y), cfg), st.floats(-10, 0), st.floats(-10, 10))


def _right():
    return st.builds(lambda x, y: make_point(("planar2", x, y), cfg), st.floats(G + 1e-3, G + 10), st.floats(-10, 10))


def _on_string():
    return st.sampled_from((1, 2, 3)).flatmap(
        lambda sid: st.builds(lambda t: make_point(("string", sid, t), cfg), st.floats(0, cfg.length(sid)))
    )


points = st.one_of(_left(), _right(), _on_string(), st.sampled_from((P, Q)))


def graph_distance(a, b):
    """Independent check: shortest path in a small graph of a, b, the gates and string cut points."""
    g = nx.Graph()
    nodes = {"a": a, "b": b, "P": P, "Q": Q}

    def planar_edge(u, v):
        pu, pv = nodes[u], nodes[v]
        ru = 1 if pu == P or (isinstance(pu, Planar) and pu.region == 1) else 2 if pu == Q or isinstance(pu, Planar) else None
        rv = 1 if pv == P or (isinstance(pv, Planar) and pv.region == 1) else 2 if pv == Q or isinstance(pv, Planar) else None
        if ru is not None and ru == rv:
            (x1, y1), (x2, y2) = xy(pu, cfg), xy(pv, cfg)
            g.add_edge(u, v, weight=math.hypot(x2 - x1, y2 - y1))

    for u in nodes:
        for v in nodes:
            if u < v:
                planar_edge(u, v)
    for sid in (1, 2, 3):
        stops = [(0.0, "P"), (cfg.length(sid), "Q")]
        for name in ("a", "b"):
            pt = nodes[name]
            if isinstance(pt, OnString) and pt.sid == sid:
                stops.append((pt.t, name))
        stops.sort()
        for (t0, u), (t1, v) in zip(stops, stops[1:]):
            if u != v:
                w = t1 - t0
                if not g.has_edge(u, v) or g[u][v]["weight"] > w:
                    g.add_edge(u, v, weight=w)
    if a == b:
        return 0.0
    return nx.shortest_path_length(g, "a", "b", weight="weight")


def test_known_distances():
    assert distance(P, Q, cfg) == 4.0
    assert distance(make_point(("planar", -3, 0)), make_point(("planar", 6, 0)), cfg) == 11.0
    assert distance(I, P, cfg) == math.inf
    assert distance(I, J, cfg) == math.inf
    assert distance(I, I, cfg) == 0.0
    # from the middle of s3 the short way round goes through a gate and another string
    assert distance(OnString(3, 4.5), OnString(1, 2.0), cfg) == pytest.approx(4.5 + 2.0)


@settings(max_examples=300, deadline=None)
@given(points, points)
def test_matches_graph_distance(a, b):
    assert distance(a, b, cfg) == pytest.approx(graph_distance(a, b), abs=1e-9)


@settings(max_examples=200, deadline=None)
@given(points, points, points)
def test_metric_laws(a, b, c):
    dab, dbc, dac = distance(a, b, cfg), distance(b, c, cfg), distance(a, c, cfg)
    assert dab >= 0
    assert abs(dab - distance(b, a, cfg)) <= 1e-9
    assert dac <= dab + dbc + 1e-9
    assert distance(a, a, cfg) == 0.0


@settings(max_examples=100, deadline=None)
@given(points, points)
def test_geodesics_have_distance_length(a, b):
    d = distance(a, b, cfg)
    if d == 0:
        return
    geos = geodesics_between(a, b, cfg)
    assert geos
    for p in geos:
        assert p.length == pytest.approx(d, abs=1e-9)


def test_two_equal_geodesics_across_the_hole():
    a, b = make_point(("planar", -1, 0)), make_point(("planar", G + 1, 0))
    geos = geodesics_between(a, b, cfg)
    assert sorted(p.string_ids() for p in geos) == [(1,), (2,)]
    assert all(is_geodesic(p, cfg) for p in geos)


def test_long_string_is_not_geodesic_end_to_end():
    assert not is_geodesic(route(cfg, P, 3, Q), cfg)
    assert is_geodesic(route(cfg, P, 1, Q), cfg)


def test_extension_of_short_planar_segment_is_infinite_both_ways():
    lines = extend_maximally(route(cfg, make_point(("planar", -3, 1)), make_point(("planar", -3, 2))), cfg)
    assert len(lines) == 1
    assert isinstance(lines[0].start, Infinite) and isinstance(lines[0].end, Infinite)


def test_extension_toward_frontier_away_from_gate_terminates():
    a, b = make_point(("planar", -2, 0)), make_point(("planar", -1, 1))
    (line,) = extend_maximally(route(cfg, a, b), cfg)
    assert isinstance(line.end, Terminal) and line.end.attained


def test_loop_through_both_short_strings():
    lines = extend_maximally(route(cfg, OnString(1, 1.0), OnString(1, 2.0)), cfg)
    loops = {l.rep.string_ids() for l in lines if isinstance(l.start, Loop)}
    assert (1, 2) in loops
    # nothing that stops inside the strings survives once the loop is known
    assert not any(isinstance(l.start, Terminal) and isinstance(l.end, Terminal) for l in lines)


def test_gate_prefix_gives_loop_and_crossing():
    lines = extend_maximally(route(cfg, P, 1, Q), cfg)
    assert any(isinstance(l.start, Loop) for l in lines)
    assert any(isinstance(l.start, Infinite) and l.rep.string_ids() == (1,) for l in lines)


def test_extension_does_not_depend_on_direction():
    seg = route(cfg, OnString(3, 4.0), OnString(3, 5.0))
    a = extend_maximally(seg, cfg)
    b = extend_maximally(seg.reversed(), cfg)
    assert len(a) == len(b)
    assert {frozenset((l.rep, l.rep.reversed())) for l in a} == {frozenset((l.rep, l.rep.reversed())) for l in b}


def test_circle_about_Q_radius_6():
    desc = circle(Q, 6.0, cfg)
    arcs = [c for c in desc.components if isinstance(c, PlanarArc)]
    strs = [c for c in desc.components if isinstance(c, StringPoints)]
    assert len(desc.components) == 3
    assert sorted(a.region for a in arcs) == [1, 2]
    assert strs[0].sid == 3 and strs[0].ts == pytest.approx((2.0, 3.0))
    assert circle(I, 1.0, cfg).is_empty


def test_oracle_small_sample():
    oracle = GridOracle(cfg, step=0.1)
    rng = random.Random(3)
    for _ in range(50):
        a = make_point(("planar1", -rng.uniform(0, 8), rng.uniform(-8, 8)))
        b = make_point(("planar2", G + rng.uniform(0.01, 8), rng.uniform(-8, 8)))
        assert abs(oracle.distance(a, b) - distance(a, b, cfg)) <= 2 * 0.1
