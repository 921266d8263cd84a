import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from antigeometry.incidence import (
    DegenerateTriangle,
    NoCommonPoint,
    NotACommonPoint,
    angle_at,
    angle_between,
    betweenness,
    common_points,
    lay_off,
    meets,
    order_tuple,
    right_angle_witness,
    segment,
    segment_congruent,
    triangle_angles,
    triangle_area,
)
from antigeometry.metric import extend_maximally
from antigeometry.model import DEFAULT, P, Q, MdConfig, OnString, make_point, same_point
from antigeometry.paths import Loop, Terminal, make_line, route

cfg = DEFAULT
G = cfg.g


def pt(x, y):
    return make_point(("planar", x, y), cfg)


def full(a, b):
    # a ray toward the frontier stops there unless it hits a gate
    (line,) = extend_maximally(route(cfg, a, b), cfg)
    return line


@pytest.fixture
def loop12():
    return make_line(route(cfg, P, 1, Q, 2, P), cfg, Loop(), Loop())


def test_betweenness_on_open_line_is_symmetric():
    line = full(pt(-5, 1), pt(-4, 1))
    a, b, c = pt(-9, 1), pt(-6, 1), pt(-2, 1)
    assert betweenness(line, a, b, c, cfg)
    assert betweenness(line, c, b, a, cfg)
    assert not betweenness(line, b, a, c, cfg)


def test_betweenness_on_loop_is_cyclic(loop12):
    T, V = OnString(1, 2.0), OnString(2, 2.0)
    assert betweenness(loop12, P, T, V, cfg)
    assert not betweenness(loop12, V, T, P, cfg)


def test_each_point_between_the_others_on_loop(loop12):
    L = cfg.length(1)
    R, T = OnString(1, 2 * L / 3), make_point(("string", 2, 2 * L - 4 * L / 3), cfg)
    assert betweenness(loop12, P, R, T, cfg)
    assert betweenness(loop12, R, T, P, cfg)
    assert betweenness(loop12, T, P, R, cfg)
    assert order_tuple(loop12, [T, R, P], cfg) == [P, R, T]


def test_off_line_point_rejected():
    line = full(pt(-5, 1), pt(-4, 1))
    with pytest.raises(ValueError):
        betweenness(line, pt(-9, 1), pt(-6, 2), pt(-2, 1), cfg)


def test_crossing_lines_meet_once():
    h, k = full(pt(-5, 0), pt(-4, 1)), full(pt(-5, 1), pt(-4, 0))
    cp = common_points(h, k, cfg)
    assert len(cp.points) == 1 and not cp.arcs
    assert same_point(cp.points[0], pt(-4.5, 0.5))
    assert angle_at(h, k, cp.points[0], cfg).degrees == pytest.approx(90)
    assert angle_between(h, k, cfg).degrees == pytest.approx(90)


def test_parallel_lines_do_not_meet():
    h, k = full(pt(-5, 0), pt(-4, 0.1)), full(pt(-5, 1), pt(-4, 1.1))
    assert not meets(h, k, cfg)
    with pytest.raises(NoCommonPoint):
        angle_between(h, k, cfg)


def test_angle_at_requires_common_point():
    h, k = full(pt(-5, 0), pt(-4, 1)), full(pt(-5, 1), pt(-4, 0))
    with pytest.raises(NotACommonPoint):
        angle_at(h, k, pt(-1, -1), cfg)


def test_shared_arc_gives_zero_angle(loop12):
    k = make_line(route(cfg, pt(-1, 0), P, 1, Q, pt(G + 1, 0)), cfg)
    cp = common_points(loop12, k, cfg)
    assert cp.arcs
    assert angle_between(loop12, k, cfg).degrees == 0.0


def test_segments_and_lay_off():
    line = full(pt(-5, 1), pt(-4, 1))
    s = segment(line, pt(-5, 1), pt(-2, 1), cfg)
    assert s.length == pytest.approx(3)
    assert segment_congruent(s, segment(line, pt(-8, 1), pt(-5, 1), cfg))
    b = lay_off(line, pt(-5, 1), 2.5, cfg)
    assert same_point(b, pt(-2.5, 1))


def test_lay_off_past_terminal_end_fails():
    a, b = pt(-2, 0), pt(-1, 1)
    line = [l for l in extend_maximally(route(cfg, a, b), cfg) if isinstance(l.end, Terminal)][0]
    assert lay_off(line, a, 100.0, cfg) is None


@settings(max_examples=150, deadline=None)
@given(
    st.tuples(st.floats(-10, -0.01), st.floats(-10, 10)),
    st.tuples(st.floats(-10, -0.01), st.floats(-10, 10)),
    st.tuples(st.floats(-10, -0.01), st.floats(-10, 10)),
)
def test_planar_triangles_sum_to_180(a, b, c):
    area2 = abs((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]))
    assume(area2 > 1e-2)
    A, B, C = pt(*a), pt(*b), pt(*c)
    s = sum(v.degrees for v in triangle_angles(A, B, C, cfg))
    assert abs(s - 180) <= 1e-9
    assert triangle_area(A, B, C, cfg) == pytest.approx(area2 / 2)


def test_degenerate_triangles_rejected():
    with pytest.raises(DegenerateTriangle):
        triangle_angles(pt(-1, 0), pt(-1, 0), pt(-3, 1), cfg)
    with pytest.raises(DegenerateTriangle):
        triangle_angles(pt(-1, 0), pt(-2, 0), pt(-3, 0), cfg)


def test_triangle_across_strings_is_below_180():
    a, b, c = OnString(2, 2.0), pt(G + 2, 1), pt(G + 2, -2)
    s = sum(v.degrees for v in triangle_angles(a, b, c, cfg))
    tqr = math.degrees(math.atan2(1, 2) + math.atan2(2, 2))
    assert s == pytest.approx(180 - tqr, abs=1e-9)


def test_right_angle_depends_on_tangent():
    x = pt(-1, 0)
    assert right_angle_witness(x, 1, cfg).degrees == pytest.approx(67.5)
    r = 1 / math.sqrt(2)
    flat = MdConfig(tangent_at_P=((1.0, 0.0, 0.0), (r, 0.0, r), (0.0, r, r)))
    assert right_angle_witness(x, 1, flat).degrees == pytest.approx(90)
