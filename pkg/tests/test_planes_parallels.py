import pytest

from antigeometry.metric import extend_maximally
from antigeometry.model import DEFAULT, P, Q, OnString, make_point
from antigeometry.parallels import (
    ParallelClass,
    PointOnLine,
    archimedean_reachable,
    classify_parallels,
    pencil_through,
)
from antigeometry.paths import Infinite, Loop, Terminal, make_line, route
from antigeometry.planes import PlaneDesc, closure_check, contains, plane_intersection, point_count

cfg = DEFAULT
G = cfg.g


def pt(x, y):
    return make_point(("planar", x, y), cfg)


@pytest.mark.parametrize(
    "names",
    [
        ("Delta1",),
        ("Delta1", "Delta2", "String1"),
        ("Delta1", "Delta2", "String1", "String2", "String3"),
        ("String1", "String2"),
        ("Isolated:I", "Isolated:J"),
    ],
)
def test_closed_planes(names):
    res = closure_check(PlaneDesc.of(*names), cfg, n_pairs=200)
    assert res.ok and res.pairs_checked >= 200


def test_two_halves_without_a_short_string_are_not_closed():
    res = closure_check(PlaneDesc.of("Delta1", "Delta2", "String3"), cfg, n_pairs=200)
    assert not res.ok


def test_membership_of_gates():
    assert contains(PlaneDesc.of("String3"), P)
    assert contains(PlaneDesc.of("Delta2"), Q)
    assert not contains(PlaneDesc.of("Delta2"), P)


def test_planes_sharing_a_single_gate():
    shared, extra = plane_intersection(PlaneDesc.of("Delta1"), PlaneDesc.of("String1"))
    assert not shared and extra == (P,)


def test_point_counts():
    assert point_count(PlaneDesc.of("Isolated:I", "Isolated:K")) == 2
    assert point_count(PlaneDesc.of("Delta1")) == float("inf")


def test_unknown_component_rejected():
    with pytest.raises(ValueError):
        PlaneDesc.of("Delta3")


def test_parallel_class_labels():
    assert ParallelClass("FiniteK", 3).label() == "FiniteK(3)"
    with pytest.raises(ValueError):
        ParallelClass("FiniteK")


def test_no_parallel_through_string_point():
    l = make_line(route(cfg, pt(-1, 0), P, 1, Q, pt(G + 2, 0)), cfg, Infinite(), Infinite())
    a = OnString(2, 2.0)
    c = classify_parallels(l, a, pencil_through(a, cfg), cfg)
    assert c.cls.kind == "Zero" and c.lemma == "string_gates" and c.n_parallel == 0


def test_single_parallel_to_vertical():
    l = make_line(route(cfg, pt(-1, 0), pt(-1, 1)), cfg, Infinite(), Infinite())
    a = pt(-2, 0)
    c = classify_parallels(l, a, pencil_through(a, cfg), cfg, continuous=True)
    assert c.cls.kind == "One"
    # without the lemma the sampled pencil alone says the same
    c2 = classify_parallels(l, a, pencil_through(a, cfg), cfg, lemmas=(), continuous=True)
    assert c2.cls.kind == "One"


def test_many_parallels_to_a_ray_ending_on_the_frontier():
    l = make_line(route(cfg, pt(-2, 0), pt(0, 1)), cfg, Infinite(), None)
    a = pt(-1, -2)
    c = classify_parallels(l, a, pencil_through(a, cfg), cfg, continuous=True)
    assert c.cls.kind == "InfiniteNotAll"
    assert 1 < c.n_parallel < c.n_pencil


def test_point_on_line_rejected():
    l = make_line(route(cfg, pt(-1, 0), pt(-1, 1)), cfg, Infinite(), Infinite())
    with pytest.raises(PointOnLine):
        classify_parallels(l, pt(-1, 5), [], cfg)


def test_archimedes_fails_at_terminal_end():
    a, b = pt(-2, 0), pt(-1, 1)
    (line,) = extend_maximally(route(cfg, a, b), cfg)
    assert isinstance(line.end, Terminal)
    end = line.end.point
    assert not archimedean_reachable(line, a, end, 0.3, cfg)
    assert archimedean_reachable(line, a, b, 0.3, cfg)


def test_archimedes_on_a_loop():
    loop = make_line(route(cfg, P, 1, Q, 2, P), cfg, Loop(), Loop())
    # steps land on offsets 2, 4, 6 from a; b sits at offset 5.5
    assert archimedean_reachable(loop, OnString(1, 1.0), OnString(2, 1.5), cfg.length(1) / 2, cfg)
