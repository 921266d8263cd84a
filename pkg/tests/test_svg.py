import re
import xml.etree.ElementTree as ET

from antigeometry import svg
from antigeometry.model import DEFAULT, I, Q, OnString, make_point

NS = "{http://www.w3.org/2000/svg}"


def classes(text):
    root = ET.fromstring(text)
    out = {}
    for el in root.iter():
        c = el.get("class")
        if c:
            out[c] = out.get(c, 0) + 1
    return out


def test_model_drawing_parts():
    text = svg.draw_model(DEFAULT).render()
    c = classes(text)
    assert c["delta1"] == 1 and c["delta2"] == 1 and c["hole"] == 1
    assert c["string"] == 3
    assert c["island"] == 3
    assert c["gate"] == 2
    assert "schematic" in text


def test_geodesic_overlay_has_two_paths():
    a, b = make_point(("planar", -1, 0)), make_point(("planar", 3, 0))
    c = classes(svg.draw_geodesics(DEFAULT, a, b).render())
    assert c["geodesic"] == 2


def test_circle_overlay():
    c = classes(svg.draw_circle(DEFAULT, Q, 6.0).render())
    assert c["arc"] == 2 and c["string-point"] == 2
    assert "arc" not in classes(svg.draw_circle(DEFAULT, I, 1.0).render())


def test_string_curves_end_at_gates():
    for sid in (1, 2, 3):
        assert svg.string_xy(DEFAULT, sid, 0.0) == (0.0, 0.0)
        x, y = svg.string_xy(DEFAULT, sid, DEFAULT.length(sid))
        assert abs(x - DEFAULT.g) < 1e-12 and abs(y) < 1e-12


def test_rendering_is_deterministic_and_has_no_negative_zero():
    a = svg.draw_triangle(DEFAULT, make_point(("planar", -3, 1)), make_point(("planar", -3, -1)), Q, (0, 0, 1)).render()
    b = svg.draw_triangle(DEFAULT, make_point(("planar", -3, 1)), make_point(("planar", -3, -1)), Q, (0, 0, 1)).render()
    assert a == b
    assert not re.search(r"-0\.000\b", a)
    assert classes(a)["side"] == 3


def test_point_on_string_position():
    x, y = svg.point_xy(DEFAULT, OnString(3, 4.5))
    assert y > 0
