"""Deterministic SVG drawings of the model and of geodesic, circle and triangle overlays.

Strings have no embedding, so each is drawn as a cubic Bezier whose end
directions are the oblique projections (x, y + z) of the configured gate
tangents. The picture is schematic and says so in a comment.
"""

from __future__ import annotations

import math

from .incidence import triangle_sides
from .metric import PlanarArc, StringPoints, circle, geodesics_between
from .model import MdConfig, PointRef, Isolated, OnString, plane_region, xy
from .paths import PathRep, PlanarLeg

SCALE = 30.0
MARGIN_Y = 8.0
ISLAND_Y = {"I": 6.5, "J": 5.0, "K": 3.5}
COLORS = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd")
STRING_COLORS = {1: "#8c564b", 2: "#e377c2", 3: "#7f7f7f"}


def _f(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


class Canvas:
    def __init__(self, cfg: MdConfig):
        self.cfg = cfg
        self.x0, self.x1 = -10.0, cfg.g + 10.0
        self.y0, self.y1 = -MARGIN_Y, MARGIN_Y
        self.items: list[str] = []

    @property
    def width(self) -> float:
        return (self.x1 - self.x0) * SCALE

    @property
    def height(self) -> float:
        return (self.y1 - self.y0) * SCALE

    def px(self, x: float, y: float) -> tuple[str, str]:
        return _f((x - self.x0) * SCALE), _f((self.y1 - y) * SCALE)

    def add(self, s: str):
        self.items.append(s)

    def polyline(self, pts, color: str, width: float = 2.0, dash: str | None = None, cls: str = ""):
        coords = " ".join(",".join(self.px(x, y)) for x, y in pts)
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        self.add(f'<polyline class="{cls}" points="{coords}" fill="none" stroke="{color}" stroke-width="{width}"{extra}/>')

    def dot(self, x: float, y: float, color: str, r: float = 4.0, cls: str = ""):
        cx, cy = self.px(x, y)
        self.add(f'<circle class="{cls}" cx="{cx}" cy="{cy}" r="{r}" fill="{color}"/>')

    def label(self, x: float, y: float, text: str, dx: float = 6, dy: float = -6):
        cx, cy = self.px(x, y)
        self.add(f'<text x="{_f(float(cx) + dx)}" y="{_f(float(cy) + dy)}" font-size="13" font-family="sans-serif">{text}</text>')

    def render(self) -> str:
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(self.width)}" height="{_f(self.height)}" '
            f'viewBox="0 0 {_f(self.width)} {_f(self.height)}">'
        )
        note = "<!-- schematic: strings are synthetic curves matching the projected gate tangents -->"
        return "\n".join([head, note, *self.items, "</svg>"]) + "\n"


# --- strings as curves ------------------------------------------------------------------


def _proj(v) -> tuple[float, float]:
    x, y, z = v
    n = math.hypot(x, y + z) or 1.0
    return (x / n, (y + z) / n)


def string_controls(cfg: MdConfig, sid: int):
    p0 = cfg.gate_xy("P")
    p3 = cfg.gate_xy("Q")
    k = cfg.length(sid) / 3
    dp, dq = _proj(cfg.tangent("P", sid)), _proj(cfg.tangent("Q", sid))
    return p0, (p0[0] + k * dp[0], p0[1] + k * dp[1]), (p3[0] + k * dq[0], p3[1] + k * dq[1]), p3


def string_xy(cfg: MdConfig, sid: int, t: float) -> tuple[float, float]:
    """Drawing position of arclength ``t`` (Bezier parameter t / L, schematic)."""
    p0, p1, p2, p3 = string_controls(cfg, sid)
    u = t / cfg.length(sid)
    a, b, c, d = (1 - u) ** 3, 3 * u * (1 - u) ** 2, 3 * u * u * (1 - u), u**3
    return (a * p0[0] + b * p1[0] + c * p2[0] + d * p3[0], a * p0[1] + b * p1[1] + c * p2[1] + d * p3[1])


def point_xy(cfg: MdConfig, pt: PointRef) -> tuple[float, float]:
    if isinstance(pt, OnString):
        return string_xy(cfg, pt.sid, pt.t)
    if isinstance(pt, Isolated):
        return (cfg.g / 2, ISLAND_Y[pt.name])
    return xy(pt, cfg)


def path_points(cfg: MdConfig, path: PathRep, per_string: int = 40) -> list[tuple[float, float]]:
    pts: list[tuple[float, float]] = []
    for leg in path.legs:
        if isinstance(leg, PlanarLeg):
            seg = [leg.start, leg.end]
        else:
            seg = [string_xy(cfg, leg.sid, leg.t0 + (leg.t1 - leg.t0) * i / per_string) for i in range(per_string + 1)]
        if pts and seg and all(abs(a - b) < 1e-9 for a, b in zip(pts[-1], seg[0])):
            seg = seg[1:]
        pts.extend(seg)
    return pts


# --- drawings ---------------------------------------------------------------------------------


def draw_model(cfg: MdConfig) -> Canvas:
    c = Canvas(cfg)
    g = cfg.g
    lx, ty = c.px(c.x0, c.y1)
    fx, by = c.px(0.0, c.y0)
    c.add(f'<rect class="delta1" x="{lx}" y="{ty}" width="{_f(float(fx) - float(lx))}" height="{_f(float(by) - float(ty))}" fill="#dbe9f6"/>')
    gx, _ = c.px(g, c.y1)
    rx, _ = c.px(c.x1, c.y1)
    c.add(f'<rect class="delta2" x="{gx}" y="{ty}" width="{_f(float(rx) - float(gx))}" height="{_f(float(by) - float(ty))}" fill="#dbe9f6"/>')
    c.add(f'<rect class="hole" x="{fx}" y="{ty}" width="{_f(float(gx) - float(fx))}" height="{_f(float(by) - float(ty))}" fill="#ffffff"/>')
    c.polyline([(0.0, c.y0), (0.0, c.y1)], "#333333", 1.5, cls="f1")
    c.polyline([(g, c.y0), (g, c.y1)], "#333333", 1.5, dash="6,4", cls="f2")
    for sid in (1, 2, 3):
        p0, p1, p2, p3 = string_controls(cfg, sid)
        d = "M {} {} C {} {}, {} {}, {} {}".format(*c.px(*p0), *c.px(*p1), *c.px(*p2), *c.px(*p3))
        c.add(f'<path class="string" d="{d}" fill="none" stroke="{STRING_COLORS[sid]}" stroke-width="2"/>')
        mx, my = string_xy(cfg, sid, cfg.length(sid) / 2)
        c.label(mx, my, f"s{sid}", 4, -4)
    for name in ("P", "Q"):
        x, y = cfg.gate_xy(name)
        c.dot(x, y, "#000000", 4.5, cls="gate")
        c.label(x, y, name)
    for name, y in ISLAND_Y.items():
        cx, cy = c.px(g / 2, y)
        X, Y = float(cx), float(cy)
        c.add(
            f'<path class="island" d="M {_f(X - 5)} {_f(Y - 5)} L {_f(X + 5)} {_f(Y + 5)} '
            f'M {_f(X - 5)} {_f(Y + 5)} L {_f(X + 5)} {_f(Y - 5)}" stroke="#000000" stroke-width="2"/>'
        )
        c.label(g / 2, y, name, 8, 4)
    return c


def draw_geodesics(cfg: MdConfig, a: PointRef, b: PointRef) -> Canvas:
    c = draw_model(cfg)
    for i, path in enumerate(geodesics_between(a, b, cfg)):
        c.polyline(path_points(cfg, path), COLORS[i % len(COLORS)], 3.0, cls="geodesic")
    for p, name in ((a, "A"), (b, "B")):
        c.dot(*point_xy(cfg, p), "#d62728", cls="endpoint")
        c.label(*point_xy(cfg, p), name)
    return c


def draw_circle(cfg: MdConfig, center: PointRef, r: float) -> Canvas:
    c = draw_model(cfg)
    for comp in circle(center, r, cfg).components:
        if isinstance(comp, PlanarArc):
            pts = comp.points(180)
            if comp.region == 2:
                pts = [(x, y) for x, y in pts if x > cfg.g]
            c.polyline(pts, "#d62728", 2.5, cls="arc")
        elif isinstance(comp, StringPoints):
            for t in comp.ts:
                c.dot(*string_xy(cfg, comp.sid, t), "#d62728", 5.0, cls="string-point")
    if plane_region(center) is not None or isinstance(center, (OnString, Isolated)):
        c.dot(*point_xy(cfg, center), "#000000", 3.0, cls="center")
        c.label(*point_xy(cfg, center), "M")
    return c


def draw_triangle(cfg: MdConfig, a: PointRef, b: PointRef, cc: PointRef, side_choice=(0, 0, 0)) -> Canvas:
    c = draw_model(cfg)
    for i, side in enumerate(triangle_sides(a, b, cc, cfg, side_choice)):
        c.polyline(path_points(cfg, side), COLORS[i], 3.0, cls="side")
    for p, name in ((a, "A"), (b, "B"), (cc, "C")):
        c.dot(*point_xy(cfg, p), "#000000", cls="vertex")
        c.label(*point_xy(cfg, p), name)
    return c
