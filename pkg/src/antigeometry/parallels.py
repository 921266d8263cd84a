"""Parallel classes through a point, pencils of lines, and the step-laying (Archimedes) test."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .incidence import betweenness, meets
from .metric import extend_maximally
from .model import TOL, MdConfig, OnString, P, Planar, PointRef, Q, make_point
from .paths import (
    Infinite,
    Line,
    PlanarPiece,
    PointNotOnLine,
    PathRep,
    StringLeg,
    line_pieces,
    line_point_at,
    on_line,
    params_of,
)

KINDS = ("Zero", "One", "FiniteK", "InfiniteNotAll", "InfiniteAll")


class PointOnLine(ValueError):
    pass


@dataclass(frozen=True)
class ParallelClass:
    kind: str
    k: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(self.kind)
        if (self.kind == "FiniteK") != (self.k is not None):
            raise ValueError("k is set exactly for FiniteK")

    def label(self) -> str:
        return f"FiniteK({self.k})" if self.kind == "FiniteK" else self.kind


@dataclass(frozen=True)
class Classification:
    cls: ParallelClass
    n_pencil: int
    n_parallel: int
    lemma: str | None = None


_SPREAD = (1 / math.sqrt(2), 1 / math.sqrt(2))
WIDE_GATE_DIRECTIONS = {
    "P": ((-1.0, 0.0), (-_SPREAD[0], _SPREAD[1]), (-_SPREAD[0], -_SPREAD[1])),
    "Q": ((1.0, 0.0), (_SPREAD[0], _SPREAD[1]), (_SPREAD[0], -_SPREAD[1])),
}


def pencil_through(a: PointRef, cfg: MdConfig, n: int = 100, eps: float = 1e-3, gate_directions=None) -> list[Line]:
    """Sampled maximal lines through ``a``.

    A planar point gets ``n`` evenly spaced undirected directions; a string
    point gets every extension of a short arc of its string.
    """
    gd = WIDE_GATE_DIRECTIONS if gate_directions is None else gate_directions
    out: list[Line] = []
    if isinstance(a, OnString):
        L = cfg.length(a.sid)
        lo, hi = max(a.t - eps, 0.0), min(a.t + eps, L)
        return extend_maximally(PathRep((StringLeg(a.sid, lo, hi),)), cfg, gd)
    if not isinstance(a, Planar):
        raise ValueError("pencils are built through planar or string points")
    for i in range(n):
        th = math.pi * i / n
        d = (math.cos(th), math.sin(th))
        b = (a.x + eps * d[0], a.y + eps * d[1])
        if a.region == 1 and b[0] > 0:
            b = (a.x - eps * d[0], a.y - eps * d[1])
        if a.region == 2 and b[0] <= cfg.g:
            b = (a.x - eps * d[0], a.y - eps * d[1])
        other = make_point((f"planar{a.region}", *b), cfg)
        from .paths import route

        out.extend(extend_maximally(route(cfg, a, other), cfg, gd))
    return out


def _lemma_string_gates(l: Line, a: PointRef, cfg: MdConfig) -> bool:
    """A maximal line through a string interior point cannot stop inside the string,
    so it runs through both gates; a line holding P and Q is therefore met by all of them."""
    return isinstance(a, OnString) and on_line(l, P, cfg) and on_line(l, Q, cfg)


def _lemma_vertical_delta1(l: Line, a: PointRef, cfg: MdConfig) -> bool:
    """A full vertical line of the left half-plane: every non-vertical line through a
    point of that half-plane crosses it on its way toward the frontier, so only the
    vertical through the point avoids it."""
    if not (isinstance(l.start, Infinite) and isinstance(l.end, Infinite)):
        return False
    pieces = line_pieces(l)
    if not all(isinstance(p, PlanarPiece) and p.region == 1 and abs(p.u[0]) <= TOL for p in pieces):
        return False
    return isinstance(a, Planar) and a.region == 1


def classify_parallels(
    l: Line,
    a: PointRef,
    pencil: list[Line],
    cfg: MdConfig,
    lemmas=("string_gates", "vertical_delta1"),
    continuous: bool = False,
) -> Classification:
    """Count pencil lines that miss ``l``; a structural lemma, when one applies, fixes the class.

    ``continuous`` says the pencil samples a continuum of directions, so two or
    more misses stand for infinitely many.
    """
    if on_line(l, a, cfg):
        raise PointOnLine(f"{a} lies on the line")
    misses = sum(1 for k in pencil if not meets(k, l, cfg))
    n = len(pencil)
    if "string_gates" in lemmas and _lemma_string_gates(l, a, cfg):
        if misses:
            raise AssertionError("pencil contradicts the string-gates lemma")
        return Classification(ParallelClass("Zero"), n, misses, "string_gates")
    if "vertical_delta1" in lemmas and _lemma_vertical_delta1(l, a, cfg):
        if misses > 1:
            raise AssertionError("pencil contradicts the vertical-line lemma")
        return Classification(ParallelClass("One"), n, misses, "vertical_delta1")
    if misses == 0:
        cls = ParallelClass("Zero")
    elif misses == 1:
        cls = ParallelClass("One")
    elif continuous:
        cls = ParallelClass("InfiniteAll" if misses == n else "InfiniteNotAll")
    else:
        cls = ParallelClass("FiniteK", misses)
    return Classification(cls, n, misses)


def archimedean_reachable(line: Line, a: PointRef, b: PointRef, step: float, cfg: MdConfig, max_steps: int = 100000) -> bool:
    """Lay congruent steps from ``a`` toward ``b``; True once some A_n has ``b`` between ``a`` and A_n."""
    if step <= 0:
        raise ValueError("step must be positive")
    pa, pb = params_of(line, a, cfg), params_of(line, b, cfg)
    if not pa or not pb:
        raise PointNotOnLine("a and b must lie on the line")
    sa = pa[0]
    if line.is_loop:
        T = line.length
        for n in range(1, int(math.ceil(T / step)) + 2):
            an = line_point_at(line, (sa + n * step) % T, cfg)
            if an is not None and an != a and an != b and betweenness(line, a, b, an, cfg):
                return True
        return False
    sb = min(pb, key=lambda s: abs(s - sa))
    if abs(sb - sa) <= TOL:
        return False
    sign = 1 if sb > sa else -1
    for n in range(1, max_steps + 1):
        s = sa + sign * n * step
        if line_point_at(line, s, cfg) is None:
            return False
        if sign * (s - sb) > TOL:
            return True
    return False
