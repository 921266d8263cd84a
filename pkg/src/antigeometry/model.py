"""The discontinuous model space: two half-planes, a hole, three strings and three islands.

Coordinates: the left half-plane ``delta1`` is ``x <= 0`` (its frontier ``x = 0``
belongs to the space), the right half-plane ``delta2`` is ``x > g`` (its
frontier is excluded except for the gate ``Q = (g, 0)``). The gate ``P`` is the
origin. Strings are abstract arcs from ``P`` (arclength 0) to ``Q``
(arclength ``L_i``).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Union

TOL = 1e-9
_SNAP = 1e-12

ISLANDS = ("I", "J", "K")


class NotInModel(ValueError):
    pass


class ConfigError(ValueError):
    """Invalid model configuration; ``pointer`` is a JSON pointer to the culprit."""

    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer}: {message}")
        self.pointer = pointer
        self.message = message


Vec3 = tuple[float, float, float]

_R = 1 / math.sqrt(2)


@dataclass(frozen=True)
class MdConfig:
    gap_width: float = 2.0
    string_lengths: tuple[float, float, float] = (4.0, 4.0, 9.0)
    tangent_at_P: tuple[Vec3, Vec3, Vec3] = ((_R, 0.0, -_R), (_R, 0.0, _R), (0.0, _R, _R))
    tangent_at_Q: tuple[Vec3, Vec3, Vec3] = ((-_R, 0.0, -_R), (-_R, 0.0, _R), (0.0, _R, _R))

    def __post_init__(self):
        validate_config(self)

    @property
    def g(self) -> float:
        return self.gap_width

    def length(self, sid: int) -> float:
        return self.string_lengths[sid - 1]

    def tangent(self, gate: str, sid: int) -> Vec3:
        """Unit tangent of string ``sid`` leaving ``gate`` into the string."""
        return (self.tangent_at_P if gate == "P" else self.tangent_at_Q)[sid - 1]

    def gate_xy(self, gate: str) -> tuple[float, float]:
        return (0.0, 0.0) if gate == "P" else (self.gap_width, 0.0)

    def to_dict(self) -> dict:
        return {
            "gap_width": self.gap_width,
            "string_lengths": list(self.string_lengths),
            "tangent_at_P": [list(v) for v in self.tangent_at_P],
            "tangent_at_Q": [list(v) for v in self.tangent_at_Q],
        }


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)


def _check_vectors(vectors, name: str):
    if not isinstance(vectors, (list, tuple)) or len(vectors) != 3:
        raise ConfigError(f"/{name}", "expected three vectors")
    for i, v in enumerate(vectors):
        if not isinstance(v, (list, tuple)) or len(v) != 3 or not all(_is_number(c) for c in v):
            raise ConfigError(f"/{name}/{i}", "expected a 3-vector of finite numbers")
        if abs(math.sqrt(sum(c * c for c in v)) - 1.0) > 1e-6:
            raise ConfigError(f"/{name}/{i}", "tangent must have unit norm")


def _same_vec(u, v) -> bool:
    return all(abs(a - b) <= 1e-9 for a, b in zip(u, v))


def validate_config(cfg) -> None:
    """Raise ConfigError for the first violated invariant."""
    if not _is_number(cfg.gap_width) or cfg.gap_width <= 0:
        raise ConfigError("/gap_width", "gap width must be a finite positive number")
    lengths = cfg.string_lengths
    if not isinstance(lengths, (list, tuple)) or len(lengths) != 3:
        raise ConfigError("/string_lengths", "expected three string lengths")
    for i, L in enumerate(lengths):
        if not _is_number(L) or L <= 0:
            raise ConfigError(f"/string_lengths/{i}", "string length must be finite and positive")
    if abs(lengths[0] - lengths[1]) > TOL:
        raise ConfigError("/string_lengths/1", "strings s1 and s2 must have the same length")
    if not lengths[2] > lengths[0]:
        raise ConfigError("/string_lengths/2", "string s3 must be longer than s1")
    _check_vectors(cfg.tangent_at_P, "tangent_at_P")
    _check_vectors(cfg.tangent_at_Q, "tangent_at_Q")
    if _same_vec(cfg.tangent_at_P[0], cfg.tangent_at_P[1]):
        raise ConfigError("/tangent_at_P/1", "s1 and s2 must leave P in different directions")
    for name, vecs in (("tangent_at_P", cfg.tangent_at_P), ("tangent_at_Q", cfg.tangent_at_Q)):
        if _same_vec(vecs[2], vecs[0]) or _same_vec(vecs[2], vecs[1]):
            raise ConfigError(f"/{name}/2", "s3 tangent must differ from those of s1 and s2")


def config_from_dict(data: dict) -> MdConfig:
    if not isinstance(data, dict):
        raise ConfigError("", "config must be a JSON object")
    for key in ("gap_width", "string_lengths", "tangent_at_P", "tangent_at_Q"):
        if key not in data:
            raise ConfigError(f"/{key}", "missing field")
    _check_vectors(data["tangent_at_P"], "tangent_at_P")
    _check_vectors(data["tangent_at_Q"], "tangent_at_Q")
    lengths = data["string_lengths"]
    if not isinstance(lengths, list):
        raise ConfigError("/string_lengths", "expected three string lengths")
    return MdConfig(
        gap_width=data["gap_width"],
        string_lengths=tuple(lengths),
        tangent_at_P=tuple(tuple(float(c) for c in v) for v in data["tangent_at_P"]),
        tangent_at_Q=tuple(tuple(float(c) for c in v) for v in data["tangent_at_Q"]),
    )


def load_config(path) -> MdConfig:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError("", f"invalid JSON: {exc}") from exc
    return config_from_dict(data)


DEFAULT = MdConfig()


# --- points -----------------------------------------------------------------


@dataclass(frozen=True)
class Planar:
    region: int  # 1 or 2
    x: float
    y: float


@dataclass(frozen=True)
class Gate:
    name: str  # "P" or "Q"


@dataclass(frozen=True)
class OnString:
    sid: int
    t: float


@dataclass(frozen=True)
class Isolated:
    name: str


PointRef = Union[Planar, Gate, OnString, Isolated]

P = Gate("P")
Q = Gate("Q")
I = Isolated("I")
J = Isolated("J")
K = Isolated("K")


def make_point(raw, cfg: MdConfig = DEFAULT) -> PointRef:
    """Validate and canonicalize a point.

    ``raw`` is a tuple whose first item names the region: ``("planar1", x, y)``,
    ``("planar2", x, y)``, ``("planar", x, y)`` (region inferred), ``("P",)``,
    ``("Q",)``, ``("string", sid, t)`` or ``("isolated", name)``. Already-built
    points are accepted and re-canonicalized.
    """
    if isinstance(raw, Gate):
        if raw.name not in ("P", "Q"):
            raise NotInModel(f"unknown gate {raw.name!r}")
        return raw
    if isinstance(raw, Isolated):
        if raw.name not in ISLANDS:
            raise NotInModel(f"unknown isolated point {raw.name!r}")
        return raw
    if isinstance(raw, Planar):
        raw = (f"planar{raw.region}", raw.x, raw.y)
    elif isinstance(raw, OnString):
        raw = ("string", raw.sid, raw.t)
    kind, *args = raw
    g = cfg.gap_width
    if kind in ("P", "Q"):
        return Gate(kind)
    if kind == "isolated":
        return make_point(Isolated(args[0]), cfg)
    if kind == "string":
        sid, t = args
        if sid not in (1, 2, 3):
            raise NotInModel(f"no string {sid}")
        L = cfg.length(sid)
        if t < -TOL or t > L + TOL:
            raise NotInModel(f"arclength {t} outside [0, {L}] on s{sid}")
        if t <= _SNAP:
            return P
        if t >= L - _SNAP:
            return Q
        return OnString(sid, float(t))
    if kind in ("planar", "planar1", "planar2"):
        x, y = float(args[0]), float(args[1])
        if not (math.isfinite(x) and math.isfinite(y)):
            raise NotInModel("non-finite coordinates")
        if kind == "planar":
            kind = "planar1" if x <= _SNAP else "planar2"
        if kind == "planar1":
            if x > _SNAP:
                raise NotInModel(f"({x}, {y}) is not in the left half-plane")
            x = min(x, 0.0)
            if x == 0.0 and abs(y) <= _SNAP:
                return P
            return Planar(1, x, y)
        if abs(x - g) <= _SNAP and abs(y) <= _SNAP:
            return Q
        if x <= g:
            raise NotInModel(f"({x}, {y}) lies in the hole")
        return Planar(2, x, y)
    raise NotInModel(f"unknown region tag {kind!r}")


def planar(x: float, y: float, cfg: MdConfig = DEFAULT) -> PointRef:
    return make_point(("planar", x, y), cfg)


def on_string(sid: int, t: float, cfg: MdConfig = DEFAULT) -> PointRef:
    return make_point(("string", sid, t), cfg)


def xy(pt: PointRef, cfg: MdConfig) -> tuple[float, float]:
    """Plane coordinates of a planar point or gate."""
    if isinstance(pt, Planar):
        return (pt.x, pt.y)
    if isinstance(pt, Gate):
        return cfg.gate_xy(pt.name)
    raise TypeError(f"{pt!r} has no plane coordinates")


def plane_region(pt: PointRef) -> int | None:
    """Half-plane a point is attached to (gates included), else None."""
    if isinstance(pt, Planar):
        return pt.region
    if isinstance(pt, Gate):
        return 1 if pt.name == "P" else 2
    return None


def string_param(pt: PointRef, sid: int, cfg: MdConfig) -> float | None:
    """Arclength of ``pt`` along string ``sid``, or None if it is not on it."""
    if isinstance(pt, OnString):
        return pt.t if pt.sid == sid else None
    if pt == P:
        return 0.0
    if pt == Q:
        return cfg.length(sid)
    return None


def same_point(a: PointRef, b: PointRef, tol: float = TOL) -> bool:
    if type(a) is not type(b):
        return False
    if isinstance(a, Planar):
        return a.region == b.region and abs(a.x - b.x) <= tol and abs(a.y - b.y) <= tol
    if isinstance(a, OnString):
        return a.sid == b.sid and abs(a.t - b.t) <= tol
    return a == b


def connectable(a: PointRef, b: PointRef) -> bool:
    """True iff a finite path in the space joins ``a`` and ``b``."""
    if isinstance(a, Isolated) or isinstance(b, Isolated):
        return a == b
    return True


def component_of(pt: PointRef) -> str:
    return pt.name if isinstance(pt, Isolated) else "main"


def point_label(pt: PointRef) -> str:
    if isinstance(pt, Gate):
        return pt.name
    if isinstance(pt, Isolated):
        return pt.name
    if isinstance(pt, OnString):
        return f"s{pt.sid}:{pt.t:g}"
    return f"({pt.x:g},{pt.y:g})"
