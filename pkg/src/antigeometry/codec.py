"""JSON encoding of kernel values, so that report witnesses can be replayed."""

from __future__ import annotations

import math

from .model import Gate, Isolated, MdConfig, OnString, Planar, make_point
from .paths import Infinite, Line, Loop, PathRep, PlanarLeg, StringLeg, Terminal


def _num(x: float):
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


def _unnum(x):
    if x == "inf":
        return math.inf
    if x == "-inf":
        return -math.inf
    return x


def encode_point(pt) -> dict:
    if isinstance(pt, Planar):
        return {"kind": f"planar{pt.region}", "x": pt.x, "y": pt.y}
    if isinstance(pt, Gate):
        return {"kind": pt.name}
    if isinstance(pt, OnString):
        return {"kind": "string", "sid": pt.sid, "t": pt.t}
    if isinstance(pt, Isolated):
        return {"kind": "isolated", "name": pt.name}
    raise TypeError(f"not a point: {pt!r}")


def decode_point(d: dict, cfg: MdConfig):
    kind = d["kind"]
    if kind in ("planar1", "planar2"):
        return make_point((kind, d["x"], d["y"]), cfg)
    if kind in ("P", "Q"):
        return Gate(kind)
    if kind == "string":
        return make_point(("string", d["sid"], d["t"]), cfg)
    if kind == "isolated":
        return make_point(Isolated(d["name"]), cfg)
    raise ValueError(f"unknown point kind {kind!r}")


def encode_leg(leg) -> dict:
    if isinstance(leg, PlanarLeg):
        return {"leg": "planar", "region": leg.region, "from": list(leg.start), "to": list(leg.end)}
    return {"leg": "string", "sid": leg.sid, "from_t": leg.t0, "to_t": leg.t1}


def decode_leg(d: dict):
    if d["leg"] == "planar":
        return PlanarLeg(d["region"], tuple(d["from"]), tuple(d["to"]))
    return StringLeg(d["sid"], d["from_t"], d["to_t"])


def encode_path(path: PathRep) -> dict:
    out = {"legs": [encode_leg(leg) for leg in path.legs]}
    if path.is_point:
        out["origin"] = encode_point(path.origin)
    return out


def decode_path(d: dict, cfg: MdConfig) -> PathRep:
    origin = decode_point(d["origin"], cfg) if "origin" in d else None
    return PathRep(tuple(decode_leg(x) for x in d["legs"]), origin)


def encode_status(st) -> dict:
    if isinstance(st, Infinite):
        return {"status": "Infinite"}
    if isinstance(st, Loop):
        return {"status": "Loop"}
    out = {"status": "Terminal", "attained": st.attained}
    if st.point is not None:
        out["point"] = encode_point(st.point)
    if st.limit is not None:
        out["limit"] = list(st.limit)
    return out


def decode_status(d: dict, cfg: MdConfig):
    if d["status"] == "Infinite":
        return Infinite()
    if d["status"] == "Loop":
        return Loop()
    pt = decode_point(d["point"], cfg) if "point" in d else None
    limit = tuple(d["limit"]) if "limit" in d else None
    return Terminal(pt, limit, d["attained"])


def encode_line(line: Line) -> dict:
    return {"rep": encode_path(line.rep), "start": encode_status(line.start), "end": encode_status(line.end)}


def decode_line(d: dict, cfg: MdConfig) -> Line:
    return Line(decode_path(d["rep"], cfg), decode_status(d["start"], cfg), decode_status(d["end"], cfg))


def encode_value(v):
    """Tagged encoding of nested witness inputs (points, paths, lines, planes, plain data)."""
    from .planes import PlaneDesc

    if isinstance(v, (Planar, Gate, OnString, Isolated)):
        return {"$point": encode_point(v)}
    if isinstance(v, PathRep):
        return {"$path": encode_path(v)}
    if isinstance(v, Line):
        return {"$line": encode_line(v)}
    if isinstance(v, PlaneDesc):
        return {"$plane": sorted(v.components)}
    if isinstance(v, dict):
        return {k: encode_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [encode_value(x) for x in v]
    if isinstance(v, float):
        return _num(v)
    return v


def decode_value(v, cfg: MdConfig):
    from .planes import PlaneDesc

    if isinstance(v, dict):
        if "$point" in v:
            return decode_point(v["$point"], cfg)
        if "$path" in v:
            return decode_path(v["$path"], cfg)
        if "$line" in v:
            return decode_line(v["$line"], cfg)
        if "$plane" in v:
            return PlaneDesc(frozenset(v["$plane"]))
        return {k: decode_value(x, cfg) for k, x in v.items()}
    if isinstance(v, list):
        return [decode_value(x, cfg) for x in v]
    return _unnum(v)
