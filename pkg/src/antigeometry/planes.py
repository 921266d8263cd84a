"""Planes of the model as unions of components, with a sampled geodesic-closure check."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .metric import geodesics_between
from .model import (
    Gate,
    Isolated,
    MdConfig,
    OnString,
    P,
    Planar,
    PointRef,
    Q,
    connectable,
    make_point,
)
from .paths import PathRep, PlanarLeg

COMPONENTS = ("Delta1", "Delta2", "String1", "String2", "String3", "Isolated:I", "Isolated:J", "Isolated:K")


@dataclass(frozen=True)
class PlaneDesc:
    components: frozenset

    def __post_init__(self):
        bad = set(self.components) - set(COMPONENTS)
        if bad:
            raise ValueError(f"unknown plane components {sorted(bad)}")

    @classmethod
    def of(cls, *names: str) -> "PlaneDesc":
        return cls(frozenset(names))

    def label(self) -> str:
        return "{" + ", ".join(sorted(self.components)) + "}"


def contains(plane: PlaneDesc, pt: PointRef) -> bool:
    c = plane.components
    if isinstance(pt, Planar):
        return f"Delta{pt.region}" in c
    if isinstance(pt, OnString):
        return f"String{pt.sid}" in c
    if isinstance(pt, Isolated):
        return f"Isolated:{pt.name}" in c
    if isinstance(pt, Gate):
        own = "Delta1" if pt.name == "P" else "Delta2"
        return own in c or any(f"String{i}" in c for i in (1, 2, 3))
    return False


def path_in_plane(plane: PlaneDesc, path: PathRep) -> bool:
    c = plane.components
    for leg in path.legs:
        name = f"Delta{leg.region}" if isinstance(leg, PlanarLeg) else f"String{leg.sid}"
        if name not in c:
            return False
    return True


def sample_point(plane: PlaneDesc, rng: random.Random, cfg: MdConfig, box: float = 10.0) -> PointRef:
    comp = rng.choice(sorted(plane.components))
    if comp == "Delta1":
        return make_point(("planar1", -rng.uniform(0, box), rng.uniform(-box, box)), cfg)
    if comp == "Delta2":
        return make_point(("planar2", cfg.g + rng.uniform(1e-3, box), rng.uniform(-box, box)), cfg)
    if comp.startswith("String"):
        sid = int(comp[-1])
        return make_point(("string", sid, rng.uniform(0, cfg.length(sid))), cfg)
    return make_point(Isolated(comp.split(":")[1]), cfg)


@dataclass(frozen=True)
class ClosureResult:
    ok: bool
    pairs_checked: int
    failure: tuple | None = None


def closure_check(plane: PlaneDesc, cfg: MdConfig, n_pairs: int = 200, seed: int = 0) -> ClosureResult:
    """For sampled pairs of the plane, some geodesic between them must stay in the plane.

    Gates are added to the sample so the pairs through P and Q are always tried.
    """
    rng = random.Random(seed)
    pool = [g for g in (P, Q) if contains(plane, g)]
    pairs = [(a, b) for a in pool for b in pool if a != b]
    while len(pairs) < n_pairs:
        pairs.append((sample_point(plane, rng, cfg), sample_point(plane, rng, cfg)))
    checked = 0
    for a, b in pairs:
        checked += 1
        if not connectable(a, b) or a == b:
            continue
        if not any(path_in_plane(plane, g) for g in geodesics_between(a, b, cfg)):
            return ClosureResult(False, checked, (a, b))
    return ClosureResult(True, checked)


def plane_intersection(alpha: PlaneDesc, beta: PlaneDesc) -> tuple[frozenset, tuple[PointRef, ...]]:
    """Shared components, plus the gates lying in both planes outside those components."""
    shared = alpha.components & beta.components
    extra = []
    for g in (P, Q):
        inside_shared = contains(PlaneDesc(shared), g) if shared else False
        if contains(alpha, g) and contains(beta, g) and not inside_shared:
            extra.append(g)
    return shared, tuple(extra)


def point_count(plane: PlaneDesc) -> float:
    """Number of points of the plane: finite only for unions of islands."""
    if all(c.startswith("Isolated:") for c in plane.components):
        return len(plane.components)
    return float("inf")
