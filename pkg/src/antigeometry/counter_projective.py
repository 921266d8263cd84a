"""Finite incidence structures, the three counter-axioms, and exhaustive counter-model search.

Lines are stored as bitmasks over the points, so a structure is a point count
plus a multiset of masks. Duplicate lines and lines with fewer than two points
are allowed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product

MAX_BOUND = 7


class BoundsTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class IncidenceStructure:
    n_points: int
    lines: tuple[int, ...]  # bitmask of incident points per line

    def __post_init__(self):
        full = (1 << self.n_points) - 1
        if any(m < 0 or m & ~full for m in self.lines):
            raise ValueError("line mask mentions a point outside the structure")

    @property
    def n_lines(self) -> int:
        return len(self.lines)

    @property
    def incidence(self) -> list[list[int]]:
        return [[(m >> p) & 1 for m in self.lines] for p in range(self.n_points)]

    @classmethod
    def from_incidence(cls, n_points: int, n_lines: int, matrix) -> "IncidenceStructure":
        if len(matrix) != n_points or any(len(row) != n_lines for row in matrix):
            raise ValueError("incidence matrix shape does not match the counts")
        lines = tuple(sum(1 << p for p in range(n_points) if matrix[p][j]) for j in range(n_lines))
        return cls(n_points, lines)

    def to_json(self) -> dict:
        return {"points": self.n_points, "lines": self.n_lines, "incidence": self.incidence}

    @classmethod
    def from_json(cls, d: dict) -> "IncidenceStructure":
        return cls.from_incidence(d["points"], d["lines"], d["incidence"])

    def with_isolated_point(self) -> "IncidenceStructure":
        return IncidenceStructure(self.n_points + 1, self.lines)


@dataclass
class CounterAxioms:
    ax1: bool
    ax2: bool
    ax3: bool
    witnesses: dict = field(default_factory=dict)

    def holding(self) -> frozenset:
        return frozenset(i for i, v in ((1, self.ax1), (2, self.ax2), (3, self.ax3)) if v)


def _bits(m: int) -> int:
    return bin(m).count("1")


def _ax1(s: IncidenceStructure):
    for p, q in combinations(range(s.n_points), 2):
        pair = (1 << p) | (1 << q)
        if sum(1 for m in s.lines if m & pair == pair) == 1:
            return (p, q)
    return None


def _ax3(s: IncidenceStructure):
    for j, m in enumerate(s.lines):
        if _bits(m) > 2:
            return j
    return None


def _ax2(s: IncidenceStructure):
    """Universal reading: every line through p1, p2 misses every line through q1, q2."""
    n = s.n_points
    through = {}
    for a, b in combinations(range(n), 2):
        pair = (1 << a) | (1 << b)
        through[a, b] = through[b, a] = [j for j, m in enumerate(s.lines) if m & pair == pair]

    def collinear(a, b, c):
        mask = (1 << a) | (1 << b) | (1 << c)
        return any(m & mask == mask for m in s.lines)

    triples = [(a, b, c) for a, b, c in permutations(range(n), 3) if collinear(a, b, c)]
    if not triples:
        return None
    # (x, q, p3) collinear, indexed by p3
    by_p3: dict[int, list[tuple[int, int]]] = {}
    for x, q, p3 in triples:
        by_p3.setdefault(p3, []).append((x, q))
    for p3, opts in by_p3.items():
        for (p1, q1), (p2, q2) in product(opts, repeat=2):
            if p1 == p2 or q1 == q2 or collinear(p1, p2, p3):
                continue
            for j in through[p1, p2]:
                for k in through[q1, q2]:
                    if s.lines[j] & s.lines[k]:
                        return {"p": [p1, p2, p3], "q": [q1, q2], "lines": [j, k]}
    return None


def check_counter_axioms(s: IncidenceStructure) -> CounterAxioms:
    w1, w2, w3 = _ax1(s), _ax2(s), _ax3(s)
    wit = {}
    if w1 is not None:
        wit["ax1"] = {"pair": list(w1)}
    if w2 is not None:
        wit["ax2"] = w2
    if w3 is not None:
        wit["ax3"] = {"line": w3}
    return CounterAxioms(w1 is None, w2 is None, w3 is None, wit)


def satisfies_exactly(s: IncidenceStructure, required) -> bool:
    """The structure satisfies the required counter-axioms and violates the others."""
    req = frozenset(required)
    if (_ax3(s) is None) != (3 in req):
        return False
    if (_ax1(s) is None) != (1 in req):
        return False
    return (_ax2(s) is None) == (2 in req)


# --- canonical forms --------------------------------------------------------------------


def _relabel(mask: int, perm) -> int:
    out = 0
    for p, q in enumerate(perm):
        if mask >> p & 1:
            out |= 1 << q
    return out


def canonical(s: IncidenceStructure) -> IncidenceStructure:
    """Lexicographically least relabelling among those ordering points by an invariant."""
    n = s.n_points
    inv = []
    for p in range(n):
        sizes = sorted(_bits(m) for m in s.lines if m >> p & 1)
        inv.append((len(sizes), tuple(sizes)))
    order = sorted(set(inv))
    classes = [[p for p in range(n) if inv[p] == key] for key in order]
    best = None
    slots = []
    start = 0
    for cl in classes:
        slots.append(list(range(start, start + len(cl))))
        start += len(cl)
    for choice in product(*(permutations(cl) for cl in classes)):
        perm = [0] * n
        for cl_pts, cl_slots in zip(choice, slots):
            for p, q in zip(cl_pts, cl_slots):
                perm[p] = q
        key = tuple(sorted(_relabel(m, perm) for m in s.lines))
        if best is None or key < best:
            best = key
    return IncidenceStructure(n, best if best is not None else ())


def _key(s: IncidenceStructure):
    return (s.n_points, s.n_lines, s.lines)


# --- search ---------------------------------------------------------------------------


@lru_cache(maxsize=64)
def _levels(n: int, max_lines: int, small_lines: bool) -> tuple[frozenset, ...]:
    """Canonical structures on ``n`` points with 0..max_lines lines, level by level.

    With ``small_lines`` only lines of at most two points are used; axiom III
    rules the others out, so nothing is lost when it is required.
    """
    masks = [m for m in range(1 << n) if not small_lines or _bits(m) <= 2]
    level = frozenset({IncidenceStructure(n, ())})
    out = [level]
    for _ in range(max_lines):
        level = frozenset(canonical(IncidenceStructure(n, s.lines + (m,))) for s in level for m in masks)
        out.append(level)
    return tuple(out)


def search_counter_models(max_points: int, max_lines: int, required) -> list[IncidenceStructure]:
    """All structures (2..max_points points, 0..max_lines lines) up to isomorphism that
    satisfy exactly the ``required`` counter-axioms, in a deterministic order.

    Levels are built breadth-first by adding one line to each canonical structure
    of the previous level and canonicalizing again.
    """
    req = frozenset(required)
    if not req <= {1, 2, 3}:
        raise ValueError("required axioms must be drawn from {1, 2, 3}")
    if max_points > MAX_BOUND or max_lines > MAX_BOUND:
        raise BoundsTooLarge(f"bounds ({max_points}, {max_lines}) exceed {MAX_BOUND}")
    if max_points < 0 or max_lines < 0:
        raise ValueError("bounds must be non-negative")
    found = []
    for n in range(2, max_points + 1):
        for level in _levels(n, max_lines, 3 in req):
            found.extend(s for s in level if satisfies_exactly(s, req))
    return sorted(found, key=_key)


def brute_force_models(max_points: int, max_lines: int, required) -> list[IncidenceStructure]:
    """Unpruned enumeration of every incidence matrix; for cross-checking the search."""
    req = frozenset(required)
    out = []
    for n in range(2, max_points + 1):
        for k in range(max_lines + 1):
            for lines in product(range(1 << n), repeat=k):
                s = IncidenceStructure(n, lines)
                if check_counter_axioms(s).holding() == req:
                    out.append(s)
    return out


def dump_models(models, path=None) -> str:
    text = json.dumps([m.to_json() for m in models], indent=1, sort_keys=True)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


def load_models(path) -> list[IncidenceStructure]:
    with open(path) as fh:
        return [IncidenceStructure.from_json(d) for d in json.load(fh)]
