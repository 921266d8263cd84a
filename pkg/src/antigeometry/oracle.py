"""Discretised-graph shortest paths on the model space, used only to cross-check ``metric``.

Half-planes are sampled on a lattice of spacing ``step`` whose edges are all
primitive lattice vectors up to ``stencil`` cells long; strings are sampled as
chains. Lattice distances depend only on the cell offset, so they are computed
once by a single Dijkstra run from the origin and reused for every query.
The oracle knows nothing about gates beyond the graph's connectivity.
"""

from __future__ import annotations

import heapq
import math
from functools import cached_property
from math import gcd

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import dijkstra

from .model import Gate, Isolated, MdConfig, OnString, PointRef, same_point


class GridOracle:
    def __init__(self, cfg: MdConfig, step: float = 0.05, span: float = 22.0, stencil: int = 10):
        self.cfg = cfg
        self.step = step
        self.stencil = stencil
        self.n = int(math.ceil(span / step)) + 2

    @cached_property
    def table(self) -> np.ndarray:
        """Lattice distance from cell (0, 0) to (i, j), first quadrant."""
        n, K, h = self.n, self.stencil, self.step
        vecs = [(p, q) for p in range(K + 1) for q in range(K + 1) if (p or q) and gcd(p, q) == 1]
        idx = np.arange(n * n).reshape(n, n)
        rows, cols, w = [], [], []
        for p, q in vecs:
            src = idx[: n - p, : n - q].ravel()
            dst = idx[p:, q:].ravel()
            rows.append(src)
            cols.append(dst)
            w.append(np.full(src.shape, h * math.hypot(p, q)))
        graph = coo_matrix((np.concatenate(w), (np.concatenate(rows), np.concatenate(cols))), shape=(n * n, n * n)).tocsr()
        dist = dijkstra(graph, directed=True, indices=0)
        return dist.reshape(n, n)

    def _lattice(self, di: int, dj: int) -> float:
        return float(self.table[abs(di), abs(dj)])

    def _string_samples(self, sid: int) -> tuple[int, float]:
        L = self.cfg.length(sid)
        k = max(1, int(math.ceil(L / self.step)))
        return k, L / k

    def _anchors(self, pt: PointRef) -> list[tuple[tuple, float]]:
        h, g = self.step, self.cfg.gap_width
        if isinstance(pt, Gate):
            return [(pt.name, 0.0)]
        if isinstance(pt, OnString):
            k, hs = self._string_samples(pt.sid)
            lo = int(math.floor(pt.t / hs))
            out = []
            for m in {lo, min(lo + 1, k)}:
                out.append((self._string_node(pt.sid, m, k), abs(pt.t - m * hs)))
            return out
        if pt.region == 1:
            fi, fj = pt.x / h, pt.y / h
            cand_i = {min(int(math.floor(fi)), 0), min(int(math.ceil(fi)), 0)}
        else:
            fi, fj = (pt.x - g) / h, pt.y / h
            cand_i = {max(int(math.floor(fi)), 1), max(int(math.ceil(fi)), 1)}
        cand_j = {int(math.floor(fj)), int(math.ceil(fj))}
        out = []
        for i in cand_i:
            for j in cand_j:
                x = i * h if pt.region == 1 else g + i * h
                out.append((("g", pt.region, i, j), math.hypot(pt.x - x, pt.y - j * h)))
        return out

    @staticmethod
    def _string_node(sid: int, m: int, k: int):
        if m == 0:
            return "P"
        if m == k:
            return "Q"
        return ("s", sid, m)

    def distance(self, a: PointRef, b: PointRef) -> float:
        if isinstance(a, Isolated) or isinstance(b, Isolated):
            return 0.0 if a == b else math.inf
        if same_point(a, b):
            return 0.0
        adj: dict = {}

        def add(u, v, w):
            adj.setdefault(u, []).append((v, w))
            adj.setdefault(v, []).append((u, w))

        for sid in (1, 2, 3):
            k, hs = self._string_samples(sid)
            for m in range(k):
                add(self._string_node(sid, m, k), self._string_node(sid, m + 1, k), hs)
        anchors_a, anchors_b = self._anchors(a), self._anchors(b)
        for node, w in anchors_a:
            add("A", node, w)
        for node, w in anchors_b:
            add("B", node, w)
        lattice = {1: [("P", (0, 0))], 2: [("Q", (0, 0))]}
        for node, _ in anchors_a + anchors_b:
            if isinstance(node, tuple) and node[0] == "g":
                lattice[node[1]].append((node, (node[2], node[3])))
        for members in lattice.values():
            for x in range(len(members)):
                for y in range(x + 1, len(members)):
                    (u, (iu, ju)), (v, (iv, jv)) = members[x], members[y]
                    if u != v:
                        add(u, v, self._lattice(iu - iv, ju - jv))
        best = {"A": 0.0}
        heap = [(0.0, 0, "A")]
        tick = 1
        while heap:
            d, _, u = heapq.heappop(heap)
            if u == "B":
                return d
            if d > best.get(u, math.inf):
                continue
            for v, w in adj.get(u, ()):
                nd = d + w
                if nd < best.get(v, math.inf):
                    best[v] = nd
                    heapq.heappush(heap, (nd, tick, v))
                    tick += 1
        return math.inf
