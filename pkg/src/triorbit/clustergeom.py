"""Diagonals and triangulations of an (n+3)-gon, matched against the cluster category of A_n."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx
from networkx.algorithms import isomorphism

from .derivedcat import DbIndec
from .orbitcat import OrbitCategory

__all__ = [
    "Diagonal",
    "diagonals",
    "crossing",
    "triangulations",
    "geom_bijection",
    "cluster_tilting_objects",
    "crossing_graph_dot",
    "NoBijectionError",
]


class NoBijectionError(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class Diagonal:
    i: int
    j: int
    n: int

    def __post_init__(self):
        m = self.n + 3
        if not (0 <= self.i < self.j < m):
            raise ValueError(f"endpoints must satisfy 0 <= i < j < {m}")
        if self.j - self.i < 2 or (self.i, self.j) == (0, m - 1):
            raise ValueError(f"({self.i}, {self.j}) is a side of the polygon")

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def diagonals(n: int) -> list[Diagonal]:
    if n < 1:
        raise ValueError("n must be at least 1")
    m = n + 3
    return [Diagonal(i, j, n) for i in range(m) for j in range(i + 2, m) if (i, j) != (0, m - 1)]


def crossing(d1: Diagonal, d2: Diagonal) -> bool:
    """Endpoints strictly interleave around the polygon."""
    if d1.n != d2.n:
        raise ValueError("diagonals of different polygons")
    return d1.i < d2.i < d1.j < d2.j or d2.i < d1.i < d2.j < d1.j


def triangulations(n: int) -> list[frozenset[Diagonal]]:
    """All maximal non-crossing sets, by backtracking over the sorted diagonal list."""
    ds = diagonals(n)
    out = []

    def extend(start, chosen):
        if len(chosen) == n:
            out.append(frozenset(chosen))
            return
        for k in range(start, len(ds)):
            d = ds[k]
            if all(not crossing(d, c) for c in chosen):
                chosen.append(d)
                extend(k + 1, chosen)
                chosen.pop()

    extend(0, [])
    return out


def _ext_graph(oc: OrbitCategory) -> tuple[list[DbIndec], dict]:
    objs = list(oc.indecomposables)
    adj = {x: set() for x in objs}
    for x in objs:
        for y in objs:
            e = oc.ext1(x, y)
            if e not in (0, 1):
                raise NoBijectionError(f"orbit Ext^1 of dimension {e}; crossing model needs 0 or 1")
            if e:
                adj[x].add(y)
    for x in objs:
        for y in adj[x]:
            if x not in adj[y]:
                raise NoBijectionError("orbit Ext^1 is not symmetric")
    return objs, adj


def geom_bijection(oc: OrbitCategory) -> dict[Diagonal, DbIndec]:
    """Diagonals to orbit indecomposables, with crossing iff orbit Ext^1 is nonzero."""
    n = oc.quiver.vertex_count
    ds = diagonals(n)
    geo = nx.Graph()
    geo.add_nodes_from(ds)
    geo.add_edges_from((a, b) for a, b in combinations(ds, 2) if crossing(a, b))
    objs, oadj = _ext_graph(oc)
    alg = nx.Graph()
    alg.add_nodes_from(objs)
    alg.add_edges_from((x, y) for x in objs for y in oadj[x])
    matcher = isomorphism.GraphMatcher(geo, alg)
    if not matcher.is_isomorphic():
        raise NoBijectionError("crossing graph and Ext^1 graph are not isomorphic")
    return dict(sorted(matcher.mapping.items()))


def cluster_tilting_objects(oc: OrbitCategory) -> list[frozenset[DbIndec]]:
    """Maximal sets of indecomposables with pairwise vanishing orbit Ext^1 (brute force)."""
    n = oc.quiver.vertex_count
    if n > 5:
        raise ValueError("brute-force tilting enumeration is limited to n <= 5")
    objs = list(oc.indecomposables)
    rigid = {x: {y for y in objs if oc.ext1(x, y) == 0 and oc.ext1(y, x) == 0} for x in objs}
    objs = [x for x in objs if x in rigid[x]]
    found = []

    def extend(start, chosen):
        maximal = True
        for k in range(len(objs)):
            x = objs[k]
            if x in chosen:
                continue
            if all(x in rigid[c] for c in chosen):
                maximal = False
                if k >= start:
                    chosen.append(x)
                    extend(k + 1, chosen)
                    chosen.pop()
        if maximal:
            found.append(frozenset(chosen))

    extend(0, [])
    return found


def crossing_graph_dot(n: int) -> str:
    ds = diagonals(n)
    lines = ["graph crossings {"]
    for d in ds:
        lines.append(f'  "{d}";')
    for a, b in combinations(ds, 2):
        if crossing(a, b):
            lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
