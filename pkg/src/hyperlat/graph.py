"""Undirected simple graphs, their standard matrices, and {p,q} classification."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from hyperlat.errors import DomainError


class GeometryClass(enum.Enum):
    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class SchlafliSpec:
    """Regular tiling by ``p``-gons with ``q`` of them meeting at each corner."""

    p: int
    q: int

    def __post_init__(self):
        for name in ("p", "q"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                raise DomainError(f"{name} must be an integer, got {value!r}")
            if value < 3:
                raise DomainError(f"{name} must be >= 3, got {value}")

    @property
    def tau(self) -> int:
        return (self.p - 2) * (self.q - 2)

    @property
    def geometry(self) -> GeometryClass:
        return classify_geometry(self)

    def __str__(self):
        return f"{{{self.p},{self.q}}}"


def classify_geometry(spec: SchlafliSpec) -> GeometryClass:
    """Spherical, Euclidean or hyperbolic according to tau = (p-2)(q-2) vs 4."""
    if spec.p < 3 or spec.q < 3:
        raise DomainError(f"invalid Schlafli symbol {spec}")
    if spec.tau < 4:
        return GeometryClass.SPHERICAL
    if spec.tau == 4:
        return GeometryClass.EUCLIDEAN
    return GeometryClass.HYPERBOLIC


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..vertex_count-1``.

    Edges are kept as a sorted tuple of ``(min, max)`` pairs, so edge ``k`` has
    a stable index that the line graph reuses as its vertex id.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: Mapping[int, str] | None = field(default=None, compare=False)

    def __init__(self, vertex_count: int, edges: Iterable[Iterable[int]], labels=None):
        n = int(vertex_count)
        if n < 0:
            raise DomainError("vertex_count must be non-negative")
        canon = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            pair = (u, v) if u < v else (v, u)
            if pair in canon:
                raise DomainError(f"duplicate edge {pair}")
            canon.add(pair)
        object.__setattr__(self, "vertex_count", n)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        object.__setattr__(self, "labels", dict(labels) if labels else None)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.vertex_count, dtype=np.int64)
        if self.edges:
            arr = np.asarray(self.edges, dtype=np.int64)
            np.add.at(deg, arr[:, 0], 1)
            np.add.at(deg, arr[:, 1], 1)
        return deg

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Compressed adjacency ``(indptr, indices)`` with sorted neighbour lists."""
        adj = self.neighbors()
        indptr = np.zeros(self.vertex_count + 1, dtype=np.int32)
        indptr[1:] = np.cumsum([len(r) for r in adj])
        indices = np.fromiter((w for r in adj for w in r), dtype=np.int32, count=int(indptr[-1]))
        return indptr, indices

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        adj = self.neighbors()
        seen = [False] * self.vertex_count
        seen[0] = True
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        return all(seen)


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.vertex_count, g.vertex_count), dtype=np.int64)
    if g.edges:
        arr = np.asarray(g.edges)
        a[arr[:, 0], arr[:, 1]] = 1
        a[arr[:, 1], arr[:, 0]] = 1
    return a


def degree_matrix(g: Graph) -> np.ndarray:
    return np.diag(g.degrees())


def laplacian(g: Graph) -> np.ndarray:
    """L = D - A."""
    return degree_matrix(g) - adjacency_matrix(g)


def signless_laplacian(g: Graph) -> np.ndarray:
    """Q = D + A."""
    return degree_matrix(g) + adjacency_matrix(g)


def is_bipartite(g: Graph) -> tuple[bool, list[int] | None]:
    """BFS 2-colouring. Returns ``(True, colors)`` or ``(False, None)``."""
    adj = g.neighbors()
    color = [-1] * g.vertex_count
    for root in range(g.vertex_count):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False, None
    return True, color


def girth(g: Graph) -> int | None:
    """Length of the shortest cycle, or None for a forest."""
    adj = g.neighbors()
    best = None
    for root in range(g.vertex_count):
        dist = [-1] * g.vertex_count
        parent = [-1] * g.vertex_count
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= best:
                break
            for w in adj[v]:
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    length = dist[v] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best
