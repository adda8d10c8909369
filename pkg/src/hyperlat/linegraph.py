"""Line graphs (full-wave coupling) and signed line graphs (half-wave coupling)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from hyperlat import _kernels
from hyperlat.errors import DomainError
from hyperlat.graph import Graph, adjacency_matrix
from hyperlat.tiling import LayoutGraph


def _as_graph(g) -> Graph:
    return g.graph if isinstance(g, LayoutGraph) else g


@dataclass(frozen=True)
class Orientation:
    """``pairs[k] = (foot, head)`` for layout edge ``k``."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def heads(self) -> np.ndarray:
        return np.array([h for _, h in self.pairs], dtype=np.int64)

    @property
    def feet(self) -> np.ndarray:
        return np.array([f for f, _ in self.pairs], dtype=np.int64)

    def reversed_at(self, k: int) -> Orientation:
        pairs = list(self.pairs)
        foot, head = pairs[k]
        pairs[k] = (head, foot)
        return Orientation(tuple(pairs))


def _check_orientation(g: Graph, o: Orientation) -> None:
    if len(o.pairs) != g.edge_count:
        raise DomainError(
            f"orientation covers {len(o.pairs)} edges, layout has {g.edge_count}"
        )
    for k, ((u, v), (foot, head)) in enumerate(zip(g.edges, o.pairs)):
        if {foot, head} != {u, v}:
            raise DomainError(f"orientation entry {k} = {(foot, head)} does not match edge {(u, v)}")


def default_orientation(g) -> Orientation:
    """Foot at the smaller endpoint, head at the larger."""
    return Orientation(tuple(_as_graph(g).edges))


def random_orientation(g, rng: np.random.Generator) -> Orientation:
    flips = rng.integers(0, 2, size=_as_graph(g).edge_count)
    return Orientation(tuple((v, u) if f else (u, v) for (u, v), f in zip(_as_graph(g).edges, flips)))


def line_graph(g) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph whose vertex ``k`` is layout edge ``k`` (canonical edge order).

    Returns the graph and the back map from line-graph vertex to layout edge.
    """
    g = _as_graph(g)
    if g.edge_count == 0:
        raise DomainError("line graph of an edgeless graph is empty")
    o = default_orientation(g)
    lo, hi, _ = _kernels.line_graph_pairs(g.vertex_count, o.heads, o.feet)
    return Graph(g.edge_count, zip(lo.tolist(), hi.tolist())), g.edges


@dataclass(frozen=True)
class SignedLineGraph:
    base: Graph
    signs: dict[tuple[int, int], int]
    back_map: tuple[tuple[int, int], ...]
    orientation: Orientation

    def matrix(self) -> np.ndarray:
        """The signed adjacency matrix A*_LG."""
        m = self.base.vertex_count
        a = np.zeros((m, m), dtype=np.int64)
        if self.signs:
            ij = np.array(list(self.signs.keys()))
            s = np.array(list(self.signs.values()))
            a[ij[:, 0], ij[:, 1]] = s
            a[ij[:, 1], ij[:, 0]] = s
        return a


def signed_line_graph(g, o: Orientation | None = None) -> SignedLineGraph:
    g = _as_graph(g)
    if g.edge_count == 0:
        raise DomainError("line graph of an edgeless graph is empty")
    if o is None:
        o = default_orientation(g)
    _check_orientation(g, o)
    lo, hi, sign = _kernels.line_graph_pairs(g.vertex_count, o.heads, o.feet)
    pairs = list(zip(lo.tolist(), hi.tolist()))
    return SignedLineGraph(
        base=Graph(g.edge_count, pairs),
        signs=dict(zip(pairs, sign.tolist())),
        back_map=g.edges,
        orientation=o,
    )


def switch_edge(slg: SignedLineGraph, edge) -> SignedLineGraph:
    """Reverse the orientation of one layout edge.

    ``edge`` is either a layout edge ``(u, v)`` or its line-graph vertex id.
    Equivalent to conjugating A*_LG by the diagonal sign matrix that is -1 at
    that line-graph vertex.
    """
    if isinstance(edge, (int, np.integer)):
        k = int(edge)
        if not 0 <= k < len(slg.back_map):
            raise DomainError(f"no line-graph vertex {k}")
    else:
        u, v = (int(x) for x in edge)
        key = (min(u, v), max(u, v))
        try:
            k = slg.back_map.index(key)
        except ValueError:
            raise DomainError(f"{key} is not a layout edge") from None
    signs = {
        pair: (-s if k in pair else s) for pair, s in slg.signs.items()
    }
    return SignedLineGraph(slg.base, signs, slg.back_map, slg.orientation.reversed_at(k))


def line_graph_adjacency(g) -> np.ndarray:
    """A_LG as a dense integer matrix."""
    lg, _ = line_graph(g)
    return adjacency_matrix(lg)
