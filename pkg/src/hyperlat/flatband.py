"""Flat-band eigenstates at eigenvalue -2: numerical null spaces and even-cycle states."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from hyperlat import _kernels
from hyperlat.errors import DomainError, VerificationError
from hyperlat.graph import Graph, girth, is_bipartite
from hyperlat.spectra import FLAT_TOL, FLAT_VALUE, MAX_DIM, check_symmetric
from hyperlat.tiling import LayoutGraph

RANK_TOL = 1e-10


@dataclass
class FlatState:
    """A vector in the -2 eigenspace of a line-graph coupling matrix.

    ``source`` is ``"null_space"`` or ``"even_cycle"``; even-cycle states keep
    the layout cycle they were built from and have integer entries.
    """

    vector: np.ndarray
    source: str
    cycle: tuple[int, ...] | None = None

    def residual(self, coupling: np.ndarray) -> float:
        r = coupling @ self.vector - FLAT_VALUE * self.vector
        return float(np.abs(r).max()) if r.size else 0.0


def flat_band_basis(coupling, flat_tol: float = FLAT_TOL, max_dim: int = MAX_DIM) -> list[FlatState]:
    """Orthonormal basis of the eigenspace of ``coupling`` at -2.

    Only eigenpairs inside ``[-2 - flat_tol, -2 + flat_tol]`` are computed.
    Raises VerificationError if a basis vector has ``|(M + 2I) v|_inf > 1e-8``.
    """
    a = check_symmetric(coupling, max_dim)
    w, v = scipy.linalg.eigh(
        a, subset_by_value=(FLAT_VALUE - flat_tol, FLAT_VALUE + flat_tol), driver="evr"
    )
    if v.shape[1] == 0:
        return []
    q, _ = np.linalg.qr(v)
    residual = np.abs(a @ q - FLAT_VALUE * q).max()
    if residual > 1e-8:
        raise VerificationError(f"flat-band basis residual {residual:.2e} exceeds 1e-8")
    return [FlatState(q[:, i].copy(), "null_space") for i in range(q.shape[1])]


def _graph(g) -> Graph:
    return g.graph if isinstance(g, LayoutGraph) else g


def even_cycle_state(g, cycle, back_map=None) -> FlatState:
    """Alternating +-1 on the line-graph vertices of an even simple layout cycle.

    ``back_map`` is the line graph's vertex-to-layout-edge map; it defaults to
    the canonical edge order of ``g``.
    """
    g = _graph(g)
    cycle = tuple(int(v) for v in cycle)
    length = len(cycle)
    if length < 3 or len(set(cycle)) != length:
        raise DomainError(f"{cycle} is not a simple cycle")
    if length % 2:
        raise DomainError(f"cycle of odd length {length} carries no flat state")
    if back_map is None:
        back_map = g.edges
    index = {e: k for k, e in enumerate(back_map)}
    vec = np.zeros(len(back_map), dtype=np.int64)
    for i in range(length):
        u, v = cycle[i], cycle[(i + 1) % length]
        key = (u, v) if u < v else (v, u)
        if key not in index:
            raise DomainError(f"{cycle} is not a cycle: ({u}, {v}) is not an edge")
        vec[index[key]] = 1 if i % 2 == 0 else -1
    return FlatState(vec, "even_cycle", cycle)


def is_exact_flat_state(coupling: np.ndarray, state: FlatState) -> bool:
    """Integer check ``M v + 2 v == 0``, no tolerance."""
    m = np.asarray(coupling, dtype=np.int64)
    v = np.asarray(state.vector, dtype=np.int64)
    return bool(np.all(m @ v + 2 * v == 0))


def even_cycles(g, max_len: int, min_len: int = 4) -> list[tuple[int, ...]]:
    """Simple even cycles up to ``max_len``, shortest first, canonical form."""
    indptr, indices = _graph(g).csr()
    cycles = _kernels.simple_cycles(indptr, indices, min_len, max_len, True)
    return sorted(cycles, key=lambda c: (len(c), c))


@dataclass
class EvenCycleResult:
    states: list[FlatState]
    rank: int
    target: int
    max_len: int
    cycles_examined: int
    complete: bool = field(init=False)

    def __post_init__(self):
        self.complete = self.rank >= self.target


def independent_even_cycle_states(g, search_limit: int | None = None, target: int | None = None,
                                  max_vertices: int = 200) -> EvenCycleResult:
    """A maximal linearly independent set of even-cycle flat states.

    Cycles are tried shortest first, up to ``search_limit`` edges (default
    ``2 * girth + 4``). Stops once ``target`` independent states are found;
    the default target is the full-wave flat multiplicity of a connected
    layout. ``complete`` is False if the search ran out first.
    """
    graph = _graph(g)
    if graph.vertex_count > max_vertices:
        raise DomainError(f"cycle search limited to {max_vertices} layout vertices")
    if search_limit is None:
        gth = girth(graph)
        if gth is None:
            return EvenCycleResult([], 0, 0, 0, 0)
        search_limit = 2 * gth + 4
    if target is None:
        target = graph.edge_count - graph.vertex_count + (1 if is_bipartite(graph)[0] else 0)

    basis: list[np.ndarray] = []
    states: list[FlatState] = []
    examined = 0
    for cycle in even_cycles(graph, search_limit):
        if len(states) >= target:
            break
        examined += 1
        state = even_cycle_state(graph, cycle)
        r = state.vector.astype(float)
        norm0 = np.linalg.norm(r)
        # two Gram-Schmidt passes keep the residual honest
        for _ in range(2):
            for b in basis:
                r -= (b @ r) * b
        norm = np.linalg.norm(r)
        if norm > RANK_TOL * norm0:
            basis.append(r / norm)
            states.append(state)
    return EvenCycleResult(states, len(states), target, search_limit, examined)
