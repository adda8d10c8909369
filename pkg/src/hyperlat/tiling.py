"""Polygon-centred {p,q} layouts grown ring by ring, and their ring counts.

Ring 1 is the seed polygon. Ring ``j+1`` is produced by sweeping the cyclic
ring ``j`` anticlockwise: every ring-``j`` vertex sends ``q - deg`` edges
outward, each ending on a fresh B-vertex, and each pair of consecutive
outward edges bounds one new polygon. If the ring-``j`` path between the two
outward edges has ``k`` vertices, that polygon is closed by ``p - k - 2`` fresh
b-vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from hyperlat.errors import DomainError
from hyperlat.graph import GeometryClass, Graph, SchlafliSpec, classify_geometry


@dataclass(frozen=True)
class RingCounts:
    """``b[j-1], B[j-1]`` for rings ``j = 1..rings+1``."""

    spec: SchlafliSpec
    b: tuple[int, ...]
    B: tuple[int, ...]

    @property
    def rings(self) -> int:
        return len(self.b) - 1

    def ring_size(self, j: int) -> int:
        return self.b[j - 1] + self.B[j - 1]


@dataclass(frozen=True)
class LayoutGraph:
    graph: Graph
    spec: SchlafliSpec
    rings: int
    ring_of: tuple[int, ...]
    type_of: tuple[str, ...]
    faces: tuple[tuple[int, ...], ...]
    name: str | None = None

    @property
    def n(self) -> int:
        return self.graph.vertex_count

    @property
    def m(self) -> int:
        return self.graph.edge_count

    @property
    def t(self) -> int:
        return len(self.faces)

    def ring_type_counts(self) -> list[tuple[int, int]]:
        """Observed ``(b_j, B_j)`` for ``j = 1..rings``."""
        out = [[0, 0] for _ in range(self.rings)]
        for r, kind in zip(self.ring_of, self.type_of):
            out[r - 1][0 if kind == "b" else 1] += 1
        return [tuple(x) for x in out]


def _check_growable(spec: SchlafliSpec, rings: int) -> None:
    if spec.p == 3:
        raise DomainError("p = 3 layouts are not supported by ring growth")
    if classify_geometry(spec) is GeometryClass.SPHERICAL:
        raise DomainError(f"{spec} is spherical (tau={spec.tau} < 4); use the catalog instead")
    if rings < 1:
        raise DomainError(f"rings must be >= 1, got {rings}")


def ring_counts(spec: SchlafliSpec, rings: int) -> RingCounts:
    """Exact b/B counts per ring, up to and including ring ``rings + 1``."""
    _check_growable(spec, rings)
    p, q = spec.p, spec.q
    b, B = [p], [0]
    for _ in range(rings):
        bj, Bj = b[-1], B[-1]
        b.append(((q - 2) * (p - 3) - 1) * bj + ((q - 3) * (p - 3) - 1) * Bj)
        B.append((q - 2) * bj + (q - 3) * Bj)
    return RingCounts(spec, tuple(b), tuple(B))


def generate_layout(spec: SchlafliSpec, rings: int) -> LayoutGraph:
    """Build the polygon-centred layout with ``rings`` concentric vertex rings.

    Vertices are numbered ring-major, anticlockwise inside each ring.
    """
    _check_growable(spec, rings)
    p, q = spec.p, spec.q

    edges: list[tuple[int, int]] = []
    degree: list[int] = []
    ring_of: list[int] = []
    type_of: list[str] = []
    faces: list[tuple[int, ...]] = []

    def new_vertex(ring: int, kind: str) -> int:
        degree.append(0)
        ring_of.append(ring)
        type_of.append(kind)
        return len(degree) - 1

    def add_edge(u: int, v: int) -> None:
        edges.append((u, v))
        degree[u] += 1
        degree[v] += 1

    ring = [new_vertex(1, "b") for _ in range(p)]
    for i in range(p):
        add_edge(ring[i], ring[(i + 1) % p])
    faces.append(tuple(ring))
    ring_orders = [ring]

    for j in range(1, rings):
        size = len(ring)
        # (position in ring, source vertex) for every outward edge, in sweep order
        sources = [(pos, v) for pos, v in enumerate(ring) for _ in range(q - degree[v])]
        heads = [new_vertex(j + 1, "B") for _ in sources]
        for (_, v), h in zip(sources, heads):
            add_edge(v, h)

        new_ring: list[int] = []
        count = len(sources)
        for i in range(count):
            pos_a, _ = sources[i]
            pos_b, _ = sources[(i + 1) % count]
            path_len = (pos_b - pos_a) % size + 1
            fresh = p - path_len - 2
            if fresh < 0:
                raise AssertionError(f"polygon overflow while growing {spec} ring {j + 1}")
            outer = [heads[i]] + [new_vertex(j + 1, "b") for _ in range(fresh)]
            chain = outer + [heads[(i + 1) % count]]
            for u, v in zip(chain, chain[1:]):
                add_edge(u, v)
            inner = [ring[(pos_a + s) % size] for s in range(path_len)]
            faces.append(tuple(inner[::-1] + chain))
            new_ring.extend(outer)
        ring = new_ring
        ring_orders.append(ring)

    # B-vertices of a ring are created before its b-vertices; renumber so ids
    # follow the anticlockwise order of each ring
    relabel = [0] * len(degree)
    for new_id, v in enumerate(v for r in ring_orders for v in r):
        relabel[v] = new_id
    inv = [v for r in ring_orders for v in r]
    return LayoutGraph(
        graph=Graph(len(degree), [(relabel[u], relabel[v]) for u, v in edges]),
        spec=spec,
        rings=rings,
        ring_of=tuple(ring_of[v] for v in inv),
        type_of=tuple(type_of[v] for v in inv),
        faces=tuple(tuple(relabel[v] for v in f) for f in faces),
    )


def _dodecahedron() -> tuple[int, list[tuple[int, int]], list[tuple[int, ...]]]:
    # outer pentagon 0-4, middle decagon 5-14, inner pentagon 15-19
    edges = []
    faces = [tuple(range(5)), tuple(range(15, 20))[::-1]]
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, 5 + 2 * i))
        edges.append((5 + 2 * i + 1, 15 + i))
        edges.append((15 + i, 15 + (i + 1) % 5))
        faces.append((i, (i + 1) % 5, 5 + (2 * i + 2) % 10, 5 + 2 * i + 1, 5 + 2 * i))
        faces.append((5 + 2 * i + 1, 5 + (2 * i + 2) % 10, 5 + (2 * i + 3) % 10,
                      15 + (i + 1) % 5, 15 + i))
    for k in range(10):
        edges.append((5 + k, 5 + (k + 1) % 10))
    return 20, edges, faces


def _cube() -> tuple[int, list[tuple[int, int]], list[tuple[int, ...]]]:
    edges = [(v, v ^ (1 << a)) for v in range(8) for a in range(3) if not v & (1 << a)]
    faces = []
    for a in range(3):
        b1, b2 = (x for x in range(3) if x != a)
        for val in (0, 1):
            base = val << a
            faces.append(tuple(base | (x << b1) | (y << b2) for x, y in ((0, 0), (1, 0), (1, 1), (0, 1))))
    return 8, edges, faces


def _tetrahedron() -> tuple[int, list[tuple[int, int]], list[tuple[int, ...]]]:
    edges = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    faces = [tuple(x for x in range(4) if x != k) for k in range(4)]
    return 4, edges, faces


_CATALOG = {
    "dodecahedron": (SchlafliSpec(5, 3), _dodecahedron),
    "cube": (SchlafliSpec(4, 3), _cube),
    "tetrahedron": (SchlafliSpec(3, 3), _tetrahedron),
}

CATALOG_NAMES = tuple(_CATALOG)


def catalog_instance(name: str) -> LayoutGraph:
    """Planar layout of a finite spherical tiling (``rings == 0``, type ``"-"``)."""
    try:
        spec, build = _CATALOG[name]
    except KeyError:
        raise LookupError(f"unknown catalog instance {name!r}; known: {', '.join(_CATALOG)}") from None
    n, edges, faces = build()
    return LayoutGraph(
        graph=Graph(n, edges),
        spec=spec,
        rings=0,
        ring_of=(0,) * n,
        type_of=("-",) * n,
        faces=tuple(faces),
        name=name,
    )
