import itertools
import subprocess
import sys

import networkx as nx
import numpy as np
import pytest

from hyperlat import _kernels
from hyperlat._kernels import _pykernels
from hyperlat.graph import Graph, SchlafliSpec
from hyperlat.tiling import catalog_instance, generate_layout

try:
    from hyperlat._kernels import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels else [])


def canonical(cycle):
    c = list(cycle)
    i = c.index(min(c))
    c = c[i:] + c[:i]
    if c[1] > c[-1]:
        c = [c[0]] + c[1:][::-1]
    return tuple(c)


def graphs():
    yield catalog_instance("dodecahedron").graph
    yield catalog_instance("cube").graph
    yield generate_layout(SchlafliSpec(4, 4), 2).graph
    yield generate_layout(SchlafliSpec(5, 4), 2).graph
    p = nx.petersen_graph()
    yield Graph(10, p.edges())


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@pytest.mark.parametrize("even_only", [False, True])
def test_cycles_match_networkx(backend, even_only):
    for g in graphs():
        nxg = nx.Graph(list(g.edges))
        want = {canonical(c) for c in nx.simple_cycles(nxg, length_bound=9) if len(c) >= 3}
        if even_only:
            want = {c for c in want if len(c) % 2 == 0}
        indptr, indices = g.csr()
        got = backend.simple_cycles(indptr, indices, 3, 9, even_only)
        assert len(got) == len(set(got))
        assert set(got) == want


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_line_graph_pairs_brute_force(backend):
    rng = np.random.default_rng(3)
    g = generate_layout(SchlafliSpec(6, 4), 2).graph
    flips = rng.integers(0, 2, g.edge_count)
    pairs = [(v, u) if f else (u, v) for (u, v), f in zip(g.edges, flips)]
    feet = np.array([a for a, _ in pairs], dtype=np.int64)
    heads = np.array([b for _, b in pairs], dtype=np.int64)
    lo, hi, sign = backend.line_graph_pairs(g.vertex_count, heads, feet)
    want = []
    for i, j in itertools.combinations(range(g.edge_count), 2):
        shared = set(pairs[i]) & set(pairs[j])
        if shared:
            (w,) = shared
            same = (heads[i] == w) == (heads[j] == w)
            want.append((i, j, 1 if same else -1))
    assert list(zip(lo.tolist(), hi.tolist(), sign.tolist())) == want


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
def test_backends_agree_on_larger_layout():
    g = generate_layout(SchlafliSpec(4, 4), 3).graph
    indptr, indices = g.csr()
    a = _pykernels.simple_cycles(indptr, indices, 4, 12, True)
    b = _ckernels.simple_cycles(indptr, indices, 4, 12, True)
    assert sorted(a) == sorted(b)


def test_pure_python_switch():
    code = "from hyperlat import _kernels; print(_kernels.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env={"HYPERLAT_PURE_PYTHON": "1", "PATH": ""},
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    assert _kernels.BACKEND in ("python", "cython")
