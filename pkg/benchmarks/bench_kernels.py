"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from hyperlat._kernels import _pykernels
from hyperlat.graph import SchlafliSpec
from hyperlat.linegraph import default_orientation
from hyperlat.tiling import catalog_instance, generate_layout

try:
    from hyperlat._kernels import _ckernels
except ImportError:
    _ckernels = None


def cases():
    d = catalog_instance("dodecahedron").graph
    g44 = generate_layout(SchlafliSpec(4, 4), 3).graph
    g54 = generate_layout(SchlafliSpec(5, 4), 3).graph
    big = generate_layout(SchlafliSpec(8, 6), 3).graph
    yield "cycles dodecahedron <= 10", "simple_cycles", (*d.csr(), 4, 10, True)
    yield "cycles {4,4} rings=3 <= 12", "simple_cycles", (*g44.csr(), 4, 12, True)
    yield "cycles {5,4} rings=3 <= 10", "simple_cycles", (*g54.csr(), 4, 10, False)
    o = default_orientation(big)
    yield f"line graph {{8,6}} rings=3 (m={big.edge_count})", "line_graph_pairs", (big.vertex_count, o.heads, o.feet)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the fallback is timed")
    print(f"{'case':42s} {'python [ms]':>12s} {'cython [ms]':>12s} {'speedup':>8s}")
    for name, fn, argv in cases():
        py = min(timeit.repeat(lambda: getattr(_pykernels, fn)(*argv), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:42s} {py * 1e3:12.2f}")
            continue
        cy = min(timeit.repeat(lambda: getattr(_ckernels, fn)(*argv), number=1, repeat=args.repeat))
        a, b = getattr(_pykernels, fn)(*argv), getattr(_ckernels, fn)(*argv)
        same = sorted(a) == sorted(b) if isinstance(a, list) else all(np.array_equal(x, y) for x, y in zip(a, b))
        print(f"{name:42s} {py * 1e3:12.2f} {cy * 1e3:12.2f} {py / cy:7.1f}x{'' if same else '  MISMATCH'}")


if __name__ == "__main__":
    main()
