"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path

import numpy as np

from hyperlat import flatband, growth, io, spectra
from hyperlat.errors import DomainError, ResourceError
from hyperlat.graph import SchlafliSpec
from hyperlat.linegraph import random_orientation, signed_line_graph
from hyperlat.tiling import CATALOG_NAMES, catalog_instance, generate_layout
from hyperlat.verify import matrix_cases, run_all, verify_case

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        raise DomainError(f"{name}={raw!r} is not a number") from None


def _positive(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _bins(text: str) -> int:
    value = int(text)
    if value < 10:
        raise argparse.ArgumentTypeError("need at least 10 bins")
    return value


def _add_tolerances(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--cluster-tol", type=_positive, default=None,
                    help="eigenvalue clustering tolerance (env HYPERLAT_CLUSTER_TOL, default 1e-8)")
    sp.add_argument("--flat-tol", type=_positive, default=None,
                    help="flat-band tolerance around -2 (env HYPERLAT_FLAT_TOL, default 1e-6)")
    sp.add_argument("--max-dim", type=int, default=spectra.MAX_DIM, help="largest matrix to diagonalise")


def _tolerances(args) -> tuple[float, float]:
    cluster = args.cluster_tol or _env_float("HYPERLAT_CLUSTER_TOL", spectra.CLUSTER_TOL)
    flat = args.flat_tol or _env_float("HYPERLAT_FLAT_TOL", spectra.FLAT_TOL)
    if cluster <= 0 or flat <= 0:
        raise DomainError("tolerances must be positive")
    return cluster, flat


def _add_source(sp: argparse.ArgumentParser, graph_file: bool = True) -> None:
    if graph_file:
        sp.add_argument("--graph", type=Path, help="layout graph JSON")
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--rings", type=int)
    sp.add_argument("--catalog", choices=CATALOG_NAMES)


def _load_layout(args):
    if getattr(args, "graph", None) is not None:
        if not args.graph.exists():
            raise DomainError(f"{args.graph}: no such file")
        return io.read_layout(args.graph)
    if args.catalog:
        return catalog_instance(args.catalog)
    if args.p is None or args.q is None or args.rings is None:
        raise DomainError("give --graph, --catalog, or all of --p --q --rings")
    return generate_layout(SchlafliSpec(args.p, args.q), args.rings)


def cmd_generate(args) -> int:
    layout = _load_layout(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    orientation = None
    if args.random_orientation:
        orientation = random_orientation(layout.graph, np.random.default_rng(args.seed))
    slg = signed_line_graph(layout.graph, orientation)
    io.write_json(out / "layout.json", io.layout_to_dict(layout))
    io.write_json(out / "line_graph.json", io.line_graph_to_dict(layout))
    io.write_json(out / "signed_line_graph.json", io.signed_line_graph_to_dict(layout, slg))
    counts = layout.ring_type_counts() if layout.rings else []
    print(f"layout {layout.name or layout.spec}: n={layout.n} m={layout.m} faces={layout.t}")
    for j, (b, B) in enumerate(counts, start=1):
        print(f"  ring {j}: b={b} B={B}")
    return EXIT_OK


def cmd_spectrum(args) -> int:
    cluster_tol, flat_tol = _tolerances(args)
    layout = _load_layout(args)
    mode = spectra.Mode(args.mode)
    orientation = io.read_orientation(args.orientation, layout) if args.orientation else None
    matrix = spectra.coupling_matrix(layout, mode, orientation)
    spectrum = spectra.eigen_spectrum(matrix, cluster_tol, max_dim=args.max_dim)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    io.write_spectrum_csv(out / f"spectrum_{mode.value}.csv", spectrum)
    counts, edges, flat = spectra.histogram(spectrum, args.bins, flat_tol=flat_tol)
    io.write_histogram_csv(out / f"histogram_{mode.value}.csv", counts, edges, flat)
    if args.omega0 is not None or args.t is not None:
        params = spectra.HamiltonianParams(args.omega0 or 0.0, args.t if args.t is not None else 1.0, mode)
        io.write_spectrum_csv(out / f"hamiltonian_{mode.value}.csv", spectra.hamiltonian_spectrum(spectrum, params))
    gap = spectra.spectral_gap_above_flat(spectrum, flat_tol) if flat else float("nan")
    print(f"{mode.value}-wave: dimension={spectrum.dimension} flat_band_count={flat} "
          f"fraction={flat / spectrum.dimension:.6f} gap={gap:.6g} max={spectrum.max:.6f}")
    return EXIT_OK


def cmd_verify(args) -> int:
    _, flat_tol = _tolerances(args)
    if args.matrix:
        cases = matrix_cases(args.max_rings) + ["dodecahedron"]
        work = partial(verify_case, switches=args.switches, seed=args.seed, flat_tol=flat_tol, max_dim=args.max_dim)
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                results = list(pool.map(work, cases))
        else:
            results = [work(c) for c in cases]
    else:
        layout = _load_layout(args)
        checks = run_all(layout, args.switches, args.seed, flat_tol=flat_tol, max_dim=args.max_dim)
        results = [{
            "case": layout.name or f"{layout.spec} rings={layout.rings}",
            "n": layout.n,
            "m": layout.m,
            "passed": all(c.passed for c in checks),
            "checks": [c.__dict__ for c in checks],
        }]
    for res in results:
        print(f"{'PASS' if res['passed'] else 'FAIL'}  {res['case']} (n={res['n']}, m={res['m']})")
        for c in res["checks"]:
            if args.verbose or not c["passed"]:
                print(f"    {'ok  ' if c['passed'] else 'FAIL'} {c['name']}: {c['detail']}")
    if args.report:
        io.write_json(args.report, results)
    return EXIT_OK if all(r["passed"] for r in results) else EXIT_FAIL


def cmd_growth(args) -> int:
    spec = SchlafliSpec(args.p, args.q)
    rows = []
    for ell in range(1, args.lmax + 1):
        rep = growth.growth_report(spec, ell)
        rows.append({
            "ring": ell,
            "b": rep.b_series[ell - 1],
            "B": rep.B_series[ell - 1],
            "B_closed_form": growth.closed_form_B(spec, ell),
            "t": rep.t_ell,
            "n": rep.n_ell,
            "m": rep.m_ell,
            "C_ell": None if rep.C_ell == float("inf") else rep.C_ell,
            "f_ell": rep.f_ell,
            "f_half_ell": rep.f_half_ell,
            "avg_degree": rep.avg_degree,
        })
    table = growth.convergence_table(spec, max(args.lmax, 3))[: args.lmax]
    report = growth.growth_report(spec, args.lmax).to_dict()
    report["rows"] = rows
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    io.write_json(out / "growth.json", report)
    io.write_convergence_csv(out / "convergence.csv", table)
    print(f"{spec}: tau={spec.tau} sigma={report['sigma']:.7f} f_inf={report['f_inf']:.4f} "
          f"<k>_inf={report['avg_degree_inf']:.4f}")
    for r in rows:
        c = "-" if r["C_ell"] is None else f"{r['C_ell']:.6f}"
        print(f"  ring {r['ring']:>3}: t={r['t']} n={r['n']} m={r['m']} C={c} f={r['f_ell']:.6f}")
    return EXIT_OK


def cmd_flatstates(args) -> int:
    _, flat_tol = _tolerances(args)
    layout = _load_layout(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    if args.method == "cycles":
        res = flatband.independent_even_cycle_states(layout, args.search_limit)
        states = res.states
        status = "complete" if res.complete else "PARTIAL (search budget exhausted)"
        print(f"even-cycle states: rank {res.rank} / target {res.target}, "
              f"{res.cycles_examined} cycles examined up to length {res.max_len}: {status}")
    else:
        matrix = spectra.coupling_matrix(layout, args.mode)
        states = flatband.flat_band_basis(matrix, flat_tol)
        print(f"null-space basis ({args.mode}-wave): {len(states)} states")
    io.write_flat_states(out / "flat_states.csv", out / "flat_states.json", states)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperlat", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("generate", parents=[common], help="write layout, line graph and signed line graph JSON")
    _add_source(sp, graph_file=False)
    sp.add_argument("--out", default=".")
    sp.add_argument("--random-orientation", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("spectrum", parents=[common], help="spectrum and histogram CSVs of a layout's line graph")
    _add_source(sp)
    sp.add_argument("--mode", choices=["full", "half"], default="full")
    sp.add_argument("--orientation", type=Path, help="signed line graph JSON supplying the orientation")
    sp.add_argument("--omega0", type=float)
    sp.add_argument("--t", type=_positive)
    sp.add_argument("--bins", type=_bins, default=60)
    sp.add_argument("--out", default=".")
    _add_tolerances(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("verify", parents=[common], help="run identity, bound, flat-band and switching checks")
    _add_source(sp)
    sp.add_argument("--matrix", action="store_true", help="run the full {p,q} test matrix plus the dodecahedron")
    sp.add_argument("--max-rings", type=int, default=3)
    sp.add_argument("--switches", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--report", type=Path)
    _add_tolerances(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("growth", parents=[common], help="ring-growth analytics and convergence table")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--lmax", type=int, required=True)
    sp.add_argument("--out", default=".")
    sp.set_defaults(func=cmd_growth)

    sp = sub.add_parser("flatstates", parents=[common], help="flat-band eigenstates as CSV plus provenance JSON")
    _add_source(sp)
    sp.add_argument("--method", choices=["cycles", "nullspace"], default="cycles")
    sp.add_argument("--mode", choices=["full", "half"], default="full")
    sp.add_argument("--search-limit", type=int)
    sp.add_argument("--out", default=".")
    _add_tolerances(sp)
    sp.set_defaults(func=cmd_flatstates)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (DomainError, LookupError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
