"""Consistency checks run by ``hyperlat verify``."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from hyperlat.errors import VerificationError
from hyperlat.graph import GeometryClass, SchlafliSpec, is_bipartite
from hyperlat.growth import counts
from hyperlat.linegraph import signed_line_graph, switch_edge
from hyperlat.spectra import (
    FLAT_TOL,
    IDENTITY_TOL,
    MAX_DIM,
    check_bounds,
    coupling_matrix,
    eigen_spectrum,
    expected_flat_multiplicity,
    flat_band_multiplicity,
    max_pairwise_deviation,
    verify_identity_full,
    verify_identity_half,
)
from hyperlat.tiling import LayoutGraph, catalog_instance, generate_layout, ring_counts

SWITCH_TOL = 1e-9


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


def label(layout: LayoutGraph) -> str:
    return layout.name or f"{layout.spec} rings={layout.rings}"


def structure_checks(layout: LayoutGraph) -> list[CheckResult]:
    g = layout.graph
    deg = g.degrees()
    out = [CheckResult("handshake", int(deg.sum()) == 2 * layout.m, f"sum deg = {int(deg.sum())}, 2m = {2 * layout.m}")]
    out.append(CheckResult("connected", g.is_connected(), "layout is connected"))
    if layout.rings == 0:
        chi = layout.n - layout.m + layout.t
        out.append(CheckResult("euler", chi == 2, f"n - m + faces = {chi} (sphere)"))
        return out
    spec = layout.spec
    rc = ring_counts(spec, layout.rings)
    expected = list(zip(rc.b, rc.B))[: layout.rings]
    observed = layout.ring_type_counts()
    out.append(CheckResult("ring_counts", observed == expected, f"observed {observed}, recurrence {expected}"))
    c = counts(spec, layout.rings)
    got = (layout.t, layout.n, layout.m)
    out.append(CheckResult("counts", got == (c.t, c.n, c.m), f"(t, n, m) = {got}, formulas {(c.t, c.n, c.m)}"))
    chi = layout.n - layout.m + layout.t
    out.append(CheckResult("euler", chi == 1, f"n - m + t = {chi}"))
    interior = [v for v in range(layout.n) if layout.ring_of[v] < layout.rings]
    bad = [v for v in interior if deg[v] != spec.q]
    out.append(CheckResult("interior_degree", not bad, f"{len(bad)} interior vertices with degree != {spec.q}"))
    adj = g.neighbors()
    bad_types = [
        v for v in range(layout.n)
        if layout.ring_of[v] > 1
        and (layout.type_of[v] == "B") != any(layout.ring_of[w] == layout.ring_of[v] - 1 for w in adj[v])
    ]
    out.append(CheckResult("vertex_types", not bad_types, f"{len(bad_types)} mislabelled b/B vertices"))
    return out


def spectral_checks(layout: LayoutGraph, switches: int = 20, seed: int = 0,
                    flat_tol: float = FLAT_TOL, identity_tol: float = IDENTITY_TOL,
                    max_dim: int = MAX_DIM) -> list[CheckResult]:
    out = []
    full = eigen_spectrum(coupling_matrix(layout, "full"), max_dim=max_dim)
    slg = signed_line_graph(layout.graph)
    half = eigen_spectrum(slg.matrix(), max_dim=max_dim)

    for mode, spec_line, verify in (("full", full, verify_identity_full), ("half", half, verify_identity_half)):
        rep = verify(layout, line_spectrum=spec_line, tol=identity_tol, raise_on_failure=False, max_dim=max_dim)
        out.append(CheckResult(f"identity_{mode}", rep.passed, f"max deviation {rep.max_deviation:.2e} (tol {identity_tol:.0e})"))

    for mode, spectrum in (("full", full), ("half", half)):
        got = flat_band_multiplicity(spectrum, flat_tol)
        want = expected_flat_multiplicity(layout, mode)
        out.append(CheckResult(f"flat_{mode}", got == want, f"multiplicity {got}, expected {want}"))

    try:
        b = check_bounds(layout, full, half, raise_on_failure=False)
        out.append(CheckResult(
            "bounds", b.passed,
            f"max full {b.full_max:.6f} in {b.full_range}, max half {b.half_max:.6f} in {b.half_range}",
        ))
    except Exception as exc:  # k_min < 2 etc.
        out.append(CheckResult("bounds", False, str(exc)))

    bipartite = is_bipartite(layout.graph)[0]
    if bipartite:
        dev = max_pairwise_deviation(full.values, half.values)
        out.append(CheckResult("gauge", dev <= identity_tol, f"bipartite: full vs half deviation {dev:.2e}"))
    else:
        diff = flat_band_multiplicity(half, flat_tol) - flat_band_multiplicity(full, flat_tol)
        out.append(CheckResult("gauge", diff == 1, f"non-bipartite: half - full flat multiplicity = {diff}"))

    if switches:
        out.append(switching_check(layout, switches, seed, half, max_dim=max_dim))
    return out


def switching_check(layout: LayoutGraph, switches: int, seed: int, reference=None,
                    per_step: bool | None = None, max_dim: int = MAX_DIM) -> CheckResult:
    """Random single-edge switches; each must be a diagonal +-1 conjugation and keep the spectrum."""
    rng = np.random.default_rng(seed)
    slg = signed_line_graph(layout.graph)
    if reference is None:
        reference = eigen_spectrum(slg.matrix(), max_dim=max_dim)
    if per_step is None:
        per_step = layout.m <= 500
    worst = 0.0
    conj_ok = True
    mat = slg.matrix()
    for _ in range(switches):
        k = int(rng.integers(layout.m))
        slg = switch_edge(slg, k)
        d = np.ones(layout.m, dtype=np.int64)
        d[k] = -1
        expected = mat * d[:, None] * d[None, :]
        mat = slg.matrix()
        conj_ok &= bool(np.array_equal(mat, expected))
        if per_step:
            worst = max(worst, max_pairwise_deviation(reference.values, eigen_spectrum(mat, max_dim=max_dim).values))
    if not per_step:
        worst = max_pairwise_deviation(reference.values, eigen_spectrum(mat, max_dim=max_dim).values)
    passed = conj_ok and worst <= SWITCH_TOL
    return CheckResult("switching", passed, f"{switches} switches (seed {seed}), max deviation {worst:.2e}, conjugation {'ok' if conj_ok else 'broken'}")


def run_all(layout: LayoutGraph, switches: int = 20, seed: int = 0, **tols) -> list[CheckResult]:
    return structure_checks(layout) + spectral_checks(layout, switches, seed, **tols)


def matrix_cases(max_rings: int = 3) -> list[tuple[int, int, int]]:
    """``(p, q, rings)`` for p in 4..8, q in 3..6, tau >= 4."""
    out = []
    for p in range(4, 9):
        for q in range(3, 7):
            if SchlafliSpec(p, q).geometry is GeometryClass.SPHERICAL:
                continue
            out.extend((p, q, r) for r in range(1, max_rings + 1))
    return out


def verify_case(case, switches: int = 20, seed: int = 0, **tols) -> dict:
    """Worker entry point: ``case`` is ``(p, q, rings)`` or a catalog name."""
    if isinstance(case, str):
        layout = catalog_instance(case)
    else:
        p, q, r = case
        layout = generate_layout(SchlafliSpec(p, q), r)
    checks = run_all(layout, switches, seed, **tols)
    return {
        "case": label(layout),
        "n": layout.n,
        "m": layout.m,
        "passed": all(c.passed for c in checks),
        "checks": [asdict(c) for c in checks],
    }


def raise_if_failed(checks: list[CheckResult]) -> None:
    failed = [c for c in checks if not c.passed]
    if failed:
        raise VerificationError("; ".join(c.line() for c in failed), failed)

