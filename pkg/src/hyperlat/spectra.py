"""Dense spectra of layout and line-graph matrices and the checks built on them.

The two line-graph identities used throughout:

    spec(A_LG)  = (spec(Q) - 2) + {-2 repeated m - n times}
    spec(A*_LG) = (spec(L) - 2) + {-2 repeated m - n times}

with ``Q = D + A`` and ``L = D - A`` of the layout. They follow from
``A_LG = R^T R - 2I`` and ``A*_LG = N^T N - 2I`` where ``R`` and ``N`` are the
unsigned and oriented vertex-edge incidence matrices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from hyperlat.errors import DomainError, ResourceError, VerificationError
from hyperlat.graph import Graph, is_bipartite, laplacian, signless_laplacian
from hyperlat.linegraph import Orientation, line_graph_adjacency, signed_line_graph
from hyperlat.tiling import LayoutGraph

CLUSTER_TOL = 1e-8
FLAT_TOL = 1e-6
IDENTITY_TOL = 1e-8
MAX_DIM = 6000
FLAT_VALUE = -2.0


class Mode(enum.Enum):
    FULL = "full"
    HALF = "half"


@dataclass(frozen=True)
class SpectrumMultiset:
    """Eigenvalues clustered into ``(value, multiplicity)`` pairs.

    ``values`` keeps the raw sorted eigenvalues for pairwise comparisons.
    """

    entries: tuple[tuple[float, int], ...]
    cluster_tol: float
    values: np.ndarray = field(repr=False, compare=False)

    @property
    def dimension(self) -> int:
        return sum(k for _, k in self.entries)

    @property
    def max(self) -> float:
        return float(self.values[-1])

    @property
    def min(self) -> float:
        return float(self.values[0])

    def multiplicities(self) -> list[int]:
        return [k for _, k in self.entries]

    @classmethod
    def from_values(cls, values, cluster_tol: float = CLUSTER_TOL) -> SpectrumMultiset:
        vals = np.sort(np.asarray(values, dtype=float))
        return cls(cluster(vals, cluster_tol), cluster_tol, vals)


def cluster(sorted_values: np.ndarray, tol: float) -> tuple[tuple[float, int], ...]:
    """Chain clustering: a gap larger than ``tol`` starts a new cluster."""
    if len(sorted_values) == 0:
        return ()
    breaks = np.flatnonzero(np.diff(sorted_values) > tol) + 1
    groups = np.split(sorted_values, breaks)
    return tuple((float(g.mean()), len(g)) for g in groups)


def check_symmetric(m: np.ndarray, max_dim: int = MAX_DIM) -> np.ndarray:
    """Validate a square symmetric matrix within the size cap; return it as float."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > max_dim:
        raise ResourceError(f"matrix dimension {m.shape[0]} exceeds cap {max_dim}")
    if np.issubdtype(m.dtype, np.integer):
        symmetric = np.array_equal(m, m.T)
    else:
        scale = float(np.abs(m).max()) if m.size else 0.0
        symmetric = np.allclose(m, m.T, rtol=0.0, atol=1e-12 * max(scale, 1.0))
    if not symmetric:
        raise DomainError("matrix is not symmetric")
    return m.astype(float)


def eigen_spectrum(m, cluster_tol: float = CLUSTER_TOL, max_dim: int = MAX_DIM) -> SpectrumMultiset:
    a = check_symmetric(m, max_dim)
    return SpectrumMultiset.from_values(np.linalg.eigvalsh(a), cluster_tol)


def eigen_decomposition(m, max_dim: int = MAX_DIM) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and orthonormal eigenvectors, residual-checked.

    Raises VerificationError if some ``||Mv - lv||`` exceeds ``1e-8 ||M||``.
    """
    a = check_symmetric(m, max_dim)
    w, v = np.linalg.eigh(a)
    norm = np.linalg.norm(a, 2) if a.size else 0.0
    residual = np.linalg.norm(a @ v - v * w, axis=0)
    if residual.size and residual.max() > 1e-8 * max(norm, 1.0):
        raise VerificationError(f"eigenpair residual {residual.max():.3e} too large")
    return w, v


def max_pairwise_deviation(a, b) -> float:
    a = np.sort(np.asarray(a, dtype=float))
    b = np.sort(np.asarray(b, dtype=float))
    if a.shape != b.shape:
        return float("inf")
    return float(np.abs(a - b).max()) if a.size else 0.0


def coupling_matrix(layout, mode: Mode | str, orientation: Orientation | None = None) -> np.ndarray:
    """A_LG for full-wave modes, A*_LG for half-wave modes."""
    if Mode(mode) is Mode.FULL:
        return line_graph_adjacency(layout)
    return signed_line_graph(_graph(layout), orientation).matrix()


def _graph(layout) -> Graph:
    return layout.graph if isinstance(layout, LayoutGraph) else layout


@dataclass
class IdentityReport:
    mode: Mode
    n: int
    m: int
    max_deviation: float
    tol: float
    line_spectrum: SpectrumMultiset = field(repr=False)
    layout_spectrum: SpectrumMultiset = field(repr=False)

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tol


def _verify_identity(layout, mode: Mode, orientation, tol, line_spectrum, raise_on_failure, max_dim):
    g = _graph(layout)
    n, m = g.vertex_count, g.edge_count
    if not g.is_connected():
        raise DomainError("identity check needs a connected layout")
    if m < n:
        raise DomainError(f"identity check needs m >= n (got m={m}, n={n})")
    if line_spectrum is None:
        line_spectrum = eigen_spectrum(coupling_matrix(g, mode, orientation), max_dim=max_dim)
    layout_matrix = signless_laplacian(g) if mode is Mode.FULL else laplacian(g)
    layout_spectrum = eigen_spectrum(layout_matrix, max_dim=max_dim)
    predicted = np.concatenate([layout_spectrum.values - 2.0, np.full(m - n, FLAT_VALUE)])
    report = IdentityReport(
        mode=mode,
        n=n,
        m=m,
        max_deviation=max_pairwise_deviation(line_spectrum.values, predicted),
        tol=tol,
        line_spectrum=line_spectrum,
        layout_spectrum=layout_spectrum,
    )
    if raise_on_failure and not report.passed:
        raise VerificationError(
            f"{mode.value}-wave identity violated: max deviation {report.max_deviation:.3e} > {tol:.1e}",
            report,
        )
    return report


def verify_identity_full(layout, tol: float = IDENTITY_TOL, line_spectrum=None,
                         raise_on_failure: bool = True, max_dim: int = MAX_DIM) -> IdentityReport:
    """Check spec(A_LG) against spec(Q) - 2 plus the m - n forced flat states."""
    return _verify_identity(layout, Mode.FULL, None, tol, line_spectrum, raise_on_failure, max_dim)


def verify_identity_half(layout, orientation: Orientation | None = None, tol: float = IDENTITY_TOL,
                         line_spectrum=None, raise_on_failure: bool = True,
                         max_dim: int = MAX_DIM) -> IdentityReport:
    """Check spec(A*_LG) against spec(L) - 2 plus the m - n forced flat states."""
    return _verify_identity(layout, Mode.HALF, orientation, tol, line_spectrum, raise_on_failure, max_dim)


def flat_band_multiplicity(spectrum: SpectrumMultiset, flat_tol: float = FLAT_TOL) -> int:
    return int(np.count_nonzero(np.abs(spectrum.values - FLAT_VALUE) <= flat_tol))


def expected_flat_multiplicity(layout, mode: Mode | str) -> int:
    """m - n + 1 for half-wave or bipartite layouts, m - n otherwise (connected layout)."""
    g = _graph(layout)
    excess = g.edge_count - g.vertex_count
    if Mode(mode) is Mode.HALF or is_bipartite(g)[0]:
        return excess + 1
    return excess


@dataclass
class BoundsReport:
    k_min: int
    k_max: int
    q: int | None
    full_max: float
    half_max: float
    full_range: tuple[float, float]
    half_range: tuple[float, float]
    regular: bool
    tol: float = 1e-9

    @property
    def full_ok(self) -> bool:
        lo, hi = self.full_range
        ok = lo - self.tol <= self.full_max <= hi + self.tol
        if self.regular:
            ok = ok and abs(self.full_max - hi) <= self.tol
        return ok

    @property
    def half_ok(self) -> bool:
        lo, hi = self.half_range
        return lo - self.tol <= self.half_max <= hi + self.tol

    @property
    def passed(self) -> bool:
        return self.full_ok and self.half_ok

    @property
    def slack(self) -> dict[str, float]:
        return {
            "full_lower": self.full_max - self.full_range[0],
            "full_upper": self.full_range[1] - self.full_max,
            "half_lower": self.half_max - self.half_range[0],
            "half_upper": self.half_range[1] - self.half_max,
        }


def check_bounds(layout, full_spectrum: SpectrumMultiset, half_spectrum: SpectrumMultiset,
                 raise_on_failure: bool = True) -> BoundsReport:
    """Bounds on the top eigenvalues from the extreme layout degrees.

    With ``2 k_min <= max spec(Q) <= 2 k_max`` (equality iff regular) and
    ``k_max <= max spec(L) <= 2 k_max``, shifted by -2. For ring layouts
    ``k_min = 2`` and ``k_max = q``, so these are the ``[2, 2(q-1)]`` and
    ``[q-2, 2(q-1)]`` windows.
    """
    g = _graph(layout)
    deg = g.degrees()
    k_min, k_max = int(deg.min()), int(deg.max())
    if k_min < 2:
        raise DomainError(f"bounds assume minimum degree >= 2, got {k_min}")
    report = BoundsReport(
        k_min=k_min,
        k_max=k_max,
        q=layout.spec.q if isinstance(layout, LayoutGraph) else None,
        full_max=full_spectrum.max,
        half_max=half_spectrum.max,
        full_range=(2.0 * k_min - 2.0, 2.0 * k_max - 2.0),
        half_range=(k_max - 2.0, 2.0 * k_max - 2.0),
        regular=k_min == k_max,
    )
    if raise_on_failure and not report.passed:
        raise VerificationError(f"eigenvalue bounds violated: {report}", report)
    return report


@dataclass(frozen=True)
class HamiltonianParams:
    omega0: float
    t: float
    mode: Mode = Mode.FULL

    def __post_init__(self):
        if not self.t > 0:
            raise DomainError(f"hopping amplitude must be positive, got {self.t}")
        object.__setattr__(self, "mode", Mode(self.mode))


def hamiltonian_spectrum(spectrum: SpectrumMultiset, params: HamiltonianParams) -> SpectrumMultiset:
    """Map each coupling eigenvalue to ``omega0 - t * lambda``."""
    if not params.t > 0:
        raise DomainError(f"hopping amplitude must be positive, got {params.t}")
    entries = tuple(sorted((params.omega0 - params.t * v, k) for v, k in spectrum.entries))
    values = np.sort(params.omega0 - params.t * spectrum.values)
    return SpectrumMultiset(entries, spectrum.cluster_tol * params.t, values)


def spectral_gap_above_flat(spectrum: SpectrumMultiset, flat_tol: float = FLAT_TOL) -> float:
    """Distance from -2 to the smallest eigenvalue outside the flat band."""
    above = spectrum.values[spectrum.values > FLAT_VALUE + flat_tol]
    if flat_band_multiplicity(spectrum, flat_tol) == 0:
        raise DomainError("spectrum has no flat band at -2")
    if above.size == 0:
        return float("inf")
    return float(above[0] - FLAT_VALUE)


def histogram(spectrum: SpectrumMultiset, bins: int, eps: float = 0.05,
              flat_tol: float = FLAT_TOL) -> tuple[np.ndarray, np.ndarray, int]:
    """Histogram over ``[-2 - eps, max + eps]``; the flat band count is returned separately."""
    if bins < 10:
        raise DomainError("need at least 10 bins")
    hi = max(spectrum.max, FLAT_VALUE) + eps
    counts, edges = np.histogram(spectrum.values, bins=bins, range=(FLAT_VALUE - eps, hi))
    return counts, edges, flat_band_multiplicity(spectrum, flat_tol)
