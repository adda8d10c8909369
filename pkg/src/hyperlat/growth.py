"""Closed-form growth analytics of polygon-centred {p,q} layouts.

Integer counts come from the ring recurrence and are the source of truth;
floating-point closed forms are only used to cross-check them.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from hyperlat.errors import DomainError
from hyperlat.graph import GeometryClass, SchlafliSpec, classify_geometry
from hyperlat.tiling import ring_counts

_PREC = 80


def _require_flat_or_hyperbolic(spec: SchlafliSpec) -> None:
    if spec.tau < 4:
        raise DomainError(f"{spec} is spherical (tau={spec.tau}); growth formulas need tau >= 4")


def sigma(spec: SchlafliSpec) -> float:
    """Growth rate (tau - 2 + sqrt(tau^2 - 4 tau)) / 2; 1 for Euclidean tilings."""
    _require_flat_or_hyperbolic(spec)
    tau = spec.tau
    return (tau - 2 + math.sqrt(tau * tau - 4 * tau)) / 2


def _sigma_decimal(spec: SchlafliSpec) -> Decimal:
    tau = Decimal(spec.tau)
    return (tau - 2 + (tau * tau - 4 * tau).sqrt()) / 2


def f_infinity(spec: SchlafliSpec) -> float:
    """Asymptotic flat-band fraction (q - 2) / (sigma - 1 + q)."""
    return (spec.q - 2) / (sigma(spec) - 1 + spec.q)


def _f_infinity_decimal(spec: SchlafliSpec) -> Decimal:
    return Decimal(spec.q - 2) / (_sigma_decimal(spec) - 1 + spec.q)


def closed_form_B(spec: SchlafliSpec, rings: int) -> float:
    """B-vertex count of ring ``rings`` from the closed-form solution."""
    _require_flat_or_hyperbolic(spec)
    if rings < 1:
        raise DomainError("rings must be >= 1")
    p, q = spec.p, spec.q
    if spec.tau == 4:
        return float(p * (q - 2) * (rings - 1))
    s = sigma(spec)
    return p * (q - 2) / (s * s - 1) * (s ** rings - s ** (2 - rings))


def closed_form_C(spec: SchlafliSpec, rings: int) -> float:
    if rings < 2:
        raise DomainError("C_ell needs at least 2 rings")
    if classify_geometry(spec) is GeometryClass.EUCLIDEAN:
        return 2.0 / (rings - 1)
    s = sigma(spec)
    return (s - 1) * (1 - s ** (-2 * rings)) / (1 + s ** (1 - 2 * rings) - (s + 1) * s ** (-rings))


@dataclass(frozen=True)
class Counts:
    t: int
    n: int
    m: int


def counts(spec: SchlafliSpec, rings: int) -> Counts:
    """Exact polygon, vertex and edge counts of the ``rings``-ring layout."""
    _require_flat_or_hyperbolic(spec)
    rc = ring_counts(spec, rings)
    t = 1 + sum(rc.B[:rings])
    numerator = rc.B[rings] + 2 * (t - 1)
    n, rem = divmod(numerator, spec.q - 2)
    if rem:
        raise ArithmeticError(f"vertex count {numerator}/{spec.q - 2} is not integral for {spec}")
    direct = sum(rc.b[:rings]) + sum(rc.B[:rings])
    if direct != n:
        raise ArithmeticError(f"vertex count mismatch for {spec}: {n} != {direct}")
    m = n + t - 1
    return Counts(t, n, m)


def C_and_f(spec: SchlafliSpec, rings: int) -> tuple[float, float]:
    """``(C_ell, f_ell)`` with ``C = B_{l+1} / (t_l - 1)`` and ``f = (q-2)/(C+q)``.

    A single ring is the bare seed polygon: ``t - 1 = 0`` so C is infinite
    and the flat fraction is 0. Euclidean specs reject it outright.
    """
    _require_flat_or_hyperbolic(spec)
    euclidean = spec.tau == 4
    if rings < 1 or (euclidean and rings < 2):
        raise DomainError(f"C_ell undefined for {spec} with {rings} ring(s)")
    rc = ring_counts(spec, rings)
    c = counts(spec, rings)
    if c.t == 1:
        return math.inf, 0.0
    C = Fraction(rc.B[rings], c.t - 1)
    f = Fraction(spec.q - 2) / (C + spec.q)
    if f != Fraction(c.m - c.n, c.m):
        raise ArithmeticError(f"flat fraction identity failed for {spec}, {rings} rings")
    return float(C), float(f)


def flat_fraction(spec: SchlafliSpec, rings: int, half_wave: bool = False) -> Fraction:
    """Exact finite-layout flat fraction ``(m - n)/m``, or ``(m - n + 1)/m`` for half-wave."""
    c = counts(spec, rings)
    return Fraction(c.m - c.n + (1 if half_wave else 0), c.m)


def avg_degree(spec: SchlafliSpec, rings: int | None = None) -> float:
    """Average layout degree: ``2m/n`` at finite size, ``2(sigma-1+q)/(sigma+1)`` if ``rings`` is None."""
    if rings is None:
        s = sigma(spec)
        return 2 * (s - 1 + spec.q) / (s + 1)
    c = counts(spec, rings)
    return 2 * c.m / c.n


@dataclass(frozen=True)
class ConvergenceRow:
    ring: int
    f_ell: float
    f_inf: float
    ratio: float
    deficit: float


def convergence_table(spec: SchlafliSpec, max_rings: int) -> list[ConvergenceRow]:
    """``f_l / f`` for ``l = 1..max_rings``.

    ``deficit = 1 - f_l / f`` is evaluated in 80-digit decimal arithmetic, so
    it stays meaningful after it drops below double precision.
    """
    if max_rings < 3:
        raise DomainError("convergence table needs at least 3 rings")
    rows = []
    with localcontext() as ctx:
        ctx.prec = _PREC
        f_inf = _f_infinity_decimal(spec)
        for ell in range(1, max_rings + 1):
            fl = flat_fraction(spec, ell)
            f_dec = Decimal(fl.numerator) / Decimal(fl.denominator)
            ratio = f_dec / f_inf
            rows.append(ConvergenceRow(ell, float(f_dec), float(f_inf), float(ratio), float(1 - ratio)))
    return rows


def below_flat_limit(spec: SchlafliSpec, rings: int) -> bool:
    """Exact test of ``f_l < f``.

    ``f_l < f`` iff ``C_l + 1 > sigma``; sigma is the larger root of
    ``x^2 - (tau-2) x + 1``, so the comparison reduces to rational arithmetic.
    """
    _require_flat_or_hyperbolic(spec)
    rc = ring_counts(spec, rings)
    c = counts(spec, rings)
    if c.t == 1:
        return True
    x = Fraction(rc.B[rings], c.t - 1) + 1
    tau = spec.tau
    return 2 * x > tau - 2 and x * x - (tau - 2) * x + 1 > 0


@dataclass(frozen=True)
class GrowthReport:
    spec: SchlafliSpec
    rings: int
    sigma: float
    b_series: tuple[int, ...]
    B_series: tuple[int, ...]
    t_ell: int
    n_ell: int
    m_ell: int
    C_ell: float
    f_ell: float
    f_half_ell: float
    f_inf: float
    avg_degree: float
    avg_degree_inf: float

    def to_dict(self) -> dict:
        d = asdict(self)
        d["spec"] = {"p": self.spec.p, "q": self.spec.q, "tau": self.spec.tau}
        d["geometry"] = self.spec.geometry.value
        d["b_series"] = list(self.b_series)
        d["B_series"] = list(self.B_series)
        if math.isinf(self.C_ell):
            d["C_ell"] = None
        return d


def growth_report(spec: SchlafliSpec, rings: int) -> GrowthReport:
    rc = ring_counts(spec, rings)
    c = counts(spec, rings)
    if spec.tau == 4 and rings < 2:
        C = math.inf
    else:
        C, _ = C_and_f(spec, rings)
    return GrowthReport(
        spec=spec,
        rings=rings,
        sigma=sigma(spec),
        b_series=rc.b,
        B_series=rc.B,
        t_ell=c.t,
        n_ell=c.n,
        m_ell=c.m,
        C_ell=C,
        f_ell=float(flat_fraction(spec, rings)),
        f_half_ell=float(flat_fraction(spec, rings, half_wave=True)),
        f_inf=f_infinity(spec),
        avg_degree=avg_degree(spec, rings),
        avg_degree_inf=avg_degree(spec),
    )
