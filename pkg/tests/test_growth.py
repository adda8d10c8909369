import math
from fractions import Fraction

import mpmath
import pytest

from hyperlat.errors import DomainError
from hyperlat.graph import SchlafliSpec
from hyperlat.growth import (
    C_and_f,
    avg_degree,
    below_flat_limit,
    closed_form_B,
    closed_form_C,
    convergence_table,
    counts,
    f_infinity,
    flat_fraction,
    growth_report,
    sigma,
)
from oracle import recurrence, tnm

HYPERBOLIC = [(5, 4), (6, 4), (7, 3), (8, 3), (4, 5), (8, 6), (5, 5)]


def test_sigma_values():
    assert sigma(SchlafliSpec(5, 4)) == pytest.approx(2 + math.sqrt(3))
    assert sigma(SchlafliSpec(6, 4)) == pytest.approx(3 + 2 * math.sqrt(2))
    assert sigma(SchlafliSpec(4, 4)) == 1.0


@pytest.mark.parametrize("p, q", HYPERBOLIC + [(4, 4), (6, 3), (3, 6)])
def test_closed_form_B(p, q):
    spec = SchlafliSpec(p, q)
    _, B = recurrence(p, q, 8)
    for ell in range(1, 9):
        assert closed_form_B(spec, ell) == pytest.approx(B[ell - 1], rel=1e-10, abs=1e-9)


@pytest.mark.parametrize("p, q", HYPERBOLIC)
def test_closed_form_C(p, q):
    spec = SchlafliSpec(p, q)
    for ell in range(2, 10):
        b, B = recurrence(p, q, ell)
        exact = Fraction(B[ell], sum(B[:ell]))
        assert closed_form_C(spec, ell) == pytest.approx(float(exact), rel=1e-10)
        assert C_and_f(spec, ell)[0] == float(exact)


@pytest.mark.parametrize("p, q", HYPERBOLIC + [(4, 4), (6, 3)])
def test_counts_and_identities(p, q):
    spec = SchlafliSpec(p, q)
    for ell in range(1, 7):
        c = counts(spec, ell)
        assert (c.t, c.n, c.m) == tnm(p, q, ell)
        f = flat_fraction(spec, ell)
        assert f == Fraction(c.m - c.n, c.m)
        # f = 1 - 2/<k>
        assert f == 1 - Fraction(2 * c.n, 2 * c.m)
        assert flat_fraction(spec, ell, half_wave=True) == f + Fraction(1, c.m)


@pytest.mark.parametrize("p, q", HYPERBOLIC)
def test_approach_from_below(p, q):
    spec = SchlafliSpec(p, q)
    mpmath.mp.dps = 50
    tau = (p - 2) * (q - 2)
    s = (tau - 2 + mpmath.sqrt(tau * tau - 4 * tau)) / 2
    f = (q - 2) / (s - 1 + q)
    for ell in range(1, 15):
        c = counts(spec, ell)
        assert below_flat_limit(spec, ell) == (mpmath.mpf(c.m - c.n) / c.m < f)
        assert below_flat_limit(spec, ell)


def test_single_ring():
    assert C_and_f(SchlafliSpec(5, 4), 1) == (math.inf, 0.0)
    with pytest.raises(DomainError):
        C_and_f(SchlafliSpec(4, 4), 1)
    with pytest.raises(DomainError):
        closed_form_C(SchlafliSpec(5, 4), 1)


def test_spherical_rejected():
    for fn in (sigma, f_infinity):
        with pytest.raises(DomainError):
            fn(SchlafliSpec(5, 3))


@pytest.mark.parametrize("p, q", [(5, 4), (6, 4), (7, 3)])
def test_average_degree(p, q):
    spec = SchlafliSpec(p, q)
    assert avg_degree(spec, 30) == pytest.approx(avg_degree(spec), rel=1e-9)
    assert f_infinity(spec) == pytest.approx(1 - 2 / avg_degree(spec), rel=1e-12)


def test_convergence_table():
    rows = convergence_table(SchlafliSpec(5, 4), 12)
    assert [r.ring for r in rows] == list(range(1, 13))
    assert rows[0].f_ell == 0.0 and rows[0].deficit == 1.0
    assert all(0 < r.deficit for r in rows)
    assert rows[-1].deficit < 1e-6
    with pytest.raises(DomainError):
        convergence_table(SchlafliSpec(5, 4), 2)


def test_report_dict():
    d = growth_report(SchlafliSpec(5, 4), 1).to_dict()
    assert d["C_ell"] is None and d["geometry"] == "hyperbolic"
    d = growth_report(SchlafliSpec(6, 4), 4).to_dict()
    assert (d["t_ell"], d["n_ell"], d["m_ell"]) == (505, 1728, 2232)
    assert d["spec"] == {"p": 6, "q": 4, "tau": 8}
