import numpy as np
import pytest

from hyperlat.errors import DomainError, ResourceError, VerificationError
from hyperlat.graph import SchlafliSpec
from hyperlat.spectra import (
    HamiltonianParams,
    SpectrumMultiset,
    check_bounds,
    check_symmetric,
    coupling_matrix,
    eigen_decomposition,
    eigen_spectrum,
    expected_flat_multiplicity,
    flat_band_multiplicity,
    hamiltonian_spectrum,
    histogram,
    spectral_gap_above_flat,
    verify_identity_full,
    verify_identity_half,
)
from hyperlat.tiling import catalog_instance, generate_layout


@pytest.fixture(scope="module")
def dodeca():
    return catalog_instance("dodecahedron")


def test_clustering():
    s = SpectrumMultiset.from_values([1.0, 1.0 + 1e-12, 2.0, -2.0, -2.0 + 5e-9], cluster_tol=1e-8)
    assert s.multiplicities() == [2, 2, 1]
    assert s.dimension == 5
    assert (s.min, s.max) == (-2.0, 2.0)


def test_eigen_spectrum_cycle():
    # C_6 adjacency: 2 cos(2 pi k / 6)
    a = np.zeros((6, 6))
    for i in range(6):
        a[i, (i + 1) % 6] = a[(i + 1) % 6, i] = 1
    s = eigen_spectrum(a)
    assert [k for _, k in s.entries] == [1, 2, 2, 1]
    assert s.entries[0][0] == pytest.approx(-2)


def test_check_symmetric():
    with pytest.raises(DomainError):
        check_symmetric(np.array([[0, 1], [0, 0]]))
    with pytest.raises(DomainError):
        check_symmetric(np.zeros((2, 3)))
    with pytest.raises(ResourceError):
        check_symmetric(np.zeros((5, 5)), max_dim=4)


def test_eigen_decomposition(dodeca):
    a = coupling_matrix(dodeca, "half")
    w, v = eigen_decomposition(a)
    assert np.allclose(a @ v, v * w, atol=1e-10)


@pytest.mark.parametrize("p, q, rings", [(4, 4, 2), (5, 4, 2), (7, 3, 3), (4, 6, 2)])
def test_identities(p, q, rings):
    layout = generate_layout(SchlafliSpec(p, q), rings)
    full = verify_identity_full(layout)
    half = verify_identity_half(layout)
    assert full.passed and half.passed
    assert full.max_deviation < 1e-10


def test_identity_failure_is_reported(dodeca):
    wrong = SpectrumMultiset.from_values(np.zeros(30))
    with pytest.raises(VerificationError):
        verify_identity_full(dodeca, line_spectrum=wrong)
    rep = verify_identity_full(dodeca, line_spectrum=wrong, raise_on_failure=False)
    assert not rep.passed


def test_flat_multiplicity(dodeca):
    full = eigen_spectrum(coupling_matrix(dodeca, "full"))
    assert flat_band_multiplicity(full) == expected_flat_multiplicity(dodeca, "full") == 10
    assert expected_flat_multiplicity(dodeca, "half") == 11
    square = generate_layout(SchlafliSpec(4, 4), 2)
    assert expected_flat_multiplicity(square, "full") == square.m - square.n + 1


def test_bounds(dodeca):
    full = eigen_spectrum(coupling_matrix(dodeca, "full"))
    half = eigen_spectrum(coupling_matrix(dodeca, "half"))
    rep = check_bounds(dodeca, full, half)
    assert rep.regular and rep.passed
    assert rep.full_range == (4.0, 4.0)
    assert rep.slack["full_upper"] == pytest.approx(0, abs=1e-12)


def test_bounds_violation(dodeca):
    fake = SpectrumMultiset.from_values([-2.0, 9.0])
    with pytest.raises(VerificationError):
        check_bounds(dodeca, fake, fake)


def test_hamiltonian(dodeca):
    full = eigen_spectrum(coupling_matrix(dodeca, "full"))
    h = hamiltonian_spectrum(full, HamiltonianParams(5.0, 0.5))
    assert h.max == pytest.approx(6.0)
    assert h.min == pytest.approx(3.0)
    assert h.entries[-1][1] == 10
    with pytest.raises(DomainError):
        HamiltonianParams(1.0, 0.0)


def test_gap_and_histogram(dodeca):
    full = eigen_spectrum(coupling_matrix(dodeca, "full"))
    assert spectral_gap_above_flat(full) == pytest.approx(3 - np.sqrt(5))
    counts, edges, flat = histogram(full, 20)
    assert counts.sum() == 30 and flat == 10 and len(edges) == 21
    with pytest.raises(DomainError):
        histogram(full, 5)
    with pytest.raises(DomainError):
        spectral_gap_above_flat(SpectrumMultiset.from_values([0.0, 1.0]))
