import numpy as np
import pytest

from chainent import models
from chainent.errors import GaplessError
from chainent.models import Boundary, DisorderSpec, Family, ModelSpec


def test_ssh_spec_validation():
    with pytest.raises(ValueError):
        ModelSpec.ssh(1, 0.3)
    with pytest.raises(ValueError):
        ModelSpec.ssh(8, 1.5)
    with pytest.raises(ValueError):
        ModelSpec(Family.SSH, 8, lam=0.3, t=1.0)
    spec = ModelSpec.ssh(8, 0.3)
    assert spec.t1 == pytest.approx(0.7)
    assert spec.t2 == pytest.approx(1.3)
    assert spec.num_modes == 16


def test_kitaev_spec_validation():
    with pytest.raises(ValueError):
        ModelSpec(Family.KITAEV, 8, t=1.0)  # missing delta, mu
    spec = ModelSpec.kitaev(8, t=1.0, delta=0.5, mu=0.2)
    assert spec.num_modes == 8


def test_momentum_grid():
    ks = models.momentum_grid(8)
    assert len(ks) == 8
    assert np.pi in ks  # even N hits the zone edge
    assert np.pi not in models.momentum_grid(7)


def test_bloch_vector_gapless_at_zero():
    spec = ModelSpec.ssh(8, 0.0)
    h = models.bloch_vector(spec, np.pi)
    with pytest.raises(GaplessError):
        h.normalized()


def test_ssh_realspace_spectrum_matches_bloch():
    """Eigenvalues of iM are +/-|h(k)| over the momentum grid, each doubled."""
    spec = ModelSpec.ssh(10, 0.3)
    M = models.realspace_hamiltonian(spec)
    got = np.sort(np.linalg.eigvalsh(1j * M))
    bands = [np.linalg.norm(models.bloch_vector(spec, k).vector)
             for k in models.momentum_grid(10)]
    want = np.sort(np.concatenate([bands, bands, -np.asarray(bands),
                                   -np.asarray(bands)]))
    assert np.allclose(got, want, atol=1e-12)


def test_kitaev_realspace_spectrum_matches_bloch():
    """Kitaev iM eigenvalues are +/-2|h(k)| in this parametrization."""
    spec = ModelSpec.kitaev(9, t=1.0, delta=0.7, mu=0.4)
    M = models.realspace_hamiltonian(spec)
    got = np.sort(np.linalg.eigvalsh(1j * M))
    bands = np.array([2.0 * np.linalg.norm(
        models.bloch_vector(spec, k).vector)
        for k in models.momentum_grid(9)])
    want = np.sort(np.concatenate([bands, -bands]))
    assert np.allclose(got, want, atol=1e-12)


def test_realspace_is_skew():
    for spec in (ModelSpec.ssh(6, -0.4), ModelSpec.kitaev(6, mu=0.5),
                 ModelSpec.ssh(6, 0.4, boundary=Boundary.OPEN)):
        M = models.realspace_hamiltonian(spec)
        assert np.allclose(M, -M.T)


def test_open_chain_has_no_wrap_coupling():
    spec = ModelSpec.ssh(6, 0.4, boundary=Boundary.OPEN)
    M = models.realspace_hamiltonian(spec)
    # Majoranas of cell 0 (indices 0..3) and cell 5 (indices 20..23)
    assert np.all(M[:4, 20:] == 0.0)


def test_disorder_deterministic():
    d = DisorderSpec(amplitude=0.1, seed=42)
    e1 = d.onsite_energies(12)
    e2 = DisorderSpec(amplitude=0.1, seed=42).onsite_energies(12)
    assert np.array_equal(e1, e2)
    assert np.max(np.abs(e1)) <= 0.1
    assert not np.array_equal(e1, DisorderSpec(0.1, 43).onsite_energies(12))


def test_disorder_shifts_onsite_terms():
    clean = models.realspace_hamiltonian(ModelSpec.ssh(6, 0.4))
    dirty = models.realspace_hamiltonian(
        ModelSpec.ssh(6, 0.4, disorder=DisorderSpec(0.1, 7)))
    diff = dirty - clean
    # onsite energies only touch the (2j, 2j+1) Majorana pairs of each mode
    mask = np.zeros_like(diff, dtype=bool)
    for j in range(12):
        mask[2 * j, 2 * j + 1] = mask[2 * j + 1, 2 * j] = True
    assert np.all(diff[~mask] == 0.0)
    assert np.any(diff[mask] != 0.0)
