import numpy as np
import pytest

from gtensor_tb import (bloch_hamiltonian, cubic_group, dipole_matrix,
                        hamiltonian_gradient, soc_matrix, tetrahedral_group)

from conftest import random_k_points


@pytest.mark.parametrize("material", ["si", "ge", "gaas"])
def test_hermiticity_everywhere(material, request):
    model = request.getfixturevalue(material)
    for k in random_k_points(3, 8, scale=0.4):
        h = bloch_hamiltonian(model, k)
        assert np.linalg.norm(h - h.conj().T, np.inf) < 1e-13
        for g in hamiltonian_gradient(model, k):
            assert np.linalg.norm(g - g.conj().T, np.inf) < 1e-13


def test_gradient_matches_finite_differences(si, gaas):
    # independent oracle: central differences of the Bloch matrix
    step = 1e-6
    for model in (si, gaas):
        for k in random_k_points(5, 3, scale=0.3):
            grad = hamiltonian_gradient(model, k)
            for j in range(3):
                dk = np.zeros(3)
                dk[j] = step
                fd = (bloch_hamiltonian(model, k + dk)
                      - bloch_hamiltonian(model, k - dk)) / (2 * step)
                assert np.abs(grad[j] - fd).max() < 1e-7


def test_kramers_degeneracy_with_inversion(si, ge):
    for model in (si, ge):
        for k in random_k_points(7, 5, scale=0.3):
            e = np.linalg.eigvalsh(bloch_hamiltonian(model, k))
            assert np.abs(e[0::2] - e[1::2]).max() < 1e-10


def test_gaas_pairs_split_at_generic_k(gaas):
    k = np.array([0.11, 0.07, 0.03])
    e = np.linalg.eigvalsh(bloch_hamiltonian(gaas, k))
    assert np.abs(e[0::2] - e[1::2]).max() > 1e-6


@pytest.mark.parametrize("material,group", [("si", cubic_group),
                                            ("gaas", tetrahedral_group)])
def test_point_group_spectra(material, group, request):
    model = request.getfixturevalue(material)
    k = np.array([0.13, 0.06, 0.02])
    e0 = np.linalg.eigvalsh(bloch_hamiltonian(model, k))
    for op in group()[::7]:
        e = np.linalg.eigvalsh(bloch_hamiltonian(model, op @ k))
        assert np.abs(e - e0).max() < 1e-10


def test_spectra_periodic_under_reciprocal_translation(si):
    g_vec = (2 * np.pi / si.lattice_constant) * np.array([1.0, 1.0, -1.0])
    k = np.array([0.07, -0.04, 0.02])
    e0 = np.linalg.eigvalsh(bloch_hamiltonian(si, k))
    e1 = np.linalg.eigvalsh(bloch_hamiltonian(si, k + g_vec))
    assert np.abs(e0 - e1).max() < 1e-10


def test_zero_soc_exact_spin_pairs(si_nosoc):
    k = np.array([0.09, 0.05, -0.14])
    h = bloch_hamiltonian(si_nosoc, k)
    dim = h.shape[0] // 2
    # spin blocks decouple and are identical
    assert np.abs(h[:dim, dim:]).max() == 0.0
    assert np.abs(h[:dim, :dim] - h[dim:, dim:]).max() == 0.0


def test_soc_matrix_spectrum(si):
    # p-shell L.S: eigenvalues lambda/2 (j=3/2, x4) and -lambda (j=1/2, x2)
    lam = si.soc["Si"]
    w = np.linalg.eigvalsh(soc_matrix(si))
    w = np.sort(w)
    nonzero = w[np.abs(w) > 1e-15]
    assert len(nonzero) == 12  # two atoms x six p states
    assert np.allclose(sorted(set(np.round(nonzero, 12))),
                       [-lam, lam / 2.0])


def test_dipole_matrix_is_hermitian_s_p_only(si):
    d = dipole_matrix(si)
    orb = len(si.orbitals)
    for j in range(3):
        assert np.linalg.norm(d[j] - d[j].conj().T, np.inf) == 0.0
        block = d[j][: 2 * orb, : 2 * orb]
        # only s <-> p_j entries populated on each atom
        nz = np.argwhere(np.abs(block) > 0)
        for a, b in nz:
            pair = {a % orb, b % orb}
            assert pair == {0, 1 + j}


def test_gamma_degeneracy_pattern(si):
    e = np.linalg.eigvalsh(bloch_hamiltonian(si, np.zeros(3)))
    split_off = e[2:4]
    fourfold = e[4:8]
    assert np.ptp(split_off) < 1e-10 and np.ptp(fourfold) < 1e-10
    # split-off gap is the spin-orbit splitting, ~44 meV for Si
    gap_ev = (fourfold[0] - split_off[0]) * 27.211386245988
    assert gap_ev == pytest.approx(0.0440, abs=0.002)
