"""Isolated-atom limit: the j=1/2 p-shell doublet and the dipole fit.

With all hopping switched off, each atom's p shell splits into j=3/2
and j=1/2 levels.  The j=1/2 doublet in the reference spin-harmonic
basis

    |1/2,+1/2> = (|z up> + |x dn> + i|y dn>)/sqrt(3)
    |1/2,-1/2> = (|z dn> - |x up> + i|y up>)/sqrt(3)

has g_S = -2/3 per axis; the intra-atomic dipole feeds the orbital
contribution g_L = +4/3 through virtual s states, so the total must
reproduce the Lande value g_j(l=1, s=1/2, j=1/2) = +2/3.  Fitting the
single free dipole to that anchor is how the <s|r|p> input of the
momentum tables is produced.
"""
from __future__ import annotations

import dataclasses

import numpy as np
from scipy.optimize import brentq

from .bands import BlochSolution, KramersPair, solve
from .errors import BracketError
from .gtensor import g_tensor_set, momentum_table
from .materials import MaterialModel

LANDE_TARGET = 2.0 / 3.0


# spectator-sublattice rigid shift; with hopping off it cannot affect
# the atom under study, it only de-clutters the spectrum
_SPECTATOR_SHIFT = 10.0  # Hartree


def _single_species_model(model: MaterialModel, species: str,
                          dipole: float | None) -> MaterialModel:
    """Isolated-atom model: hopping off, sublattice A = ``species``,
    sublattice B pushed far away in energy."""
    other = species + "+shift"
    table = model.onsite[species]
    d0 = model.dipole[species] if dipole is None else dipole
    sk_zero = {key: 0.0 for key in model.sk[
        (model.species[0], model.species[1])]}
    return dataclasses.replace(
        model,
        species=(species, other),
        onsite={species: dict(table),
                other: {sh: v + _SPECTATOR_SHIFT for sh, v in table.items()}},
        soc={species: model.soc[species], other: model.soc[species]},
        dipole={species: d0, other: d0},
        sk={(species, other): dict(sk_zero), (other, species): dict(sk_zero)},
    )


def _atomic_pair(model: MaterialModel, species: str,
                 dipole: float | None) -> tuple:
    """Solution and analytic j=1/2 reference pair of one isolated atom."""
    iso = _single_species_model(model, species, dipole)
    sol = solve(iso, np.zeros(3))

    n = iso.n_orb
    lam = iso.soc[species]
    e_half = iso.onsite[species]["p"] - lam
    idx = np.flatnonzero(np.abs(sol.energies - e_half) < 1e-12)
    if idx.size != 2:
        raise RuntimeError("j=1/2 level not isolated in the atomic limit")

    dim = iso.dim
    s3 = 1.0 / np.sqrt(3.0)
    up = lambda orb: 0 * 2 * n + orb            # atom 0
    dn = lambda orb: 1 * 2 * n + orb
    xi = np.zeros(dim, dtype=complex)
    xi[up(3)] = s3
    xi[dn(1)] = s3
    xi[dn(2)] = 1j * s3
    xib = np.zeros(dim, dtype=complex)
    xib[dn(3)] = s3
    xib[up(1)] = -s3
    xib[up(2)] = 1j * s3

    # replace the two degenerate eigh columns by the analytic doublet
    states = sol.states.copy()
    states[:, idx[0]] = xi
    states[:, idx[1]] = xib
    sol = BlochSolution(k=sol.k, energies=sol.energies, states=states)
    pair = KramersPair(
        k=sol.k,
        band_indices=(int(idx[0]), int(idx[1])),
        energies=sol.energies[idx].copy(),
        states=states[:, idx].copy(),
        pair_energy=float(e_half),
        split=0.0,
        gap_to_rest=float(np.abs(np.delete(sol.energies, idx)
                                 - e_half).min()),
    )
    return iso, sol, pair


def atomic_g(model: MaterialModel, species: str,
             dipole: float | None = None):
    """g-tensor set of the isolated-atom j=1/2 doublet.

    ``dipole`` overrides the material's <s|r|p> element (Bohr); None
    uses the value shipped with the material.
    """
    iso, sol, pair = _atomic_pair(model, species, dipole)
    pi = momentum_table(iso, sol)
    return g_tensor_set(iso, sol, pair, pi)


def fit_dipole(model: MaterialModel, species: str,
               target: float = LANDE_TARGET,
               bracket: tuple = (0.0, 10.0), xtol: float = 1e-10) -> float:
    """Bracketed scalar fit of the intra-atomic dipole (Bohr).

    Finds d0 with g_tot,zz(d0) = ``target`` for the species' isolated
    j=1/2 doublet.  Raises :class:`BracketError` when the target is not
    enclosed by the bracket.
    """
    def objective(d0: float) -> float:
        return atomic_g(model, species, dipole=d0).g_tot[2, 2] - target

    fa, fb = objective(bracket[0]), objective(bracket[1])
    if fa == 0.0:
        return bracket[0]
    if fb == 0.0:
        return bracket[1]
    if np.sign(fa) == np.sign(fb):
        raise BracketError(
            f"dipole target {target} for {species} not bracketed on "
            f"{bracket}: g-{target} spans [{fa:.3e}, {fb:.3e}]")
    return float(brentq(objective, bracket[0], bracket[1], xtol=xtol))


def fit_report(model: MaterialModel) -> dict:
    """Fit every species of a material; returns species -> result dict."""
    report = {}
    for species in sorted(set(model.species)):
        d0 = fit_dipole(model, species)
        gset = atomic_g(model, species, dipole=d0)
        report[species] = {
            "dipole_bohr": d0,
            "g_s_zz": float(gset.g_s[2, 2]),
            "g_l_zz": float(gset.g_l[2, 2]),
            "g_tot_zz": float(gset.g_tot[2, 2]),
        }
    return report
