"""Spin-orbital entanglement of Kramers pairs.

A band eigenvector lives in (spin) x (atom, orbital) with spin as the
slow index, so the reduced spin density matrix is a contraction over
the orbital slots.  Entropies use log base 2: a maximally entangled
pair state has S = 1 exactly.

The time-reversal relation rho_bar_S = sigma_y rho_S^T sigma_y between
the two pair partners holds on every direction for the
inversion-symmetric groups, but only on the <100> and <111> direction
families for T_d; asking for it elsewhere is a contract error, not a
numerical failure.
"""
from __future__ import annotations

import dataclasses

import numpy as np

from .bands import KramersPair
from .errors import DirectionNotApplicableError, PhysicsError
from .materials import MaterialModel
from .su2 import PAULI

# |det(g_S)| below this counts as "on the surface" after bisection
DET_TOL = 1e-6

# direction families (unit vectors, expanded under the point group) on
# which the spin-flip relation holds for T_d; O_h needs no table
_TD_FAMILIES = ("100", "111")


@dataclasses.dataclass
class SpinDensity:
    """Reduced spin density matrices of the two pair partners."""

    rho_s: np.ndarray
    rho_s_bar: np.ndarray


def reduce_spin(state: np.ndarray, orbital_dim: int | None = None) -> np.ndarray:
    """Partial trace over the orbital slots of one normalized state.

    ``orbital_dim`` is the number of (atom, orbital) slots; it defaults
    to half the state length, which matches the engine layout.
    """
    state = np.asarray(state)
    if orbital_dim is None:
        orbital_dim = state.size // 2
    psi = state.reshape(2, orbital_dim)
    rho = psi @ psi.conj().T
    return 0.5 * (rho + rho.conj().T)


def pair_spin_densities(pair: KramersPair) -> SpinDensity:
    """Reduced spin density matrices of (xi, xi_bar)."""
    return SpinDensity(
        rho_s=reduce_spin(pair.states[:, 0]),
        rho_s_bar=reduce_spin(pair.states[:, 1]),
    )


def entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy, log base 2, of a density matrix.

    Eigenvalues in [-1e-12, 0) are clamped to zero; anything more
    negative indicates the input was not PSD and raises.
    """
    w = np.linalg.eigvalsh(np.asarray(rho))
    if w.min() < -1e-12:
        raise PhysicsError(f"density matrix has eigenvalue {w.min():.3e} < 0")
    w = np.clip(w, 0.0, None)
    nz = w[w > 0.0]
    return float(-(nz * np.log2(nz)).sum())


def _family(direction: np.ndarray) -> str | None:
    """Classify a unit direction as '100', '111', or None."""
    d = np.abs(np.asarray(direction, dtype=float))
    d = d / np.linalg.norm(d)
    d = np.sort(d)
    if np.allclose(d, [0.0, 0.0, 1.0], atol=1e-9):
        return "100"
    r3 = 1.0 / np.sqrt(3.0)
    if np.allclose(d, [r3, r3, r3], atol=1e-9):
        return "111"
    return None


def direction_applicable(model: MaterialModel, direction) -> bool:
    """Whether the spin-flip relation holds along ``direction``.

    For the inversion-symmetric group O_h every direction qualifies;
    for T_d only the <100> and <111> families do.
    """
    if model.point_group == "Oh":
        return True
    return _family(direction) in _TD_FAMILIES


def require_applicable(model: MaterialModel, direction) -> None:
    """Raise :class:`DirectionNotApplicableError` off the valid families."""
    if not direction_applicable(model, direction):
        raise DirectionNotApplicableError(model.point_group,
                                          np.asarray(direction, dtype=float))


def spin_flip_residual(model: MaterialModel, pair: KramersPair) -> float:
    """Frobenius residual of rho_bar_S = sigma_y rho_S^T sigma_y.

    The direction is taken from the pair's k-point; at Gamma (where no
    direction is defined) the relation always applies.
    """
    k = pair.k
    if np.linalg.norm(k) > 0.0:
        require_applicable(model, k / np.linalg.norm(k))
    dens = pair_spin_densities(pair)
    sy = PAULI[1]
    flipped = sy @ dens.rho_s.T @ sy
    return float(np.linalg.norm(dens.rho_s_bar - flipped, "fro"))


def entropies_at_crossing(model: MaterialModel, pair: KramersPair,
                          det_g_s: float | None = None,
                          det_tol: float = DET_TOL) -> tuple:
    """Entropies (S_xi, S_xi_bar) of a pair sitting on the MES.

    When ``det_g_s`` is supplied the on-surface precondition
    |det| < det_tol is enforced; direction applicability is always
    enforced (the unit-entropy statement holds only on the directions
    where the spin-flip relation does).
    """
    if det_g_s is not None and abs(det_g_s) >= det_tol:
        raise PhysicsError(
            f"pair is not on the det(g_S)=0 surface: |det| = {abs(det_g_s):.3e}")
    k = pair.k
    if np.linalg.norm(k) > 0.0:
        require_applicable(model, k / np.linalg.norm(k))
    dens = pair_spin_densities(pair)
    return entropy(dens.rho_s), entropy(dens.rho_s_bar)


def cardinal_states(pair: KramersPair) -> dict:
    """Equator superpositions of the pair Bloch sphere.

    Keys '+', '-', '+i', '-i' map to (xi +- xi_bar)/sqrt(2) and
    (xi +- i xi_bar)/sqrt(2).  Their entropies are gauge dependent, so
    callers should align the pair to the spin frame first.
    """
    xi = pair.states[:, 0]
    xib = pair.states[:, 1]
    s = 1.0 / np.sqrt(2.0)
    return {
        "+": s * (xi + xib),
        "-": s * (xi - xib),
        "+i": s * (xi + 1j * xib),
        "-i": s * (xi - 1j * xib),
    }
