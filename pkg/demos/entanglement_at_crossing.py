"""Maximal spin-orbital entanglement where det(g_S) vanishes.

Bisects the zero of det(g_S) for the Si split-off pair along Delta,
then shows that exactly there the two pair states become maximally
entangled (entropy 1) while equator superpositions stay strictly
below 1 -- the pair basis matters, not just the two-dimensional space.
"""
import numpy as np

from gtensor_tb import (align_pair_to_spin_frame, builtin_material_path,
                        cardinal_states, entropies_at_crossing, entropy,
                        load_material, pair_spin_densities, reduce_spin,
                        scan_ray, select_pair, solve, spin_flip_residual)

si = load_material(builtin_material_path("si"))
direction = np.array([1.0, 0.0, 0.0])

scan = scan_ray(si, "split-off", direction, r_max=0.05, n_coarse=200)
kc = scan.crossings[0].radius
print(f"det(g_S) = 0 at k_c = {kc:.7f} Bohr^-1 along Delta "
      f"(bracket width {scan.crossings[0].bracket_width:.1e})")

sol = solve(si, kc * direction)
pair = select_pair(si, sol, "split-off")
aligned, _, sigma = align_pair_to_spin_frame(pair)
print("singular values of g_S there:", np.round(sigma, 6))

s_xi, s_xib = entropies_at_crossing(si, aligned)
print(f"pair-state entropies: {s_xi:.9f}, {s_xib:.9f}")
print(f"spin-flip relation residual: {spin_flip_residual(si, aligned):.2e}")

print("\nequator (cardinal) superpositions of the same doublet:")
for label, state in cardinal_states(aligned).items():
    print(f"   S(|{label:>2s}>) = {entropy(reduce_spin(state)):.4f}")

half = 0.5 * kc
sol = solve(si, half * direction)
aligned_half, _, _ = align_pair_to_spin_frame(select_pair(si, sol, "split-off"))
dens = pair_spin_densities(aligned_half)
print(f"\nat k_c/2 the pair is not maximally entangled: "
      f"S = {entropy(dens.rho_s):.4f}")
