"""Band energies of Si along L-Gamma-X and the Gamma degeneracy pattern.

The split-off doublet sits directly below the four-fold valence top;
counting degeneracies at Gamma is the quickest sanity check that a
parameter file describes the right crystal.
"""
import numpy as np

from gtensor_tb import builtin_material_path, load_material, solve
from gtensor_tb.tables import band_path_rows
from gtensor_tb.units import HARTREE_EV

si = load_material(builtin_material_path("si"))

header, rows, ticks = band_path_rows(si, ["L", "G", "X"], samples_per_segment=40)
print(f"{len(rows)} k-points, {len(header) - 4} bands; ticks:")
for s, name in ticks:
    print(f"   {name:>2s} at path coordinate {s:.4f} Bohr^-1")

sol = solve(si, np.zeros(3))
print("\nGamma-point energies (eV relative to valence top), degeneracy:")
ev = (sol.energies - sol.energies[7]) * HARTREE_EV
shown = []
for e in ev:
    for group in shown:
        if abs(group[0] - e) < 1e-6:
            group[1] += 1
            break
    else:
        shown.append([e, 1])
for e, mult in shown[:8]:
    print(f"   {e:+9.4f} eV  x{mult}")

so_split = (sol.energies[4] - sol.energies[2]) * HARTREE_EV
print(f"\nspin-orbit split-off gap: {so_split * 1000:.1f} meV (experiment: ~44)")
