"""Singular values and determinant of g_S / g_tot along a random ray.

Reproduces the canonical behaviour of the Si first-conduction pair:
det(g_S) starts at -8/27 at Gamma, crosses zero once on a generic
direction, and settles near +8 (two decoupled free spins) well before
the zone boundary, while an orbital-moment resonance pushes one
singular value of g_tot far above 2.
"""
import numpy as np

from gtensor_tb import builtin_material_path, load_material
from gtensor_tb.tables import gline_rows

si = load_material(builtin_material_path("si"))

rng = np.random.default_rng(11)
direction = rng.normal(size=3)
direction /= np.linalg.norm(direction)
print("direction:", np.round(direction, 6))

r_max = 0.35
header, rows = gline_rows(si, "first-conduction", direction, r_max, samples=60)
idx = {name: i for i, name in enumerate(header)}

print(f"\n{'r':>8s} {'s1(gS)':>8s} {'s2(gS)':>8s} {'s3(gS)':>8s} {'det gS':>9s} "
      f"{'s1(gtot)':>9s} {'det gtot':>10s}")
for row in rows[::6]:
    print(f"{row[idx['r']]:8.4f} {row[idx['sigma1_gs']]:8.4f} "
          f"{row[idx['sigma2_gs']]:8.4f} {row[idx['sigma3_gs']]:8.4f} "
          f"{row[idx['det_gs']]:9.4f} {row[idx['sigma1_gtot']]:9.3f} "
          f"{row[idx['det_gtot']]:10.3f}")

dets = np.array([row[idx["det_gs"]] for row in rows])
crossings = np.count_nonzero(np.sign(dets[:-1]) != np.sign(dets[1:]))
print(f"\ndet(g_S): starts {dets[0]:+.4f} (-8/27 = {-8 / 27:+.4f}), "
      f"ends {dets[-1]:+.4f}, sign changes: {crossings}")
