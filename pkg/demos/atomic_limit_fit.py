"""Fit the intra-atomic <s|d|p> dipoles to the Lande g-factor.

With hoppings removed, each atom carries an exact j = 1/2 doublet in
the p shell; the dipole is tuned until the orbital moment restores the
textbook Lande value g_J = +2/3 (g_S = -2/3 plus g_L = +4/3).
"""
from gtensor_tb import builtin_material_path, fit_report, load_material

for name in ("si", "ge", "gaas"):
    model = load_material(builtin_material_path(name))
    print(f"{model.name}:")
    for species, result in fit_report(model).items():
        print(f"   <s|d|p>({species}) = {result['dipole_bohr']:8.5f} Bohr   "
              f"g_S = {result['g_s_zz']:+.7f}  g_L = {result['g_l_zz']:+.7f}  "
              f"g_tot = {result['g_tot_zz']:+.7f}")
