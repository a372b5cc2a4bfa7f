"""Pure dephasing destroys the weak-coupling blockade; mode coupling saves it.

With J = 0 even modest pure dephasing (gamma_p = 3 gamma_a) pushes g2(0)
above 1 -- the light turns bunched and the blockade is gone.  A strong
scatterer-induced mode coupling restores deep antibunching that degrades only
slowly with gamma_p, which matters for solid-state emitters where dephasing
is unavoidable.
"""

from bicavity import master_equation_g2, reference_baseline

KAPPA = 40.0
GAMMA_P = (0.0, 1.0, 3.0, 10.0, 20.0)

header = " ".join(f"{f'gp={g:g}':>10}" for g in GAMMA_P)
print(f"{'J/kappa':>8} {header}")
for jk in (0, 6, 10, 20):
    row = []
    for gp in GAMMA_P:
        g2 = master_equation_g2(
            reference_baseline(j_coupling=jk * KAPPA, gamma_p=gp), n_a_max=3, n_b_max=3
        )
        row.append(f"{g2:10.4f}")
    print(f"{jk:8d} {' '.join(row)}")

print()
print("Reading: J = 0 crosses g2 > 1 almost immediately; J >= 10 kappa keeps")
print("g2 well below 1 across the whole dephasing range.")
