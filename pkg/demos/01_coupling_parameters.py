"""
Coupling parameters and eigenenergies
=====================================

From the three physical inputs (field frequency, oscillator frequency,
coupling constant) everything else follows: the detuning epsilon, the
mixing parameter alpha, the level spacing delta and the energy factors.
"""

import numpy as np

from oscfield import PhysicalInputs, derive_coupling, eigenenergy

# resonance, weak coupling: alpha sits close to -1 (strong mixing)
cfg = derive_coupling(PhysicalInputs(omega=1.0, omega_c=1.0, beta=1e-3))
print(f"epsilon={cfg.epsilon:.6g} branch={cfg.branch.value} alpha={cfg.alpha:.6f}")
print(f"sigma={cfg.sigma_reduced:.6f} delta={cfg.delta:.6e}")

e = eigenenergy(cfg, 0, 0)
print(f"E00={e.value:.12f}  G={e.g_factor:.9f}  S={e.s_factor:.9f}")

# detuning the field by a few beta moves alpha toward zero
for omega in (1.0, 1.001, 1.002, 1.01, 1.1):
    c = derive_coupling(PhysicalInputs(omega, 1.0, 1e-3))
    print(f"omega={omega:<6} epsilon={c.epsilon:9.3f} alpha={c.alpha:+.5f}")

# the spacing along a manifold is constant, so evolution is periodic in delta*t
levels = np.array([eigenenergy(cfg, n, 6 - n).value for n in range(7)])
print("spacings:", np.diff(levels))
