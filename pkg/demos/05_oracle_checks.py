"""
Brute-force cross-checks
========================

The closed-form pipeline is compared with a full Hamiltonian on a
truncated Fock grid and with quadrature of the exact eigenfunction
overlaps.  ``oscfield validate`` runs the complete set.
"""

import numpy as np

from oscfield import EvolutionSpec, PhysicalInputs, default_grid, derive_coupling, entropy_series
from oscfield.oracle import build_truncated_hamiltonian, evolve_numeric, overlap_quadrature
from oscfield.validation import entropy_from_state, run_all

inputs = PhysicalInputs(1.0, 1.0, 1e-3)
cfg = derive_coupling(inputs)
spec = EvolutionSpec.from_coupling((0, 3), cfg, default_grid(65))

analytic = entropy_series(spec).entropy
run = evolve_numeric(build_truncated_hamiltonian(inputs, 11), 0, 3, spec.times())
numeric = np.array([entropy_from_state(run.grid(i)) for i in range(len(spec.phases))])
print(f"entropy difference: {np.abs(analytic - numeric).max():.2e}, leakage {run.leakage:.1e}")

# quadrature overlap of the exact eigenfunctions with the product state
print("|A| by quadrature:", [round(abs(overlap_quadrature(cfg, 1, 1, n, 2 - n)), 6) for n in range(3)])

for result in run_all():
    print(f"{result.name:32} {result.max_deviation:.2e}  {'pass' if result.passed else 'FAIL'}")
