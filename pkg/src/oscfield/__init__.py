"""Closed-form entanglement dynamics of a harmonic oscillator coupled to a
single quantized field mode, with brute-force cross-checks."""

from .amplitudes import AmplitudeMatrix, ExcitationManifold, amplitude_matrix, amplitude_row
from .dynamics import (
    AmplitudeSnapshot,
    EvolutionSpec,
    default_grid,
    evolve,
    full_energy_evolve,
    probability,
)
from .entanglement import (
    EntanglementMeasures,
    EntropySeries,
    SchmidtSpectrum,
    entropy_series,
    schmidt_number,
    schmidt_spectrum,
    von_neumann_entropy,
)
from .params import (
    Branch,
    CouplingConfig,
    DomainError,
    EigenEnergy,
    PhysicalInputs,
    derive_coupling,
    derive_epsilon,
    eigenenergy,
    eigenenergy_epsilon_zero,
)
from .special import jacobi_poly

__all__ = [
    "AmplitudeMatrix",
    "ExcitationManifold",
    "amplitude_matrix",
    "amplitude_row",
    "AmplitudeSnapshot",
    "EvolutionSpec",
    "default_grid",
    "evolve",
    "full_energy_evolve",
    "probability",
    "EntanglementMeasures",
    "EntropySeries",
    "SchmidtSpectrum",
    "entropy_series",
    "schmidt_number",
    "schmidt_spectrum",
    "von_neumann_entropy",
    "Branch",
    "CouplingConfig",
    "DomainError",
    "EigenEnergy",
    "PhysicalInputs",
    "derive_coupling",
    "derive_epsilon",
    "eigenenergy",
    "eigenenergy_epsilon_zero",
    "jacobi_poly",
]

__version__ = "0.1.0"
