"""Time evolution of the product-state amplitudes on a fixed-excitation manifold.

Starting from |s1>|s2>, the amplitude of |m1>|N - m1> at phase phi is

    a_{m1}(phi) = sum_n A^{s1,s2}_n conj(A^{m1,N-m1}_n) exp(-i n phi),

where phi = delta * t and delta is the level spacing along the manifold.
Global and per-m1 phases are dropped; only moduli are meaningful.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .amplitudes import amplitude_matrix
from .params import CouplingConfig, eigenenergy

__all__ = [
    "DEFAULT_POINTS",
    "EvolutionSpec",
    "AmplitudeSnapshot",
    "default_grid",
    "evolve",
    "evolve_array",
    "full_energy_evolve",
    "probability",
]

DEFAULT_POINTS = 1024


def default_grid(points: int = DEFAULT_POINTS, max_phase: float = 2 * math.pi) -> np.ndarray:
    """Uniform phase grid including both endpoints."""
    if points < 2:
        raise ValueError("grid needs at least two points")
    return np.linspace(0.0, max_phase, points)


@dataclass(frozen=True)
class EvolutionSpec:
    """Initial Fock pair, mixing parameter and phase grid.

    ``alpha`` is taken from ``coupling`` when one is given.
    """

    source: tuple[int, int]
    alpha: float
    phases: np.ndarray = field(default_factory=default_grid)
    coupling: CouplingConfig | None = None

    def __post_init__(self):
        s1, s2 = self.source
        if s1 < 0 or s2 < 0 or int(s1) != s1 or int(s2) != s2:
            raise ValueError(f"source must be nonnegative integers, got {self.source}")
        object.__setattr__(self, "source", (int(s1), int(s2)))
        phases = np.asarray(self.phases, dtype=float)
        if phases.ndim != 1 or phases.size == 0:
            raise ValueError("phase grid must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(phases)) or np.any(np.diff(phases) <= 0):
            raise ValueError("phase grid must be finite and strictly increasing")
        phases.flags.writeable = False
        object.__setattr__(self, "phases", phases)
        if not abs(self.alpha) <= 1.0:
            raise ValueError(f"|alpha| must be <= 1, got {self.alpha!r}")

    @classmethod
    def from_coupling(cls, source, coupling: CouplingConfig, phases=None) -> "EvolutionSpec":
        phases = default_grid() if phases is None else phases
        return cls(source=tuple(source), alpha=coupling.alpha, phases=phases, coupling=coupling)

    @property
    def total(self) -> int:
        return sum(self.source)

    def times(self) -> np.ndarray:
        """Physical times t = phi / |delta|; needs a coupling."""
        if self.coupling is None:
            raise ValueError("physical times need a CouplingConfig")
        return self.phases / abs(self.coupling.delta)


@dataclass(frozen=True)
class AmplitudeSnapshot:
    phase: float
    values: np.ndarray

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.values) ** 2


def evolve_array(spec: EvolutionSpec) -> np.ndarray:
    """Amplitudes for the whole grid, shape (len(phases), N + 1)."""
    total = spec.total
    u = amplitude_matrix(total, spec.alpha)
    n = np.arange(total + 1)
    weights = u[spec.source[0]][None, :] * np.exp(-1j * np.outer(spec.phases, n))
    return weights @ u.conj().T


def evolve(spec: EvolutionSpec) -> list[AmplitudeSnapshot]:
    arr = evolve_array(spec)
    return [AmplitudeSnapshot(phase=float(p), values=row) for p, row in zip(spec.phases, arr)]


def probability(spec: EvolutionSpec, m1: int) -> np.ndarray:
    """Probability of |m1>|N - m1> along the grid."""
    return np.abs(evolve_array(spec)[:, m1]) ** 2


def full_energy_evolve(spec: EvolutionSpec, energies=None) -> list[AmplitudeSnapshot]:
    """Evolution with the exact energy differences instead of delta * n.

    Phases are exp(-i (E_{n,N-n} - E_{m1} - E_{m2}) t) with t = phi/|delta|
    and E_{m1} + E_{m2} the uncoupled energy of |m1, N - m1>.  ``energies``
    may be a sequence of N + 1 values E_{n,N-n}; by default they come from
    ``eigenenergy`` for the spec's coupling.
    """
    if spec.coupling is None:
        raise ValueError("full-energy evolution needs a CouplingConfig")
    cfg = spec.coupling
    total = spec.total
    if energies is None:
        energies = [eigenenergy(cfg, n, total - n).value for n in range(total + 1)]
    energies = np.array([getattr(e, "value", e) for e in energies], dtype=float)
    inp = cfg.inputs
    m1 = np.arange(total + 1)
    free = inp.omega_c * (m1 + 0.5) + inp.omega * (total - m1 + 0.5)
    t = spec.times()
    u = amplitude_matrix(total, spec.alpha)
    weights = u[spec.source[0]][None, :] * np.exp(-1j * np.outer(t, energies))
    arr = (weights @ u.conj().T) * np.exp(1j * np.outer(t, free))
    return [AmplitudeSnapshot(phase=float(p), values=row) for p, row in zip(spec.phases, arr)]
