"""Schmidt spectrum, von Neumann entropy and Schmidt number.

On a fixed-excitation manifold the state is sum_k a_k |k>|N-k>, which is
already in Schmidt form: both reduced density matrices are diagonal in the
Fock basis with eigenvalues |a_k|^2.  No eigensolver is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import AmplitudeSnapshot, EvolutionSpec, evolve_array

__all__ = [
    "ZERO_LAMBDA",
    "NORM_TOL",
    "SchmidtSpectrum",
    "EntanglementMeasures",
    "EntropySeries",
    "schmidt_spectrum",
    "von_neumann_entropy",
    "schmidt_number",
    "measures",
    "entropy_series",
    "binary_entropy",
]

ZERO_LAMBDA = 1e-300
NORM_TOL = 1e-10


@dataclass(frozen=True)
class SchmidtSpectrum:
    lambdas: np.ndarray

    def __post_init__(self):
        lam = np.asarray(self.lambdas, dtype=float)
        if np.any(lam < 0) or abs(lam.sum() - 1.0) > NORM_TOL:
            raise ValueError(f"not a probability vector (sum={lam.sum()!r})")
        object.__setattr__(self, "lambdas", lam)


@dataclass(frozen=True)
class EntanglementMeasures:
    entropy: float
    schmidt_number: float


def schmidt_spectrum(snapshot: AmplitudeSnapshot | np.ndarray) -> SchmidtSpectrum:
    values = getattr(snapshot, "values", snapshot)
    return SchmidtSpectrum(np.abs(np.asarray(values)) ** 2)


def _entropy_rows(lam: np.ndarray) -> np.ndarray:
    lam = np.where(lam < ZERO_LAMBDA, 0.0, lam)
    safe = np.where(lam > 0, lam, 1.0)
    # rounding can push lambda slightly above 1; entropy is nonnegative
    return np.maximum(-np.sum(lam * np.log(safe), axis=-1), 0.0)


def von_neumann_entropy(spectrum: SchmidtSpectrum) -> float:
    """-sum lambda ln lambda in nats, with 0 ln 0 = 0."""
    return float(_entropy_rows(spectrum.lambdas))


def schmidt_number(spectrum: SchmidtSpectrum) -> float:
    """K = 1 / sum lambda^2."""
    return float(1.0 / np.sum(spectrum.lambdas**2))


def measures(spectrum: SchmidtSpectrum) -> EntanglementMeasures:
    return EntanglementMeasures(von_neumann_entropy(spectrum), schmidt_number(spectrum))


def binary_entropy(p) -> np.ndarray:
    """-p ln p - (1-p) ln(1-p), elementwise."""
    p = np.asarray(p, dtype=float)
    return _entropy_rows(np.stack([p, 1.0 - p], axis=-1))


@dataclass(frozen=True)
class EntropySeries:
    """Entanglement along a phase grid; ``lambdas`` has shape (points, N + 1)."""

    source: tuple[int, int]
    alpha: float
    phases: np.ndarray
    entropy: np.ndarray
    schmidt_number: np.ndarray
    lambdas: np.ndarray

    def __len__(self) -> int:
        return len(self.phases)

    @property
    def max_entropy(self) -> float:
        return float(self.entropy.max())

    @property
    def argmax_phase(self) -> float:
        return float(self.phases[int(np.argmax(self.entropy))])


def entropy_series(spec: EvolutionSpec) -> EntropySeries:
    amps = evolve_array(spec)
    lam = np.abs(amps) ** 2
    bad = np.abs(lam.sum(axis=1) - 1.0).max()
    if bad > NORM_TOL:
        raise ArithmeticError(f"evolution lost normalization by {bad:.3g}")
    return EntropySeries(
        source=spec.source,
        alpha=float(spec.alpha),
        phases=np.array(spec.phases),
        entropy=_entropy_rows(lam),
        schmidt_number=1.0 / np.sum(lam**2, axis=1),
        lambdas=lam,
    )


def max_entropy_bound(total: int) -> float:
    """ln(N + 1), the number of Schmidt modes on the manifold."""
    return math.log(total + 1)
