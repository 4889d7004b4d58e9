"""Brute-force validators for the closed-form results.

Three routes that share nothing with the amplitude kernel:

* two-mode rotation (beam-splitter) matrix elements by polynomial expansion
  of rotated creation operators, using only integer binomials;
* the full coupled Hamiltonian on a truncated Fock grid, diagonalized
  densely and evolved spectrally;
* Gauss-Hermite quadrature of the overlap between product oscillator
  states and the exact (non-reduced) momentum-space eigenfunctions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from numpy.polynomial.hermite import hermgauss

from .params import CouplingConfig, DomainError, PhysicalInputs

__all__ = [
    "OracleError",
    "RotationAngle",
    "TruncatedHamiltonian",
    "NumericEvolution",
    "MAX_ROTATION_TOTAL",
    "MAX_HAMILTONIAN_DIM",
    "DEFAULT_MARGIN",
    "LEAKAGE_THRESHOLD",
    "rotation_amplitude",
    "rotation_row",
    "rotation_coefficients_exact",
    "build_truncated_hamiltonian",
    "evolve_numeric",
    "reduced_density_matrices",
    "normalized_hermite",
    "overlap_quadrature",
    "eigenfunction_overlap",
]

MAX_ROTATION_TOTAL = 60
MAX_HAMILTONIAN_DIM = 4096
DEFAULT_MARGIN = 8
LEAKAGE_THRESHOLD = 1e-6


class OracleError(RuntimeError):
    pass


@dataclass(frozen=True)
class RotationAngle:
    """Rotation angle theta with tan(theta) = alpha."""

    theta: float

    @classmethod
    def from_alpha(cls, alpha: float) -> "RotationAngle":
        return cls(math.atan(alpha))


# -- rotation amplitudes -----------------------------------------------------


def _rotation_poly(c, s, s1: int, s2: int) -> list:
    """Coefficients of a^n b^(N-n) in (c a - s b)^s1 (s a + c b)^s2, n = 0..N.

    ``c`` and ``s`` may be floats or Fractions; binomials are exact ints.
    """
    total = s1 + s2
    out = []
    for n in range(total + 1):
        acc = 0
        for j in range(max(0, n - s2), min(s1, n) + 1):
            # j powers of a from the first factor, n - j from the second
            k = n - j
            acc += (
                math.comb(s1, j) * math.comb(s2, k)
                * c**j * (-s) ** (s1 - j) * s**k * c ** (s2 - k)
            )
        out.append(acc)
    return out


def rotation_row(theta: RotationAngle | float, s1: int, s2: int) -> np.ndarray:
    """<n, N-n| R(theta) |s1, s2> for n = 0..N, real."""
    if isinstance(theta, RotationAngle):
        theta = theta.theta
    total = s1 + s2
    if total > MAX_ROTATION_TOTAL:
        raise OracleError(f"rotation oracle limited to N <= {MAX_ROTATION_TOTAL}, got {total}")
    c, s = math.cos(theta), math.sin(theta)
    poly = _rotation_poly(c, s, s1, s2)
    norm = 1.0 / math.sqrt(math.factorial(s1) * math.factorial(s2))
    return np.array(
        [p * math.sqrt(math.factorial(n) * math.factorial(total - n)) * norm
         for n, p in enumerate(poly)]
    )


def rotation_amplitude(theta: RotationAngle | float, s1: int, s2: int, n: int, m: int) -> complex:
    """Matrix element <n, m| R(theta) |s1, s2>; zero off the manifold."""
    if n + m != s1 + s2 or n < 0 or m < 0:
        return 0j
    return complex(rotation_row(theta, s1, s2)[n])


def rotation_coefficients_exact(tan_theta: Fraction, s1: int, s2: int) -> list[Fraction]:
    """Exact polynomial coefficients for rational tan(theta).

    The amplitude onto (n, m) equals
    coeff[n] * sqrt(n! m! / (s1! s2!)) / (1 + t^2)^(N/2),
    so inner products of rows can be checked exactly in rationals.
    """
    t = Fraction(tan_theta)
    return _rotation_poly(Fraction(1), t, s1, s2)


# -- truncated Hamiltonian ---------------------------------------------------


@dataclass(frozen=True)
class TruncatedHamiltonian:
    """Coupled Hamiltonian on the product Fock grid, index = n * (M+1) + m.

    ``n`` counts oscillator quanta, ``m`` field quanta.
    """

    inputs: PhysicalInputs
    cutoff: int
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def index(self, n: int, m: int) -> int:
        return n * (self.cutoff + 1) + m

    def hermiticity_residual(self) -> float:
        return float(np.abs(self.matrix - self.matrix.conj().T).max())


def _ladder(cutoff: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, cutoff + 1, dtype=float)), k=1)


def build_truncated_hamiltonian(inputs: PhysicalInputs, cutoff: int) -> TruncatedHamiltonian:
    """Assemble

        H = w/2 (q^2 - d_q^2) + wc/2 (x^2 - d_x^2) + b^2 q^2 / 2 - i b sqrt(wc) q d_x

    with x = (a + a+)/sqrt2, d_x = (a - a+)/sqrt2 and likewise for q.  The
    quadratic terms are written as number operators so truncation does not
    distort the uncoupled spectrum.
    """
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    dim = (cutoff + 1) ** 2
    if dim > MAX_HAMILTONIAN_DIM:
        raise OracleError(f"dimension {dim} exceeds cap {MAX_HAMILTONIAN_DIM}")
    w, wc, b = inputs.omega, inputs.omega_c, inputs.beta
    eye = np.eye(cutoff + 1)
    lower = _ladder(cutoff)
    number = np.diag(np.arange(cutoff + 1, dtype=float))
    q = (lower + lower.T) / math.sqrt(2.0)
    dx = (lower - lower.T) / math.sqrt(2.0)
    # q^2 from the ladder form; its top corner is truncated consistently with the coupling
    q2 = q @ q
    osc = np.kron(wc * (number + 0.5 * eye), eye)
    fld = np.kron(eye, w * (number + 0.5 * eye) + 0.5 * b * b * q2)
    coupling = -1j * b * math.sqrt(wc) * np.kron(dx, q)
    h = osc + fld + coupling
    h = 0.5 * (h + h.conj().T)
    return TruncatedHamiltonian(inputs=inputs, cutoff=int(cutoff), matrix=h)


@dataclass(frozen=True)
class NumericEvolution:
    """States e^{-iHt}|s1, s2> on a time grid, shape (len(times), dim)."""

    hamiltonian: TruncatedHamiltonian
    source: tuple[int, int]
    times: np.ndarray
    states: np.ndarray
    leakage: float

    @property
    def contaminated(self) -> bool:
        return self.leakage > LEAKAGE_THRESHOLD

    def grid(self, i: int) -> np.ndarray:
        """State ``i`` reshaped to (oscillator, field) amplitudes."""
        m1 = self.hamiltonian.cutoff + 1
        return self.states[i].reshape(m1, m1)

    def manifold_amplitudes(self, total: int) -> np.ndarray:
        """Amplitudes on |k, total - k>, shape (len(times), total + 1)."""
        cut = self.hamiltonian.cutoff
        idx = [self.hamiltonian.index(k, total - k) for k in range(total + 1)
               if k <= cut and total - k <= cut]
        return self.states[:, idx]

    def norms(self) -> np.ndarray:
        return np.linalg.norm(self.states, axis=1)

    def energies(self) -> np.ndarray:
        h = self.hamiltonian.matrix
        return np.einsum("ti,ij,tj->t", self.states.conj(), h, self.states).real


def evolve_numeric(h: TruncatedHamiltonian, s1: int, s2: int, times) -> NumericEvolution:
    """Spectral evolution from |s1, s2>.

    ``leakage`` is the largest population found in the top two Fock layers of
    either mode; above ``LEAKAGE_THRESHOLD`` the run is flagged as
    cutoff-contaminated.
    """
    cut = h.cutoff
    if max(s1, s2) > cut:
        raise OracleError(f"initial state ({s1}, {s2}) outside cutoff {cut}")
    times = np.asarray(times, dtype=float)
    evals, evecs = np.linalg.eigh(h.matrix)
    psi0 = np.zeros(h.dim, dtype=complex)
    psi0[h.index(s1, s2)] = 1.0
    coeffs = evecs.conj().T @ psi0
    phases = np.exp(-1j * np.outer(times, evals))
    states = (phases * coeffs) @ evecs.T
    grid = np.abs(states.reshape(len(times), cut + 1, cut + 1)) ** 2
    top = max(0, cut - 1)
    leakage = float(max(grid[:, top:, :].sum(axis=(1, 2)).max(),
                        grid[:, :, top:].sum(axis=(1, 2)).max()))
    return NumericEvolution(hamiltonian=h, source=(s1, s2), times=times,
                            states=states, leakage=leakage)


def reduced_density_matrices(state_grid: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Partial traces of a pure two-mode state psi[n, m] over each mode."""
    rho_osc = state_grid @ state_grid.conj().T
    rho_fld = state_grid.T @ state_grid.conj()
    return rho_osc, rho_fld


# -- quadrature of the exact eigenfunction overlap --------------------------


def normalized_hermite(nmax: int, x: np.ndarray) -> np.ndarray:
    """c_k H_k(x) for k = 0..nmax, c_k = (2^k k! sqrt(pi))^-1/2, by recurrence."""
    x = np.asarray(x, dtype=float)
    out = np.zeros((nmax + 1,) + x.shape)
    out[0] = math.pi**-0.25
    if nmax >= 1:
        out[1] = math.sqrt(2.0) * x * out[0]
    for k in range(1, nmax):
        out[k + 1] = math.sqrt(2.0 / (k + 1)) * x * out[k] - math.sqrt(k / (k + 1)) * out[k - 1]
    return out


def _exact_transform(config: CouplingConfig) -> np.ndarray:
    """Map (p, q) -> (u, v) of the exact eigenfunctions.

    u = (p - alpha q)/sqrt(R), v = sqrt(s) (q (1 + alpha gamma) - gamma p).
    """
    r, s = config.scale_r, config.scale_s
    a, g = config.alpha_exact, config.gamma
    return np.array([
        [1.0 / math.sqrt(r), -a / math.sqrt(r)],
        [-g * math.sqrt(s), math.sqrt(s) * (1.0 + a * g)],
    ])


def _reduced_transform(alpha: float) -> np.ndarray:
    root = 1.0 / math.sqrt(1.0 + alpha * alpha)
    return root * np.array([[1.0, -alpha], [alpha, 1.0]])


def eigenfunction_overlap(transform_a: np.ndarray, idx_a: tuple[int, int],
                          transform_b: np.ndarray, idx_b: tuple[int, int],
                          order: int | None = None) -> float:
    """Integral over (p, q) of f_a f_b, f = |det T|^1/2 h_n(u) h_m(v) e^{-(u^2+v^2)/2}.

    Here (u, v) = T (p, q) and h_k are normalized Hermite polynomials, so
    every f is a normalized, real two-variable function.  The combined
    Gaussian is absorbed by a Cholesky change of variables, leaving a
    polynomial against e^{-|z|^2} that Gauss-Hermite integrates exactly.
    """
    degree = sum(idx_a) + sum(idx_b)
    if order is None:
        order = 2 * degree + 1
    quad = transform_a.T @ transform_a + transform_b.T @ transform_b
    try:
        chol = np.linalg.cholesky(quad)
    except np.linalg.LinAlgError as exc:
        raise DomainError("integrand does not decay; transform is singular") from exc
    # (p, q) = sqrt2 L^-T z  turns exp(-x.Q.x/2) into exp(-|z|^2)
    to_x = math.sqrt(2.0) * np.linalg.inv(chol).T
    jac = 2.0 / abs(np.linalg.det(chol))
    nodes, weights = hermgauss(order)
    z1, z2 = np.meshgrid(nodes, nodes, indexing="ij")
    w2 = np.outer(weights, weights)
    pts = to_x @ np.vstack([z1.ravel(), z2.ravel()])

    def poly(transform, idx):
        u, v = transform @ pts
        norm = math.sqrt(abs(np.linalg.det(transform)))
        return norm * normalized_hermite(idx[0], u)[idx[0]] * normalized_hermite(idx[1], v)[idx[1]]

    integrand = poly(transform_a, idx_a) * poly(transform_b, idx_b)
    return float(jac * np.sum(w2.ravel() * integrand))


def overlap_quadrature(config: CouplingConfig, s1: int, s2: int, n: int, m: int,
                       reduced: bool = False, order: int | None = None) -> complex:
    """Overlap of the eigenfunction (n, m) with the product state |s1>|s2>.

    Uses the exact eigenfunctions unless ``reduced`` is set, in which case
    the weak-coupling (pure rotation) form is used.  Both Gaussian factors
    are taken with decaying sign.  Includes the i^(s1) and i^(-n) bookkeeping
    phases; only the modulus is convention independent.
    """
    if reduced:
        t = _reduced_transform(config.alpha)
    else:
        t = _exact_transform(config)
        if not np.all(np.isfinite(t)) or config.kappa <= 0 or config.lambda_cap <= 0:
            raise DomainError("exact eigenfunction is not normalizable for these inputs")
    value = eigenfunction_overlap(t, (n, m), np.eye(2), (s1, s2), order=order)
    return (1j) ** ((s1 - n) % 4) * value
