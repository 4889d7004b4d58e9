"""Diagonalization constants and eigenenergies of the oscillator + single field mode.

All quantities are in atomic units.  Three physical inputs fix everything:
the field-mode frequency ``omega``, the oscillator frequency ``omega_c`` and
the coupling ``beta``.  The detuning parameter ``epsilon`` selects the sign
branch of the mixing parameter; ``epsilon == 0`` is a separate branch whose
energies come from the symmetrized Hamiltonian.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field

__all__ = [
    "DomainError",
    "Branch",
    "PhysicalInputs",
    "CouplingConfig",
    "EigenEnergy",
    "EPSILON_ZERO_TOL",
    "STRONG_COUPLING_BETA",
    "derive_epsilon",
    "derive_coupling",
    "eigenenergy",
    "eigenenergy_epsilon_zero",
    "mixing_from_epsilon",
    "symmetrized_energy",
]

EPSILON_ZERO_TOL = 1e-12
STRONG_COUPLING_BETA = 0.1


class DomainError(ValueError):
    """Input outside the region where a closed-form expression is valid."""


class Branch(enum.Enum):
    UPPER = "upper"
    LOWER = "lower"
    EPSILON_ZERO = "epsilon-zero"


@dataclass(frozen=True)
class PhysicalInputs:
    """Field frequency, oscillator frequency and coupling constant.

    ``beta`` is sqrt(4*pi/(omega*V)) for quantization volume V; realistic
    cavities give 1e-5..1e-3.  Values above ``STRONG_COUPLING_BETA`` are
    accepted with a warning since the small-coupling reduction degrades.
    """

    omega: float
    omega_c: float
    beta: float

    def __post_init__(self):
        for name in ("omega", "omega_c", "beta"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be positive and finite, got {value!r}")
            object.__setattr__(self, name, float(value))
        if self.beta > STRONG_COUPLING_BETA:
            warnings.warn(
                f"beta={self.beta:g} exceeds {STRONG_COUPLING_BETA}; the reduced "
                "amplitudes assume weak coupling",
                RuntimeWarning,
                stacklevel=3,
            )


@dataclass(frozen=True)
class CouplingConfig:
    """Every derived constant of the diagonalizing transformation.

    ``alpha`` is the reduced mixing parameter (tan of the rotation angle),
    ``alpha_exact`` carries the sqrt(omega_c/omega) prefactor.  ``delta`` is
    the level spacing of the exact spectrum along a fixed-excitation manifold
    and sets the phase ``phi = delta * t``; ``delta_first_order`` is the first-order
    expression beta*sqrt(omega)*(alpha + epsilon), kept for comparison.
    """

    inputs: PhysicalInputs
    epsilon: float
    branch: Branch
    alpha: float
    alpha_exact: float
    gamma: float
    sigma_exact: float
    lambda_cap: float
    kappa: float
    sigma_reduced: float
    delta: float
    delta_first_order: float
    # both branch values of alpha_exact: (upper, lower)
    alpha_branches: tuple[float, float] = field(default=(math.nan, math.nan))

    @property
    def sign(self) -> int:
        """+1 for the upper sign, -1 for the lower one (epsilon -> 0+ at zero)."""
        return -1 if self.branch is Branch.LOWER else 1

    @property
    def scale_r(self) -> float:
        """R = sqrt(1/(sigma*kappa)), Gaussian width of the oscillator factor."""
        return math.sqrt(1.0 / (self.sigma_exact * self.kappa))

    @property
    def scale_s(self) -> float:
        """s = sqrt(Lambda/sigma), Gaussian width of the field factor."""
        return math.sqrt(self.lambda_cap / self.sigma_exact)

    @property
    def theta(self) -> float:
        return math.atan(self.alpha)


@dataclass(frozen=True)
class EigenEnergy:
    n: int
    m: int
    value: float
    g_factor: float
    s_factor: float


def derive_epsilon(inputs: PhysicalInputs) -> float:
    w, wc, b = inputs.omega, inputs.omega_c, inputs.beta
    # factored numerator avoids cancellation when omega ~ omega_c
    num = (w - wc) * (w + wc) + b * b * w
    eps = num / (2.0 * b * math.sqrt(w) * wc)
    if not math.isfinite(eps):
        raise DomainError(f"detuning parameter is not finite for {inputs}")
    return eps


def mixing_from_epsilon(eps: float) -> float:
    """Reduced mixing parameter alpha = eps -/+ sqrt(eps^2 + 1).

    Upper sign for eps > 0, lower for eps < 0, so alpha -> 0 as |eps| -> inf.
    Written as -sign(eps)/(|eps| + sqrt(eps^2+1)) to stay accurate for large
    |eps|.  At eps == 0 returns -1, the eps -> 0+ limit.
    """
    mag = 1.0 / (abs(eps) + math.hypot(eps, 1.0))
    return mag if eps < 0 else -mag


def _g_s_factors(inputs: PhysicalInputs, eps: float, sign: int, sigma: float, alpha_red: float):
    w, wc, b = inputs.omega, inputs.omega_c, inputs.beta
    g = 1.0 - sign * b * math.sqrt(w) / (2.0 * wc * sigma * math.hypot(eps, 1.0))
    s = 1.0 - b * wc / w**1.5 * alpha_red + b * b / w
    return g, s


def _branch_constants(inputs: PhysicalInputs, eps: float, sign: int):
    w, wc, b = inputs.omega, inputs.omega_c, inputs.beta
    root = math.hypot(eps, 1.0)
    if sign == (1 if eps >= 0 else -1):
        alpha_red = mixing_from_epsilon(eps)
    else:
        # the non-decoupling branch; no cancellation there
        alpha_red = eps - sign * root
    alpha = math.sqrt(wc / w) * alpha_red
    gamma = sign * 0.5 * math.sqrt(w / wc) / root
    lam = 1.0 + alpha * alpha * wc / w - 2.0 * b * alpha * math.sqrt(wc) / w + b * b / w
    sigma = 1.0 / (1.0 + alpha * alpha * w / wc)
    kappa = (
        sigma
        + 2.0 * b * eps * gamma * gamma / math.sqrt(w)
        - 2.0 * b * gamma / math.sqrt(wc) * (1.0 + alpha * gamma)
    )
    return alpha_red, alpha, gamma, lam, sigma, kappa


def derive_coupling(inputs: PhysicalInputs) -> CouplingConfig:
    eps = derive_epsilon(inputs)
    if abs(eps) < EPSILON_ZERO_TOL:
        branch = Branch.EPSILON_ZERO
        sign = 1
    elif eps > 0:
        branch, sign = Branch.UPPER, 1
    else:
        branch, sign = Branch.LOWER, -1

    # inside the zero tolerance the constants are taken at exactly eps = 0
    eps_eff = 0.0 if branch is Branch.EPSILON_ZERO else eps
    alpha_red, alpha, gamma, lam, sigma, kappa = _branch_constants(inputs, eps_eff, sign)
    upper = _branch_constants(inputs, eps_eff, 1)[1]
    lower = _branch_constants(inputs, eps_eff, -1)[1]

    g, s = _g_s_factors(inputs, eps_eff, sign, sigma, alpha_red)
    if g <= 0 or s <= 0:
        raise DomainError(f"coupling too strong: G={g:g}, S={s:g}")
    w, wc, b = inputs.omega, inputs.omega_c, inputs.beta
    delta = wc * math.sqrt(g) - w * math.sqrt(s)
    delta_first_order = b * math.sqrt(w) * (alpha_red + eps_eff)

    return CouplingConfig(
        inputs=inputs,
        epsilon=eps,
        branch=branch,
        alpha=alpha_red,
        alpha_exact=alpha,
        gamma=gamma,
        sigma_exact=sigma,
        lambda_cap=lam,
        kappa=kappa,
        sigma_reduced=1.0 / (1.0 + alpha_red * alpha_red),
        delta=delta,
        delta_first_order=delta_first_order,
        alpha_branches=(upper, lower),
    )


def _check_quanta(n: int, m: int) -> None:
    if n < 0 or m < 0 or int(n) != n or int(m) != m:
        raise ValueError(f"quantum numbers must be nonnegative integers, got ({n}, {m})")


def eigenenergy(config: CouplingConfig, n: int, m: int) -> EigenEnergy:
    """E = omega_c (n+1/2) sqrt(G) + omega (m+1/2) sqrt(S) on the stored branch.

    For the epsilon-zero branch the symmetrized energy is returned, with G and
    S reported as the effective factors that reproduce it.
    """
    _check_quanta(n, m)
    inputs = config.inputs
    if config.branch is Branch.EPSILON_ZERO:
        g, s = _epsilon_zero_factors(inputs)
    else:
        g, s = _g_s_factors(
            inputs, config.epsilon, config.sign, config.sigma_exact, config.alpha
        )
        if g <= 0 or s <= 0:
            raise DomainError(f"coupling too strong: G={g:g}, S={s:g}")
    value = inputs.omega_c * (n + 0.5) * math.sqrt(g) + inputs.omega * (m + 0.5) * math.sqrt(s)
    return EigenEnergy(n=int(n), m=int(m), value=value, g_factor=g, s_factor=s)


def _epsilon_zero_factors(inputs: PhysicalInputs) -> tuple[float, float]:
    sqrt_g, sqrt_s = _symmetrized_roots(inputs.omega, inputs.omega_c, inputs.beta)
    return sqrt_g * sqrt_g, sqrt_s * sqrt_s


def _symmetrized_roots(w: float, wc: float, b: float) -> tuple[float, float]:
    x = b * math.sqrt(w) / wc
    y = b * wc / w**1.5
    z = b * b / w
    radicands = (1.0 + x, 1.0 - x, 1.0 + y + z, 1.0 - y + z)
    if min(radicands) < 0:
        raise DomainError(
            f"negative radicand in epsilon-zero energy for omega={w}, omega_c={wc}, beta={b}"
        )
    sqrt_g = 0.5 * (math.sqrt(radicands[0]) + math.sqrt(radicands[1]))
    sqrt_s = 0.5 * (math.sqrt(radicands[2]) + math.sqrt(radicands[3]))
    return sqrt_g, sqrt_s


def symmetrized_energy(omega: float, omega_c: float, beta: float, n: int, m: int) -> float:
    """Symmetrized-Hamiltonian energy without the epsilon = 0 check.

    Accepts ``beta = 0``, where it reduces to the uncoupled spectrum.
    """
    _check_quanta(n, m)
    sqrt_g, sqrt_s = _symmetrized_roots(omega, omega_c, beta)
    return omega_c * (n + 0.5) * sqrt_g + omega * (m + 0.5) * sqrt_s


def eigenenergy_epsilon_zero(inputs: PhysicalInputs, n: int, m: int) -> float:
    """Energy at epsilon = 0 from the average of the two one-sided Hamiltonians."""
    eps = derive_epsilon(inputs)
    if abs(eps) >= EPSILON_ZERO_TOL:
        raise DomainError(f"epsilon={eps:g} is not zero within {EPSILON_ZERO_TOL:g}")
    return symmetrized_energy(inputs.omega, inputs.omega_c, inputs.beta, n, m)
