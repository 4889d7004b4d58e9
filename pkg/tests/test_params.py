import dataclasses
import math
import warnings

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oscfield.params import (
    Branch,
    DomainError,
    PhysicalInputs,
    derive_coupling,
    derive_epsilon,
    eigenenergy,
    eigenenergy_epsilon_zero,
    mixing_from_epsilon,
    symmetrized_energy,
)

mp.mp.dps = 40


def mp_epsilon(w, wc, b):
    w, wc, b = mp.mpf(w), mp.mpf(wc), mp.mpf(b)
    return (w**2 - wc**2 + b**2 * w) / (2 * b * mp.sqrt(w) * wc)


def mp_g_s(w, wc, b):
    """Upper/lower-branch G and S evaluated in 40-digit arithmetic."""
    w, wc, b = mp.mpf(w), mp.mpf(wc), mp.mpf(b)
    e = mp_epsilon(w, wc, b)
    sign = 1 if e > 0 else -1
    a = mp.sqrt(wc / w) * (e - sign * mp.sqrt(e**2 + 1))
    sigma = 1 / (1 + a**2 * w / wc)
    g = 1 - sign * b * mp.sqrt(w) / (2 * wc * sigma * mp.sqrt(e**2 + 1))
    s = 1 - b * wc / w**1.5 * (e - sign * mp.sqrt(e**2 + 1)) + b**2 / w
    return g, s


def resonant(beta=1e-3):
    return PhysicalInputs(1.0, 1.0, beta)


class TestEpsilon:
    def test_resonant_reduces_to_beta_over_two(self):
        assert derive_epsilon(resonant()) == pytest.approx(5e-4, rel=1e-15)

    def test_detuned_against_extended_precision(self):
        eps = derive_epsilon(PhysicalInputs(1.002, 1.0, 1e-3))
        assert eps == pytest.approx(float(mp_epsilon("1.002", 1, "1e-3")), rel=1e-12)
        assert eps == pytest.approx(2.000501497753993, rel=1e-12)

    def test_vanishing_coupling_at_resonance(self):
        values = [derive_epsilon(resonant(b)) for b in (1e-2, 1e-4, 1e-6, 1e-8)]
        assert all(v > 0 for v in values)
        assert values == sorted(values, reverse=True)
        assert values[-1] < 1e-8

    def test_no_cancellation_near_resonance(self):
        w = 1.0 + 1e-9
        eps = derive_epsilon(PhysicalInputs(w, 1.0, 1e-6))
        assert eps == pytest.approx(float(mp_epsilon(w, 1, "1e-6")), rel=1e-9)

    def test_overflow_is_domain_error(self):
        with pytest.raises(DomainError):
            derive_epsilon(PhysicalInputs(1e200, 1.0, 1e-300))


class TestInputs:
    @pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
    def test_rejects_nonpositive_or_nonfinite(self, bad):
        with pytest.raises(DomainError):
            PhysicalInputs(1.0, 1.0, bad)
        with pytest.raises(DomainError):
            PhysicalInputs(bad, 1.0, 1e-3)

    def test_strong_coupling_is_flagged(self):
        with pytest.warns(RuntimeWarning, match="beta"):
            PhysicalInputs(1.0, 1.0, 0.2)
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            PhysicalInputs(1.0, 1.0, 0.05)


class TestCoupling:
    def test_resonant_values(self):
        cfg = derive_coupling(resonant())
        assert cfg.branch is Branch.UPPER
        e = mp_epsilon(1, 1, "1e-3")
        alpha = e - mp.sqrt(e**2 + 1)
        assert cfg.alpha == pytest.approx(float(alpha), rel=1e-14)
        assert cfg.alpha == pytest.approx(-0.9995, abs=1e-6)
        assert cfg.sigma_reduced == pytest.approx(0.50025, abs=1e-8)

    def test_branch_follows_sign_of_epsilon(self):
        assert derive_coupling(PhysicalInputs(1.01, 1.0, 1e-3)).branch is Branch.UPPER
        assert derive_coupling(PhysicalInputs(0.99, 1.0, 1e-3)).branch is Branch.LOWER

    def test_epsilon_zero(self):
        b = 1e-3
        inputs = PhysicalInputs(1.0, math.sqrt(1.0 + b * b), b)
        cfg = derive_coupling(inputs)
        assert cfg.branch is Branch.EPSILON_ZERO
        assert abs(cfg.alpha) == 1.0
        assert cfg.sigma_reduced == 0.5
        assert cfg.gamma == pytest.approx(0.5 * math.sqrt(inputs.omega / inputs.omega_c), rel=1e-12)
        upper, lower = cfg.alpha_branches
        assert abs(upper) == pytest.approx(abs(lower), rel=1e-12)

    def test_decoupling_limit(self):
        cfg = derive_coupling(PhysicalInputs(1.5, 1.0, 1e-9))
        assert abs(cfg.epsilon) > 1e8
        assert abs(cfg.alpha) < 1e-8
        assert abs(cfg.gamma) < 1e-8

    def test_branch_product(self):
        for w in (0.9, 1.0, 1.2):
            cfg = derive_coupling(PhysicalInputs(w, 1.0, 1e-2))
            up, lo = cfg.alpha_branches
            assert up * lo == pytest.approx(-1.0 / w, rel=1e-12)

    def test_level_spacing_matches_spectrum(self):
        cfg = derive_coupling(PhysicalInputs(1.001, 1.0, 1e-3))
        e10 = eigenenergy(cfg, 1, 0).value
        e01 = eigenenergy(cfg, 0, 1).value
        assert cfg.delta == pytest.approx(e10 - e01, rel=1e-9)
        # beta*sqrt(eps^2 + 1) avoided-crossing splitting, to first order
        assert abs(cfg.delta) == pytest.approx(1e-3 * math.hypot(cfg.epsilon, 1.0), rel=1e-3)


epsilons = st.floats(min_value=-10, max_value=10, allow_nan=False)


class TestMixingProperties:
    @given(epsilons)
    def test_range_and_magnitude(self, eps):
        a = mixing_from_epsilon(eps)
        assert abs(a) <= 1.0
        assert abs(a) == pytest.approx(math.sqrt(eps * eps + 1) - abs(eps), rel=1e-12, abs=1e-15)
        sigma = 1.0 / (1.0 + a * a)
        assert 0.5 <= sigma <= 1.0

    @given(epsilons.filter(lambda e: e != 0.0))
    def test_parity(self, eps):
        assert mixing_from_epsilon(-eps) == -mixing_from_epsilon(eps)

    def test_monotone_on_grid(self):
        grid = np.linspace(0, 10, 2001)
        mags = [abs(mixing_from_epsilon(e)) for e in grid]
        assert np.all(np.diff(mags) < 0)
        mags_neg = [abs(mixing_from_epsilon(-e)) for e in grid]
        np.testing.assert_array_equal(mags, mags_neg)

    @settings(max_examples=60)
    @given(st.floats(0.98, 1.02), st.floats(1e-5, 1e-2))
    def test_sigma_consistency(self, w, b):
        cfg = derive_coupling(PhysicalInputs(w, 1.0, b))
        assert abs(cfg.sigma_exact - cfg.sigma_reduced) < 10 * (b + abs(w - 1.0) / w)


class TestEigenenergy:
    def test_resonant_ground_state(self):
        cfg = derive_coupling(resonant())
        e = eigenenergy(cfg, 0, 0)
        g, s = mp_g_s(1, 1, "1e-3")
        assert e.g_factor == pytest.approx(float(g), rel=1e-13)
        assert e.s_factor == pytest.approx(float(s), rel=1e-13)
        assert e.g_factor == pytest.approx(0.9990005, abs=1e-9)
        assert e.s_factor == pytest.approx(1.0010005, abs=1e-9)
        assert e.value == pytest.approx(float((mp.sqrt(g) + mp.sqrt(s)) / 2), rel=1e-14)

    def test_formula(self):
        cfg = derive_coupling(PhysicalInputs(1.3, 0.8, 0.05))
        e = eigenenergy(cfg, 3, 2)
        expect = 0.8 * 3.5 * math.sqrt(e.g_factor) + 1.3 * 2.5 * math.sqrt(e.s_factor)
        assert e.value == pytest.approx(expect, rel=1e-15)

    def test_weak_coupling_limit(self):
        cfg = derive_coupling(PhysicalInputs(1.3, 0.8, 1e-12))
        e = eigenenergy(cfg, 2, 1)
        assert e.g_factor == pytest.approx(1.0, abs=1e-11)
        assert e.s_factor == pytest.approx(1.0, abs=1e-11)
        assert e.value == pytest.approx(0.8 * 2.5 + 1.3 * 1.5, rel=1e-11)

    def test_linear_in_n(self):
        cfg = derive_coupling(resonant())
        gap = eigenenergy(cfg, 1, 0).value - eigenenergy(cfg, 0, 0).value
        assert gap == pytest.approx(math.sqrt(eigenenergy(cfg, 0, 0).g_factor), rel=1e-12)

    def test_rejects_negative_quanta(self):
        with pytest.raises(ValueError):
            eigenenergy(derive_coupling(resonant()), -1, 0)

    def test_nonpositive_factor_is_domain_error(self):
        # G, S stay positive for every physical input scanned; force G < 0
        cfg = dataclasses.replace(derive_coupling(resonant()), sigma_exact=1e-6)
        with pytest.raises(DomainError):
            eigenenergy(cfg, 0, 0)


class TestEpsilonZeroEnergy:
    def inputs(self, b=1e-3):
        return PhysicalInputs(1.0, math.sqrt(1.0 + b * b), b)

    def test_extended_precision(self):
        b = mp.mpf("1e-3")
        inp = self.inputs()
        w, wc = mp.mpf(1), mp.mpf(inp.omega_c)
        x, y, z = b * mp.sqrt(w) / wc, b * wc / w**1.5, b * b / w
        expect = wc / 4 * (mp.sqrt(1 + x) + mp.sqrt(1 - x)) + w / 4 * (
            mp.sqrt(1 + y + z) + mp.sqrt(1 - y + z))
        assert eigenenergy_epsilon_zero(inp, 0, 0) == pytest.approx(float(expect), rel=1e-14)

    def test_routing_from_eigenenergy(self):
        inp = self.inputs()
        cfg = derive_coupling(inp)
        assert eigenenergy(cfg, 2, 3).value == pytest.approx(
            eigenenergy_epsilon_zero(inp, 2, 3), rel=1e-15)

    def test_close_to_branch_average(self):
        b = 1e-3
        inp = self.inputs(b)
        sym = eigenenergy_epsilon_zero(inp, 1, 1)
        near_up = eigenenergy(derive_coupling(PhysicalInputs(1.0 + 1e-9, inp.omega_c, b)), 1, 1).value
        near_lo = eigenenergy(derive_coupling(PhysicalInputs(1.0 - 1e-9, inp.omega_c, b)), 1, 1).value
        assert sym == pytest.approx(0.5 * (near_up + near_lo), abs=10 * b * b)

    def test_gap(self):
        inp = self.inputs()
        gap = eigenenergy_epsilon_zero(inp, 1, 0) - eigenenergy_epsilon_zero(inp, 0, 0)
        x = inp.beta * math.sqrt(inp.omega) / inp.omega_c
        assert gap == pytest.approx(inp.omega_c / 2 * (math.sqrt(1 + x) + math.sqrt(1 - x)), rel=1e-13)

    def test_uncoupled_exact(self):
        for n in range(4):
            for m in range(4):
                assert symmetrized_energy(1.3, 0.7, 0.0, n, m) == 0.7 * (n + 0.5) + 1.3 * (m + 0.5)

    def test_requires_zero_epsilon(self):
        with pytest.raises(DomainError):
            eigenenergy_epsilon_zero(resonant(), 0, 0)

    def test_negative_radicand(self):
        with pytest.raises(DomainError):
            symmetrized_energy(1.0, 0.5, 1.0, 0, 0)
