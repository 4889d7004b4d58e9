import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oscfield.dynamics import EvolutionSpec, default_grid, evolve
from oscfield.entanglement import (
    SchmidtSpectrum,
    binary_entropy,
    entropy_series,
    max_entropy_bound,
    measures,
    schmidt_number,
    schmidt_spectrum,
    von_neumann_entropy,
)

FIGURE_ALPHAS = (1.0, 0.75, 0.5, 0.1, 0.01)


class TestMeasures:
    def test_product_state(self):
        spec = SchmidtSpectrum([1.0, 0.0, 0.0, 0.0])
        assert von_neumann_entropy(spec) == 0.0
        assert schmidt_number(spec) == 1.0

    def test_two_equal_modes(self):
        m = measures(SchmidtSpectrum([0.5, 0.5]))
        assert m.entropy == pytest.approx(0.6931471805599453, rel=1e-15)
        assert m.schmidt_number == pytest.approx(2.0, rel=1e-15)

    @pytest.mark.parametrize("total", [1, 4, 10, 30])
    def test_uniform(self, total):
        spec = SchmidtSpectrum(np.full(total + 1, 1.0 / (total + 1)))
        assert von_neumann_entropy(spec) == pytest.approx(math.log(total + 1), rel=1e-13)
        assert schmidt_number(spec) == pytest.approx(total + 1, rel=1e-13)
        assert max_entropy_bound(total) == math.log(total + 1)

    def test_tiny_lambda_is_zero(self):
        assert von_neumann_entropy(SchmidtSpectrum([1.0, 1e-310])) == 0.0

    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            SchmidtSpectrum([0.5, 0.4])
        with pytest.raises(ValueError):
            SchmidtSpectrum([1.1, -0.1])

    def test_binary_entropy_endpoints(self):
        np.testing.assert_allclose(binary_entropy([0.0, 0.5, 1.0]), [0.0, math.log(2), 0.0], atol=1e-16)

    @settings(max_examples=60)
    @given(st.lists(st.floats(0.0, 1.0), min_size=1, max_size=12).filter(lambda v: sum(v) > 1e-3))
    def test_bounds(self, raw):
        lam = np.array(raw) / sum(raw)
        lam = lam / lam.sum()
        m = measures(SchmidtSpectrum(lam))
        assert 0.0 <= m.entropy <= math.log(len(lam)) + 1e-12
        assert 1.0 - 1e-12 <= m.schmidt_number <= len(lam) + 1e-9
        if m.entropy < 1e-9:
            assert m.schmidt_number - 1.0 < 1e-6


class TestSpectrumFromSnapshot:
    def test_initial(self):
        snap = evolve(EvolutionSpec((2, 3), 0.5, [0.0, 1.0]))[0]
        np.testing.assert_allclose(schmidt_spectrum(snap).lambdas, [0, 0, 1, 0, 0, 0], atol=1e-12)

    def test_even_split(self):
        # one quantum is half-way through its swap at a quarter period
        snap = evolve(EvolutionSpec((0, 1), 1.0, [0.0, math.pi / 2]))[1]
        np.testing.assert_allclose(schmidt_spectrum(snap).lambdas, [0.5, 0.5], atol=1e-12)

    def test_full_swap(self):
        snap = evolve(EvolutionSpec((0, 1), 1.0, [0.0, math.pi]))[1]
        np.testing.assert_allclose(schmidt_spectrum(snap).lambdas, [0.0, 1.0], atol=1e-12)

    def test_accepts_raw_values(self):
        lam = schmidt_spectrum(np.array([0.6, 0.8j])).lambdas
        np.testing.assert_allclose(lam, [0.36, 0.64])


class TestSeries:
    def test_binary_entropy_curve(self):
        phases = default_grid(513)
        series = entropy_series(EvolutionSpec((0, 1), 1.0, phases))
        np.testing.assert_allclose(series.entropy, binary_entropy(np.cos(phases / 2) ** 2), atol=1e-10)
        assert series.max_entropy == pytest.approx(math.log(2), abs=1e-10)
        assert series.argmax_phase == pytest.approx(math.pi / 2, abs=1e-12)

    @pytest.mark.parametrize("source", [(0, 10), (5, 10), (3, 3)])
    def test_starts_unentangled(self, source):
        series = entropy_series(EvolutionSpec(source, 0.75, default_grid(16)))
        assert series.entropy[0] == pytest.approx(0.0, abs=1e-12)
        assert series.schmidt_number[0] == pytest.approx(1.0, abs=1e-12)
        assert len(series) == 16

    def test_weak_mixing_regression(self):
        series = entropy_series(EvolutionSpec((0, 10), 0.01))
        assert series.max_entropy < 0.05
        # frozen from the default 1024-point grid
        assert series.max_entropy == pytest.approx(0.026086320056464007, rel=1e-9)

    @pytest.mark.parametrize("alpha", FIGURE_ALPHAS)
    def test_periodic_and_even(self, alpha):
        phases = default_grid(101)
        for source in [(0, 10), (5, 10)]:
            base = entropy_series(EvolutionSpec(source, alpha, phases)).entropy
            shifted = entropy_series(EvolutionSpec(source, alpha, phases + 2 * math.pi)).entropy
            mirrored = entropy_series(EvolutionSpec(source, -alpha, phases)).entropy
            np.testing.assert_allclose(base, shifted, atol=1e-10)
            np.testing.assert_allclose(base, mirrored, atol=1e-10)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 12), st.integers(0, 12), st.floats(-1.0, 1.0))
    def test_entropy_bounded(self, s1, s2, alpha):
        series = entropy_series(EvolutionSpec((s1, s2), alpha, default_grid(65)))
        assert series.entropy.max() <= math.log(s1 + s2 + 1) + 1e-12
        assert np.all(series.schmidt_number <= s1 + s2 + 1 + 1e-9)
        np.testing.assert_allclose(series.lambdas.sum(axis=1), 1.0, atol=1e-10)
