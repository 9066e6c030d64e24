# ruff: noqa: S101
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import stats

from dhenara.semient.density import binary_entropy, exponential_entropy, gamma_entropy, mixture_entropy
from dhenara.semient.types import DomainError


class TestEntropyFormulas:
    def test_binary_entropy_peaks_at_half(self):
        assert binary_entropy(0.5) == pytest.approx(math.log(2.0), rel=1e-15)
        assert binary_entropy(0.1) < binary_entropy(0.5)

    def test_binary_entropy_is_symmetric(self):
        assert binary_entropy(0.2) == pytest.approx(binary_entropy(0.8), rel=1e-14)

    @pytest.mark.parametrize("gamma", [0.0, 1.0, -0.1, 1.5])
    def test_mixture_entropy_rejects_closed_endpoints(self, gamma):
        with pytest.raises(DomainError):
            mixture_entropy(gamma, 1.0)

    def test_mixture_entropy_decomposition(self):
        gamma, h_g = 0.3, 1.7
        expected = -0.3 * math.log(0.3) - 0.7 * math.log(0.7) + 0.7 * 1.7
        assert mixture_entropy(gamma, h_g) == pytest.approx(expected, rel=1e-14)

    def test_exponential_entropy(self):
        assert exponential_entropy(1.0) == pytest.approx(1.0)
        assert exponential_entropy(0.5) == pytest.approx(stats.expon(scale=2.0).entropy(), rel=1e-12)

    def test_gamma_entropy_with_unit_shape_is_exponential(self):
        assert gamma_entropy(1.0, 2.0) == pytest.approx(exponential_entropy(0.5), rel=1e-14)

    @given(
        st.floats(min_value=0.05, max_value=50.0),
        st.floats(min_value=0.01, max_value=100.0),
    )
    def test_gamma_entropy_matches_scipy(self, shape, scale):
        expected = float(stats.gamma(shape, scale=scale).entropy())
        assert gamma_entropy(shape, scale) == pytest.approx(expected, rel=1e-9, abs=1e-9)

    def test_gamma_entropy_rejects_bad_parameters(self):
        with pytest.raises(DomainError):
            gamma_entropy(0.0, 1.0)
        with pytest.raises(DomainError):
            gamma_entropy(1.0, -2.0)
