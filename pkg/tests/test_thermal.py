import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spin_otto import oracle
from spin_otto.spin_model import SubstanceParams, spectrum
from spin_otto.thermal import (
    ThermalPoint,
    XState,
    binary_entropy,
    populations,
    reduced_entropy,
    thermal_xstate,
    von_neumann_entropy,
)


class TestPopulations:
    @pytest.mark.parametrize("t", [0.0, -1.0, math.inf, math.nan])
    def test_rejects_bad_temperature(self, t):
        with pytest.raises(ValueError):
            populations([-1, 0, 0, 1], t)

    def test_thermal_point_validates(self):
        with pytest.raises(ValueError):
            ThermalPoint(SubstanceParams(1, 1), 0.0)
        assert ThermalPoint(SubstanceParams(1, 1), 4.0).beta == 0.25

    def test_infinite_temperature(self):
        pops = populations(spectrum(SubstanceParams(5, 10)), 1e12)
        np.testing.assert_allclose(pops.p, 0.25, atol=1e-9)

    def test_zeeman_levels(self):
        pops = populations(spectrum(SubstanceParams(0, 4)), 4.0)
        # 30-digit mpmath evaluation of exp(-E/T)/Z
        np.testing.assert_allclose(
            pops.p, [0.534446645388523, 0.196611933241482, 0.196611933241482, 0.0723294881285133], atol=1e-14
        )
        assert math.exp(pops.log_z) == pytest.approx(5.08616126963049, rel=1e-13)
        assert pops.shift == -4.0

    def test_ground_state_limit(self):
        pops = populations(spectrum(SubstanceParams(5, 10)), 1e-3)
        np.testing.assert_allclose(pops.p, [1, 0, 0, 0], atol=1e-12)

    def test_no_overflow_at_large_beta(self):
        pops = populations([-1000.0, 0.0, 10.0, 1000.0], 1e-3)
        assert np.all(np.isfinite(pops.p))
        assert pops.log_z == pytest.approx(1e6, rel=1e-12)

    @pytest.mark.parametrize("c", [1e3, -1e3])
    def test_shift_invariance(self, c):
        energies = np.array([-7.8, 0.0, 5.0, 12.8])
        np.testing.assert_allclose(populations(energies + c, 2.0).p, populations(energies, 2.0).p, atol=1e-14)

    @settings(max_examples=200, deadline=None)
    @given(
        st.floats(0, 20), st.floats(0, 20), st.floats(min_value=0.05, max_value=100)
    )
    def test_normalized_and_monotone(self, mu, omega, t):
        p = populations(spectrum(SubstanceParams(mu, omega)), t).p
        assert abs(p.sum() - 1) < 1e-12
        assert np.all(np.diff(p) <= 1e-15)


class TestXState:
    def test_infinite_temperature(self):
        x = thermal_xstate(SubstanceParams(3, 7), 1e12)
        np.testing.assert_allclose([x.a, x.b, x.d, x.w, x.z], [0.25, 0.25, 0.25, 0, 0], atol=1e-9)

    def test_pure_twisting(self):
        x = thermal_xstate(SubstanceParams(4, 0), 1.0)
        # w = z = -tanh(2)/4
        np.testing.assert_allclose([x.a, x.b, x.d], 0.25, atol=1e-14)
        assert x.w == pytest.approx(-0.241006895019, abs=1e-11)
        assert x.z == pytest.approx(-0.241006895019, abs=1e-11)

    def test_ground_state(self, ground_5_10):
        x = ground_5_10
        assert abs(x.b) < 1e-12 and abs(x.z) < 1e-12
        assert x.a == pytest.approx(0.0149287499273, abs=1e-11)
        assert x.d == pytest.approx(0.985071250073, abs=1e-11)
        assert x.w == pytest.approx(-0.121267812518, abs=1e-11)
        assert x.a * x.d == pytest.approx(x.w**2, abs=1e-9)

    def test_closed_form_entries(self):
        mu, omega, t = 5.0, 10.0, 2.0
        spec = spectrum(SubstanceParams(mu, omega))
        p = populations(spec, t).p
        k, am, ap = spec.kappa, spec.a_minus, spec.a_plus
        x = thermal_xstate(SubstanceParams(mu, omega), t)
        assert x.a == pytest.approx(p[0] * (2 * omega - k) ** 2 / am**2 + p[3] * (2 * omega + k) ** 2 / ap**2, rel=1e-10)
        assert x.d == pytest.approx(p[0] * mu**2 / am**2 + p[3] * mu**2 / ap**2, rel=1e-10)
        assert x.w == pytest.approx(p[0] * mu * (2 * omega - k) / am**2 + p[3] * mu * (2 * omega + k) / ap**2, rel=1e-10)

    def test_matches_oracles(self, rng):
        for mu, omega, t in zip(rng.uniform(0, 20, 1000), rng.uniform(0, 20, 1000), rng.uniform(0.05, 100, 1000)):
            params = SubstanceParams(mu, omega)
            m = thermal_xstate(params, t).matrix()
            np.testing.assert_allclose(m, oracle.thermal_state_direct(params, t), atol=1e-10)
            np.testing.assert_allclose(m, oracle.gibbs_matrix_exponential(params, t), atol=1e-8)

    @settings(max_examples=300, deadline=None)
    @given(st.floats(0, 20), st.floats(0, 20), st.floats(min_value=0.05, max_value=100))
    def test_validity_and_spectrum(self, mu, omega, t):
        params = SubstanceParams(mu, omega)
        x = thermal_xstate(params, t)
        assert abs(x.trace() - 1) < 1e-12
        assert min(x.a, x.b, x.d) >= 0
        assert x.a * x.d >= x.w**2 - 1e-12
        assert x.b**2 >= x.z**2 - 1e-12
        p = populations(spectrum(params), t).p
        np.testing.assert_allclose(np.sort(x.eigenvalues()), np.sort(p), atol=1e-10)


class TestEntropies:
    def test_pure(self):
        assert von_neumann_entropy([1, 0, 0, 0]) == 0.0

    def test_maximally_mixed(self):
        assert von_neumann_entropy([0.25] * 4) == pytest.approx(2.0, abs=1e-15)

    def test_reference_value(self):
        # mpmath -sum p log2 p at 30 digits for the (mu=0, omega=4, T=4) populations
        pops = populations(spectrum(SubstanceParams(0, 4)), 4.0)
        assert von_neumann_entropy(pops) == pytest.approx(1.67988307596634, abs=1e-12)

    def test_monotone_in_temperature(self):
        params = SubstanceParams(3.0, 2.0)
        spec = spectrum(params)
        s = [von_neumann_entropy(populations(spec, t)) for t in np.geomspace(0.01, 100, 200)]
        assert np.all(np.diff(s) >= -1e-12)
        assert 0 <= s[0] and s[-1] <= 2

    def test_binary_entropy(self):
        assert binary_entropy(0.5) == 1.0
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0
        assert binary_entropy(1.0000000001) == 0.0

    def test_reduced_maximally_mixed(self, mixed):
        assert reduced_entropy(mixed) == pytest.approx(1.0)

    def test_reduced_singlet(self, singlet):
        assert reduced_entropy(singlet) == pytest.approx(1.0)

    def test_reduced_pure_ground(self, ground_5_10):
        # mpmath h[a] with a from the 30-digit Gibbs matrix
        assert reduced_entropy(ground_5_10) == pytest.approx(0.11193031881, abs=1e-10)

    def test_reduced_matches_partial_traces(self, rng):
        for mu, omega, t in rng.uniform([0, 0, 0.1], [10, 10, 10], size=(50, 3)):
            x = thermal_xstate(SubstanceParams(mu, omega), t)
            m = x.matrix()
            assert reduced_entropy(x) == pytest.approx(oracle.entropy_bits(oracle.partial_trace_b(m)), abs=1e-10)
            assert reduced_entropy(x) == pytest.approx(oracle.entropy_bits(oracle.partial_trace_a(m)), abs=1e-10)


def test_xstate_is_frozen():
    x = XState(0.25, 0.25, 0.25, 0.0, 0.0)
    with pytest.raises(AttributeError):
        x.a = 1.0
