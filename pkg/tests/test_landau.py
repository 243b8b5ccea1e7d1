"""Laguerre polynomials, wavefunctions, and the ladder-operator oracle."""

import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.integrate import dblquad

from landau_tfd import (
    PhysicalParams,
    QuantumNumbers,
    angular_momentum_action,
    energy,
    ladder_action_check,
    laguerre,
    laguerre_norm_integral,
    length_scale,
    wavefunction,
    wavefunction_gram,
)

PARAMS = PhysicalParams(hbar=1.0, mass=1.0, omega=1.0, omega_ref=1.0, beta=1.0)


def laguerre_exact(n: int, ell: int, r: Fraction) -> Fraction:
    """Exact-rational finite-sum evaluation, the oracle for the recurrence."""
    total = Fraction(0)
    for j in range(n + 1):
        num = (-1) ** j * math.factorial(n + ell) * r**j
        den = math.factorial(j) * math.factorial(n - j) * math.factorial(ell + j)
        total += Fraction(num, den)
    return total


class TestLaguerre:
    def test_n0_is_one(self):
        for ell in (0, 2, 7):
            for r in (0.0, 0.5, 3.0):
                assert laguerre(0, ell, r) == 1.0

    def test_n1_ell0(self):
        for r in (0.0, 0.25, 2.0):
            assert laguerre(1, 0, r) == pytest.approx(1.0 - r, abs=1e-15)

    def test_pinned_value(self):
        # frozen from the exact rational sum: L_2^{(3)}(1) = 10 - 5 + 1/2
        assert laguerre_exact(2, 3, Fraction(1)) == Fraction(11, 2)
        assert laguerre(2, 3, 1.0) == pytest.approx(5.5, rel=1e-14)

    @pytest.mark.parametrize("r", [Fraction(1, 10), Fraction(1), Fraction(5)])
    def test_recurrence_matches_exact_sum(self, r):
        for n in range(11):
            for ell in range(11):
                want = float(laguerre_exact(n, ell, r))
                got = laguerre(n, ell, float(r))
                assert got == pytest.approx(want, rel=1e-12)

    def test_array_input(self):
        r = np.array([0.1, 1.0, 5.0])
        out = laguerre(3, 2, r)
        assert out.shape == r.shape
        assert out[1] == pytest.approx(laguerre(3, 2, 1.0))

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            laguerre(-1, 0, 1.0)
        with pytest.raises(ValueError):
            laguerre(2, -1, 1.0)
        with pytest.raises(ValueError):
            laguerre(2, 0, -0.5)


class TestEnergy:
    def test_ground_state(self):
        assert energy(0, PARAMS) == pytest.approx(0.5)

    def test_direct_substitution(self):
        p = PARAMS.with_(omega=2.0)
        assert energy(3, p) == pytest.approx(7.0)

    def test_uniform_spacing(self):
        p = PARAMS.with_(omega=0.7, hbar=2.0)
        for n in range(1, 12):
            assert energy(n, p) - energy(n - 1, p) == pytest.approx(p.hbar * p.omega)

    def test_negative_n(self):
        with pytest.raises(ValueError):
            energy(-1, PARAMS)


class TestNormIntegral:
    def test_pure_exponential(self):
        assert laguerre_norm_integral(0, 0, 0) == pytest.approx(1.0, abs=1e-14)

    def test_orthogonality(self):
        assert abs(laguerre_norm_integral(1, 0, 2)) < 1e-12

    def test_gamma_value(self):
        # Gamma(6)/2! = 120/2
        assert laguerre_norm_integral(2, 2, 3) == pytest.approx(60.0, rel=1e-13)

    def test_gamma_formula_grid(self):
        for ell in range(4):
            for n in range(4):
                for m in range(4):
                    want = math.gamma(n + ell + 1) / math.factorial(n) if n == m else 0.0
                    assert laguerre_norm_integral(n, m, ell) == pytest.approx(want, abs=1e-10)

    def test_quadrature_order_overflow(self):
        with pytest.raises(ValueError, match="quadrature order"):
            laguerre_norm_integral(200, 200, 10)

    def test_negative_arguments(self):
        with pytest.raises(ValueError):
            laguerre_norm_integral(-1, 0, 0)


class TestWavefunction:
    def test_origin_value(self):
        lam = length_scale(PARAMS)
        assert lam == pytest.approx(math.sqrt(2.0))
        got = wavefunction(QuantumNumbers(0, 0), 0.0, 0.0, PARAMS)
        assert got == pytest.approx(1.0 / (lam * math.sqrt(math.pi)))

    def test_phase_only_phi_dependence(self):
        q = QuantumNumbers(2, 1)
        for rho in (0.3, 1.1, 2.4):
            mags = {abs(wavefunction(q, rho, phi, PARAMS)) for phi in (0.0, 1.0, 4.5)}
            assert max(mags) - min(mags) < 1e-15

    def test_normalization_by_adaptive_quadrature(self):
        q = QuantumNumbers(2, 1)
        lam = length_scale(PARAMS)

        def density(rho, phi):
            return abs(wavefunction(q, rho, phi, PARAMS)) ** 2 * rho

        val, err = dblquad(density, 0.0, 2.0 * math.pi, 0.0, 15.0, epsabs=1e-11)
        assert lam**2 * val == pytest.approx(1.0, abs=1e-9)

    def test_invalid_quantum_numbers(self):
        with pytest.raises(ValueError):
            QuantumNumbers(1, -2)
        with pytest.raises(ValueError):
            QuantumNumbers(-1, 0)

    def test_negative_ell_norm(self):
        # the ell < 0 states map onto conjugated positive-ell states
        q = QuantumNumbers(3, -2)
        plus = wavefunction(QuantumNumbers(1, 2), 0.8, 0.4, PARAMS)
        minus = wavefunction(q, 0.8, 0.4, PARAMS)
        assert minus == pytest.approx(np.conjugate(plus), rel=1e-13)

    def test_gram_identity(self):
        states = [
            QuantumNumbers(n, ell)
            for n in range(5)
            for ell in range(-n, 5 - n)
            if n + abs(ell) <= 4
        ]
        gram = wavefunction_gram(states, PARAMS)
        assert np.max(np.abs(gram - np.eye(len(states)))) < 1e-8


class TestLadderOracle:
    def test_annihilation_of_vacuum(self):
        with pytest.warns(RuntimeWarning):
            assert ladder_action_check(QuantumNumbers(0, 0), "a", PARAMS) == 0.0
        with pytest.warns(RuntimeWarning):
            assert ladder_action_check(QuantumNumbers(1, -1), "b", PARAMS) == 0.0

    def test_a_dagger_coefficient(self):
        got = ladder_action_check(QuantumNumbers(1, 0), "a_dagger", PARAMS)
        assert got == pytest.approx(math.sqrt(2.0), abs=1e-4)

    def test_b_dagger_coefficient(self):
        got = ladder_action_check(QuantumNumbers(0, 2), "b_dagger", PARAMS)
        assert got == pytest.approx(math.sqrt(3.0), abs=1e-4)

    def test_lowering_coefficients(self):
        assert ladder_action_check(QuantumNumbers(2, 0), "a", PARAMS) == pytest.approx(
            math.sqrt(2.0), abs=1e-4
        )
        assert ladder_action_check(QuantumNumbers(1, 1), "b", PARAMS) == pytest.approx(
            math.sqrt(2.0), abs=1e-4
        )

    def test_unknown_operator(self):
        with pytest.raises(ValueError):
            ladder_action_check(QuantumNumbers(1, 0), "c", PARAMS)


class TestAngularMomentum:
    @pytest.mark.parametrize("n,ell", [(0, 0), (1, 3), (2, -1), (0, 2)])
    def test_eigenvalue(self, n, ell):
        got = angular_momentum_action(QuantumNumbers(n, ell), PARAMS)
        assert got == pytest.approx(ell, abs=1e-4)
