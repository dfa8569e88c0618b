#   ephoton -- Photon-electron entanglement in a highly excited radiation mode
#   Copyright (C) 2019  The ephoton developers
#
#   This program is free software: you can redistribute it and/or modify
#   it under the terms of the GNU General Public License as published by
#   the Free Software Foundation, either version 3 of the License, or
#   (at your option) any later version.
#
#   This program is distributed in the hope that it will be useful,
#   but WITHOUT ANY WARRANTY; without even the implied warranty of
#   MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#   GNU General Public License for more details.
#
#   You should have received a copy of the GNU General Public License
#   along with this program.  If not, see <https://www.gnu.org/licenses/>.

import numpy as np
import pytest
import scipy.linalg

from ephoton.common import RangeError
from ephoton.displacement import (SigmaValue, element, element_asymptotic,
                                  error_bound, mean_variance,
                                  photon_moments_exact, overlap_product,
                                  significant_band)


# Slack on fitted convergence exponents for higher order contamination
RATE_FIT_TOL = 0.02


def displacement_matrix(sigma, dim):
    a = np.diag(np.sqrt(np.arange(1, dim)), 1)
    return scipy.linalg.expm(sigma * a.T - np.conj(sigma) * a)


def test_element_zero_displacement():
    ks = np.arange(-4, 6)
    assert np.allclose(element(ks, 4, 0.0), ks == 0)


def test_element_matches_matrix_exponential():
    sigma = 0.8 * np.exp(0.6j)
    D = displacement_matrix(sigma, 90)
    for n in (0, 3, 10):
        ks = np.arange(-n, 15)
        assert np.allclose(element(ks, n, sigma), D[n + ks, n], atol=1e-10)


def test_sigma_value():
    sigma = SigmaValue.from_momentum(0.5, 2.0, chi=0.3)
    assert np.isclose(sigma.magnitude, 1.0)
    assert np.isclose(sigma.value, -np.exp(-0.3j))
    assert np.allclose(element(np.arange(3), 2, sigma),
                       element(np.arange(3), 2, sigma.value))


def test_element_below_vacuum():
    with pytest.raises(RangeError):
        element(-3, 2, 0.5)
    with pytest.raises(ValueError):
        element(0, -1, 0.5)


def test_element_unitarity():
    sigma = 2.0 - 0.5j
    ks = significant_band(50, sigma)
    assert np.isclose(np.sum(np.abs(element(ks, 50, sigma))**2), 1.0,
                      atol=1e-12)


def test_significant_band_tails():
    sigma = 1.5
    ks = significant_band(20, sigma, tol=1e-18, run=20)
    p = np.abs(element(ks, 20, sigma))**2
    assert np.all(p[-20:] < 1e-18)
    assert ks[0] == -20 or np.all(p[:20] < 1e-18)


def test_element_large_order_is_finite():
    n0 = 10**5
    sigma = 3.0 / (2.0 * np.sqrt(n0))
    ks = np.arange(-10, 11)
    values = element(ks, n0, sigma)
    assert np.all(np.isfinite(values))
    assert np.allclose(values, element_asymptotic(ks, n0, sigma), atol=1e-3)


def test_element_asymptotic_convergence():
    ks = np.arange(-6, 7)

    def deviation(n0):
        sigma = 2.5 * np.exp(0.4j) / (2.0 * np.sqrt(n0))
        return np.max(np.abs(element(ks, n0, sigma) -
                             element_asymptotic(ks, n0, sigma)))

    d_small, d_large = deviation(100), deviation(10000)
    assert d_large < d_small / 5.0
    assert d_large < 10.0 * error_bound(10000)


def test_element_convergence_exponent():
    ks = np.arange(-10, 11)
    n0s = (100, 1000, 10000, 100000)

    def deviation(n0):
        sigma = 3.0 / (2.0 * np.sqrt(n0))
        values = element(ks, n0, sigma)
        assert values.dtype == np.complex128
        return np.max(np.abs(values - element_asymptotic(ks, n0, sigma)))

    devs = [deviation(n0) for n0 in n0s]
    slope = np.polyfit(np.log(n0s), np.log(devs), 1)[0]
    assert -1.0 - RATE_FIT_TOL <= slope <= -0.5 + RATE_FIT_TOL


def test_element_hermitian():
    # <n + k|D[sigma]|n>^* = <n|D[-sigma]|n + k>
    sigma = 0.7 * np.exp(0.9j)
    for n in range(0, 16):
        for k in range(-n, 11):
            assert abs(element(k, n, sigma) -
                       np.conj(element(-k, n + k, -sigma))) < 1e-14


def test_mean_variance_by_summation():
    sigma = 0.7 + 0.4j
    n0 = 3
    ks = significant_band(n0, sigma)
    p = np.abs(element(ks, n0, sigma))**2
    n = n0 + ks
    mean = np.sum(n * p)
    var = np.sum((n - mean)**2 * p)
    expected_mean, expected_var = mean_variance(n0, sigma)
    assert np.isclose(mean, expected_mean, atol=1e-10)
    assert np.isclose(var, expected_var, atol=1e-10)


def test_photon_moments_exact_limit():
    q = 2.5
    for n0 in (10**3, 10**6):
        b = np.sqrt(q / (2.0 * n0))
        mean, var = photon_moments_exact(n0, b)
        assert np.isclose(mean, q / (2.0 * n0))
        assert np.isclose(var, q, rtol=2.0 / n0)


def test_overlap_product_by_completeness():
    rng = np.random.RandomState(4891)
    for n0 in (0, 5, 30):
        s1, s2 = rng.randn(2) + 1j * rng.randn(2)
        ks = np.arange(-n0, 400)
        expected = np.sum(np.conj(element(ks, n0, s2)) * element(ks, n0, s1))
        assert np.isclose(overlap_product(n0, s1, s2), expected, atol=1e-10)


def test_overlap_product_diagonal():
    assert np.isclose(overlap_product(12, 0.3 - 0.9j, 0.3 - 0.9j), 1.0)
