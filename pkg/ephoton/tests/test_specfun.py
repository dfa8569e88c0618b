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
import scipy.special

from hypothesis import given, settings, strategies as st

from ephoton.common import RangeError
from ephoton.specfun import (LogScaled, bessel_i_int, log_bessel_i_int,
                             bessel_i_real_order, bessel_j, laguerre,
                             log_laguerre, jacobi_p, legendre_p,
                             log_legendre_p, log_ratio_factorials,
                             log_jacobi_p_shifted, log_legendre_p_shifted)


def test_bessel_i_int_values():
    assert np.isclose(bessel_i_int(1, 2.5), 2.516716, atol=1e-6)
    assert np.isclose(bessel_i_int(-3, 1.7), bessel_i_int(3, 1.7))
    assert bessel_i_int(0, 0.0) == 1.0
    assert bessel_i_int(4, 0.0) == 0.0


def test_bessel_i_int_overflow():
    with pytest.raises(RangeError):
        bessel_i_int(0, 1e4)

    # The log scaled variant keeps working
    res = log_bessel_i_int(0, 1e4)
    expected = np.log(scipy.special.ive(0, 1e4)) + 1e4
    assert np.isclose(res.log_magnitude, expected, rtol=1e-14)
    assert res.phase == 1.0


def test_log_bessel_i_int_complex():
    z = 3.0 / (1.0 + 0.7j)
    ks = np.arange(-5, 6)
    res = log_bessel_i_int(ks, z)
    assert np.allclose(res.value, scipy.special.iv(np.abs(ks), z),
                       rtol=1e-12, atol=0.0)


def test_bessel_i_real_order_half_integer():
    x = np.array([0.3, 1.0, 2.5, 7.0])
    for xi in x:
        assert np.isclose(bessel_i_real_order(0.5, xi),
                          np.sqrt(2.0 / (np.pi * xi)) * np.sinh(xi),
                          rtol=1e-12)
        assert np.isclose(bessel_i_real_order(-0.5, xi),
                          np.sqrt(2.0 / (np.pi * xi)) * np.cosh(xi),
                          rtol=1e-12)


def test_bessel_i_real_order_integer_orders():
    nu = np.array([-3.0, -1.0, 0.0, 2.0, 5.0])
    assert np.allclose(bessel_i_real_order(nu, 1.5),
                       scipy.special.iv(np.abs(nu), 1.5), rtol=1e-12)


def test_bessel_i_real_order_matches_scipy():
    nu = np.linspace(-4.7, 4.7, 21)
    assert np.allclose(bessel_i_real_order(nu, 2.0),
                       scipy.special.iv(nu, 2.0), rtol=1e-10, atol=1e-14)


def test_bessel_j():
    assert np.isclose(bessel_j(1, 1.0), 0.4400506, atol=1e-7)
    assert np.isclose(bessel_j(-1, 1.0), -bessel_j(1, 1.0))


def test_laguerre_matches_scipy():
    x = np.linspace(0.0, 12.0, 25)
    for n in (0, 1, 2, 7, 30):
        for s in (0, 1, 4):
            assert np.allclose(laguerre(n, s, x),
                               scipy.special.eval_genlaguerre(n, s, x),
                               rtol=1e-10, atol=1e-10)


def test_laguerre_complex_argument():
    x = 0.4 - 1.3j
    assert np.isclose(laguerre(1, 3, x), 4.0 - x)
    assert np.isclose(laguerre(2, 0, x), 1.0 - 2.0 * x + 0.5 * x * x)


def test_log_laguerre_large_order():
    # L_n(-x) grows without bound; the scaled variant must stay finite
    res = log_laguerre(20000, 0, -50.0)
    assert np.isfinite(res.log_magnitude)
    assert res.phase == 1.0
    with pytest.raises(RangeError):
        laguerre(20000, 0, -50.0)


def test_jacobi_matches_scipy():
    for x in (1.5, -2.0, 0.3):
        for n in (0, 1, 5, 12):
            for alpha in (0, 1, 3):
                assert np.isclose(jacobi_p(n, alpha, x),
                                  scipy.special.eval_jacobi(n, alpha, 0, x),
                                  rtol=1e-10, atol=1e-12)


def test_jacobi_array_orders():
    n = np.array([3, 0, 6, 2])
    alpha = np.array([0, 2, 1, 5])
    assert np.allclose(jacobi_p(n, alpha, 1.7),
                       scipy.special.eval_jacobi(n, alpha, 0, 1.7),
                       rtol=1e-12)


@settings(deadline=None, max_examples=50)
@given(st.integers(min_value=0, max_value=60),
       st.floats(min_value=-3.0, max_value=3.0))
def test_legendre_matches_scipy(n, x):
    assert np.isclose(legendre_p(n, x), scipy.special.eval_legendre(n, x),
                      rtol=1e-9, atol=1e-9)


def test_log_legendre_large_order():
    # P_n(1 + z^2 / 2 n^2) approaches I_0(z) for large n
    n, z = 100000, 2.0
    res = log_legendre_p(n, 1.0 + z * z / (2.0 * n * n))
    assert np.isclose(np.exp(float(res.log_magnitude)), scipy.special.i0(z),
                      rtol=1e-3)


def test_negative_orders_rejected():
    with pytest.raises(ValueError):
        laguerre(-1, 0, 1.0)
    with pytest.raises(ValueError):
        jacobi_p(2, -1, 1.0)
    with pytest.raises(ValueError):
        legendre_p(-2, 0.5)


def test_log_ratio_factorials():
    assert np.isclose(log_ratio_factorials(5, 3), np.log(20.0))
    assert np.isclose(log_ratio_factorials(3, 5), -np.log(20.0))
    assert log_ratio_factorials(7, 7) == 0.0
    assert np.allclose(log_ratio_factorials(np.array([10, 12]), 10),
                       [0.0, np.log(11.0 * 12.0)])

    # Spans beyond the telescoping limit fall back to log Gamma
    assert np.isclose(log_ratio_factorials(200000, 0),
                      scipy.special.gammaln(200001.0), rtol=1e-12)


def test_log_scaled():
    a = LogScaled.from_value(-4.0)
    assert np.isclose(a.log_magnitude, np.log(4.0)) and a.phase == -1.0
    assert np.isclose((a * 2.0).value, -8.0)
    assert LogScaled.from_value(0.0).log_magnitude == -np.inf
    with pytest.raises(RangeError):
        LogScaled(np.array(1000.0), np.array(1.0)).value


def test_bessel_i_generating_sum():
    # sum_n I_n(z) = e^z
    for z in (0.0, 0.5, 5.0, 30.0, 100.0):
        n_max = int(np.ceil(z + 40.0 * np.sqrt(z + 1.0)))
        ns = np.arange(-n_max, n_max + 1)
        assert np.isclose(np.sum(bessel_i_int(ns, z)), np.exp(z),
                          rtol=1e-12, atol=0.0)


def test_bessel_j_squares_addition():
    # sum_k (-1)^k J_k(xi)^2 = J_0(2 xi)
    xi = np.linspace(0.0, 30.0, 61)
    ks = np.arange(-80, 81)
    sign = np.where(ks % 2 == 0, 1.0, -1.0)
    total = np.sum(sign[:, None] * bessel_j(ks[:, None], xi[None, :])**2,
                   axis=0)
    assert np.max(np.abs(total - scipy.special.j0(2.0 * xi))) < 1e-10


def test_bessel_j_imaginary_argument():
    # J_k(i zeta) = i^k I_k(zeta)
    for zeta in (0.0, 0.7, 8.0, 50.0):
        for k in range(-10, 11):
            i_k = bessel_i_int(k, zeta)
            assert abs(bessel_j(k, 1j * zeta) - 1j**(k % 4) * i_k) \
                <= 1e-10 * (1.0 + i_k)


def _legendre_series(n, t):
    # P_n(1 + t) = sum_j C(n, j) C(n + j, j) (t / 2)^j
    term, total = 1.0, 1.0
    for j in range(n):
        term *= (n - j) * (n + j + 1.0) / (j + 1.0)**2 * (0.5 * t)
        total += term
        if term < 1e-18 * total:
            break
    return total


def _jacobi_series(n, alpha, t):
    # P_n^(alpha, 0)(1 + t) = sum_j C(n + alpha, n - j) C(n + alpha + j, j)
    # (t / 2)^j
    term = scipy.special.comb(n + alpha, n, exact=True)
    total = float(term)
    term = float(term)
    for j in range(n):
        term *= ((n - j) * (n + alpha + j + 1.0) /
                 ((alpha + j + 1.0) * (j + 1.0)) * (0.5 * t))
        total += term
        if term < 1e-18 * total:
            break
    return total


def test_shifted_polynomials_near_one():
    # 1 + t is not representable to the accuracy these orders require
    for n, t in ((5000, 1e-7), (20000, 2.5e-9), (100000, 1e-10)):
        res = log_legendre_p_shifted(n, t)
        assert res.log_magnitude.dtype == np.float64
        assert np.isclose(res.log_magnitude, np.log(_legendre_series(n, t)),
                          rtol=0.0, atol=1e-11)
        for alpha in (0, 3, 10):
            res = log_jacobi_p_shifted(n, alpha, t)
            assert np.isclose(res.log_magnitude,
                              np.log(_jacobi_series(n, alpha, t)),
                              rtol=0.0, atol=1e-11)


def test_shifted_polynomials_match_scipy():
    for n in (0, 1, 4, 17):
        for t in (0.05, 0.8, 2.0):
            assert np.isclose(
                log_legendre_p_shifted(n, t).value,
                scipy.special.eval_legendre(n, 1.0 + t), rtol=1e-12)
            for alpha in (0, 2):
                assert np.isclose(
                    log_jacobi_p_shifted(n, alpha, t).value,
                    scipy.special.eval_jacobi(n, alpha, 0, 1.0 + t),
                    rtol=1e-12)


def test_public_dtypes():
    assert laguerre(20000, 0, 1e-5).dtype == np.float64
    assert log_laguerre(20000, 0, 1e-5).log_magnitude.dtype == np.float64
    assert laguerre(20000, 1, 1e-5 + 1e-6j).dtype == np.complex128
    assert log_legendre_p(20000, 1.0).phase.dtype == np.float64
