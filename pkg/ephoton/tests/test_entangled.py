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
import scipy.integrate
import scipy.special

from ephoton.common import (Exact, Asymptotic, Monotonic, Oscillatory,
                            RangeError, SingularParameterError,
                            TruncationWarning)
from ephoton.entangled import (DetectionPoint, gamma_of, packet_factor,
                               joint_amplitude_asymptotic,
                               joint_amplitude_exact, xi_coefficients,
                               joint_probability_grid, k_profile,
                               classify_shape, shape_region_map,
                               boundary_slopes)


# Slack on fitted convergence exponents for higher order contamination
RATE_FIT_TOL = 0.02


def test_detection_point():
    p = DetectionPoint(1.5, 7.0, 0.2)
    assert np.isclose(p.phi, 7.0 - 2.0 * np.pi)
    with pytest.raises(ValueError):
        DetectionPoint(-0.1)


def test_exact_decoupled_limit():
    for theta in (0.0, 0.7, 3.0):
        point = DetectionPoint(1.3, 0.4, theta)
        res = joint_amplitude_exact(0, 25, point, 0.0)
        assert res.method is Exact
        assert np.isclose(res.value, packet_factor(point, 0.0), atol=1e-14)
        assert joint_amplitude_exact(2, 25, point, 0.0).value == 0.0


def test_exact_below_vacuum():
    with pytest.raises(RangeError):
        joint_amplitude_exact(-6, 5, DetectionPoint(1.0), 0.3)


def test_exact_singular_coupling():
    point = DetectionPoint(1.2, 0.0, 0.0)
    with pytest.raises(SingularParameterError):
        joint_amplitude_exact(0, 1000, point, 1.0)

    # Small orders are expanded explicitly and continuous in b
    a = joint_amplitude_exact(1, 10, point, 1.0).value
    b = joint_amplitude_exact(1, 10, point, 1.0 + 1e-4).value
    assert np.isfinite(a)
    assert np.isclose(a, b, rtol=1e-2)


def test_exact_converges_to_asymptotic():
    drive = 2.0
    point = DetectionPoint(2.0, 0.3, 0.5)
    ks = range(-3, 4)
    n0s = (100, 1000, 10000)

    def deviation(n0):
        b = drive / (2.0 * np.sqrt(n0))
        return max(abs(joint_amplitude_exact(k, n0, point, b).value -
                       joint_amplitude_asymptotic(k, point, drive).value)
                   for k in ks)

    devs = [deviation(n0) for n0 in n0s]
    assert devs[0] > devs[1] > devs[2]
    assert devs[2] < 1e-2

    # Fitted convergence exponent
    slope = np.polyfit(np.log(n0s), np.log(devs), 1)[0]
    assert -1.0 - RATE_FIT_TOL <= slope <= -0.5 + RATE_FIT_TOL


def test_asymptotic_amplitude():
    point = DetectionPoint(2.0, 0.0, 0.0)
    res = joint_amplitude_asymptotic(1, point, 2.0)
    assert res.method is Asymptotic
    assert res.error_tag == Asymptotic.error_tag
    expected = -1j * packet_factor(point, 2.0) * scipy.special.iv(1, 4.0)
    assert np.isclose(res.value, expected)


def test_xi_coefficients_at_origin():
    xi = xi_coefficients(DetectionPoint(0.0, 0.0, 0.4), 2.0)
    nonzero = xi.ks[np.abs(xi.values) > 0.0]
    assert list(nonzero) == [0]


def test_xi_coefficients_match_amplitudes():
    point = DetectionPoint(2.5, 1.1, 0.8)
    xi = xi_coefficients(point, 2.0, k_range=(-60, 60))
    for k in (-2, 0, 3):
        assert np.isclose(xi.values[xi.ks == k][0],
                          joint_amplitude_asymptotic(k, point, 2.0).value)


def test_xi_kappa_prime():
    point = DetectionPoint(2.0, 0.0, 0.5)
    xi = xi_coefficients(point, 2.0)
    gamma = gamma_of(point, 2.0)
    total = np.sum(np.abs(scipy.special.iv(np.abs(xi.ks), gamma))**2)
    assert np.isclose(xi.kappa_prime**2 * total, 1.0)
    assert xi.tail < 1e-10


def test_xi_truncation_warning():
    with pytest.warns(TruncationWarning):
        xi = xi_coefficients(DetectionPoint(3.0), 4.0, k_range=(-1, 1))
    assert xi.tail > 1e-10


@pytest.mark.parametrize("drive", [0.5, 2.0, 4.0])
def test_xi_normalisation(drive):
    for theta in (0.0, 0.5, 1.0, 3.0):
        def mass(x):
            xi = xi_coefficients(DetectionPoint(x, 0.0, theta), drive)
            return x * np.sum(np.abs(xi.values)**2)
        norm, _ = scipy.integrate.quad(mass, 0.0, 40.0, limit=200,
                                       epsabs=1e-12, epsrel=1e-12)
        assert abs(2.0 * np.pi * norm - 1.0) < 1e-6


def test_probability_grid_layout():
    xs = np.linspace(0.0, 4.0, 5)
    thetas = np.linspace(0.0, 2.0, 3)
    grid = joint_probability_grid(1, xs, thetas, 2.0)
    assert grid.shape == (3, 5)
    point = DetectionPoint(xs[3], 0.0, thetas[2])
    assert np.isclose(grid[2, 3],
                      abs(joint_amplitude_asymptotic(1, point, 2.0).value)**2)

    assert np.all(joint_probability_grid(3, xs, thetas, 0.0) == 0.0)


def test_probability_grid_channels():
    xs = np.linspace(0.0, 8.0, 161)
    thetas = np.linspace(0.0, 8.0, 161)
    peaks = {k: np.max(joint_probability_grid(k, xs, thetas, 2.0))
             for k in (0, 1, 5, 25)}
    assert peaks[0] > peaks[1] > peaks[5] > peaks[25]
    assert 22.0 < peaks[0] / peaks[5] < 2e4


def test_elastic_channels_dominate():
    drive = 2.0
    xs = np.linspace(0.0, 8.0, 401)
    x_peak = xs[np.argmax(joint_probability_grid(0, xs, [0.0], drive)[0])]
    p = {k: joint_probability_grid(k, [x_peak], [0.0], drive)[0, 0]
         for k in range(-6, 7)}
    inelastic = max(p[k] for k in p if abs(k) > 1)
    assert p[0] > inelastic
    assert min(p[1], p[-1]) > inelastic


def test_radial_maximum():
    # The radial density x |A_0|^2 at theta = 0 peaks close to the classical
    # oscillation amplitude
    xs = np.linspace(0.0, 8.0, 801)
    p = joint_probability_grid(0, xs, [0.0], 2.0)[0]
    assert abs(xs[np.argmax(xs * p)] - 2.0) < 0.2


def test_classify_shape():
    ks = np.arange(30)
    assert classify_shape(scipy.special.ive(ks, 2.0)) is Monotonic
    assert classify_shape(scipy.special.jv(ks, 5.0)**2) is Oscillatory
    assert classify_shape([1.0]) is Monotonic


def test_classify_shape_mirrors_at_zero():
    # Rising then falling over k >= 0 is a dip at k = 0 of the full profile
    assert classify_shape([0.2, 0.5, 0.3, 0.1]) is Oscillatory
    assert classify_shape([0.5, 0.5 + 1e-14, 0.3]) is Monotonic
    assert classify_shape([0.5, 0.3, 0.1, 0.05]) is Monotonic


@pytest.mark.parametrize("slope,shape", [
    (0.3, Monotonic), (0.6, Oscillatory), (1.0, Oscillatory),
    (1.5, Oscillatory)])
def test_profile_shapes(slope, shape):
    point = DetectionPoint(10.0, 0.0, slope * 10.0)
    assert classify_shape(k_profile(point, 4.0)) is shape


def test_shape_region_map():
    xs = np.linspace(0.5, 10.0, 5)
    thetas = np.array([0.0, 10.0])
    regions = shape_region_map(xs, thetas, 4.0)
    assert regions.shape == (2, 5)
    assert np.all(regions[0] == 0)
    assert set(np.unique(regions)) <= {0, 1}


def test_boundary_slopes():
    lower, upper = boundary_slopes(10.0, 4.0)
    assert 0.32 <= lower <= 0.48
    assert 2.24 <= upper <= 3.36
