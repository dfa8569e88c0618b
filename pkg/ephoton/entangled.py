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

"""
Joint probability amplitudes <n0 + k|<r|psi> of detecting the electron at the
dimensionless transverse position (x = r / w, phi) at the time theta = t / tau
while the mode has changed its photon number by k. All amplitudes are
dimensionless; the physical amplitude density carries an additional factor
1 / w (see AMPLITUDE_UNIT).
"""

import collections
import warnings

import numpy as np
import scipy.special

from .common import (Asymptotic, Exact, Monotonic, Oscillatory, RangeError,
                     SingularParameterError, TruncationWarning)
from .internal.parallel import map_ordered
from .specfun import log_bessel_i_int, log_laguerre, log_ratio_factorials

AMPLITUDE_UNIT = "1/w"

# Tolerances
SHAPE_TOL = 1e-12
TAIL_WARN = 1e-10

# Below this magnitude of 1 - b^2 / beta the Laguerre factor of the exact
# amplitude is expanded explicitly
SINGULAR_U = 1e-6


class DetectionPoint(collections.namedtuple('DetectionPoint',
                                            ['x', 'phi', 'theta'])):
    """
    Electron detection coordinates x = r / w >= 0, azimuth phi (reduced
    modulo 2 pi) and time theta = t / tau.
    """

    def __new__(cls, x, phi=0.0, theta=0.0):
        if np.any(np.asarray(x) < 0.0):
            raise ValueError("Radial coordinate x={} must be non-negative"
                             .format(x))
        return super().__new__(cls, x, np.mod(phi, 2.0 * np.pi), theta)


class AmplitudeResult(collections.namedtuple('AmplitudeResult',
                                             ['value', 'k', 'method'])):
    @property
    def error_tag(self):
        return self.method.error_tag


class BetaValue(collections.namedtuple('BetaValue', ['value'])):
    """
    Gaussian exponent beta = (1 + i theta + b^2) / 2 of the radial momentum
    integral.
    """

    @staticmethod
    def of(theta, b):
        return BetaValue((1.0 + 1j * np.asarray(theta) + b * b) / 2.0)


XiCoefficients = collections.namedtuple('XiCoefficients', [
    'ks', 'values', 'photon_norm', 'kappa_prime', 'tail'])


def gamma_of(point, drive):
    return drive * np.asarray(point.x) / (1.0 + 1j * np.asarray(point.theta))


def _log_packet_factor(x, theta, drive):
    z = 1.0 + 1j * np.asarray(theta)
    return (-0.5 * np.log(np.pi) - np.log(z) -
            (drive * drive + np.asarray(x)**2) / (2.0 * z))


def packet_factor(point, drive):
    """
    Freely spreading Gaussian packet displaced by the classical oscillation
    amplitude, psi_g(r, t) in units of 1 / w.
    """
    return np.exp(_log_packet_factor(point.x, point.theta, drive))


def k_band(gamma):
    """
    Half width of the band of photon number shifts carrying a non-negligible
    weight at the Bessel argument gamma.
    """
    g = float(np.max(np.abs(gamma)))
    return int(np.ceil(g) + 40 + 10 * np.ceil(np.sqrt(g + 1.0)))


def _phase(k, phi):
    k = np.asarray(k)
    return (-1j)**(k % 4) * np.exp(-1j * k * phi)


def _asymptotic_values(k, x, phi, theta, drive):
    gamma = drive * np.asarray(x) / (1.0 + 1j * np.asarray(theta))
    bessel = log_bessel_i_int(k, gamma)
    log_mag = np.real(_log_packet_factor(x, theta, drive)) + bessel.log_magnitude
    phase = np.exp(1j * np.imag(_log_packet_factor(x, theta, drive)))
    with np.errstate(under="ignore"):
        return _phase(k, phi) * phase * bessel.phase * np.exp(log_mag)


def joint_amplitude_asymptotic(k, point, drive):
    """
    Joint amplitude in the limit of a large initial occupation n0 at fixed
    drive = mu Lambda / w,

        (-i)^k exp(-i k phi) psi_g(r, t) I_k(gamma(r, t)).
    """
    value = _asymptotic_values(k, point.x, point.phi, point.theta, drive)
    return AmplitudeResult(value, k, Asymptotic)


def _laguerre_times_power(m, s, c, u):
    """
    Computes log(u^m L_m^s(-c / u)) for |u| close to zero by summing the
    terms of the explicit Laguerre series.
    """
    j = np.arange(m + 1)
    log_coef = (scipy.special.gammaln(m + s + 1.0) -
                scipy.special.gammaln(m - j + 1.0) -
                scipy.special.gammaln(s + j + 1.0) -
                scipy.special.gammaln(j + 1.0))
    with np.errstate(divide="ignore"):
        terms = np.exp(log_coef) * c**j * u**(m - j)
    return np.log(np.sum(terms) + 0j)


def joint_amplitude_exact(k, n0, point, b):
    """
    Exact joint amplitude at finite initial occupation n0 and per-photon
    coupling b. The radial momentum integral has the closed form

        (-i)^k exp(-i k phi) / (sqrt(pi) 2 beta) (b y / 2 beta)^s
            exp(-y^2 / 4 beta) sqrt(ratio) (1 - b^2 / beta)^m
            L_m^s(b^2 y^2 / (4 beta (b^2 - beta)))

    with s = |k|, y = x and m = n0 (k >= 0) or m = n0 - s (k < 0). All
    factors are combined in the log domain.
    """
    k = int(k)
    n0 = int(n0)
    if k < -n0:
        raise RangeError("Photon number shift k={} below -n0={}".format(k, -n0))

    s = abs(k)
    y = float(point.x)
    m = n0 if k >= 0 else n0 - s
    log_ratio = (log_ratio_factorials(n0, n0 + s) if k >= 0 else
                 log_ratio_factorials(n0 - s, n0))

    beta = BetaValue.of(point.theta, b).value
    log_value = (-0.5 * np.log(np.pi) - np.log(2.0 * beta) -
                 y * y / (4.0 * beta) + 0.5 * log_ratio)
    if s > 0:
        if y == 0.0 or b == 0.0:
            return AmplitudeResult(0j, k, Exact)
        log_value = log_value + s * np.log(b * y / (2.0 * beta))

    u = 1.0 - b * b / beta
    if abs(u) < SINGULAR_U:
        if m > 500:
            raise SingularParameterError(
                "1 - b^2 / beta vanishes (b = 1, theta = 0); perturb b")
        c = b * b * y * y / (4.0 * beta * beta)
        log_value = log_value + _laguerre_times_power(m, s, c, u)
    else:
        w = b * b * y * y / (4.0 * beta * (b * b - beta))
        lag = log_laguerre(m, s, w)
        log_value = (log_value + m * np.log1p(-b * b / beta) +
                     lag.log_magnitude + np.log(lag.phase + 0j))

    value = _phase(k, point.phi) * np.exp(log_value)
    return AmplitudeResult(complex(value), k, Exact)


def xi_coefficients(point, drive, k_range=None):
    """
    Expansion coefficients psi_g (-i)^k exp(-i k phi) I_k(gamma) of the
    photon part of the asymptotic entangled state at a fixed electron
    position. Also returns the photon-part norm, the renormalisation constant
    kappa' with |kappa'|^2 sum_k |I_k(gamma)|^2 = 1 and the relative Bessel
    weight outside of k_range.
    """
    gamma = complex(gamma_of(point, drive))
    if k_range is None:
        half = k_band(gamma)
        ks = np.arange(-half, half + 1)
    else:
        ks = np.arange(k_range[0], k_range[1] + 1)

    values = _asymptotic_values(ks, point.x, point.phi, point.theta, drive)

    # sum_k |I_k(gamma)|^2 = I_0(2 Re gamma), compare exponentially scaled
    scaled = np.abs(scipy.special.ive(np.abs(ks), gamma))**2
    total = scipy.special.ive(0, 2.0 * abs(gamma.real))
    tail = max(0.0, 1.0 - np.sum(scaled) / total)
    if tail > TAIL_WARN:
        warnings.warn(
            "k range [{}, {}] misses a relative weight of {:.3g}".format(
                ks[0], ks[-1], tail), category=TruncationWarning)

    kappa_prime = np.exp(-abs(gamma.real)) / np.sqrt(np.sum(scaled))
    return XiCoefficients(ks, values, float(np.sum(np.abs(values)**2)),
                          kappa_prime, tail)


GridTask = collections.namedtuple('GridTask', [
    'k', 'x_grid', 'theta', 'drive'])


def _grid_row(task):
    values = _asymptotic_values(task.k, task.x_grid, 0.0, task.theta,
                                task.drive)
    return np.abs(values)**2


def joint_probability_grid(k, x_grid, theta_grid, drive, n_threads=1):
    """
    |joint_amplitude_asymptotic|^2 on an (x, theta) grid. The result has one
    row per theta value and one column per x value. The probability does not
    depend on phi.
    """
    x_grid = np.asarray(x_grid, dtype=np.float64)
    theta_grid = np.asarray(theta_grid, dtype=np.float64)
    tasks = [GridTask(k, x_grid, theta, drive) for theta in theta_grid]
    rows = map_ordered(_grid_row, tasks, n_threads)
    return np.array(rows).reshape(len(theta_grid), len(x_grid))


def k_profile(point, drive, k_max=None):
    """
    Joint probabilities |joint_amplitude_asymptotic|^2 for k = 0, ..., k_max.
    """
    if k_max is None:
        k_max = k_band(gamma_of(point, drive))
    ks = np.arange(k_max + 1)
    return np.abs(_asymptotic_values(ks, point.x, point.phi, point.theta,
                                     drive))**2


def classify_shape(k_profile):
    """
    Classifies a profile of joint probabilities over k >= 0. The profile is
    oscillatory if a strict local minimum is followed by a strict local
    maximum, ignoring changes below SHAPE_TOL times the maximum.

    Since the distribution is symmetric in k, the profile is mirrored at k = 0
    before the test. A profile that rises away from k = 0 therefore has its
    minimum at k = 0 and counts as oscillatory.
    """
    p = np.asarray(k_profile, dtype=np.float64)
    if p.size < 2:
        return Monotonic
    full = np.concatenate((p[:0:-1], p))
    d = np.diff(full)
    d = d[np.abs(d) > SHAPE_TOL * np.max(full)]
    signs = np.sign(d)

    # Collapse runs of equal sign; a "-, +, -" pattern is a minimum followed
    # by a maximum
    runs = signs[np.concatenate(((True,), signs[1:] != signs[:-1]))] \
        if signs.size else signs
    for i in range(len(runs) - 2):
        if runs[i] < 0 and runs[i + 1] > 0 and runs[i + 2] < 0:
            return Oscillatory
    return Monotonic


ShapeTask = collections.namedtuple('ShapeTask', ['x_grid', 'theta', 'drive'])


def _shape_row(task):
    row = np.zeros(len(task.x_grid), dtype=np.int8)
    for i, x in enumerate(task.x_grid):
        profile = k_profile(DetectionPoint(x, 0.0, task.theta), task.drive)
        row[i] = 1 if classify_shape(profile) is Oscillatory else 0
    return row


def shape_region_map(x_grid, theta_grid, drive, n_threads=1):
    """
    Classifies the shape of the photon number distribution on an (x, theta)
    grid; 1 marks oscillatory, 0 monotonic distributions. Rows correspond to
    theta, columns to x.
    """
    tasks = [ShapeTask(np.asarray(x_grid, dtype=np.float64), theta, drive)
             for theta in np.asarray(theta_grid, dtype=np.float64)]
    return np.array(map_ordered(_shape_row, tasks, n_threads))


def boundary_slopes(x, drive, slopes=None):
    """
    Scans the ray theta = s x at fixed x and returns the smallest and largest
    slope s at which the photon number distribution is oscillatory, or
    (None, None) if it is monotonic everywhere on the scan.
    """
    if slopes is None:
        slopes = np.linspace(0.05, 5.0, 496)
    osc = [classify_shape(k_profile(DetectionPoint(x, 0.0, s * x), drive))
           is Oscillatory for s in slopes]
    idcs = np.flatnonzero(osc)
    if idcs.size == 0:
        return None, None
    return float(slopes[idcs[0]]), float(slopes[idcs[-1]])
