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
Number state matrix elements of the displacement operator D[sigma]. The
states D[sigma]|n> are the photon parts of the exact stationary states of an
electron in a single circularly polarised mode.
"""

import collections

import numpy as np

from .common import Asymptotic, RangeError
from .specfun import bessel_j, log_laguerre, log_ratio_factorials

# Tail threshold and number of consecutive negligible terms used to truncate
# sums over photon number shifts
TAIL_TOL = 1e-18
TAIL_RUN = 20


class SigmaValue(collections.namedtuple('SigmaValue', ['value'])):
    """
    Complex displacement parameter sigma.
    """

    @staticmethod
    def from_momentum(b, x, chi=0.0):
        """
        Displacement belonging to the dimensionless transverse electron
        momentum of magnitude x and azimuth chi in a circularly polarised
        mode, sigma = -exp(-i chi) b x.
        """
        return SigmaValue(-np.exp(-1j * chi) * b * x)

    @property
    def magnitude(self):
        return np.abs(self.value)


def _sigma(sigma):
    if isinstance(sigma, SigmaValue):
        return np.asarray(sigma.value, dtype=np.complex128)
    return np.asarray(sigma, dtype=np.complex128)


def element(k, n, sigma):
    """
    Returns <n + k|D[sigma]|n>. k may be an array; every k must satisfy
    k >= -n.
    """
    k = np.asarray(k, dtype=np.int64)
    n = int(n)
    sigma = _sigma(sigma)
    if n < 0:
        raise ValueError("Number state index n={} must be non-negative".format(n))
    if np.any(k < -n):
        raise RangeError(
            "Photon number shift k={} below -n={} refers to a non-existing "
            "number state".format(np.min(k), n))

    s = np.abs(k)
    pos = k >= 0
    m = np.where(pos, n, n - s)
    log_ratio = np.where(pos, log_ratio_factorials(n, n + s),
                         log_ratio_factorials(np.maximum(n - s, 0), n))

    mag2 = np.abs(sigma)**2
    lag = log_laguerre(m, s, mag2)
    with np.errstate(divide="ignore", invalid="ignore"):
        log_pow = np.where(s == 0, 0.0, s * np.log(np.abs(sigma)))
        unit = np.where(mag2 > 0.0, sigma / np.where(mag2 > 0.0, np.abs(sigma), 1.0), 1.0)
    phase = np.where(pos, unit**s, (-np.conj(unit))**s)

    log_mag = 0.5 * log_ratio + log_pow - 0.5 * mag2 + lag.log_magnitude
    return phase * lag.phase * np.exp(log_mag)


def element_asymptotic(k, n0, sigma):
    """
    Large n0 limit of element(k, n0, sigma) at fixed 2 sqrt(n0) |sigma|. The
    deviation from the exact element is of the order n0^(-3/4).
    """
    k = np.asarray(k, dtype=np.int64)
    if n0 < 1:
        raise ValueError("The asymptotic form requires n0 >= 1")
    sigma = _sigma(sigma)
    mag = np.abs(sigma)
    unit = np.where(mag > 0.0, sigma / np.where(mag > 0.0, mag, 1.0), 1.0)
    return unit**k * bessel_j(k, 2.0 * np.sqrt(n0) * mag)


def error_bound(n0):
    """
    Order of magnitude of the deviation between the exact and asymptotic
    forms, tagged with Asymptotic.error_tag.
    """
    return float(n0)**(-0.75)


ERROR_TAG = Asymptotic.error_tag


def mean_variance(n0, sigma):
    mag2 = np.abs(_sigma(sigma))**2
    return n0 + mag2, (2.0 * n0 + 1.0) * mag2


def photon_moments_exact(n0, b):
    """
    Mean and variance of the photon number shift k in the entangled state,
    i.e. the moments of element(k, n0, sigma(x)) averaged over the Gaussian
    momentum distribution exp(-x^2) / pi. Since |sigma|^2 = b^2 x^2 has mean
    b^2 and variance b^4, the law of total variance gives
    (b^2, (2 n0 + 1) b^2 + b^4).
    """
    b2 = b * b
    return b2, (2.0 * n0 + 1.0) * b2 + b2 * b2


def overlap_product(n0, sigma1, sigma2):
    """
    Returns <n0|D^+[sigma2] D[sigma1]|n0>.
    """
    sigma1, sigma2 = _sigma(sigma1), _sigma(sigma2)
    delta2 = np.abs(sigma1 - sigma2)**2
    lag = log_laguerre(int(n0), 0, delta2)
    return (np.exp(1j * np.imag(np.conj(sigma2) * sigma1)) * lag.phase *
            np.exp(lag.log_magnitude - 0.5 * delta2))


def significant_band(n0, sigma, tol=TAIL_TOL, run=TAIL_RUN):
    """
    Returns the photon number shifts k (ascending) outside of which
    |element(k, n0, sigma)|^2 stays below tol for at least `run` consecutive
    values on both sides.
    """
    mag2 = float(np.abs(_sigma(sigma)))**2
    half = int(np.ceil(mag2 + 10.0 * np.sqrt((2.0 * n0 + 1.0) * mag2))) + 2 * run
    while True:
        ks = np.arange(max(-n0, -half), half + 1)
        p = np.abs(element(ks, n0, sigma))**2
        upper_ok = np.all(p[-run:] < tol)
        lower_ok = (ks[0] == -n0) or np.all(p[:run] < tol)
        if upper_ok and lower_ok:
            return ks
        half *= 2
