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
Reduced density operators of the photon field and of the electron, the true
photon number distribution and the entanglement measures derived from them.
Entropies are given in nats.
"""

import collections
import warnings

import numpy as np
import scipy.special

from .common import (Asymptotic, Exact, NormalizationWarning, RangeError,
                     SingularParameterError)
from .displacement import overlap_product
from .entangled import k_band
from .specfun import log_jacobi_p_shifted, log_legendre_p_shifted

NORM_TOL = 1e-10
NORM_WARN = 1e-8

# Largest half width of the k range tried by photon_dist_exact
MAX_HALF_WIDTH = 100000

# Distance from the singular parameter values below which closed forms are
# rejected
SINGULAR_TOL = 1e-12


class PhotonDistribution:
    """
    Weights of the photon number shifts k = n - n0. `kind` is either Exact
    (params n0, b) or Asymptotic (param q).
    """

    def __init__(self, ks, weights, kind, **params):
        self.ks = np.asarray(ks, dtype=np.int64)
        self.weights = np.asarray(weights, dtype=np.float64)
        self.kind = kind
        self.params = params
        if np.any(self.weights < 0.0):
            raise RangeError("Photon number distribution has negative weights")

    @property
    def norm_defect(self):
        return abs(1.0 - np.sum(self.weights))

    def __getitem__(self, k):
        idx = np.flatnonzero(self.ks == k)
        return float(self.weights[idx[0]]) if idx.size else 0.0

    def as_dict(self):
        return {int(k): float(w) for k, w in zip(self.ks, self.weights)}

    def moments(self):
        mean = np.sum(self.ks * self.weights)
        return mean, np.sum((self.ks - mean)**2 * self.weights)


class EntropyReport(collections.namedtuple('EntropyReport', [
        'von_neumann', 'linear', 'renyi2', 'schmidt_number',
        'electron_linear'])):
    pass


def _log_abs_one_minus(t):
    return np.log1p(-t) if t < 1.0 else np.log(t - 1.0)


def _exact_weights(n0, b, ks):
    s = np.abs(ks)
    n = np.where(ks >= 0, n0, n0 - s)

    # (1 + b^4) / (1 - b^4) = 1 + t; only the offset t is passed on
    b4 = np.longdouble(b)**4
    jac = log_jacobi_p_shifted(n, s, 2.0 * b4 / (1.0 - b4))

    log_w = (2.0 * s * np.log(b) + n * _log_abs_one_minus(b * b) -
             (1.0 + s + n) * np.log1p(b * b) + jac.log_magnitude)
    sign = np.sign(1.0 - b * b)**n * np.sign(np.real(jac.phase))
    if np.any((sign < 0) & (log_w > -700.0)):
        raise RangeError("Exact photon number weights must be positive")
    return np.exp(log_w.astype(np.float64))


def photon_dist_exact(n0, b, k_range=None):
    """
    Photon number distribution at finite initial occupation n0,

        P_k = b^(2s) (1 - b^2)^n / (1 + b^2)^(1 + s + n)
              P_n^(s, 0)((1 + b^4) / (1 - b^4)),

    with s = |k| and n = n0 (k >= 0) or n = n0 - s (k < 0). Without an
    explicit k_range the range is doubled until the normalisation defect drops
    below NORM_TOL. If doubling stops reducing the defect, the last
    distribution is returned with a NormalizationWarning.
    """
    n0 = int(n0)
    if n0 < 0:
        raise ValueError("n0={} must be non-negative".format(n0))
    if b <= 0.0:
        raise ValueError("b={} must be positive".format(b))
    if abs(b - 1.0) < SINGULAR_TOL:
        raise SingularParameterError(
            "The exact photon distribution is singular at b = 1; perturb b")

    if k_range is not None:
        ks = np.arange(max(k_range[0], -n0), k_range[1] + 1)
        dist = PhotonDistribution(ks, _exact_weights(n0, b, ks), Exact,
                                  n0=n0, b=b)
        if dist.norm_defect > NORM_WARN:
            warnings.warn(
                "Normalisation defect {:.3g}; extend the k range".format(
                    dist.norm_defect), category=NormalizationWarning)
        return dist

    b2 = b * b
    half = int(np.ceil(b2 + 12.0 * np.sqrt((2.0 * n0 + 1.0) * b2 + b2 * b2))) + 20
    last = np.inf
    while True:
        ks = np.arange(max(-half, -n0), half + 1)
        dist = PhotonDistribution(ks, _exact_weights(n0, b, ks), Exact,
                                  n0=n0, b=b)
        defect = dist.norm_defect
        if defect < NORM_TOL:
            return dist

        # Widening the range no longer helps once the defect is rounding
        if defect >= 0.5 * last or half > MAX_HALF_WIDTH:
            warnings.warn(
                "Normalisation defect {:.3g} does not drop below {:.3g} "
                "within k = {}...{}".format(defect, NORM_TOL, ks[0], ks[-1]),
                category=NormalizationWarning)
            return dist
        last = defect
        half *= 2


def photon_dist_asymptotic(q, k_range=None):
    """
    Large occupation limit p_k = I_k(q) exp(-q) of the photon number
    distribution.
    """
    if q < 0.0:
        raise ValueError("q={} must be non-negative".format(q))
    if k_range is None:
        half = k_band(q)
        ks = np.arange(-half, half + 1)
    else:
        ks = np.arange(k_range[0], k_range[1] + 1)
    return PhotonDistribution(ks, scipy.special.ive(np.abs(ks), q),
                              Asymptotic, q=q)


def photon_moments(dist):
    return dist.moments()


def von_neumann_photon(q):
    """
    Entropy of the photon number distribution,

        S = q - exp(-q) (I_0 log I_0 + 2 sum_(k >= 1) I_k log I_k).
    """
    if q < 0.0:
        raise ValueError("q={} must be non-negative".format(q))
    if q == 0.0:
        return 0.0
    ks = np.arange(0, k_band(q) + 1)
    p = scipy.special.ive(ks, q)
    p = p[p > 0.0]

    # exp(-q) I_k log I_k = p_k (log p_k + q)
    terms = p * (np.log(p) + q)
    terms[1:] *= 2.0
    return float(q - np.sum(terms))


def photon_purity(q):
    return float(scipy.special.ive(0, 2.0 * q))


def linear_entropy_photon(q):
    """
    1 - Tr P^2 = 1 - I_0(2q) exp(-2q).
    """
    if q < 0.0:
        raise ValueError("q={} must be non-negative".format(q))
    return 1.0 - photon_purity(q)


def electron_purity_exact(n0, b):
    """
    Tr P_e^2 at finite n0. With c = 2 b^2,

        Tr P_e^2 = 1 / (1 + c) ((1 - c) / (1 + c))^n0
                   P_n0((1 + c^2) / (1 - c^2)).
    """
    n0 = int(n0)
    if b <= 0.0:
        raise ValueError("b={} must be positive".format(b))
    c = 2.0 * b * b
    if abs(c - 1.0) < SINGULAR_TOL:
        raise SingularParameterError(
            "The electron purity is singular at 2 b^2 = 1; perturb b")

    c2 = np.longdouble(c)**2
    leg = log_legendre_p_shifted(n0, 2.0 * c2 / (1.0 - c2))
    log_p = (-np.log1p(c) + n0 * (_log_abs_one_minus(c) - np.log1p(c)) +
             leg.log_magnitude)
    sign = np.sign(1.0 - c)**n0 * np.sign(np.real(leg.phase))
    return float(sign * np.exp(np.float64(log_p)))


def linear_entropy_electron_exact(n0, b):
    """
    Linear entropy 1 - Tr P_e^2 of the electron at finite n0. Values outside
    [0, 1) indicate a numerical problem and are reported, not clamped.
    """
    if int(n0) < 1:
        raise ValueError("n0={} must be at least one".format(n0))
    h = 1.0 - electron_purity_exact(n0, b)
    if not 0.0 <= h < 1.0:
        warnings.warn("Electron linear entropy {} outside of [0, 1)".format(h),
                      category=NormalizationWarning)
    return h


def _momentum_sigma(k, b):
    k = np.asarray(k, dtype=np.float64)
    return -b * (k[..., 0] - 1j * k[..., 1])


def electron_momentum_density(p1, p2, n0, b, theta):
    """
    Matrix element <k1|P_e(theta)|k2> of the reduced electron density
    operator in dimensionless transverse momentum k = (w / hbar) p.
    """
    p1 = np.asarray(p1, dtype=np.float64)
    p2 = np.asarray(p2, dtype=np.float64)
    k1 = np.sum(p1**2, axis=-1)
    k2 = np.sum(p2**2, axis=-1)
    weights = np.exp(-0.5 * (k1 + k2)) / np.pi
    kinetic = np.exp(-0.5j * theta * (k1 - k2))
    return weights * kinetic * overlap_product(
        n0, _momentum_sigma(p1, b), _momentum_sigma(p2, b))


def _log_packet(r2, theta, drive):
    z = 1.0 + 1j * theta
    return -0.5 * np.log(np.pi) - np.log(z) - (drive * drive + r2) / (2.0 * z)


def electron_position_density(x1, x2, theta, drive):
    """
    Large n0 reduced electron density <x1|P_e(theta)|x2> in position space
    for dimensionless Cartesian transverse positions x1, x2. For collinear
    points this is

        1 / (pi (1 + theta^2)) exp(-drive^2 / (1 + theta^2))
        exp(-[x2^2 + x1^2 + i theta (x2^2 - x1^2)] / (2 (1 + theta^2)))
        I_0(drive (x2 + x1 + i theta (x2 - x1)) / (1 + theta^2)).
    """
    x1 = np.asarray(x1, dtype=np.float64)
    x2 = np.asarray(x2, dtype=np.float64)
    r1 = np.hypot(x1[..., 0], x1[..., 1])
    r2 = np.hypot(x2[..., 0], x2[..., 1])
    phi1 = np.arctan2(x1[..., 1], x1[..., 0])
    phi2 = np.arctan2(x2[..., 1], x2[..., 0])

    g1 = drive * r1 / (1.0 + 1j * theta)
    g2c = np.conj(drive * r2 / (1.0 + 1j * theta))
    arg = np.sqrt(g2c**2 + g1**2 + 2.0 * g2c * g1 * np.cos(phi2 - phi1))

    log_value = (np.conj(_log_packet(r2**2, theta, drive)) +
                 _log_packet(r1**2, theta, drive) + np.abs(np.real(arg)))
    return np.exp(log_value) * scipy.special.ive(0, arg)


def electron_position_distribution(x, theta, drive):
    """
    Probability density P(x, theta) of detecting the electron at the
    dimensionless radius x, normalised as 2 pi int x P dx = 1.
    """
    x = np.asarray(x, dtype=np.float64)
    t = 1.0 + theta * theta
    return (np.exp(-(drive - x)**2 / t) *
            scipy.special.ive(0, 2.0 * drive * x / t) / (np.pi * t))


def entropy_report(q, n0=None, b=None):
    """
    Bundles the photon entropies at q and, if n0 and b are given, the exact
    electron linear entropy.
    """
    purity = photon_purity(q)
    electron = None
    if n0 is not None and b is not None:
        electron = linear_entropy_electron_exact(n0, b)
    return EntropyReport(
        von_neumann=von_neumann_photon(q),
        linear=1.0 - purity,
        renyi2=-np.log(purity),
        schmidt_number=1.0 / purity,
        electron_linear=electron,
    )
