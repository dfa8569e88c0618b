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
Brute-force counterparts of the closed forms. The stationary states are
checked through the residual of the analytically constructed eigenvector of
a truncated Fock space Hamiltonian; amplitudes, distributions and purities
are recomputed by adaptive quadrature of their integral representations.
The quadrature oracles evaluate their integrands with the polynomial and
Bessel functions of `scipy.special` rather than the recurrences in
`ephoton.specfun`. The Hamiltonian residual builds its candidate eigenvector
from `displacement.element` and therefore tests that closed form, Laguerre
recurrence included, against direct diagonalisation.
"""

import collections
import warnings

import numpy as np
import scipy.integrate
import scipy.special

from .common import (Quadrature, QuadratureError, RangeError,
                     TruncationWarning)
from .density import PhotonDistribution
from .displacement import element
from .entangled import AmplitudeResult

QUAD_ABS_TOL = 1e-13
QUAD_REL_TOL = 1e-11
QUAD_LIMIT = 500

# Integrands are truncated where they stay below this value
ENVELOPE_TOL = 1e-20
MAX_RADIUS = 1e4

# Number of top Fock states whose mass flags a truncated residual
RESIDUAL_TAIL_COUNT = 5
RESIDUAL_TAIL_TOL = 1e-20


def _radius(f, r0):
    r = float(r0)
    while np.max(np.abs(f(np.linspace(r, 2.0 * r, 64)))) * r > ENVELOPE_TOL:
        r *= 2.0
        if r > MAX_RADIUS:
            raise QuadratureError(
                "Integrand does not decay within radius {}".format(MAX_RADIUS))
    return 2.0 * r


def _quad_real(f, upper, points):
    with warnings.catch_warnings():
        warnings.simplefilter("error", scipy.integrate.IntegrationWarning)
        try:
            value, err = scipy.integrate.quad(
                f, 0.0, upper, points=points, limit=QUAD_LIMIT,
                epsabs=QUAD_ABS_TOL, epsrel=QUAD_REL_TOL)
        except scipy.integrate.IntegrationWarning as e:
            raise QuadratureError(str(e)) from e
    return value, err


def integrate(f, r0, oscillations=0.0, points=None, is_complex=False):
    """
    Integrates f from zero to infinity. The range is truncated where |f|
    falls below ENVELOPE_TOL; `oscillations` is the angular frequency of an
    oscillating factor and is used to split the range into pieces of about
    one period each.
    """
    upper = _radius(f, r0)
    n_pieces = int(min(QUAD_LIMIT // 4, np.ceil(oscillations * upper / np.pi)))
    breaks = list(np.linspace(0.0, upper, n_pieces + 2)[1:-1])
    if points is not None:
        breaks += [p for p in points if 0.0 < p < upper]
    breaks = sorted(breaks) or None

    re, _ = _quad_real(lambda x: np.real(f(x)), upper, breaks)
    if not is_complex:
        return re
    im, _ = _quad_real(lambda x: np.imag(f(x)), upper, breaks)
    return re + 1j * im


def weber_first(a, c):
    """
    Numerically evaluates int_0^inf x J_0(a x) exp(-c^2 x^2) dx for real c
    and real or complex a with a small argument.
    """
    c2 = c * c
    return integrate(
        lambda x: x * scipy.special.jv(0, a * x) * np.exp(-c2 * x * x),
        r0=np.sqrt(2.0 / c2), oscillations=abs(a),
        is_complex=np.iscomplexobj(a))


def weber_first_closed(a, c):
    return np.exp(-a * a / (4.0 * c * c)) / (2.0 * c * c)


def weber_second(k, a, b, c):
    """
    Numerically evaluates int_0^inf x J_k(a x) J_k(b x) exp(-c^2 x^2) dx.
    """
    c2 = c * c
    return integrate(
        lambda x: (x * scipy.special.jv(k, a * x) * scipy.special.jv(k, b * x) *
                   np.exp(-c2 * x * x)),
        r0=np.sqrt(2.0 / c2), oscillations=abs(a) + abs(b))


def weber_second_closed(k, a, b, c):
    c2 = c * c
    return (np.exp(-(a - b)**2 / (4.0 * c2)) *
            scipy.special.ive(k, a * b / (2.0 * c2)) / (2.0 * c2))


def _log_sqrt_ratio(k, n0):
    s = abs(k)
    if k >= 0:
        return 0.5 * (scipy.special.gammaln(n0 + 1.0) -
                      scipy.special.gammaln(n0 + s + 1.0))
    return 0.5 * (scipy.special.gammaln(n0 - s + 1.0) -
                  scipy.special.gammaln(n0 + 1.0))


def quad_joint_amplitude(k, n0, point, b):
    """
    Joint amplitude by quadrature of the radial momentum integral

        (-i)^k exp(-i k phi) b^s sqrt(ratio) / sqrt(pi)
            int_0^inf x^(s + 1) exp(-beta x^2) J_s(y x) L_m^s(b^2 x^2) dx.
    """
    k = int(k)
    n0 = int(n0)
    if k < -n0:
        raise RangeError("Photon number shift k={} below -n0={}".format(k, -n0))
    s = abs(k)
    m = n0 if k >= 0 else n0 - s
    y = float(point.x)
    if s > 0 and (y == 0.0 or b == 0.0):
        return AmplitudeResult(0j, k, Quadrature)

    beta = 0.5 * (1.0 + 1j * point.theta + b * b)

    def f(x):
        return (x**(s + 1) * np.exp(-beta * x * x) * scipy.special.jv(s, y * x) *
                scipy.special.eval_genlaguerre(m, s, b * b * x * x))

    radial = integrate(f, r0=np.sqrt(2.0 * (s + 1.0) / beta.real),
                       oscillations=y, is_complex=True)
    with np.errstate(divide="ignore"):
        log_pref = (_log_sqrt_ratio(k, n0) - 0.5 * np.log(np.pi) +
                    (s * np.log(b) if s > 0 else 0.0))
    phase = (-1j)**(k % 4) * np.exp(-1j * k * point.phi)
    return AmplitudeResult(complex(phase * np.exp(log_pref) * radial), k,
                           Quadrature)


def quad_trace_purity(n0, b):
    """
    Tr P_e^2 from the separated momentum integrals,

        int_0^inf r L_n0(b^2 r^2)^2 exp(-(b^2 + 1/2) r^2) dr.
    """
    n0 = int(n0)
    rate = b * b + 0.5

    def f(r):
        return (r * scipy.special.eval_laguerre(n0, b * b * r * r)**2 *
                np.exp(-rate * r * r))

    return integrate(f, r0=np.sqrt(2.0 * (n0 + 1.0) / rate),
                     oscillations=2.0 * b * np.sqrt(n0))


def quad_purity_asymptotic(q):
    """
    Large n0 purity int_0^inf x J_0(drive x)^2 exp(-x^2 / 2) dx with
    drive = sqrt(2 q); equals I_0(2q) exp(-2q).
    """
    drive = np.sqrt(2.0 * q)
    return integrate(
        lambda x: x * scipy.special.j0(drive * x)**2 * np.exp(-0.5 * x * x),
        r0=2.0, oscillations=2.0 * drive)


def sum_oracle_distribution(n0, b, k_range=None):
    """
    Photon number distribution from the momentum average of the squared
    displacement elements, one quadrature per k:

        P_k = b^(2s) ratio int_0^inf u^s exp(-(1 + b^2) u) L_m^s(b^2 u)^2 du.
    """
    n0 = int(n0)
    b2 = b * b
    if k_range is None:
        half = int(np.ceil(b2 + 12.0 * np.sqrt((2.0 * n0 + 1.0) * b2 + b2 * b2))) + 20
        k_range = (-half, half)
    ks = np.arange(max(k_range[0], -n0), k_range[1] + 1)

    weights = np.zeros(len(ks))
    for i, k in enumerate(ks):
        s = abs(int(k))
        m = n0 if k >= 0 else n0 - s
        log_pref = 2.0 * _log_sqrt_ratio(int(k), n0)
        if s > 0:
            log_pref += 2.0 * s * np.log(b)

        def f(u, s=s, m=m, log_pref=log_pref):
            with np.errstate(divide="ignore"):
                log_u = np.where(u > 0.0, np.log(np.maximum(u, 1e-300)), -np.inf)
                env = np.exp(log_pref + (s * log_u if s > 0 else 0.0) -
                             (1.0 + b2) * u)
            return env * scipy.special.eval_genlaguerre(m, s, b2 * u)**2

        peak = s / (1.0 + b2)
        weights[i] = integrate(f, r0=peak + 2.0 * (m + 20.0),
                               oscillations=b * np.sqrt(m + 1.0),
                               points=[peak])
    return PhotonDistribution(ks, weights, Quadrature, n0=n0, b=b)


class HamiltonianSpec(collections.namedtuple('HamiltonianSpec', [
        'n_max', 'p_dimless', 'coupling', 'omega_ratio', 'omega_tau0'])):
    """
    Single-mode Hamiltonian at fixed transverse electron momentum, in units of
    the dressed mode quantum,

        h = (N + 1/2) - conj(sigma) A - sigma A^+ + |p|^2 / (2 omega_ratio
            omega_tau0),

    with sigma = -coupling (p_x - i p_y) / sqrt(2), truncated to the number
    states 0 ... n_max.
    """

    @staticmethod
    def from_params(plasma_ratio, omega_tau0, p_dimless, n_max):
        """
        Chooses the coupling such that the dressed mode frequency is
        (1 + plasma_ratio) times the bare one, which reproduces the transverse
        mass ratio (1 + plasma_ratio) / (1 - plasma_ratio).
        """
        if not 0.0 <= plasma_ratio < 1.0:
            raise ValueError(
                "plasma_ratio={} must be in [0, 1)".format(plasma_ratio))
        omega_ratio = 1.0 + plasma_ratio
        coupling = np.sqrt(2.0 * plasma_ratio / (omega_ratio**2 * omega_tau0))
        return HamiltonianSpec(int(n_max), tuple(p_dimless), coupling,
                               omega_ratio, omega_tau0)

    @property
    def sigma(self):
        px, py = self.p_dimless
        return -self.coupling * (px - 1j * py) / np.sqrt(2.0)

    @property
    def kinetic(self):
        px, py = self.p_dimless
        return (px * px + py * py) / (2.0 * self.omega_ratio * self.omega_tau0)

    @property
    def mass_ratio(self):
        kin = 1.0 / (2.0 * self.omega_ratio * self.omega_tau0)
        shift = 0.5 * self.coupling**2
        if shift >= kin:
            raise RangeError("The coupling leaves no bound transverse motion")
        return kin / (kin - shift)

    def matrix(self):
        n = np.arange(self.n_max + 1)
        off = -self.sigma * np.sqrt(n[1:])
        return (np.diag(n + 0.5 + self.kinetic + 0j) + np.diag(off, -1) +
                np.diag(np.conj(off), 1))


def eigenvalue(spec, n0):
    return n0 + 0.5 - np.abs(spec.sigma)**2 + spec.kinetic


def eigen_residual(spec, n0):
    """
    Returns |h v - E v| / |h v| for the vector v with components
    <n|D[sigma]|n0>. A truncation-dominated result is flagged with a
    TruncationWarning.
    """
    n0 = int(n0)
    if not 0 <= n0 <= spec.n_max:
        raise ValueError("n0={} outside of the truncated Fock space 0...{}"
                         .format(n0, spec.n_max))
    v = element(np.arange(spec.n_max + 1) - n0, n0, spec.sigma)
    tail = np.sum(np.abs(v[-RESIDUAL_TAIL_COUNT:])**2)
    if tail > RESIDUAL_TAIL_TOL:
        warnings.warn(
            "Residual inconclusive: eigenvector mass {:.3g} in the top Fock "
            "states; increase n_max".format(tail), category=TruncationWarning)

    hv = spec.matrix() @ v
    res = np.linalg.norm(hv - eigenvalue(spec, n0) * v)
    return float(res / max(np.linalg.norm(hv), np.finfo(np.float64).tiny))
