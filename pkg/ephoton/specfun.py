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
Special functions used throughout ephoton. Integer order Bessel functions are
delegated to scipy.special; the orthogonal polynomials are evaluated with
their three-term recurrences and carry a separate logarithmic scale, so that
orders up to the millions and the large factorial ratios occurring in the
displacement matrix elements never overflow.
"""

import collections

import numpy as np
import scipy.special

from .common import RangeError
from .internal.recurrences import three_term, working_dtype

# Factorial ratios with a smaller order difference are evaluated by explicitly
# summing the logarithms
TELESCOPE_LIMIT = 100000

# Number of terms beyond the argument used in the real order series
SERIES_MARGIN = 60


class LogScaled(collections.namedtuple('LogScaled',
                                       ['log_magnitude', 'phase'])):
    """
    Represents the value phase * exp(log_magnitude). For real quantities the
    phase is the sign, for complex quantities a unit complex number. Zero is
    represented by a log_magnitude of -inf.
    """

    @staticmethod
    def from_value(value):
        value = np.asarray(value)
        mag = np.abs(value)
        with np.errstate(divide="ignore", invalid="ignore"):
            log_magnitude = np.log(mag)
            phase = np.where(mag > 0.0, value / np.where(mag > 0, mag, 1.0),
                             0.0)
        return LogScaled(log_magnitude, phase)

    @property
    def value(self):
        if np.any(self.log_magnitude > np.log(np.finfo(np.float64).max)):
            raise RangeError("Value exceeds the double precision range")
        return self.phase * np.exp(self.log_magnitude)

    def __mul__(self, other):
        if not isinstance(other, LogScaled):
            other = LogScaled.from_value(other)
        return LogScaled(self.log_magnitude + other.log_magnitude,
                         self.phase * other.phase)


def _finite_or_raise(value, name):
    if not np.all(np.isfinite(value)):
        raise RangeError(
            "{} overflows; use the logarithmically scaled variant".format(name))
    return value


def bessel_i_int(k, z):
    """
    Modified Bessel function of the first kind I_k(z) for integer k and real or
    complex z.
    """
    k = np.abs(np.asarray(k, dtype=np.int64))
    z = np.asarray(z)
    if not np.all(np.isfinite(z)):
        raise ValueError("Argument of I_k must be finite")
    return _finite_or_raise(scipy.special.iv(k, z), "I_k(z)")


def log_bessel_i_int(k, z):
    """
    Returns I_k(z) as a LogScaled value. Uses the exponentially scaled Bessel
    function, i.e. log|I_k(z)| = log|ive(k, z)| + |Re z|.
    """
    k = np.abs(np.asarray(k, dtype=np.int64))
    z = np.asarray(z)
    scaled = LogScaled.from_value(scipy.special.ive(k, z))
    return LogScaled(scaled.log_magnitude + np.abs(np.real(z)), scaled.phase)


def bessel_i_real_order(nu, x):
    """
    Modified Bessel function I_nu(x) of real (possibly negative, non-integer)
    order nu, evaluated with the defining power series

        I_nu(x) = sum_m (x / 2)^(2m + nu) / (m! Gamma(m + nu + 1)).

    Terms at which Gamma(m + nu + 1) has a pole carry a zero weight and are
    dropped. Meant for moderate arguments 0 < x <= 100.
    """
    nu = np.asarray(nu, dtype=np.float64)
    x = float(x)
    if x <= 0.0:
        raise ValueError("Argument x={} of I_nu must be positive".format(x))

    m = np.arange(int(x) + SERIES_MARGIN + int(np.max(np.abs(nu), initial=0.0)))
    order = nu[..., None] + m + 1.0
    pole = (order <= 0.0) & (order == np.round(order))

    with np.errstate(divide="ignore", invalid="ignore"):
        log_terms = ((2.0 * m + nu[..., None]) * np.log(0.5 * x) -
                     scipy.special.gammaln(m + 1.0) -
                     scipy.special.gammaln(order))
        terms = np.where(pole, 0.0,
                         scipy.special.gammasgn(order) * np.exp(log_terms))
    return np.sum(terms, axis=-1)


def bessel_j(k, x):
    """
    Bessel function of the first kind J_k(x) of integer order.
    """
    return _finite_or_raise(
        scipy.special.jv(np.asarray(k, dtype=np.int64), np.asarray(x)),
        "J_k(x)")


def _public(value):
    value = np.asarray(value)
    return value.astype(np.complex128 if np.iscomplexobj(value) else np.float64)


def _polynomial(n, p0, p1, step, name):
    mantissa, log_scale = three_term(n, p0, p1, step)
    with np.errstate(over="ignore"):
        value = _public(mantissa * np.exp(log_scale))
    return _finite_or_raise(value, name)


def _log_polynomial(n, p0, p1, step):
    mantissa, log_scale = three_term(n, p0, p1, step)
    res = LogScaled.from_value(mantissa)
    return LogScaled(_public(res.log_magnitude + log_scale),
                     _public(res.phase))


def _laguerre_recurrence(n, s, x):
    n_max = int(np.max(n))
    dtype = working_dtype(n_max, np.iscomplexobj(x))
    real = working_dtype(n_max, False)
    s = np.asarray(s, dtype=real)
    x = np.asarray(x, dtype=dtype)

    def step(j):
        j = real(j)
        return (2.0 * j + 1.0 + s - x) / (j + 1.0), (j + s) / (j + 1.0)

    return np.ones_like(x), 1.0 + s - x, step


def laguerre(n, s, x):
    """
    Generalized Laguerre polynomial L_n^s(x) for real or complex x.
    """
    if np.any(np.asarray(n) < 0) or np.any(np.asarray(s) < 0):
        raise ValueError("Laguerre polynomial order and parameter must be "
                         "non-negative")
    p0, p1, step = _laguerre_recurrence(n, s, x)
    return _polynomial(n, p0, p1, step, "L_n^s(x)")


def log_laguerre(n, s, x):
    if np.any(np.asarray(n) < 0) or np.any(np.asarray(s) < 0):
        raise ValueError("Laguerre polynomial order and parameter must be "
                         "non-negative")
    p0, p1, step = _laguerre_recurrence(n, s, x)
    return _log_polynomial(n, p0, p1, step)


def _jacobi_recurrence(n, alpha, t, extended=False):
    # Coefficients in t = x - 1; the t dependent part of each coefficient is
    # kept as a separate term so that the offset from one is never rounded
    # away
    n_max = int(np.max(n))
    real = np.longdouble if extended else working_dtype(n_max, False)
    alpha = np.asarray(alpha, dtype=real)
    t = np.asarray(t, dtype=real)

    def step(j):
        # Standard Jacobi recurrence with beta = 0; 2j + alpha >= 2 for j >= 1
        j = real(j)
        u = 2.0 * j + alpha
        denom = 2.0 * (j + 1.0) * (j + alpha + 1.0) * u
        a = (u + 1.0) * ((u + 2.0) * u + alpha * alpha) / denom
        c = 2.0 * (j + alpha) * j * (u + 2.0) / denom
        d = (u + 1.0) * (u + 2.0) * u * t / denom
        return a, c, d

    return np.ones_like(alpha * t), (alpha + 1.0) + (alpha + 2.0) * t / 2.0, step


def _check_jacobi(n, alpha):
    if np.any(np.asarray(n) < 0) or np.any(np.asarray(alpha) < 0):
        raise ValueError("Jacobi polynomial order and alpha must be "
                         "non-negative")


def jacobi_p(n, alpha, x):
    """
    Jacobi polynomial P_n^(alpha, 0)(x).
    """
    _check_jacobi(n, alpha)
    p0, p1, step = _jacobi_recurrence(n, alpha, np.asarray(x) - 1.0)
    return _polynomial(n, p0, p1, step, "P_n^(alpha, 0)(x)")


def log_jacobi_p_shifted(n, alpha, t):
    """
    P_n^(alpha, 0)(1 + t) as a LogScaled value, accumulated in extended
    precision. Use this form for arguments within a few n^-2 of one, where
    forming 1 + t as a float destroys the offset the polynomial depends on.
    """
    _check_jacobi(n, alpha)
    p0, p1, step = _jacobi_recurrence(n, alpha, t, extended=True)
    return _log_polynomial(n, p0, p1, step)


def _legendre_recurrence(n, t, extended=False):
    real = np.longdouble if extended else working_dtype(int(np.max(n)), False)
    t = np.asarray(t, dtype=real)

    def step(j):
        j = real(j)
        a = (2.0 * j + 1.0) / (j + 1.0)
        return a, j / (j + 1.0), a * t

    return np.ones_like(t), 1.0 + t, step


def legendre_p(n, x):
    """
    Legendre polynomial P_n(x).
    """
    if np.any(np.asarray(n) < 0):
        raise ValueError("Legendre polynomial order must be non-negative")
    p0, p1, step = _legendre_recurrence(n, np.asarray(x) - 1.0)
    return _polynomial(n, p0, p1, step, "P_n(x)")


def log_legendre_p(n, x):
    if np.any(np.asarray(n) < 0):
        raise ValueError("Legendre polynomial order must be non-negative")
    p0, p1, step = _legendre_recurrence(n, np.asarray(x) - 1.0)
    return _log_polynomial(n, p0, p1, step)


def log_legendre_p_shifted(n, t):
    """
    P_n(1 + t) as a LogScaled value, accumulated in extended precision.
    """
    if np.any(np.asarray(n) < 0):
        raise ValueError("Legendre polynomial order must be non-negative")
    p0, p1, step = _legendre_recurrence(n, t, extended=True)
    return _log_polynomial(n, p0, p1, step)


def log_gamma(x):
    x = np.asarray(x, dtype=np.float64)
    if np.any(x <= 0.0):
        raise ValueError("log_gamma is only defined for positive arguments")
    return scipy.special.gammaln(x)


def log_ratio_factorials(n, m):
    """
    Computes log(n! / m!) for non-negative integers n, m (scalars or arrays).
    Small order differences are summed explicitly, which keeps the result
    exact to rounding even if n! itself is astronomically large.
    """
    n = np.asarray(n, dtype=np.int64)
    m = np.asarray(m, dtype=np.int64)
    if np.any(n < 0) or np.any(m < 0):
        raise ValueError("Factorials require non-negative integers")

    lo = int(min(np.min(n), np.min(m)))
    hi = int(max(np.max(n), np.max(m)))
    if hi - lo > TELESCOPE_LIMIT:
        return scipy.special.gammaln(n + 1.0) - scipy.special.gammaln(m + 1.0)

    # table[i] = log((lo + i)! / lo!)
    table = np.concatenate(
        ((0.0,), np.cumsum(np.log(np.arange(lo + 1, hi + 1, dtype=np.float64)))))
    return table[n - lo] - table[m - lo]
