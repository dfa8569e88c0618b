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
Truncated number-basis realisation of the exponential phase operator E, the
cosine and sine operators C and S built from it, the associated
number-phase uncertainty products, and the states minimising the first of
these products.
"""

import collections
import functools

import numpy as np
import scipy.optimize
import scipy.special

from .common import (NoRootError, TruncationError, UndefinedProductError)
from .specfun import bessel_i_real_order

# Number of top coefficients that must be negligible for truncated
# expectation values to be trusted
TAIL_COUNT = 5
TAIL_TOL = 1e-10

# Distance of the root bracket from the integers bounding a branch
BRACKET_INSET = 1e-8
BRACKET_SAMPLES = 400
DEFAULT_DIM_MARGIN = 60


class FockState:
    """
    Complex coefficient vector on the number basis |0>, ..., |dim - 1>.
    """

    def __init__(self, coefficients, normalise=True):
        c = np.array(coefficients, dtype=np.complex128)
        if c.ndim != 1 or c.size < 1:
            raise ValueError("Coefficients must be a non-empty vector")
        if normalise:
            norm = np.linalg.norm(c)
            if norm == 0.0:
                raise ValueError("Cannot normalise the zero vector")
            c /= norm
        self.coefficients = c

    @property
    def dim(self):
        return self.coefficients.size

    @property
    def norm(self):
        return np.linalg.norm(self.coefficients)

    @property
    def tail(self):
        return np.linalg.norm(self.coefficients[-TAIL_COUNT:])

    @staticmethod
    def number_state(n, dim):
        if not 0 <= n < dim:
            raise ValueError("Number state |{}> outside of dimension {}"
                             .format(n, dim))
        c = np.zeros(dim, dtype=np.complex128)
        c[n] = 1.0
        return FockState(c)


class FockOperator:
    """
    Dense matrix acting on the truncated number basis.
    """

    def __init__(self, entries, hermitian=False):
        entries = np.array(entries, dtype=np.complex128)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError("Operator matrix must be square")
        if not np.all(np.isfinite(entries)):
            raise ValueError("Operator matrix must be finite")
        if hermitian and not np.allclose(entries, entries.conj().T,
                                         rtol=0.0, atol=1e-14):
            raise ValueError("Operator claimed hermitian but is not")
        entries.setflags(write=False)
        self.entries = entries
        self.hermitian = hermitian

    @property
    def dim(self):
        return self.entries.shape[0]

    @property
    def H(self):
        return FockOperator(self.entries.conj().T, self.hermitian)

    def __matmul__(self, other):
        if isinstance(other, FockOperator):
            return FockOperator(self.entries @ other.entries)
        if isinstance(other, FockState):
            return self.entries @ other.coefficients
        return self.entries @ other


Operators = collections.namedtuple('Operators',
                                   ['N', 'E', 'Edag', 'C', 'S', 'P0'])


@functools.lru_cache(maxsize=16)
def build_operators(dim):
    """
    Builds N, E, E^+, C = (E + E^+) / 2, S = (E - E^+) / 2i and P0 = |0><0|
    on a basis of dimension dim. E = sum_k |k><k + 1| has ones on the
    superdiagonal. Identities involving E E^+ only hold on rows n <= dim - 2.
    """
    if dim < 2:
        raise ValueError("Dimension must be at least two")
    E = np.eye(dim, k=1)
    Ed = E.T
    P0 = np.zeros((dim, dim))
    P0[0, 0] = 1.0
    return Operators(
        N=FockOperator(np.diag(np.arange(dim, dtype=np.float64)), True),
        E=FockOperator(E),
        Edag=FockOperator(Ed),
        C=FockOperator(0.5 * (E + Ed), True),
        S=FockOperator((E - Ed) / 2j, True),
        P0=FockOperator(P0, True),
    )


def _check_tail(state):
    if state.tail > TAIL_TOL:
        raise TruncationError(
            "State has weight {:.3g} in its top {} coefficients; increase the "
            "dimension".format(state.tail, TAIL_COUNT))


def expectation(op, state, check_tail=True):
    if check_tail:
        _check_tail(state)
    c = state.coefficients
    return complex(np.vdot(c, op.entries @ c))


def variance(op, state, check_tail=True):
    """
    Returns <op^2> - <op>^2. For hermitian operators this is computed as
    ||op psi||^2 - <op>^2 and therefore real.
    """
    if check_tail:
        _check_tail(state)
    c = state.coefficients
    v = op.entries @ c
    mean = np.vdot(c, v)
    if op.hermitian:
        return float(np.vdot(v, v).real - mean.real**2)
    return complex(np.vdot(c, op.entries @ v) - mean**2)


def _uncertainty(state, conj_op, denom_op, check_tail):
    ops = build_operators(state.dim)
    d = expectation(getattr(ops, denom_op), state, check_tail).real
    if abs(d) < 1e-14:
        raise UndefinedProductError(
            "<{}> vanishes; the uncertainty product is undefined".format(
                denom_op))
    return (variance(ops.N, state, check_tail) *
            variance(getattr(ops, conj_op), state, check_tail) / d**2)


def uncertainty_u1(state, check_tail=True):
    """
    (Delta N)^2 (Delta C)^2 / <S>^2, bounded from below by 1/4.
    """
    return _uncertainty(state, "C", "S", check_tail)


def uncertainty_u2(state, check_tail=True):
    """
    (Delta N)^2 (Delta S)^2 / <C>^2, bounded from below by 1/4.
    """
    return _uncertainty(state, "S", "C", check_tail)


class JackiwParams(collections.namedtuple('JackiwParams',
                                          ['gamma', 'nu', 'branch'])):
    pass


def _nu_residual(nu, gamma):
    return bessel_i_real_order(-nu - 1.0, gamma)


def find_nu(gamma, branch=0, root=0):
    """
    Finds nu in (2 s, 2 s + 1), s = branch, such that the coefficients
    (-i)^n I_(n - nu)(gamma) satisfy the minimum-uncertainty recursion with
    a vanishing coefficient at n = -1, i.e. I_(-nu - 1)(gamma) = 0.

    Depending on gamma the branch interval contains zero or two roots; `root`
    selects the lower (0) or upper (1) one.
    """
    if gamma <= 0.0:
        raise ValueError("gamma={} must be positive".format(gamma))
    if branch < 0:
        raise ValueError("branch={} must be non-negative".format(branch))

    lo, hi = 2 * branch + BRACKET_INSET, 2 * branch + 1 - BRACKET_INSET
    nus = np.linspace(lo, hi, BRACKET_SAMPLES)
    f = _nu_residual(nus, gamma)
    idcs = np.flatnonzero(np.sign(f[:-1]) * np.sign(f[1:]) < 0)
    if idcs.size <= root:
        raise NoRootError(
            "I_(-nu - 1)({}) has no sign change for nu in ({}, {})".format(
                gamma, 2 * branch, 2 * branch + 1))

    i = idcs[root]
    return scipy.optimize.bisect(_nu_residual, nus[i], nus[i + 1],
                                 args=(gamma,), xtol=1e-15,
                                 rtol=4 * np.finfo(float).eps,
                                 maxiter=200)


def jackiw_state(gamma, branch=0, dim=None, root=0):
    """
    Builds the normalised state kappa sum_n (-i)^n I_(n - nu)(gamma) |n>
    together with its parameters.
    """
    nu = find_nu(gamma, branch, root)
    if dim is None:
        dim = int(np.ceil(nu) + np.ceil(gamma)) + DEFAULT_DIM_MARGIN

    n = np.arange(dim)
    a = (-1j)**(n % 4) * bessel_i_real_order(n - nu, gamma)
    if np.abs(a[-1])**2 >= 1e-20 * np.sum(np.abs(a)**2):
        raise TruncationError(
            "Dimension {} too small for gamma={}".format(dim, gamma))
    return FockState(a), JackiwParams(gamma, nu, branch)


def recursion_residual(state, params):
    """
    max_n |(nu - n) a_n - (i gamma / 2) (a_(n - 1) + a_(n + 1))| over the rows
    not touched by the truncation, with a_(-1) = 0.
    """
    a = np.concatenate(((0.0,), state.coefficients, (0.0,)))
    n = np.arange(state.dim - 1)
    lhs = (params.nu - n) * a[1:-2]
    rhs = 0.5j * params.gamma * (a[:-3] + a[2:-1])
    return float(np.max(np.abs(lhs - rhs)))


def xi_photon_part(point, drive, n0, dim):
    """
    Normalised photon part of the asymptotic entangled state at the electron
    detection point, sum_n (-i)^k exp(-i k phi) I_k(gamma) |n> with
    k = n - n0.
    """
    if not 0 <= n0 < dim:
        raise ValueError("n0={} must lie within the dimension {}".format(
            n0, dim))
    gamma = drive * point.x / (1.0 + 1j * point.theta)
    k = np.arange(dim) - n0
    c = ((-1j)**(k % 4) * np.exp(-1j * k * point.phi) *
         scipy.special.ive(np.abs(k), gamma))
    state = FockState(c)
    if np.abs(state.coefficients[-1])**2 >= 1e-20:
        raise TruncationError(
            "Dimension {} too small for |gamma|={:.3g}".format(dim, abs(gamma)))
    return state
