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
Consistency matrix pairing every closed form with an independent oracle.
Each check returns the measured deviation; `run_checks` evaluates them in a
fixed order and never aborts the batch when a single check fails.
"""

import collections

import numpy as np
import scipy.integrate
import scipy.special

from . import density, oracle, params, phase
from .entangled import (DetectionPoint, joint_amplitude_exact,
                        xi_coefficients)

QUICK = "quick"
FULL = "full"
LEVELS = (QUICK, FULL)


class CheckResult(collections.namedtuple('CheckResult', [
        'name', 'oracle', 'deviation', 'tolerance', 'passed', 'message'])):
    def to_dict(self):
        return collections.OrderedDict(zip(self._fields, self))


Check = collections.namedtuple('Check', [
    'name', 'oracle', 'tolerance', 'level', 'fn'])

_CHECKS = []


def check(name, oracle, tolerance, level=QUICK):
    def wrap(fn):
        _CHECKS.append(Check(name, oracle, tolerance, level, fn))
        return fn
    return wrap


def checks(level=FULL):
    if level not in LEVELS:
        raise ValueError("Unknown verification level {!r}".format(level))
    return [c for c in _CHECKS if level == FULL or c.level == QUICK]


def _b_of(n0, drive):
    return drive / (2.0 * np.sqrt(n0))


def _radial_norm(density_of_x, upper=40.0):
    value, _ = scipy.integrate.quad(lambda x: x * density_of_x(x), 0.0, upper,
                                    limit=400, epsabs=1e-12, epsrel=1e-12)
    return 2.0 * np.pi * value


def _amplitude_deviation(n0s, xs, thetas, ks, drive=2.0):
    dev = 0.0
    for n0 in n0s:
        b = _b_of(n0, drive)
        for x in xs:
            for theta in thetas:
                point = DetectionPoint(x, 0.3, theta)
                for k in ks:
                    a = joint_amplitude_exact(k, n0, point, b).value
                    o = oracle.quad_joint_amplitude(k, n0, point, b).value
                    dev = max(dev, abs(a - o))
    return dev


def _distribution_deviation(n0s, bs):
    dev = 0.0
    for n0 in n0s:
        for b in bs:
            exact = density.photon_dist_exact(n0, b)
            lo, hi = int(exact.ks[0]), int(exact.ks[-1])
            quad = oracle.sum_oracle_distribution(n0, b, k_range=(lo, hi))
            dev = max(dev, np.max(np.abs(exact.weights - quad.weights)))
    return dev


def _xi_norm_deviation(drives, thetas):
    dev = 0.0
    for drive in drives:
        for theta in thetas:
            def mass(x):
                xi = xi_coefficients(DetectionPoint(x, 0.0, theta), drive)
                return np.sum(np.abs(xi.values)**2)
            dev = max(dev, abs(1.0 - _radial_norm(mass)))
    return dev


def _jackiw(gamma=1.0):
    return phase.jackiw_state(gamma, branch=0)


@check("photon_normalisation", "direct summation", 1e-12)
def _check_photon_normalisation():
    return max(density.photon_dist_asymptotic(q).norm_defect
               for q in (2.5, 5.0, 25.0, 50.0))


@check("von_neumann_photon", "direct -sum p log p", 1e-12)
def _check_von_neumann():
    p = density.photon_dist_asymptotic(5.0).weights
    p = p[p > 0.0]
    return abs(density.von_neumann_photon(5.0) + np.sum(p * np.log(p)))


@check("linear_entropy_photon", "oracle.quad_purity_asymptotic", 1e-8)
def _check_linear_entropy():
    return abs(1.0 - density.linear_entropy_photon(2.0) -
               oracle.quad_purity_asymptotic(2.0))


@check("joint_amplitude_exact", "oracle.quad_joint_amplitude", 1e-8)
def _check_amplitude_quick():
    return _amplitude_deviation((20,), (2.0,), (0.0, 1.0), (0, 1, -1))


@check("photon_dist_exact", "oracle.sum_oracle_distribution", 1e-9)
def _check_distribution_quick():
    return _distribution_deviation((5,), (0.3,))


@check("electron_purity_exact", "oracle.quad_trace_purity", 1e-6)
def _check_purity_quick():
    return abs(density.electron_purity_exact(5, 0.4) -
               oracle.quad_trace_purity(5, 0.4))


@check("eigen_residual", "truncated Fock Hamiltonian", 1e-10)
def _check_eigen_residual():
    spec = oracle.HamiltonianSpec(200, (0.8 * np.sqrt(2.0), 0.0), 1.0, 1.0,
                                  1.0)
    return oracle.eigen_residual(spec, 5)


@check("jackiw_u1", "Robertson bound 1/4", 1e-8)
def _check_jackiw_u1():
    state, _ = _jackiw()
    return abs(phase.uncertainty_u1(state) - 0.25)


@check("operator_algebra", "E E^+ = 1 on interior rows", 1e-13)
def _check_operator_algebra():
    ops = phase.build_operators(32)
    eed = (ops.E @ ops.Edag).entries[:-1, :-1]
    ede = (ops.Edag @ ops.E).entries
    return max(np.max(np.abs(eed - np.eye(31))),
               np.max(np.abs(ede - np.eye(32) + ops.P0.entries)))


@check("intensity_for_q", "figure caption intensities", 1e-2)
def _check_intensity_for_q():
    qs = np.array((2.5, 5.0, 25.0, 50.0))
    return np.max(np.abs(params.intensity_for_q(qs) / (qs * 0.5e12) - 1.0))


@check("mean_occupation_ti_sapphire", "tabulated coefficient", 0.15)
def _check_ti_sapphire():
    laser = params.LASERS[0]
    return abs(laser.coefficient / laser.tabulated - 1.0)


@check("position_distribution_normalisation", "radial quadrature", 1e-6)
def _check_position_norm():
    return abs(1.0 - _radial_norm(
        lambda x: density.electron_position_distribution(x, 1.0, 2.0)))


@check("xi_normalisation", "radial quadrature", 1e-6)
def _check_xi_norm_quick():
    return _xi_norm_deviation((2.0,), (0.5,))


@check("joint_amplitude_exact_grid", "oracle.quad_joint_amplitude", 1e-8,
       level=FULL)
def _check_amplitude_full():
    return _amplitude_deviation((5, 20, 50), (0.5, 2.0, 4.0), (0.0, 0.5, 2.0),
                                (0, 1, -1, 3))


@check("photon_dist_exact_grid", "oracle.sum_oracle_distribution", 1e-9,
       level=FULL)
def _check_distribution_full():
    return _distribution_deviation((1, 10, 50), (0.2, 0.7, 1.3))


@check("electron_purity_exact_grid", "oracle.quad_trace_purity", 1e-6,
       level=FULL)
def _check_purity_full():
    return max(abs(density.electron_purity_exact(n0, b) -
                   oracle.quad_trace_purity(n0, b))
               for n0 in (1, 5, 20, 50) for b in (0.1, 0.4, 0.9))


@check("electron_linear_entropy_limit", "1 - I_0(2q) exp(-2q)", 1e-3,
       level=FULL)
def _check_entropy_limit():
    n0, q = 10**6, 2.0
    return abs(density.linear_entropy_electron_exact(n0, np.sqrt(q / (2.0 * n0))) -
               density.linear_entropy_photon(q))


@check("jackiw_recursion", "minimum-uncertainty recursion", 1e-10, level=FULL)
def _check_jackiw_recursion():
    state, prm = _jackiw()
    ops = phase.build_operators(state.dim)
    return max(phase.recursion_residual(state, prm),
               abs(phase.expectation(ops.C, state)),
               abs(phase.expectation(ops.N, state).real - prm.nu))


@check("xi_normalisation_grid", "radial quadrature", 1e-6, level=FULL)
def _check_xi_norm_full():
    return _xi_norm_deviation((0.5, 2.0, 4.0), (0.0, 0.5, 1.0, 3.0))


def run_checks(level=QUICK, tolerances=None):
    """
    Runs the consistency matrix at the given level ("quick" or "full").
    `tolerances` maps check names to overriding tolerances. Exceptions raised
    by a check are recorded as failures.
    """
    tolerances = {} if tolerances is None else dict(tolerances)
    selected = checks(level)
    unknown = set(tolerances) - set(c.name for c in selected)
    if unknown:
        raise ValueError("Unknown checks {}".format(", ".join(sorted(unknown))))

    results = []
    for c in selected:
        tol = float(tolerances.get(c.name, c.tolerance))
        try:
            deviation, message = float(c.fn()), ""
        except Exception as e:
            deviation, message = float("inf"), "{}: {}".format(
                type(e).__name__, e)
        results.append(CheckResult(c.name, c.oracle, deviation, tol,
                                   bool(deviation <= tol), message))
    return results
