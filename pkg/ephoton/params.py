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

import collections
import json

import numpy as np

from nengo.params import FrozenObject, IntParam, NumberParam

# Physical constants (eV, cm, s)
TWO_MC2_EV = 1.021998e6
FINE_STRUCTURE = 1.0 / 137.035999
HBAR_EV_S = 6.582119569e-16
HC_EV_CM = 1.23984198e-4
C_CM_S = 2.99792458e10

# Rounded prefactor of the mean occupation estimate, (W/cm^2)^-1 eV^4
MEAN_OCCUPATION_COEFFICIENT = 2.7e-5

DEFAULT_LAMBDA_OVER_W = 4e3 * np.pi


class PhysicalConfig(FrozenObject):
    """
    Physical inputs of a run. Intensities are given in W/cm^2, energies in eV
    and lengths in cm. The packet width is optional; if it is not given, it is
    implied by the wavelength and lambda_over_w. It is only used to convert
    the dimensionless time t/tau0 to seconds.
    """

    photon_energy_eV = NumberParam(
        "photon_energy_eV", low=0.0, low_open=True, readonly=True)
    intensity_W_cm2 = NumberParam("intensity_W_cm2", low=0.0, readonly=True)
    packet_width_cm = NumberParam(
        "packet_width_cm", low=0.0, low_open=True, optional=True,
        readonly=True)
    lambda_over_w = NumberParam(
        "lambda_over_w", low=0.0, low_open=True, readonly=True)
    n0 = IntParam("n0", low=0, readonly=True)
    plasma_ratio = NumberParam(
        "plasma_ratio", low=0.0, high=1.0, high_open=True, readonly=True)
    bandwidth_ratio = NumberParam(
        "bandwidth_ratio", low=0.0, low_open=True, readonly=True)

    FIELDS = ("photon_energy_eV", "intensity_W_cm2", "packet_width_cm",
              "lambda_over_w", "n0", "plasma_ratio", "bandwidth_ratio")

    def __init__(self,
                 photon_energy_eV=1.0,
                 intensity_W_cm2=1e12,
                 packet_width_cm=None,
                 lambda_over_w=DEFAULT_LAMBDA_OVER_W,
                 n0=1000,
                 plasma_ratio=0.0,
                 bandwidth_ratio=1.0):
        super().__init__()
        self.photon_energy_eV = photon_energy_eV
        self.intensity_W_cm2 = intensity_W_cm2
        self.packet_width_cm = packet_width_cm
        self.lambda_over_w = lambda_over_w
        self.n0 = n0
        self.plasma_ratio = plasma_ratio
        self.bandwidth_ratio = bandwidth_ratio

    def __repr__(self):
        return "PhysicalConfig({})".format(", ".join(
            "{}={!r}".format(key, value) for key, value in self.to_dict().items()))

    @property
    def wavelength_cm(self):
        return HC_EV_CM / self.photon_energy_eV

    @property
    def width_cm(self):
        if self.packet_width_cm is None:
            return self.wavelength_cm / self.lambda_over_w
        return self.packet_width_cm

    def to_dict(self):
        return collections.OrderedDict(
            (key, getattr(self, key)) for key in self.FIELDS)

    def replace(self, **kwargs):
        """
        Returns a copy of this configuration with the given fields replaced.
        """
        d = self.to_dict()
        d.update(kwargs)
        return PhysicalConfig.from_dict(d)

    @staticmethod
    def from_dict(d):
        unknown = set(d.keys()) - set(PhysicalConfig.FIELDS)
        if unknown:
            raise ValueError("Unknown configuration keys: {}".format(
                ", ".join(sorted(unknown))))
        return PhysicalConfig(**d)

    @staticmethod
    def from_json(filename):
        with open(filename, "r") as f:
            return PhysicalConfig.from_dict(json.load(f))


class DerivedParams:
    """
    Dimensionless groups derived from a PhysicalConfig. Every formula in the
    other modules consumes these instead of physical units.
    """

    def __init__(self, mu, Lambda_over_w, n0, mass_ratio, omega_tau0,
                 wavelength_cm, tau0_s):
        self.mu = mu
        self.Lambda_over_w = Lambda_over_w
        self.n0 = n0
        self.mass_ratio = mass_ratio
        self.omega_tau0 = omega_tau0
        self.wavelength_cm = wavelength_cm
        self.tau0_s = tau0_s

    @property
    def drive(self):
        return self.mu * self.Lambda_over_w

    @property
    def q(self):
        return 0.5 * self.drive**2

    @property
    def b(self):
        if self.n0 == 0:
            raise ValueError(
                "The per-photon coupling b is undefined for n0 = 0")
        return self.drive / (2.0 * np.sqrt(self.n0))

    @property
    def tau_ratio(self):
        return self.mass_ratio

    def to_dict(self):
        return collections.OrderedDict((
            ("mu", self.mu),
            ("Lambda_over_w", self.Lambda_over_w),
            ("drive", self.drive),
            ("q", self.q),
            ("b", None if self.n0 == 0 else self.b),
            ("mass_ratio", self.mass_ratio),
            ("omega_tau0", self.omega_tau0),
            ("tau_ratio", self.tau_ratio),
            ("wavelength_cm", self.wavelength_cm),
            ("tau0_s", self.tau0_s),
        ))


def mu_of(intensity_W_cm2, photon_energy_eV):
    return 1e-9 * np.sqrt(intensity_W_cm2) / photon_energy_eV


def derive(cfg):
    """
    Converts the physical configuration into the dimensionless groups.
    """
    rho = cfg.plasma_ratio
    width = cfg.width_cm
    return DerivedParams(
        mu=mu_of(cfg.intensity_W_cm2, cfg.photon_energy_eV),
        Lambda_over_w=cfg.lambda_over_w / (2.0 * np.pi),
        n0=cfg.n0,
        mass_ratio=(1.0 + rho) / (1.0 - rho),
        omega_tau0=0.5 * (TWO_MC2_EV / cfg.photon_energy_eV) *
        (2.0 * np.pi / cfg.lambda_over_w)**2,
        wavelength_cm=cfg.wavelength_cm,
        tau0_s=0.5 * TWO_MC2_EV * width**2 / (C_CM_S**2 * HBAR_EV_S),
    )


def intensity_for_q(q, photon_energy_eV=1.0,
                    lambda_over_w=DEFAULT_LAMBDA_OVER_W):
    """
    Inverts the intensity to q map, i.e. returns the intensity in W/cm^2 at
    which q = (mu Lambda / w)^2 / 2 takes the given value.
    """
    drive = np.sqrt(2.0 * np.asarray(q, dtype=np.float64))
    mu = drive * 2.0 * np.pi / lambda_over_w
    return (1e9 * mu * photon_energy_eV)**2


def q_for_intensity(intensity_W_cm2, photon_energy_eV=1.0,
                    lambda_over_w=DEFAULT_LAMBDA_OVER_W):
    drive = mu_of(np.asarray(intensity_W_cm2, dtype=np.float64),
                  photon_energy_eV) * lambda_over_w / (2.0 * np.pi)
    return 0.5 * drive**2


def mean_occupation(cfg):
    """
    Rounded estimate of the mean photon occupation number of a
    quasi-monochromatic field with relative bandwidth 1 / bandwidth_ratio.
    """
    return (MEAN_OCCUPATION_COEFFICIENT * cfg.bandwidth_ratio *
            cfg.intensity_W_cm2 / cfg.photon_energy_eV**4)


def mean_occupation_exact(cfg):
    """
    Mean occupation number from the mode density argument without rounding
    the numerical prefactor.
    """
    mu = mu_of(cfg.intensity_W_cm2, cfg.photon_energy_eV)
    return (np.pi / (16.0 * FINE_STRUCTURE) *
            (TWO_MC2_EV / cfg.photon_energy_eV)**2 *
            cfg.bandwidth_ratio * mu**2)


class Laser(collections.namedtuple('Laser', [
        'name', 'photon_energy_eV', 'bandwidth_ratio', 'tabulated'])):
    """
    Laser preset; `tabulated` is the published mean occupation per unit
    intensity, rounded to one significant figure.
    """

    def config(self, intensity_W_cm2=1.0):
        return PhysicalConfig(
            photon_energy_eV=self.photon_energy_eV,
            intensity_W_cm2=intensity_W_cm2,
            bandwidth_ratio=self.bandwidth_ratio)

    @property
    def coefficient(self):
        return mean_occupation(self.config(1.0))


LASERS = (
    Laser("Ti:Sa 5.2 fs", 1.57, 2.0, 9e-6),
    Laser("Nd:Glass 5.2 ps", 1.17, 3e3, 6e-2),
    Laser("He-Ne CW", 1.96, 1e8, 2e3),
)


def laser_table():
    return LASERS
