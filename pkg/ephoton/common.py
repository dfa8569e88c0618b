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

class Method:
    """
    Marks how a quantity was evaluated. Asymptotic results carry the order
    of their deviation from the exact value as error_tag.
    """

    def __init__(self, name, error_tag=None):
        self.name = name
        self.error_tag = error_tag

    def __repr__(self):
        return self.name


class Shape:
    """
    Qualitative shape of a photon number distribution at a fixed detection
    point.
    """

    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return self.name


Exact = Method("exact")
Asymptotic = Method("asymptotic", error_tag="O(n0^-3/4)")
Quadrature = Method("quadrature")

Monotonic = Shape("monotonic")
Oscillatory = Shape("oscillatory")


class RangeError(ValueError):
    """
    Raised if a value cannot be represented in double precision or if an
    argument lies outside the domain of an operation.
    """


class SingularParameterError(ValueError):
    """
    Raised for the measure-zero parameter values at which a closed form has a
    removable singularity (b = 1 for the photon distribution, 2b^2 = 1 for the
    electron purity). Perturb b slightly to work around this.
    """


class NoRootError(RuntimeError):
    pass


class TruncationError(RuntimeError):
    pass


class QuadratureError(RuntimeError):
    pass


class UndefinedProductError(ZeroDivisionError):
    pass


class TruncationWarning(UserWarning):
    pass


class NormalizationWarning(UserWarning):
    pass
