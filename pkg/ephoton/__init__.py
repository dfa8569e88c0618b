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

# Set the package name and version
name = "ephoton"
version = "0.1.0"

# Expose commonly used objects
from .common import \
    Exact, \
    Asymptotic, \
    Quadrature, \
    Monotonic, \
    Oscillatory, \
    RangeError, \
    SingularParameterError, \
    NoRootError, \
    TruncationError, \
    QuadratureError, \
    UndefinedProductError, \
    TruncationWarning, \
    NormalizationWarning
from .params import PhysicalConfig, DerivedParams, derive
from .entangled import DetectionPoint
from .phase import FockState, FockOperator
from .density import PhotonDistribution, EntropyReport
