# PyBlowup - Hilbert coefficients and blowup certificates for Python
# Copyright (C) 2024 PyBlowup contributors
#
# This file is part of PyBlowup.
#
# PyBlowup is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License as published
# by the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# PyBlowup is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with PyBlowup.  If not, see <http://www.gnu.org/licenses/>.


__version__ = '0.1.0'

from .errors import *
from .config import *
from .rings import *
from .parser import *
from .groebner import *
from .monomial import *
from .filtration import *
from .hilbert import *
from .reduction import *
from .analysis import *
from .corpus import *
from .report import *
from .oracle import *
