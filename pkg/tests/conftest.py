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

import pytest

from blowup import AnalysisConfig, CoefficientField, MonomialIdeal, default_ring


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help='run corpus sweeps and other slow tests')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def ring2():
    return default_ring(2)


@pytest.fixture
def ring3():
    return default_ring(3)


@pytest.fixture
def ring2_fp():
    return default_ring(2, CoefficientField.prime(32003))


@pytest.fixture
def config():
    return AnalysisConfig()


@pytest.fixture
def m2_plane(ring2):
    return MonomialIdeal.maximal(ring2, 2)


@pytest.fixture
def m2_space(ring3):
    return MonomialIdeal.maximal(ring3, 2)


@pytest.fixture
def squares_plane(ring2):
    return MonomialIdeal(ring2, [(2, 0), (0, 2)])
