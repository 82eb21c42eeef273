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

from blowup import (
    CorpusSpec, MonomialIdeal, SuiteResult, closure_suite, generate_corpus, length_suite, membership_suite,
    operations_suite, run_oracle_suites,
)


@pytest.fixture
def small_plane():
    return list(generate_corpus(CorpusSpec(dimension=2, max_degree=3, count=6, seed=2)))


def test_suite_result():
    suite = SuiteResult('demo')
    suite.record(True, lambda: 'never rendered')
    suite.record(False, lambda: 'first')
    assert suite.cases == 2 and not suite.passed
    assert suite.to_dict() == {'name': 'demo', 'cases': 2, 'disagreements': ['first']}


def test_length_suite(small_plane, m2_space):
    suite = length_suite(small_plane + [m2_space])
    assert suite.passed and suite.cases == 7


def test_operations_suite(small_plane):
    suite = operations_suite(small_plane)
    assert suite.passed
    assert suite.cases == 4 * len(small_plane)


def test_membership_suite(ring2):
    suite = membership_suite([MonomialIdeal(ring2, [(4, 0), (0, 2)]), MonomialIdeal(ring2, [(3, 0), (1, 1), (0, 3)])])
    assert suite.passed and suite.cases > 0


def test_closure_suite(small_plane, m2_space):
    suite = closure_suite(small_plane + [m2_space])
    assert suite.passed
    assert suite.cases == 2 * 7


def test_run_oracle_suites():
    results = run_oracle_suites(count=4, seed=1, dimensions=(2,), max_degree=3)
    assert set(results) == {'length', 'operations', 'membership', 'closure'}
    assert all(suite.passed for suite in results.values())


@pytest.mark.slow
def test_default_oracle_run():
    results = run_oracle_suites()
    assert all(suite.passed for suite in results.values())
