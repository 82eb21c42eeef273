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

"""
.. module:: oracle
    :synopsis: Equivalence suites between independent computations of the same quantities

Every suite runs two paths on the same monomial ideals (Gröbner bases against exponent combinatorics, linear
programming against the bounded power test) and lists every case where they disagree.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from blowup.config import AnalysisConfig, resolve_config
from blowup.corpus import CorpusSpec, generate_corpus
from blowup.filtration import AdicFiltration
from blowup.groebner import CombineOp, artinian_quotient_length, ideal_colon, ideal_combine, ideal_intersection
from blowup.hilbert import h_vector
from blowup.monomial import (
    MonomialIdeal, integral_closure, multiplicity_from_volume, np_membership, power_test_membership,
    staircase_length,
)

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    """
    Attributes:
        name (``str``): Suite name
        cases (``int``): Number of comparisons made
        disagreements (``list`` of ``str``): One line per failed comparison
    """

    name: str
    cases: int = 0
    disagreements: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.disagreements

    def record(self, ok: bool, description: Callable[[], str]):
        self.cases += 1
        if not ok:
            message = description()
            logger.error('%s: %s', self.name, message)
            self.disagreements.append(message)

    def to_dict(self) -> dict:
        return {'name': self.name, 'cases': self.cases, 'disagreements': list(self.disagreements)}


def length_suite(ideals: Sequence[MonomialIdeal], config: Optional[AnalysisConfig] = None) -> SuiteResult:
    """
    ``artinian_quotient_length`` against the staircase count
    """
    result = SuiteResult('length')
    for I in ideals:
        grobner, staircase = artinian_quotient_length(I.to_ideal(), config), staircase_length(I)
        result.record(grobner == staircase, lambda: '{}: Gröbner {} vs staircase {}'.format(I, grobner, staircase))
    return result


def operations_suite(ideals: Sequence[MonomialIdeal], config: Optional[AnalysisConfig] = None) -> SuiteResult:
    """
    Gröbner-path product, square, intersection and colon against the combinatorial operations
    """
    result = SuiteResult('operations')
    for I, J in zip(ideals, itertools.chain(ideals[1:], ideals[:1])):
        if I.ring != J.ring:
            continue
        P, Q = I.to_ideal(), J.to_ideal()
        pairs = [
            ('product', ideal_combine(CombineOp.PRODUCT, P, Q, config), I * J),
            ('power', ideal_combine(CombineOp.POWER, P, 2, config), I.power(2)),
            ('intersection', ideal_intersection(P, Q, config=config), I & J),
            ('colon', ideal_colon(P, Q, config=config), I.colon(J)),
        ]
        for name, grobner, combinatorial in pairs:
            ok = grobner.is_monomial() and MonomialIdeal.from_ideal(grobner) == combinatorial
            result.record(ok, lambda: '{} of {} and {}: {} vs {}'.format(name, I, J, grobner, combinatorial))
    return result


def membership_suite(ideals: Sequence[MonomialIdeal], bound: int = 12) -> SuiteResult:
    """
    :func:`~blowup.monomial.np_membership` against the power test wherever the power test certifies membership
    """
    result = SuiteResult('membership')
    for I in ideals:
        box = I.max_exponents()
        for v in itertools.product(*(range(b + 1) for b in box)):
            k = power_test_membership(v, I, bound)
            if k is None:
                continue
            result.record(np_membership(v, I), lambda: '{}: x^{} in I^{} power but not by LP'.format(I, v, k))
    return result


def closure_suite(ideals: Sequence[MonomialIdeal], config: Optional[AnalysisConfig] = None) -> SuiteResult:
    """
    Facet-based closure against the LP closure, and ``d! * covolume`` against the multiplicity from the Hilbert
    function
    """
    result = SuiteResult('closure')
    for I in ideals:
        facets, lp = integral_closure(I, 'facets'), integral_closure(I, 'lp')
        result.record(facets == lp, lambda: '{}: facets {} vs LP {}'.format(I, facets, lp))
        volume = multiplicity_from_volume(I)
        e0 = h_vector(AdicFiltration(I, config), config).multiplicity
        result.record(volume == e0, lambda: '{}: covolume gives {} but e_0 = {}'.format(I, volume, e0))
    return result


def run_oracle_suites(count: int = 100, seed: int = 0, dimensions: Sequence[int] = (2, 3), max_degree: int = 4,
                      config: Optional[AnalysisConfig] = None) -> Dict[str, SuiteResult]:
    """
    Run every suite on ``count`` seeded ideals split over ``dimensions``
    """
    config = resolve_config(config)
    ideals: List[MonomialIdeal] = []
    share = max(1, count // len(dimensions))
    for d in dimensions:
        ideals += generate_corpus(CorpusSpec(d, max_degree, share, seed))
    results = {
        'length': length_suite(ideals, config),
        'operations': operations_suite(ideals, config),
        'membership': membership_suite(ideals, config.power_test_bound),
        'closure': closure_suite(ideals, config),
    }
    for name, suite in results.items():
        logger.info('oracle suite %s: %d cases, %d disagreements', name, suite.cases, len(suite.disagreements))
    return results


__all__ = ['SuiteResult', 'length_suite', 'operations_suite', 'membership_suite', 'closure_suite',
           'run_oracle_suites']
