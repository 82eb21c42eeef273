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
    AdicFiltration, AnalysisConfig, Classification, DimensionNotSupportedError, HypothesisNotVerifiedError, Ideal,
    InputError, MonomialIdeal, NotMPrimaryError, ReductionData, closure_intersection_identity,
    coefficient_identities, default_ring, expected_h_polynomial, field_caveat, hilbert_coefficients,
    itoh_inequalities, itoh_verdict, power_depth_probe, power_reduction_numbers, valabrega_valla_certificate,
    veronese_scaling,
)


def squares(ring, *names):
    return tuple(ring.variable(name) ** 2 for name in names)


@pytest.fixture
def plane_reduction(ring2):
    return ReductionData(squares(ring2, 'x', 'y'), 1, (1, 0), 0)


@pytest.fixture
def space_reduction(ring3):
    return ReductionData(squares(ring3, 'x', 'y', 'z'), 1, (4, 0), 0)


@pytest.fixture
def non_rr_plane(ring2):
    return MonomialIdeal(ring2, [(4, 0), (3, 1), (1, 3), (0, 4)])


@pytest.fixture
def non_rr_reduction(ring2):
    x, y = ring2.variable('x'), ring2.variable('y')
    return ReductionData((x ** 4, y ** 4), 2, (5, 2, 0), 0)


def test_expected_h_polynomial():
    assert expected_h_polynomial(3, [1, 0]) == [3, 1]
    assert expected_h_polynomial(11, [5, 2, 0]) == [11, 3, 2]
    assert expected_h_polynomial(6, [0]) == [6]


def test_valabrega_valla_plane(m2_plane, plane_reduction):
    report = valabrega_valla_certificate(m2_plane, plane_reduction)
    assert report.cm and report.depth_ge1
    assert (report.depth_lower_bound, report.depth_upper_bound) == (2, 2)
    assert report.n_max == 2
    assert [(c.j, c.n) for c in report.checks] == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert report.witnesses == []
    assert 'n = 1..2' in report.rationale


def test_valabrega_valla_space(m2_space, space_reduction):
    report = valabrega_valla_certificate(m2_space, space_reduction)
    assert report.cm
    assert report.depth_lower_bound == 3
    assert len(report.checks) == 6


def test_valabrega_valla_witness(non_rr_plane, non_rr_reduction):
    report = valabrega_valla_certificate(non_rr_plane, non_rr_reduction)
    assert not report.cm and not report.depth_ge1
    assert report.rr_deviation[0] == 1
    assert report.depth_upper_bound == 0
    assert report.depth_lower_bound == 0
    assert (1, 2) in [(c.j, c.n) for c in report.witnesses]
    assert report.to_dict()['depth_bounds'] == [0, 0]


def test_identities_plane(m2_plane, plane_reduction):
    report = coefficient_identities(m2_plane, plane_reduction)
    assert report.holds
    assert [c.name for c in report.checks] == ['e1', 'e2', 'e3', 'h']
    assert report.checks[0].actual == 1
    assert report.sigma2_zero is True and report.cube_from_square is True
    assert report.hypothesis.startswith('depth >= 1')


def test_identities_space(m2_space, space_reduction):
    report = coefficient_identities(m2_space, space_reduction)
    assert report.holds
    assert report.checks[0].expected == 4
    assert report.checks[3].actual == [4, 4]
    assert report.to_dict()['checks'][0] == {'name': 'e1', 'expected': '4', 'actual': '4', 'holds': True}


def test_identities_need_depth(non_rr_plane, non_rr_reduction):
    with pytest.raises(HypothesisNotVerifiedError):
        coefficient_identities(non_rr_plane, non_rr_reduction)


def test_power_reduction_numbers(m2_plane, plane_reduction):
    assert power_reduction_numbers(m2_plane, plane_reduction, 3) == [(1, 1), (2, 1), (3, 1)]


def test_closure_intersection(m2_plane, plane_reduction):
    assert closure_intersection_identity(m2_plane, plane_reduction) == (True, None)


def test_power_depth_probe(m2_plane, plane_reduction):
    probe = power_depth_probe(m2_plane, plane_reduction, AnalysisConfig({'power_depth_max': 3}))
    assert [entry['l'] for entry in probe] == [2, 3]
    assert all(entry['cm'] and entry['reduction_number'] == 1 for entry in probe)


def test_veronese_scaling(m2_plane):
    F = AdicFiltration(m2_plane)
    base = hilbert_coefficients(F, up_to=2)
    result = veronese_scaling(F, base, [2, 3])
    assert [entry['e0'] for entry in result] == [16, 36]
    assert all(entry['holds'] for entry in result)


def test_inequalities_of_parameter_ideal(squares_plane):
    report = itoh_inequalities(squares_plane)
    assert report.parameter_ideal and report.northcott
    assert all(report.signs.values())
    assert report.narita is True
    assert report.holds
    with pytest.raises(InputError):
        itoh_inequalities(Ideal.from_strings(squares_plane.ring, ['x^2', 'y^2']))


def test_verdict_on_normal_ideal(m2_plane):
    verdict = itoh_verdict(m2_plane, seed=5)
    assert verdict.classification is Classification.VERIFIED
    assert verdict.theorem_applicable and verdict.conclusion_holds
    assert verdict.e == [4, 1, 0, 0]
    assert verdict.identities.holds
    assert verdict.closure_intersection is True
    assert verdict.rr_in_closure is True
    assert verdict.power_bound_holds is True
    record = verdict.to_dict()
    assert record['classification'] == 'VerifiedInstance'
    assert record['seed'] == 5
    assert record['failed_stage'] is None
    assert record['ideal'] == str(m2_plane)
    assert sorted(str(m2_plane).strip('()').split(', ')) == ['x*y', 'x^2', 'y^2']


def test_verdict_on_parameter_ideal(squares_plane):
    verdict = itoh_verdict(squares_plane)
    assert verdict.classification is Classification.VACUOUS
    assert not verdict.normality.is_normal
    assert verdict.closure_intersection is None


def test_verdict_reports_resource_stage(m2_plane):
    verdict = itoh_verdict(m2_plane, config=AnalysisConfig({'hilbert_max_terms': 3}))
    assert verdict.classification is Classification.UNRESOLVED
    assert verdict.failed_stage == 'hilbert'
    assert verdict.normality is not None and verdict.adic is None
    assert verdict.error


def test_verdict_input_errors(ring2):
    with pytest.raises(InputError):
        itoh_verdict(Ideal.from_strings(ring2, ['x^2', 'y^2']))
    with pytest.raises(NotMPrimaryError):
        itoh_verdict(MonomialIdeal(ring2, [(2, 0), (1, 1)]))
    with pytest.raises(DimensionNotSupportedError):
        itoh_verdict(MonomialIdeal.maximal(default_ring(4)))


@pytest.mark.slow
def test_verdict_in_three_variables(m2_space):
    verdict = itoh_verdict(m2_space)
    assert verdict.classification is Classification.VERIFIED
    assert verdict.e == [8, 4, 0, 0]
    assert verdict.reduction.sigma == (4, 0)


def test_verdict_over_a_prime_field_carries_a_caveat(ring2_fp):
    verdict = itoh_verdict(MonomialIdeal.maximal(ring2_fp, 2), seed=1)
    assert verdict.classification is Classification.VERIFIED
    assert verdict.notes[0] == field_caveat(ring2_fp.field)
    assert verdict.notes[0].startswith('computed over fp:32003')
    assert field_caveat(default_ring(2).field) is None
    rational = itoh_verdict(MonomialIdeal.maximal(default_ring(2), 2), seed=1)
    assert not any(note.startswith('computed over') for note in rational.notes)


def test_sampled_narita_window_does_not_gate_the_inequalities(non_rr_plane, non_rr_reduction):
    report = itoh_inequalities(non_rr_plane, reduction=non_rr_reduction)
    assert report.power_reductions[0] == (1, 2)
    assert report.narita is False
    assert report.holds
    assert report.to_dict()['holds'] is True
