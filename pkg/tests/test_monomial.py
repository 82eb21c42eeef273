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

import itertools
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from blowup import (
    DimensionNotSupportedError, InputError, LengthMismatchError, MonomialIdeal, NormalityVerdict, NotMPrimaryError,
    artinian_quotient_length, closure_witness, covolume, default_ring, integral_closure, integral_closure_of_power,
    is_integrally_closed, minimal_generators, multiplicity_from_volume, normality_report, np_membership,
    power_test_membership, staircase_length, standard_monomial_exponents,
)
from blowup.exponents import staircase_count


def mono(ring, *generators):
    return MonomialIdeal(ring, generators)


def test_minimal_generators():
    assert minimal_generators([(2, 0), (3, 0), (0, 1)]).generators == ((2, 0), (0, 1))
    assert minimal_generators([(1, 1)]).generators == ((1, 1),)
    ring = default_ring(2)
    both = MonomialIdeal.maximal(ring, 2).generators + MonomialIdeal.maximal(ring, 3).generators
    assert minimal_generators(list(both)) == MonomialIdeal.maximal(ring, 2)
    with pytest.raises(InputError):
        minimal_generators([])


def test_generators_are_canonical(ring2):
    assert str(mono(ring2, (0, 2), (1, 1), (2, 0))) == '(x^2, x*y, y^2)'
    assert mono(ring2, (0, 2), (2, 0)) == mono(ring2, (2, 0), (0, 2))


def test_construction_errors(ring2):
    with pytest.raises(LengthMismatchError):
        mono(ring2, (1, 0, 0))
    with pytest.raises(InputError):
        mono(ring2, (-1, 2))
    with pytest.raises(InputError):
        MonomialIdeal(ring2, [])


def test_m_primary(ring2):
    assert mono(ring2, (2, 0), (0, 3)).is_m_primary()
    assert not mono(ring2, (2, 0), (1, 1)).is_m_primary()
    assert not MonomialIdeal.unit(ring2).is_m_primary()
    with pytest.raises(NotMPrimaryError):
        staircase_length(mono(ring2, (2, 0), (1, 1)))


def test_operations(ring2):
    I, J = mono(ring2, (2, 0), (0, 2)), mono(ring2, (1, 0))
    assert I * J == mono(ring2, (3, 0), (1, 2))
    assert I & J == mono(ring2, (2, 0), (1, 2))
    assert I + J == mono(ring2, (1, 0), (0, 2))
    assert I.colon(J) == mono(ring2, (1, 0), (0, 2))
    assert I.power(0).is_unit()
    assert I.power(2) == mono(ring2, (4, 0), (2, 2), (0, 4))
    assert I.power(3) is I.power(3)
    assert I.contains(I.power(2)) and not I.power(2).contains(I)


def test_np_membership(ring2):
    squares = mono(ring2, (2, 0), (0, 2))
    assert np_membership((1, 1), squares)
    assert not np_membership((1, 0), squares)
    assert np_membership((2, 1), mono(ring2, (3, 0), (1, 1), (0, 3)))
    with pytest.raises(LengthMismatchError):
        np_membership((1, 1, 1), squares)


def test_power_test(ring2):
    squares = mono(ring2, (2, 0), (0, 2))
    assert power_test_membership((1, 1), squares) == 2
    assert power_test_membership((1, 0), squares, bound=12) is None


@pytest.mark.parametrize('generators, closure', [
    ([(2, 0), (0, 2)], [(2, 0), (1, 1), (0, 2)]),
    ([(3, 0), (0, 3)], [(3, 0), (2, 1), (1, 2), (0, 3)]),
    ([(2, 0), (1, 1), (0, 2)], [(2, 0), (1, 1), (0, 2)]),
    ([(3, 0), (1, 1), (0, 3)], [(3, 0), (1, 1), (0, 3)]),
    ([(4, 0), (0, 2)], [(4, 0), (2, 1), (0, 2)]),
])
def test_integral_closure(ring2, generators, closure):
    I = MonomialIdeal(ring2, generators)
    expected = MonomialIdeal(ring2, closure)
    assert integral_closure(I) == expected
    assert integral_closure(I, 'lp') == expected
    assert is_integrally_closed(I) == (I == expected)


def test_powers_of_maximal_ideal_are_closed(ring3):
    for k in range(1, 4):
        assert is_integrally_closed(MonomialIdeal.maximal(ring3, k))


def test_closure_witness(squares_plane, m2_plane):
    assert closure_witness(squares_plane) == (1, 1)
    assert closure_witness(m2_plane) is None


def test_closure_of_power_matches_power_of_polyhedron(ring2):
    I = mono(ring2, (3, 0), (0, 2))
    for n in range(1, 4):
        assert integral_closure_of_power(I, n) == integral_closure(I.power(n))
    assert integral_closure_of_power(I, 0).is_unit()


def test_unknown_closure_method(squares_plane):
    with pytest.raises(InputError):
        integral_closure(squares_plane, 'magic')


def test_normality_report(m2_space, squares_plane):
    report = normality_report(m2_space, 4)
    assert report.is_normal
    assert str(report) == 'Normal(4)'
    assert report.closed_from == 1
    failing = normality_report(squares_plane, 1)
    assert failing.verdict is NormalityVerdict.NOT_NORMAL
    assert str(failing) == 'NotNormal(1)'
    assert failing.failures == ((1, (1, 1)),)
    assert failing.to_dict()['verdict'] == 'NotNormal(1)'


def test_default_normality_window(squares_plane, m2_space):
    assert normality_report(squares_plane).checked_window == 3
    assert normality_report(m2_space).checked_window == 3


@pytest.mark.parametrize('k', [1, 2, 3, 4])
def test_staircase_of_maximal_powers(ring2, k):
    assert staircase_length(MonomialIdeal.maximal(ring2, k)) == k * (k + 1) // 2


def test_staircase_examples(ring2, m2_space):
    assert staircase_length(mono(ring2, (2, 0), (0, 3))) == 6
    assert staircase_length(m2_space) == 4
    assert sorted(standard_monomial_exponents(m2_space)) == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert staircase_length(MonomialIdeal.unit(ring2)) == 0


def test_covolume(ring2, m2_space):
    assert covolume(mono(ring2, (2, 0), (0, 3))) == 3
    assert multiplicity_from_volume(m2_space) == 8
    assert multiplicity_from_volume(mono(ring2, (2, 0), (0, 2))) == 4
    assert covolume(MonomialIdeal.maximal(default_ring(1), 5)) == 5
    with pytest.raises(DimensionNotSupportedError):
        covolume(MonomialIdeal.maximal(default_ring(4), 1))


def m_primary_ideals(d, top=4):
    extra = st.lists(st.tuples(*[st.integers(0, top)] * d), max_size=2 * d)
    pure = st.tuples(*[st.integers(1, top)] * d)

    def build(args):
        powers, others = args
        generators = [tuple(p if i == j else 0 for j in range(d)) for i, p in enumerate(powers)]
        return MonomialIdeal(default_ring(d), generators + [g for g in others if any(g)])
    return st.tuples(pure, extra).map(build)


@settings(max_examples=60, deadline=None)
@given(st.one_of(m_primary_ideals(2), m_primary_ideals(3)))
def test_staircase_matches_box_enumeration_and_groebner(I):
    box = [range(b) for b in I.pure_power_bounds()]
    enumerated = sum(1 for v in itertools.product(*box) if not I.contains_exponent(v))
    assert staircase_length(I) == enumerated
    assert len(standard_monomial_exponents(I)) == enumerated
    assert artinian_quotient_length(I.to_ideal()) == enumerated


@settings(max_examples=40, deadline=None)
@given(st.one_of(m_primary_ideals(2), m_primary_ideals(3, 3)))
def test_closure_is_a_closure_operator(I):
    closure = integral_closure(I)
    assert closure.contains(I)
    assert integral_closure(closure) == closure
    assert integral_closure(I, 'lp') == closure
    for v in itertools.product(*(range(b + 1) for b in I.max_exponents())):
        assert closure.contains_exponent(v) == np_membership(v, I)


@settings(max_examples=40, deadline=None)
@given(st.one_of(m_primary_ideals(2), m_primary_ideals(3, 3)))
def test_power_test_implies_np_membership(I):
    for v in itertools.product(*(range(b + 1) for b in I.max_exponents())):
        if power_test_membership(v, I, 6) is not None:
            assert np_membership(v, I)


@settings(max_examples=40, deadline=None)
@given(st.one_of(m_primary_ideals(2), m_primary_ideals(3, 3)))
def test_covolume_is_integral_multiplicity(I):
    value = factorial(I.dimension) * covolume(I)
    assert value.denominator == 1
    assert 0 < value <= staircase_length(I) * factorial(I.dimension)


def test_staircase_count_on_box():
    assert staircase_count([(3, 0, 0), (0, 4, 0), (0, 0, 5)], 3) == 60
    assert staircase_count([(1, 0), (0, 1)], 2) == 1
