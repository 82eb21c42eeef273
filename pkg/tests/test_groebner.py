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

import random

import pytest
from hypothesis import given, settings, strategies as st
from sympy.polys.groebnertools import groebner as sympy_groebner, is_groebner, is_reduced

from blowup import (
    AnalysisConfig, BudgetExceededError, CombineOp, Ideal, InputError, NotArtinianError, Polynomial,
    RingMismatchError, artinian_quotient_length, buchberger_reduced_basis, default_ring, ideal_colon, ideal_combine,
    ideal_contains, ideal_intersection, ideal_membership, ideals_equal, is_m_primary, local_quotient_length,
    normal_form,
)


def ideal(ring, *texts):
    return Ideal.from_strings(ring, texts)


def basis_strings(I):
    return [str(g) for g in buchberger_reduced_basis(I).basis]


def test_monomial_ideal_is_its_own_basis(ring2):
    assert basis_strings(ideal(ring2, 'x^2', 'x*y', 'y^2')) == ['x^2', 'x*y', 'y^2']


def test_linear_span(ring2):
    assert basis_strings(ideal(ring2, 'x + y', 'x - y')) == ['x', 'y']


def test_zero_and_unit_ideals(ring2):
    assert len(buchberger_reduced_basis(Ideal(ring2))) == 0
    assert buchberger_reduced_basis(ideal(ring2, 'x', 'x - 1')).is_unit()


def test_basis_independent_of_generator_order(ring3):
    first = buchberger_reduced_basis(ideal(ring3, 'x^2 - y', 'x^3 - z'))
    second = buchberger_reduced_basis(ideal(ring3, 'x^3 - z', 'x^2 - y'))
    assert first.basis == second.basis
    assert is_groebner(first.elements, ring3.poly_ring)
    assert is_reduced(first.elements, ring3.poly_ring)


def test_budget_is_a_resource_error(ring3):
    config = AnalysisConfig({'budget_pairs': 0})
    with pytest.raises(BudgetExceededError):
        buchberger_reduced_basis(ideal(ring3, 'x^2 + y', 'x*y + 1'), config)


def test_normal_form(ring2):
    G = buchberger_reduced_basis(ideal(ring2, 'x'))
    assert normal_form(Polynomial.monomial(ring2, (2, 0)), G).is_zero()
    assert str(normal_form(ideal(ring2, 'y + 1').generators[0], G)) == 'y + 1'
    H = buchberger_reduced_basis(ideal(ring2, 'x^2 - 1'))
    assert str(normal_form(ideal(ring2, 'x^2*y + y').generators[0], H)) == '2*y'
    with pytest.raises(RingMismatchError):
        normal_form(default_ring(3).variable('x'), G)


def test_membership(ring2):
    m3 = ideal_combine('power', Ideal.maximal(ring2), 3)
    assert ideal_membership(Polynomial.monomial(ring2, (2, 1)), m3)
    assert not ideal_membership(ring2.variable('x'), ideal(ring2, 'x^2', 'y'))
    assert not ideal_membership(Polynomial.monomial(ring2, (1, 1)), ideal(ring2, 'x^2', 'y^2'))


def test_combine(ring2):
    assert basis_strings(ideal_combine(CombineOp.SUM, ideal(ring2, 'x'), ideal(ring2, 'y'))) == ['x', 'y']
    m = Ideal.maximal(ring2)
    assert basis_strings(ideal_combine('product', m, m)) == ['x^2', 'x*y', 'y^2']
    fourth = ideal_combine('power', ideal(ring2, 'x^2', 'x*y', 'y^2'), 2)
    degree4 = Ideal(ring2, [Polynomial.monomial(ring2, (i, 4 - i)) for i in range(5)])
    assert ideals_equal(fourth, degree4)
    assert ideal_combine('power', m, 0).is_unit()
    with pytest.raises(InputError):
        ideal_combine('power', m, -1)


def test_intersection(ring2):
    assert basis_strings(ideal_intersection(ideal(ring2, 'x'), ideal(ring2, 'y'))) == ['x*y']
    I = ideal(ring2, 'x^2 + y', 'x*y^2')
    assert ideals_equal(ideal_intersection(I, I), I)


def test_intersection_with_floor_is_unchanged(ring2):
    I, J = ideal(ring2, 'x^2', 'y^3'), ideal(ring2, 'x + y')
    floor = ideal(ring2, 'x^3', 'y^4')
    plain = ideal_intersection(I, J)
    assert ideals_equal(ideal_intersection(I, J, floor=ideal_intersection(plain, floor)), plain)


def test_colon(ring2):
    assert basis_strings(ideal_colon(ideal(ring2, 'x^2', 'x*y'), ideal(ring2, 'x'))) == ['x', 'y']
    I = ideal(ring2, 'x^2 + y^3', 'x*y')
    assert ideals_equal(ideal_colon(I, Ideal.unit(ring2)), I)
    result = ideal_colon(ideal(ring2, 'x^4', 'x^3*y', 'x*y^3', 'y^4'), Ideal.maximal(ring2))
    assert basis_strings(result) == ['x^2*y^2', 'x^3', 'y^3']
    with pytest.raises(InputError):
        ideal_colon(I, Ideal(ring2))


def test_colon_duality(ring2):
    I, J = ideal(ring2, 'x^3 - y^2', 'x*y^2'), ideal(ring2, 'x', 'y^2')
    Q = ideal_colon(I, J)
    assert ideal_contains(I, ideal_combine('product', J, Q))


def test_equality(ring2):
    assert ideals_equal(ideal(ring2, 'x', 'y'), ideal(ring2, 'x + y', 'y'))
    assert not ideals_equal(ideal(ring2, 'x^2'), ideal(ring2, 'x'))


@pytest.mark.parametrize('texts, length', [
    (('x', 'y'), 1),
    (('x^2', 'x*y', 'y^2'), 3),
    (('x^2', 'y^3'), 6),
])
def test_artinian_length(ring2, texts, length):
    assert artinian_quotient_length(ideal(ring2, *texts)) == length


def test_length_of_fourth_power_of_maximal_ideal(ring3):
    assert artinian_quotient_length(ideal_combine('power', Ideal.maximal(ring3), 4)) == 20


def test_not_artinian(ring2):
    with pytest.raises(NotArtinianError):
        artinian_quotient_length(ideal(ring2, 'x^2', 'x*y'))


def test_m_primary_and_local_length(ring2):
    assert is_m_primary(ideal(ring2, 'x^2 + y^3', 'y^4'))
    away = ideal(ring2, 'x^2 - x', 'y')
    assert artinian_quotient_length(away) == 2
    assert not is_m_primary(away)
    assert not is_m_primary(ideal(ring2, 'x'))
    assert local_quotient_length(away, ideal(ring2, 'x^2', 'y')) == 1


RING = default_ring(3)

polynomials = st.lists(
    st.tuples(st.integers(-3, 3), st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))),
    min_size=1, max_size=3,
).map(lambda terms: Polynomial.from_terms(RING, terms))


@settings(max_examples=30, deadline=None)
@given(st.lists(polynomials, min_size=1, max_size=3))
def test_agrees_with_sympy_groebner(generators):
    I = Ideal(RING, generators)
    ours = buchberger_reduced_basis(I).elements
    theirs = sympy_groebner([g.element for g in I.generators], RING.poly_ring) if I.generators else []
    if theirs == [RING.poly_ring.zero]:
        theirs = []
    assert set(ours) == set(theirs)
    for g in I.generators:
        assert ideal_membership(g, I)


@settings(max_examples=20, deadline=None)
@given(st.lists(polynomials, min_size=1, max_size=3), st.randoms(use_true_random=False))
def test_equality_survives_shuffling(generators, rnd):
    shuffled = list(generators)
    rnd.shuffle(shuffled)
    assert ideals_equal(Ideal(RING, generators), Ideal(RING, shuffled))


def test_random_intersections_are_contained():
    rng = random.Random(7)
    ring = default_ring(2)
    for _ in range(10):
        gens = [Polynomial.from_terms(ring, [(rng.randint(-2, 2), (rng.randint(0, 2), rng.randint(0, 2)))
                                             for _ in range(2)]) for _ in range(4)]
        I, J = Ideal(ring, gens[:2]), Ideal(ring, gens[2:])
        if I.is_zero() or J.is_zero():
            continue
        meet = ideal_intersection(I, J)
        assert ideal_contains(I, meet) and ideal_contains(J, meet)
