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
    AdicFiltration, AnalysisConfig, ConsistencyError, Ideal, InputError, IntegralClosureFiltration, MonomialIdeal,
    QuotientFiltration, RatliffRushFiltration, RatliffRushNotStableError, ShiftFiltration,
    UnsupportedFiltrationError, VeroneseFiltration, check_axioms, filtration_term, ratliff_rush_closure,
    rr_deviation_sequence, term_equal, term_length,
)


@pytest.fixture
def non_rr_plane(ring2):
    # closure of the first power is (x,y)^4, every higher power is already closed
    return MonomialIdeal(ring2, [(4, 0), (3, 1), (1, 3), (0, 4)])


def test_adic_terms(ring2, m2_plane):
    F = AdicFiltration(m2_plane)
    assert F.term(2) == MonomialIdeal.maximal(ring2, 4)
    assert F.term(0).is_unit() and F.term(-3).is_unit()
    assert filtration_term(F, 3) == MonomialIdeal.maximal(ring2, 6)
    assert [F.length(n) for n in range(1, 4)] == [3, 10, 21]


def test_adic_over_polynomial_ideal_agrees(ring2, squares_plane):
    monomial = AdicFiltration(squares_plane)
    general = AdicFiltration(Ideal.from_strings(ring2, ['x^2', 'y^2']))
    assert [general.length(n) for n in (1, 2, 3)] == [monomial.length(n) for n in (1, 2, 3)] == [4, 12, 24]
    assert term_equal(general.term(2), monomial.term(2))


def test_shift(ring2, m2_plane):
    base = AdicFiltration(m2_plane)
    forward = ShiftFiltration(base, 1)
    assert all(forward.term(n) == base.term(n + 1) for n in range(4))
    assert forward.length(0) == base.length(1)
    backward = ShiftFiltration(base, -1)
    assert backward.term(1).is_unit()
    assert backward.term(3) == MonomialIdeal.maximal(ring2, 4)


def test_veronese(squares_plane):
    base = AdicFiltration(squares_plane)
    F = VeroneseFiltration(base, 2)
    assert F.stable_ideal == squares_plane.power(2)
    assert all(F.term(n) == squares_plane.power(2 * n) for n in range(1, 4))
    assert 'Veronese' in str(F)
    with pytest.raises(InputError):
        VeroneseFiltration(base, 0)


def test_quotient_filtration(ring2):
    m = MonomialIdeal.maximal(ring2)
    F = QuotientFiltration(AdicFiltration(m), Ideal.from_strings(ring2, ['y']), 1)
    assert F.dimension == 1
    assert [F.length(n) for n in range(1, 5)] == [1, 2, 3, 4]


def test_integral_closure_filtration(ring2, squares_plane, m2_plane):
    F = IntegralClosureFiltration(squares_plane)
    assert F.term(1) == m2_plane
    assert F.term(3) == MonomialIdeal.maximal(ring2, 6)
    assert AdicFiltration(squares_plane).length(1) == 4
    assert F.length(1) == 3
    converted = IntegralClosureFiltration(Ideal.from_strings(ring2, ['x^2', 'y^2']))
    assert converted.term(1) == m2_plane


def test_integral_closure_filtration_rejects_polynomial_ideal(ring2):
    with pytest.raises(UnsupportedFiltrationError):
        IntegralClosureFiltration(Ideal.from_strings(ring2, ['x^2 + y^3', 'y^2']))


def test_check_axioms(squares_plane, m2_plane):
    adic = check_axioms(AdicFiltration(m2_plane), 3)
    assert adic.holds and adic.stability_index == 0
    closure = check_axioms(IntegralClosureFiltration(squares_plane), 3)
    assert closure.decreasing and closure.multiplicative
    assert closure.stability_index == 1
    assert check_axioms(RatliffRushFiltration(m2_plane), 3).holds


def test_ratliff_rush_closure_of_normal_ideal(ring2, m2_plane):
    assert ratliff_rush_closure(m2_plane, 1) == m2_plane
    assert ratliff_rush_closure(m2_plane, 2) == MonomialIdeal.maximal(ring2, 4)
    assert RatliffRushFiltration(m2_plane).term(2) == MonomialIdeal.maximal(ring2, 4)
    general = Ideal.from_strings(ring2, ['x^2', 'x*y', 'y^2'])
    assert term_equal(ratliff_rush_closure(general, 1), m2_plane)


def test_ratliff_rush_closure_grows(ring2, non_rr_plane):
    closure = ratliff_rush_closure(non_rr_plane, 1)
    assert closure == MonomialIdeal.maximal(ring2, 4)
    assert closure.contains(non_rr_plane) and not non_rr_plane.contains(closure)
    assert term_length(non_rr_plane) - term_length(closure) == 1


def test_rr_deviation_sequence(m2_plane, m2_space, non_rr_plane):
    assert rr_deviation_sequence(m2_plane, 3) == [0, 0, 0]
    assert rr_deviation_sequence(m2_space, 2) == [0, 0]
    assert rr_deviation_sequence(non_rr_plane, 3) == [1, 0, 0]


def test_ratliff_rush_closure_is_inside_integral_closure(non_rr_plane):
    closure = IntegralClosureFiltration(non_rr_plane)
    for n in (1, 2):
        assert closure.term(n).contains(ratliff_rush_closure(non_rr_plane, n))


def test_ratliff_rush_guard_checks_the_next_chain_term(monkeypatch, m2_plane):
    # a product that drops the extra factor of a leaves m^2 outside (m^(2k+4) : m^(2k))
    monkeypatch.setattr('blowup.filtration.term_product', lambda first, second, config=None: first)
    with pytest.raises(ConsistencyError):
        ratliff_rush_closure(m2_plane, 1)


def test_ratliff_rush_errors(m2_plane):
    with pytest.raises(InputError):
        ratliff_rush_closure(m2_plane, 0)
    with pytest.raises(RatliffRushNotStableError) as info:
        ratliff_rush_closure(m2_plane, 1, AnalysisConfig({'rr_max_steps': 1}))
    assert len(info.value.chain) == 1


def test_consistency_error_is_an_assertion():
    assert issubclass(ConsistencyError, AssertionError)
