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
.. module:: filtration
    :synopsis: Multiplicative stable filtrations and the Ratliff-Rush closure

A filtration is a lazy sequence ``n -> a_n`` of ideals with ``a_0 = A``, ``a_{n+1} ⊆ a_n``, ``a * a_n ⊆ a_{n+1}``
and ``a * a_n = a_{n+1}`` for large ``n``. Terms are computed on demand and memoized on the filtration object,
which is meant to live inside a single analysis task.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from blowup.config import AnalysisConfig, resolve_config
from blowup.errors import (
    ConsistencyError, InputError, NotMPrimaryError, RatliffRushNotStableError, UnsupportedFiltrationError,
)
from blowup.groebner import (
    CombineOp, Ideal, artinian_quotient_length, ideal_colon, ideal_combine, ideal_contains, ideals_equal,
    is_m_primary,
)
from blowup.monomial import MonomialIdeal, integral_closure_of_power, staircase_length

logger = logging.getLogger(__name__)

Term = Union[MonomialIdeal, Ideal]


def as_ideal(term: Term) -> Ideal:
    return term.to_ideal() if isinstance(term, MonomialIdeal) else term


def term_length(term: Term, config: Optional[AnalysisConfig] = None) -> int:
    """
    ``ℓ(A/term)``
    """
    if isinstance(term, MonomialIdeal):
        return staircase_length(term)
    return artinian_quotient_length(term, config)


def term_contains(big: Term, small: Term, config: Optional[AnalysisConfig] = None) -> bool:
    if isinstance(big, MonomialIdeal) and isinstance(small, MonomialIdeal):
        return big.contains(small)
    return ideal_contains(as_ideal(big), as_ideal(small), config)


def term_product(a: Term, b: Term, config: Optional[AnalysisConfig] = None) -> Term:
    if isinstance(a, MonomialIdeal) and isinstance(b, MonomialIdeal):
        return a * b
    return ideal_combine(CombineOp.PRODUCT, as_ideal(a), as_ideal(b), config)


def term_power(a: Term, n: int, config: Optional[AnalysisConfig] = None) -> Term:
    if isinstance(a, MonomialIdeal):
        return a.power(n)
    return ideal_combine(CombineOp.POWER, a, n, config)


def term_equal(a: Term, b: Term, config: Optional[AnalysisConfig] = None) -> bool:
    if isinstance(a, MonomialIdeal) and isinstance(b, MonomialIdeal):
        return a == b
    return ideals_equal(as_ideal(a), as_ideal(b), config)


def term_unit(ring) -> MonomialIdeal:
    return MonomialIdeal.unit(ring)


def require_m_primary(a: Term, config: Optional[AnalysisConfig] = None):
    ok = a.is_m_primary() if isinstance(a, MonomialIdeal) else is_m_primary(a, config)
    if not ok:
        raise NotMPrimaryError('{} is not m-primary'.format(a))


class FiltrationKind(Enum):
    """
    Members:
        * ADIC = 'Adic'
        * INTEGRAL_CLOSURE = 'IntegralClosure'
        * RATLIFF_RUSH = 'RatliffRush'
        * VERONESE = 'Veronese'
        * SHIFT = 'Shift'
        * QUOTIENT = 'Quotient'
    """

    ADIC = 'Adic'
    INTEGRAL_CLOSURE = 'IntegralClosure'
    RATLIFF_RUSH = 'RatliffRush'
    VERONESE = 'Veronese'
    SHIFT = 'Shift'
    QUOTIENT = 'Quotient'


class Filtration:
    """
    Base class of the filtrations

    Attributes:
        kind (:class:`FiltrationKind`): What the terms are
        stable_ideal: The ideal ``a`` with ``a * a_n = a_{n+1}`` for large ``n``
        dimension (``int``): Krull dimension of the ring the Hilbert function is taken over
        config (:class:`~blowup.config.AnalysisConfig`): Budgets used for term computations
    """

    kind: FiltrationKind

    def __init__(self, stable_ideal: Term, dimension: int, config: Optional[AnalysisConfig] = None):
        self.stable_ideal = stable_ideal
        self.ring = stable_ideal.ring
        self.dimension = dimension
        self.config = resolve_config(config)
        self._memo: Dict[int, Term] = {}
        self._lengths: Dict[int, int] = {}
        self.hilbert = None

    def _compute(self, n: int) -> Term:
        raise NotImplementedError

    def term(self, n: int) -> Term:
        """
        The ``n``-th term, the unit ideal for ``n <= 0``

        Raises:
            :class:`~blowup.errors.ConsistencyError` if a newly computed term is not contained in its predecessor
        """
        if n <= 0:
            return term_unit(self.ring)
        if n not in self._memo:
            value = self._compute(n)
            self._check_adjacent(n, value)
            self._memo[n] = value
            logger.debug('%s: computed term %d', self, n)
        return self._memo[n]

    def _check_adjacent(self, n: int, value: Term):
        previous = self._memo.get(n - 1)
        if previous is not None and not term_contains(previous, value, self.config):
            raise ConsistencyError('{}: term {} is not contained in term {}'.format(self, n, n - 1))
        following = self._memo.get(n + 1)
        if following is not None and not term_contains(value, following, self.config):
            raise ConsistencyError('{}: term {} is not contained in term {}'.format(self, n + 1, n))

    def length(self, n: int) -> int:
        """
        ``ℓ(A/a_n)``
        """
        if n not in self._lengths:
            self._lengths[n] = term_length(self.term(n), self.config)
        return self._lengths[n]

    def describe(self) -> str:
        return '{}({})'.format(self.kind.value, self.stable_ideal)

    def __str__(self):
        return self.describe()


class AdicFiltration(Filtration):
    kind = FiltrationKind.ADIC

    def __init__(self, a: Term, config: Optional[AnalysisConfig] = None):
        super().__init__(a, a.ring.dimension, config)

    def _compute(self, n: int) -> Term:
        if isinstance(self.stable_ideal, MonomialIdeal):
            return self.stable_ideal.power(n)
        previous = self.term(n - 1) if n > 1 else None
        if previous is None:
            return self.stable_ideal
        return ideal_combine(CombineOp.PRODUCT, previous, self.stable_ideal, self.config)


class IntegralClosureFiltration(Filtration):
    """
    ``n -> (a^n)*``, available for monomial ``a`` only

    Raises:
        :class:`~blowup.errors.UnsupportedFiltrationError` on a non-monomial base ideal
    """

    kind = FiltrationKind.INTEGRAL_CLOSURE

    def __init__(self, a: Term, config: Optional[AnalysisConfig] = None):
        if isinstance(a, Ideal):
            if a.is_zero() or not a.is_monomial():
                raise UnsupportedFiltrationError('integral closure filtration needs a monomial base ideal')
            a = MonomialIdeal.from_ideal(a)
        super().__init__(a, a.ring.dimension, config)

    def _compute(self, n: int) -> Term:
        return integral_closure_of_power(self.stable_ideal, n)


class RatliffRushFiltration(Filtration):
    kind = FiltrationKind.RATLIFF_RUSH

    def __init__(self, a: Term, config: Optional[AnalysisConfig] = None):
        super().__init__(a, a.ring.dimension, config)

    def _compute(self, n: int) -> Term:
        return ratliff_rush_closure(self.stable_ideal, n, self.config)


class VeroneseFiltration(Filtration):
    """
    ``n -> base_{n*l}``, stable for ``a^l``
    """

    kind = FiltrationKind.VERONESE

    def __init__(self, base: Filtration, l: int):
        if l < 1:
            raise InputError('Veronese degree must be positive, got {}'.format(l))
        self.base = base
        self.degree = l
        super().__init__(term_power(base.stable_ideal, l, base.config), base.dimension, base.config)

    def _compute(self, n: int) -> Term:
        return self.base.term(n * self.degree)

    def describe(self) -> str:
        return 'Veronese({}, {})'.format(self.base.describe(), self.degree)


class ShiftFiltration(Filtration):
    """
    ``n -> base_{n+s}`` for every integer ``n``
    """

    kind = FiltrationKind.SHIFT

    def __init__(self, base: Filtration, s: int):
        self.base = base
        self.shift = s
        super().__init__(base.stable_ideal, base.dimension, base.config)

    def term(self, n: int) -> Term:
        return self.base.term(n + self.shift)

    def _compute(self, n: int) -> Term:
        return self.base.term(n + self.shift)

    def length(self, n: int) -> int:
        return self.base.length(n + self.shift)

    def describe(self) -> str:
        return 'Shift({}, {})'.format(self.base.describe(), self.shift)


class QuotientFiltration(Filtration):
    """
    ``n -> base_n + J``, the filtration induced on ``A/J``

    Args:
        base (:class:`Filtration`): Filtration of ``A``
        modulus (:class:`~blowup.groebner.Ideal`): The ideal ``J``
        codimension (``int``): ``dim A - dim A/J``, the number of elements of the superficial sequence ``J`` is
            generated by
    """

    kind = FiltrationKind.QUOTIENT

    def __init__(self, base: Filtration, modulus: Ideal, codimension: int):
        self.base = base
        self.modulus = modulus
        super().__init__(base.stable_ideal, base.dimension - codimension, base.config)

    def _compute(self, n: int) -> Term:
        return Ideal(self.ring, as_ideal(self.base.term(n)).generators + self.modulus.generators)

    def describe(self) -> str:
        return 'Quotient({}, {})'.format(self.base.describe(), self.modulus)


@dataclass(frozen=True)
class FiltrationAxiomReport:
    """
    Attributes:
        window (``int``): Terms ``1..window`` were inspected
        decreasing (``bool``): ``a_{n+1} ⊆ a_n`` throughout
        multiplicative (``bool``): ``a * a_n ⊆ a_{n+1}`` throughout
        stability_index (``int`` | ``None``): Smallest ``n0`` with ``a * a_n = a_{n+1}`` for ``n0 <= n < window``
    """

    window: int
    decreasing: bool
    multiplicative: bool
    stability_index: Optional[int]

    @property
    def holds(self) -> bool:
        return self.decreasing and self.multiplicative and self.stability_index is not None


def check_axioms(F: Filtration, window: int) -> FiltrationAxiomReport:
    """
    Check the filtration conditions on the terms ``1..window``
    """
    a = F.stable_ideal
    config = F.config
    decreasing = all(term_contains(F.term(n), F.term(n + 1), config) for n in range(0, window))
    products = [term_product(a, F.term(n), config) for n in range(0, window)]
    multiplicative = all(term_contains(F.term(n + 1), products[n], config) for n in range(0, window))
    stable = [term_equal(products[n], F.term(n + 1), config) for n in range(0, window)]
    stability_index = None
    for n0 in range(window - 1, -1, -1):
        if not stable[n0]:
            break
        stability_index = n0
    return FiltrationAxiomReport(window, decreasing, multiplicative, stability_index)


def filtration_term(F: Filtration, n: int) -> Term:
    return F.term(n)


def ratliff_rush_closure(a: Term, n: int, config: Optional[AnalysisConfig] = None) -> Term:
    """
    Stable value of the chain ``(a^(n+k) : a^k)``, ``k = 1, 2, ..``

    Args:
        a (:class:`~blowup.monomial.MonomialIdeal` | :class:`~blowup.groebner.Ideal`): m-primary ideal
        n (``int``): Positive power
        config (:class:`~blowup.config.AnalysisConfig`, *optional*): Supplies ``rr_confirm`` and ``rr_max_steps``

    Returns:
        The Ratliff-Rush closure of ``a^n``, of the same type as ``a``

    Raises:
        :class:`~blowup.errors.RatliffRushNotStableError` if no value repeats ``rr_confirm`` times in a row within
        ``rr_max_steps`` steps
    """
    if n < 1:
        raise InputError('Ratliff-Rush closure needs a positive power, got {}'.format(n))
    config = resolve_config(config)
    monomial = isinstance(a, MonomialIdeal)
    power_n = term_power(a, n, config)
    chain: List[Term] = []
    repeats = 1
    for k in range(1, config.rr_max_steps + 1):
        numerator = term_power(a, n + k, config)
        denominator = term_power(a, k, config)
        if monomial:
            value = numerator.colon(denominator)
        else:
            value = ideal_colon(numerator, denominator, floor=power_n, config=config)
        if chain and term_equal(chain[-1], value, config):
            repeats += 1
        else:
            repeats = 1
        chain.append(value)
        if repeats >= config.rr_confirm:
            break
    else:
        raise RatliffRushNotStableError('colon chain of {}^{} did not stabilize within {} steps'.format(
            a, n, config.rr_max_steps), chain)
    result = chain[-1]
    k = len(chain)
    # closure(a^n) * a must land in the next chain term (a^(n+k+1) : a^k)
    numerator, denominator = term_power(a, n + k + 1, config), term_power(a, k, config)
    if monomial:
        following = numerator.colon(denominator)
    else:
        following = ideal_colon(numerator, denominator, floor=term_power(a, n + 1, config), config=config)
    if not term_contains(result, power_n, config) or not term_contains(following, term_product(result, a, config),
                                                                        config):
        raise ConsistencyError('Ratliff-Rush closure of {}^{} failed its containment guard'.format(a, n))
    return result


def rr_deviation_sequence(a: Term, N: int, config: Optional[AnalysisConfig] = None) -> List[int]:
    """
    ``ℓ(closure(a^(n+1)) / a^(n+1))`` for ``n = 0..N-1``; all zero iff depth of the associated graded ring is
    positive, over the checked window
    """
    config = resolve_config(config)
    require_m_primary(a, config)
    result = []
    for n in range(N):
        closure = ratliff_rush_closure(a, n + 1, config)
        result.append(term_length(term_power(a, n + 1, config), config) - term_length(closure, config))
    return result


__all__ = [
    'Term', 'as_ideal', 'term_length', 'term_contains', 'term_product', 'term_power', 'term_equal',
    'FiltrationKind', 'Filtration', 'AdicFiltration', 'IntegralClosureFiltration', 'RatliffRushFiltration',
    'VeroneseFiltration', 'ShiftFiltration', 'QuotientFiltration', 'FiltrationAxiomReport', 'check_axioms',
    'filtration_term', 'ratliff_rush_closure', 'rr_deviation_sequence',
]
