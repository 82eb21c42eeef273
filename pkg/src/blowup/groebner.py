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

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Set, Tuple, Union

from sympy.polys.rings import PolyElement

from blowup.config import AnalysisConfig, resolve_config
from blowup.errors import (
    BudgetExceededError, ConsistencyError, InputError, NotArtinianError, RingMismatchError,
)
from blowup.exponents import pure_power_bounds, staircase_count
from blowup.parser import parse_polynomial
from blowup.rings import MonomialOrder, Polynomial, RingDescriptor

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class CombineOp(Enum):
    """
    Operations understood by :func:`ideal_combine`

    Members:
        * SUM = 'sum'
        * PRODUCT = 'product'
        * POWER = 'power'
    """

    SUM = 'sum'
    PRODUCT = 'product'
    POWER = 'power'


class Ideal:
    """
    Finitely generated ideal of a polynomial ring

    Generators are kept as given (zeros dropped); the reduced Gröbner basis is computed on first use and memoized
    on the instance.

    Args:
        ring (:class:`~blowup.rings.RingDescriptor`): Ambient ring
        generators (``list`` of :class:`~blowup.rings.Polynomial`): Generators, possibly redundant

    Raises:
        :class:`~blowup.errors.RingMismatchError` if a generator lives in another ring
    """

    def __init__(self, ring: RingDescriptor, generators: Iterable[Polynomial] = ()):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError('generator {} does not belong to {}'.format(g, ring))
            if g:
                gens.append(g)
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        self._basis: Optional['GroebnerBasis'] = None

    @classmethod
    def from_strings(cls, ring: RingDescriptor, texts: Iterable[str], exponent_cap: Optional[int] = None) -> 'Ideal':
        kwargs = {} if exponent_cap is None else {'exponent_cap': exponent_cap}
        return cls(ring, [parse_polynomial(text, ring, **kwargs) for text in texts])

    @classmethod
    def unit(cls, ring: RingDescriptor) -> 'Ideal':
        return cls(ring, [ring.one()])

    @classmethod
    def maximal(cls, ring: RingDescriptor) -> 'Ideal':
        return cls(ring, [ring.variable(name) for name in ring.variable_names])

    def is_zero(self) -> bool:
        return not self.generators

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def groebner_basis(self, config: Optional[AnalysisConfig] = None) -> 'GroebnerBasis':
        if self._basis is None:
            self._basis = buchberger_reduced_basis(self, config)
        return self._basis

    def is_unit(self, config: Optional[AnalysisConfig] = None) -> bool:
        return self.groebner_basis(config).is_unit()

    def __add__(self, other: 'Ideal') -> 'Ideal':
        return ideal_combine(CombineOp.SUM, self, other)

    def __mul__(self, other: 'Ideal') -> 'Ideal':
        return ideal_combine(CombineOp.PRODUCT, self, other)

    def __pow__(self, n: int) -> 'Ideal':
        return ideal_combine(CombineOp.POWER, self, n)

    def __str__(self):
        return '({})'.format(', '.join(str(g) for g in self.generators))

    def __repr__(self):
        return 'Ideal{} in {}'.format(self, self.ring)


@dataclass(frozen=True)
class GroebnerBasis:
    """
    Reduced Gröbner basis of :attr:`ideal`, sorted descending by leading monomial
    """

    ideal: Ideal
    basis: Tuple[Polynomial, ...]
    order: MonomialOrder

    @property
    def elements(self) -> List[PolyElement]:
        return [g.element for g in self.basis]

    def leading_exponents(self) -> List[Tuple[int, ...]]:
        return [g.leading_exponent() for g in self.basis]

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and not any(self.basis[0].leading_exponent())

    def __len__(self):
        return len(self.basis)


def _spoly(f: PolyElement, g: PolyElement) -> PolyElement:
    R = f.ring
    lmf, lmg = f.LM, g.LM
    L = R.monomial_lcm(lmf, lmg)
    return f.mul_monom(R.monomial_div(L, lmf)) - g.mul_monom(R.monomial_div(L, lmg))


def _update(G: List[PolyElement], lmG: list, P: Set[Pair], f: PolyElement) -> Set[Pair]:
    """
    Add ``f`` to ``G`` and the pair set ``P``, pruning with the Gebauer-Moeller criteria
    """
    R = f.ring
    lcm, mul, div = R.monomial_lcm, R.monomial_mul, R.monomial_div
    lmf = f.LM

    keep = set()
    for i, j in P:
        gamma = lcm(lmG[i], lmG[j])
        if not div(gamma, lmf) or gamma == lcm(lmG[i], lmf) or gamma == lcm(lmG[j], lmf):
            keep.add((i, j))

    k = len(G)
    lcms = {}
    for i in range(k):
        lcms.setdefault(lcm(lmG[i], lmf), []).append(i)
    minimalized = []
    for L in sorted(lcms, key=R.order):
        if all(not div(L, L_) for L_ in minimalized):
            minimalized.append(L)
    for L in minimalized:
        group = lcms[L]
        # product criterion: a coprime leading pair in the group makes every pair in it redundant
        if not any(lcm(lmG[i], lmf) == mul(lmG[i], lmf) for i in group):
            keep.add((min(group), k))

    G.append(f)
    lmG.append(lmf)
    return keep


def _minimalize(G: List[PolyElement]) -> List[PolyElement]:
    R = G[0].ring if G else None
    kept: List[PolyElement] = []
    for f in sorted(G, key=lambda h: R.order(h.LM)):
        if all(not R.monomial_div(f.LM, g.LM) for g in kept):
            kept.append(f)
    return kept


def _interreduce(G: List[PolyElement]) -> List[PolyElement]:
    reduced = []
    for i, g in enumerate(G):
        others = G[:i] + G[i + 1:]
        reduced.append((g.rem(others) if others else g).monic())
    return reduced


def _buchberger(F: Sequence[PolyElement], config: AnalysisConfig) -> List[PolyElement]:
    G: List[PolyElement] = []
    lmG: list = []
    P: Set[Pair] = set()
    for f in F:
        if f:
            P = _update(G, lmG, P, f.monic())
    if not G:
        return []
    R = G[0].ring
    lcm = R.monomial_lcm
    pairs = 0
    budget_pairs, budget_basis = config.budget_pairs, config.budget_basis
    while P:
        i, j = min(P, key=lambda p: (R.order(lcm(lmG[p[0]], lmG[p[1]])), p))
        P.remove((i, j))
        if len(G[i]) == 1 and len(G[j]) == 1:
            continue
        pairs += 1
        if pairs > budget_pairs:
            raise BudgetExceededError('Buchberger exceeded {} pair reductions'.format(budget_pairs),
                                      pairs=pairs, basis_size=len(G))
        r = _spoly(G[i], G[j]).rem(G)
        if r:
            if len(G) >= budget_basis:
                raise BudgetExceededError('Buchberger basis exceeded {} elements'.format(budget_basis),
                                          pairs=pairs, basis_size=len(G))
            P = _update(G, lmG, P, r.monic())
    logger.debug('Buchberger: %d pair reductions, %d basis elements before minimalization', pairs, len(G))
    basis = _interreduce(_minimalize(G))
    return sorted(basis, key=lambda g: R.order(g.LM), reverse=True)


def buchberger_reduced_basis(I: Ideal, config: Optional[AnalysisConfig] = None) -> GroebnerBasis:
    """
    Reduced Gröbner basis of ``I`` under its ring's order

    Args:
        I (:class:`Ideal`): Ideal, the zero ideal gives an empty basis
        config (:class:`~blowup.config.AnalysisConfig`, *optional*): Supplies ``budget_pairs`` and ``budget_basis``

    Returns:
        :class:`GroebnerBasis`

    Raises:
        :class:`~blowup.errors.BudgetExceededError` if a budget runs out
    """
    if I._basis is not None:
        return I._basis
    config = resolve_config(config)
    elements = _buchberger([g.element for g in I.generators], config)
    basis = GroebnerBasis(I, tuple(Polynomial(I.ring, g) for g in elements), I.ring.order)
    I._basis = basis
    return basis


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """
    Remainder of ``f`` on division by a reduced basis, unique for fixed ``G``

    Raises:
        :class:`~blowup.errors.RingMismatchError` if ``f`` lives in another ring
    """
    G.ideal.ring.check_same(f.ring)
    if not G.basis:
        return f
    return Polynomial(f.ring, f.element.rem(G.elements))


def ideal_membership(f: Polynomial, I: Ideal, config: Optional[AnalysisConfig] = None) -> bool:
    return not normal_form(f, I.groebner_basis(config))


def ideal_contains(I: Ideal, J: Ideal, config: Optional[AnalysisConfig] = None) -> bool:
    """
    ``True`` if ``J`` is contained in ``I``
    """
    I.ring.check_same(J.ring)
    G = I.groebner_basis(config)
    return all(not normal_form(g, G) for g in J.generators)


def _reminimalized(I: Ideal, config: Optional[AnalysisConfig]) -> Ideal:
    basis = I.groebner_basis(config)
    result = Ideal(I.ring, basis.basis)
    result._basis = GroebnerBasis(result, basis.basis, basis.order)
    return result


def ideal_combine(op: Union[CombineOp, str], I: Ideal, J: Union[Ideal, int],
                  config: Optional[AnalysisConfig] = None) -> Ideal:
    """
    Sum, product or power of ideals, re-minimalized through the reduced basis

    Args:
        op (:class:`CombineOp` | ``str``): ``sum``, ``product`` or ``power``
        I (:class:`Ideal`): Left operand
        J (:class:`Ideal` | ``int``): Right operand, the exponent for ``power``

    Raises:
        :class:`~blowup.errors.RingMismatchError` if the operands live in different rings
    """
    op = CombineOp(op)
    if op is CombineOp.POWER:
        if not isinstance(J, int) or J < 0:
            raise InputError('power expects a non-negative integer, got {!r}'.format(J))
        result, base, n = Ideal.unit(I.ring), I, J
        while n:
            if n & 1:
                result = _reminimalized(Ideal(I.ring, _products(result, base)), config)
            n >>= 1
            if n:
                base = _reminimalized(Ideal(I.ring, _products(base, base)), config)
        return result
    I.ring.check_same(J.ring)
    if op is CombineOp.SUM:
        return _reminimalized(Ideal(I.ring, I.generators + J.generators), config)
    return _reminimalized(Ideal(I.ring, _products(I, J)), config)


def _products(I: Ideal, J: Ideal) -> List[Polynomial]:
    return [f * g for f in I.generators for g in J.generators]


def _lift(f: PolyElement, target: RingDescriptor) -> PolyElement:
    return target.poly_ring.from_dict({(0,) + m: c for m, c in f.items()})


def _drop(f: PolyElement, ring: RingDescriptor) -> Polynomial:
    return Polynomial(ring, ring.poly_ring.from_dict({m[1:]: c for m, c in f.items()}))


def ideal_intersection(I: Ideal, J: Ideal, floor: Optional[Ideal] = None,
                       config: Optional[AnalysisConfig] = None) -> Ideal:
    """
    Intersection by elimination: ``(t*I + (1-t)*J)`` intersected with the subring without ``t``

    Args:
        I (:class:`Ideal`): First ideal
        J (:class:`Ideal`): Second ideal
        floor (:class:`Ideal`, *optional*): An ideal known to lie inside ``I ∩ J``; adding it to the elimination
            ideal leaves the result unchanged and keeps intermediate bases small

    Raises:
        :class:`~blowup.errors.ConsistencyError` if the result is not contained in both operands
    """
    I.ring.check_same(J.ring)
    config = resolve_config(config)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring)
    if I.is_unit(config):
        return J
    if J.is_unit(config):
        return I
    elimination = ring.elimination_ring()
    R = elimination.poly_ring
    t = R.gens[0]
    generators = [t * _lift(f.element, elimination) for f in I.generators]
    generators += [(1 - t) * _lift(g.element, elimination) for g in J.generators]
    if floor is not None:
        generators += [_lift(h.element, elimination) for h in floor.generators]
    basis = _buchberger(generators, config)
    result = Ideal(ring, [_drop(g, ring) for g in basis if all(m[0] == 0 for m in g.keys())])
    if config.verify_intersections:
        if not (ideal_contains(I, result, config) and ideal_contains(J, result, config)):
            raise ConsistencyError('intersection of {} and {} is not contained in both'.format(I, J))
    return _reminimalized(result, config)


def ideal_colon(I: Ideal, J: Ideal, floor: Optional[Ideal] = None,
                config: Optional[AnalysisConfig] = None) -> Ideal:
    """
    Colon ideal ``(I : J)``, intersecting ``(I : g)`` over the generators ``g`` of ``J``

    Args:
        I (:class:`Ideal`): Dividend
        J (:class:`Ideal`): Divisor, must be nonzero
        floor (:class:`Ideal`, *optional*): An ideal known to lie inside ``(I : J)``

    Raises:
        :class:`~blowup.errors.InputError` if ``J`` is the zero ideal
        :class:`~blowup.errors.ConsistencyError` if ``J*(I : J)`` is not contained in ``I``
    """
    I.ring.check_same(J.ring)
    config = resolve_config(config)
    if J.is_zero():
        raise InputError('colon by the zero ideal is rejected')
    ring = I.ring
    parts = []
    for g in J.generators:
        if not any(g.leading_exponent()) and len(g.element) == 1:
            parts.append(I)
            continue
        principal = Ideal(ring, [g])
        lifted_floor = None if floor is None else Ideal(ring, [h * g for h in floor.generators])
        meet = ideal_intersection(I, principal, floor=lifted_floor, config=config)
        parts.append(Ideal(ring, [Polynomial(ring, h.element.exquo(g.element)) for h in meet.generators]))
    result = parts[0]
    for part in parts[1:]:
        result = ideal_intersection(result, part, floor=floor, config=config)
    result = _reminimalized(result, config)
    if config.verify_intersections and not ideal_contains(I, Ideal(ring, _products(J, result)), config):
        raise ConsistencyError('J*(I:J) is not contained in I for I = {}, J = {}'.format(I, J))
    return result


def ideals_equal(I: Ideal, J: Ideal, config: Optional[AnalysisConfig] = None) -> bool:
    I.ring.check_same(J.ring)
    return I.groebner_basis(config).elements == J.groebner_basis(config).elements


def artinian_quotient_length(I: Ideal, config: Optional[AnalysisConfig] = None) -> int:
    """
    Vector space dimension of ``A/I`` as the number of standard monomials of the reduced basis

    Raises:
        :class:`~blowup.errors.NotArtinianError` if some variable has no pure power among the leading terms
    """
    basis = I.groebner_basis(config)
    if basis.is_unit():
        return 0
    leading = basis.leading_exponents()
    if pure_power_bounds(leading, I.ring.dimension) is None:
        raise NotArtinianError('A/I is not finite dimensional for I = {}'.format(I))
    return staircase_count(leading, I.ring.dimension)


def local_quotient_length(I: Ideal, floor: Ideal, config: Optional[AnalysisConfig] = None) -> int:
    """
    Length of ``A/I`` localized at the origin, for ``floor`` inside the primary component of ``I`` at the origin

    Random combinations of monomials may vanish at points away from the origin; adding an m-primary ideal that
    lies inside the origin component cuts those points away and leaves the local length unchanged.
    """
    return artinian_quotient_length(Ideal(I.ring, I.generators + floor.generators), config)


def is_m_primary(I: Ideal, config: Optional[AnalysisConfig] = None) -> bool:
    """
    ``True`` if the radical of ``I`` is the ideal generated by the variables
    """
    try:
        length = artinian_quotient_length(I, config)
    except NotArtinianError:
        return False
    if length == 0:
        return False
    ring = I.ring
    G = I.groebner_basis(config)
    # nilpotency index of x_i modulo I is at most the length
    for i in range(ring.dimension):
        exponents = [0] * ring.dimension
        exponents[i] = length
        if normal_form(Polynomial.monomial(ring, exponents), G):
            return False
    return True


__all__ = [
    'CombineOp', 'Ideal', 'GroebnerBasis', 'buchberger_reduced_basis', 'normal_form', 'ideal_membership',
    'ideal_contains', 'ideal_combine', 'ideal_intersection', 'ideal_colon', 'ideals_equal',
    'artinian_quotient_length', 'local_quotient_length', 'is_m_primary',
]
