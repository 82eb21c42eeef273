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
.. module:: monomial
    :synopsis: Combinatorics of monomial ideals: staircases, Newton polyhedra, integral closure, normality
"""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from math import factorial, gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import Matrix

from blowup.errors import (
    ConsistencyError, DimensionNotSupportedError, InputError, LengthMismatchError, NotMPrimaryError,
)
from blowup.exponents import (
    is_dominated, minimalize, pure_power_bounds, staircase_count, standard_monomials,
)
from blowup.groebner import Ideal
from blowup.rings import CoefficientField, Polynomial, RingDescriptor
from blowup.simplex import convex_combination_below
from blowup.utils import add_exponents, max_exponents

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def default_ring(dimension: int, field: CoefficientField = CoefficientField()) -> RingDescriptor:
    """
    ``k[x, y, z]`` for up to three variables, ``k[x1..xd]`` otherwise
    """
    names = ('x', 'y', 'z')[:dimension] if dimension <= 3 else tuple('x{}'.format(i + 1) for i in range(dimension))
    return RingDescriptor(names, field)


class MonomialIdeal:
    """
    Monomial ideal given by its minimal generators

    Args:
        ring (:class:`~blowup.rings.RingDescriptor`): Ambient ring
        generators (``list`` of exponent vectors): Generators, minimalized on construction

    Raises:
        :class:`~blowup.errors.LengthMismatchError` if a vector has the wrong length
        :class:`~blowup.errors.InputError` if a vector has a negative entry or no generator is given
    """

    def __init__(self, ring: RingDescriptor, generators: Iterable[Sequence[int]]):
        generators = [tuple(g) for g in generators]
        if not generators:
            raise InputError('a monomial ideal needs at least one generator')
        for g in generators:
            if len(g) != ring.dimension:
                raise LengthMismatchError('exponent vector {} in a ring of dimension {}'.format(g, ring.dimension))
            if any(e < 0 for e in g):
                raise InputError('negative exponent in {}'.format(g))
        self.ring = ring
        self.generators: Tuple[Vector, ...] = minimalize(generators)
        self._powers: Dict[int, 'MonomialIdeal'] = {1: self}
        self._polyhedron: Optional[NewtonPolyhedron] = None

    @classmethod
    def from_ideal(cls, I: Ideal) -> 'MonomialIdeal':
        if I.is_zero() or not I.is_monomial():
            raise InputError('{} is not a nonzero monomial ideal'.format(I))
        return cls(I.ring, [g.leading_exponent() for g in I.generators])

    @classmethod
    def unit(cls, ring: RingDescriptor) -> 'MonomialIdeal':
        return cls(ring, [(0,) * ring.dimension])

    @classmethod
    def maximal(cls, ring: RingDescriptor, power: int = 1) -> 'MonomialIdeal':
        return cls(ring, [v for v in itertools.product(range(power + 1), repeat=ring.dimension) if sum(v) == power])

    @property
    def dimension(self) -> int:
        return self.ring.dimension

    def to_ideal(self) -> Ideal:
        return Ideal(self.ring, [Polynomial.monomial(self.ring, g) for g in self.generators])

    def to_polynomials(self) -> List[Polynomial]:
        return [Polynomial.monomial(self.ring, g) for g in self.generators]

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    def is_m_primary(self) -> bool:
        return not self.is_unit() and pure_power_bounds(self.generators, self.dimension) is not None

    def require_m_primary(self):
        if not self.is_m_primary():
            raise NotMPrimaryError('{} is not m-primary'.format(self))

    def pure_power_bounds(self) -> Vector:
        self.require_m_primary()
        return pure_power_bounds(self.generators, self.dimension)

    def max_exponents(self) -> Vector:
        return max_exponents(self.generators)

    def contains_exponent(self, v: Sequence[int]) -> bool:
        return is_dominated(v, self.generators)

    def contains(self, other: 'MonomialIdeal') -> bool:
        """
        ``True`` if ``other`` is contained in this ideal
        """
        self.ring.check_same(other.ring)
        return all(self.contains_exponent(g) for g in other.generators)

    def __add__(self, other: 'MonomialIdeal') -> 'MonomialIdeal':
        self.ring.check_same(other.ring)
        return MonomialIdeal(self.ring, self.generators + other.generators)

    def __mul__(self, other: 'MonomialIdeal') -> 'MonomialIdeal':
        self.ring.check_same(other.ring)
        return MonomialIdeal(self.ring, [add_exponents(a, b) for a in self.generators for b in other.generators])

    def __and__(self, other: 'MonomialIdeal') -> 'MonomialIdeal':
        return self.intersection(other)

    def power(self, n: int) -> 'MonomialIdeal':
        """
        ``n``-th power, built incrementally and memoized on this instance
        """
        if n < 0:
            raise InputError('negative power {}'.format(n))
        if n == 0:
            return MonomialIdeal.unit(self.ring)
        top = max(k for k in self._powers if k <= n)
        result = self._powers[top]
        for k in range(top + 1, n + 1):
            result = result * self
            self._powers[k] = result
        return result

    __pow__ = power

    def intersection(self, other: 'MonomialIdeal') -> 'MonomialIdeal':
        self.ring.check_same(other.ring)
        return MonomialIdeal(self.ring, [tuple(max(x, y) for x, y in zip(a, b))
                                         for a in self.generators for b in other.generators])

    def colon(self, other: 'MonomialIdeal') -> 'MonomialIdeal':
        """
        ``(self : other)`` as the intersection over the generators ``b`` of ``other`` of ``(self : x^b)``
        """
        self.ring.check_same(other.ring)
        parts = [MonomialIdeal(self.ring, [tuple(max(x - y, 0) for x, y in zip(a, b)) for a in self.generators])
                 for b in other.generators]
        return reduce(MonomialIdeal.intersection, parts)

    def newton_polyhedron(self) -> 'NewtonPolyhedron':
        if self._polyhedron is None:
            self._polyhedron = NewtonPolyhedron(self.generators, self.dimension)
        return self._polyhedron

    def staircase_length(self) -> int:
        return staircase_length(self)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.ring == other.ring and self.generators == other.generators

    def __hash__(self):
        return hash((self.ring, self.generators))

    def __str__(self):
        return '({})'.format(', '.join(str(p) for p in self.to_polynomials()))

    def __repr__(self):
        return 'MonomialIdeal{} in {}'.format(self, self.ring)


def _primitive(vector: Sequence) -> Vector:
    """
    Integer multiple of a rational vector with coprime entries
    """
    fractions = [Fraction(v) for v in vector]
    denominator = reduce(lambda a, b: a * b // gcd(a, b), (f.denominator for f in fractions), 1)
    integers = [int(f * denominator) for f in fractions]
    divisor = reduce(gcd, (abs(v) for v in integers), 0)
    return tuple(v // divisor for v in integers) if divisor else tuple(integers)


def _normal(directions: List[Vector], dimension: int) -> Optional[Vector]:
    if dimension == 1:
        return (1,)
    if dimension == 2:
        (a, b), = directions
        normal = (b, -a)
    elif dimension == 3:
        (a1, a2, a3), (b1, b2, b3) = directions
        normal = (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
    else:
        space = Matrix(directions).nullspace()
        if len(space) != 1:
            return None
        normal = tuple(space[0])
    if not any(normal):
        return None
    return _primitive(normal)


class NewtonPolyhedron:
    """
    ``conv(generators) + R^d_{>=0}`` by its facet inequalities ``<w, v> >= b``

    Each facet's affine hull is spanned by one generator plus ``d - 1`` further generators or coordinate rays,
    so enumerating those spans and keeping the ones supporting every generator finds all facets. Every normal
    is non-negative because the coordinate rays are recession directions.

    Args:
        generators (``list`` of exponent vectors): Points spanning the polyhedron
        dimension (``int``): Ambient dimension
    """

    def __init__(self, generators: Sequence[Sequence[int]], dimension: int):
        self.dimension = dimension
        self.points: Tuple[Vector, ...] = tuple(tuple(g) for g in generators)
        self.facets: Tuple[Tuple[Vector, int], ...] = self._facets()

    def _facets(self) -> Tuple[Tuple[Vector, int], ...]:
        d = self.dimension
        rays = [tuple(1 if i == j else 0 for j in range(d)) for i in range(d)]
        found = set()
        for index, origin in enumerate(self.points):
            others = [tuple(p - o for p, o in zip(q, origin)) for q in self.points[index + 1:]] + rays
            for directions in itertools.combinations(others, d - 1):
                normal = _normal(list(directions), d)
                if normal is None:
                    continue
                if all(w <= 0 for w in normal):
                    normal = tuple(-w for w in normal)
                if any(w < 0 for w in normal):
                    continue
                offset = sum(w * o for w, o in zip(normal, origin))
                if all(sum(w * p for w, p in zip(normal, q)) >= offset for q in self.points):
                    found.add((normal, offset))
        return tuple(sorted(found))

    def compact_facets(self) -> List[Tuple[Vector, int]]:
        return [(w, b) for w, b in self.facets if all(w) and b > 0]

    def contains(self, v: Sequence[int], scale: int = 1) -> bool:
        """
        ``True`` if ``v`` lies in ``scale`` times the polyhedron
        """
        return all(sum(w * x for w, x in zip(normal, v)) >= scale * offset for normal, offset in self.facets)

    def covolume(self) -> Fraction:
        """
        Volume of the bounded region between the coordinate hyperplanes and the polyhedron

        Raises:
            :class:`~blowup.errors.DimensionNotSupportedError` for more than three variables
        """
        d = self.dimension
        if d == 1:
            return Fraction(min(p[0] for p in self.points))
        if d > 3:
            raise DimensionNotSupportedError('covolume is implemented for at most 3 variables')
        total = Fraction(0)
        for normal, offset in self.compact_facets():
            on_facet = [p for p in self.points if sum(w * x for w, x in zip(normal, p)) == offset]
            if d == 2:
                a = min(on_facet)
                b = max(on_facet)
                total += Fraction(abs(a[0] * b[1] - a[1] * b[0]), 2)
                continue
            # the facet is a graph over the first two coordinates since all normal entries are positive
            hull = _convex_hull_2d(on_facet)
            apex = hull[0]
            for p, q in zip(hull[1:], hull[2:]):
                total += Fraction(abs(_det3(apex, p, q)), 6)
        return total


def _det3(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> int:
    return (a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def _convex_hull_2d(points: Sequence[Vector]) -> List[Vector]:
    """
    Monotone chain hull on the first two coordinates, counter-clockwise, collinear points dropped
    """
    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    points = sorted(set(points), key=lambda p: (p[0], p[1]))
    if len(points) <= 2:
        return points
    lower: List[Vector] = []
    for p in points:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Vector] = []
    for p in reversed(points):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def minimal_generators(gens: Sequence[Sequence[int]], ring: Optional[RingDescriptor] = None) -> MonomialIdeal:
    """
    Divisibility-minimal generators of the monomial ideal generated by ``gens``

    Args:
        gens (``list`` of exponent vectors): Nonempty list of generators
        ring (:class:`~blowup.rings.RingDescriptor`, *optional*): Ambient ring, :func:`default_ring` if omitted
    """
    if not gens:
        raise InputError('minimal_generators needs a nonempty list')
    ring = ring or default_ring(len(gens[0]))
    return MonomialIdeal(ring, gens)


def np_membership(v: Sequence[int], I: MonomialIdeal) -> bool:
    """
    Decide by exact linear programming whether ``x^v`` is integral over ``I``

    Raises:
        :class:`~blowup.errors.LengthMismatchError` if ``v`` has the wrong length
    """
    if len(v) != I.dimension:
        raise LengthMismatchError('vector {} in a ring of dimension {}'.format(tuple(v), I.dimension))
    if I.contains_exponent(v):
        return True
    return convex_combination_below(v, I.generators) is not None


def power_test_membership(v: Sequence[int], I: MonomialIdeal, bound: int = 12) -> Optional[int]:
    """
    Smallest ``k <= bound`` with ``x^(k*v)`` in ``I^k``, ``None`` if there is none
    """
    for k in range(1, bound + 1):
        if I.power(k).contains_exponent(tuple(k * x for x in v)):
            return k
    return None


def _closure_generators(contains, box: Sequence[int]) -> List[Vector]:
    """
    Minimal lattice points of a monomial ideal given by a membership predicate, searched in ``0 <= v <= box``
    """
    generators = []
    for v in itertools.product(*(range(b + 1) for b in box)):
        if not contains(v):
            continue
        if all(v[i] == 0 or not contains(v[:i] + (v[i] - 1,) + v[i + 1:]) for i in range(len(v))):
            generators.append(v)
    return generators


def integral_closure(I: MonomialIdeal, method: str = 'facets') -> MonomialIdeal:
    """
    Integral closure of a monomial ideal

    Minimal generators of the closure lie in the box below the componentwise maximum ``M`` of the generators:
    if ``v_i > M_i`` then ``v - e_i`` still dominates the same convex combination.

    Args:
        I (:class:`MonomialIdeal`): Nonzero monomial ideal
        method (``str``, *optional*): ``facets`` tests lattice points against the facet inequalities, ``lp`` runs
            :func:`np_membership` on every point

    Returns:
        :class:`MonomialIdeal`
    """
    box = I.max_exponents()
    if method == 'lp':
        generators = _closure_generators(lambda v: np_membership(v, I), box)
    elif method == 'facets':
        generators = _closure_generators(I.newton_polyhedron().contains, box)
    else:
        raise InputError('unknown closure method {!r}'.format(method))
    return MonomialIdeal(I.ring, generators)


def integral_closure_of_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """
    ``(I^n)*`` from the Newton polyhedron of ``I`` scaled by ``n``
    """
    if n <= 0:
        return MonomialIdeal.unit(I.ring)
    polyhedron = I.newton_polyhedron()
    box = tuple(n * m for m in I.max_exponents())
    return MonomialIdeal(I.ring, _closure_generators(lambda v: polyhedron.contains(v, n), box))


def is_integrally_closed(I: MonomialIdeal) -> bool:
    return integral_closure(I) == I


def closure_witness(I: MonomialIdeal, closure: Optional[MonomialIdeal] = None) -> Optional[Vector]:
    """
    A minimal generator of ``I*`` outside ``I``, or ``None``
    """
    closure = closure if closure is not None else integral_closure(I)
    for g in closure.generators:
        if not I.contains_exponent(g):
            return g
    return None


def staircase_length(I: MonomialIdeal) -> int:
    """
    Number of monomials outside ``I``

    Raises:
        :class:`~blowup.errors.NotMPrimaryError` if ``I`` is not m-primary
    """
    if I.is_unit():
        return 0
    I.require_m_primary()
    return staircase_count(I.generators, I.dimension)


def standard_monomial_exponents(I: MonomialIdeal) -> List[Vector]:
    I.require_m_primary()
    return standard_monomials(I.generators, I.dimension)


def covolume(I: MonomialIdeal) -> Fraction:
    I.require_m_primary()
    if I.dimension > 3:
        raise DimensionNotSupportedError('covolume is implemented for at most 3 variables')
    return I.newton_polyhedron().covolume()


def multiplicity_from_volume(I: MonomialIdeal) -> int:
    """
    ``d! * covolume``, the multiplicity of an m-primary monomial ideal
    """
    value = factorial(I.dimension) * covolume(I)
    if value.denominator != 1:
        raise ValueError('non-integral normalized covolume {}'.format(value))
    return int(value)


class NormalityVerdict(Enum):
    """
    Members:
        * NORMAL = 'Normal'
        * NOT_NORMAL = 'NotNormal'
    """

    NORMAL = 'Normal'
    NOT_NORMAL = 'NotNormal'


@dataclass(frozen=True)
class NormalityReport:
    """
    Outcome of checking ``I^n`` for integral closedness on ``n = 1..checked_window``

    Attributes:
        checked_window (``int``): Largest power checked
        failures (``list``): ``(n, witness)`` pairs, the witness being a minimal generator of ``(I^n)*`` outside
            ``I^n``, verified by linear programming
        verdict (:class:`NormalityVerdict`): ``Normal`` up to the window or ``NotNormal`` at the first failure
        first_failure (``int`` | ``None``): First failing power
        closed_from (``int`` | ``None``): Smallest ``n0`` with ``I^n`` closed for every ``n0 <= n <= window``
        note (``str``): What the verdict does and does not claim
    """

    checked_window: int
    failures: Tuple[Tuple[int, Vector], ...]
    verdict: NormalityVerdict
    first_failure: Optional[int] = None
    closed_from: Optional[int] = None
    note: str = ''

    @property
    def is_normal(self) -> bool:
        return self.verdict is NormalityVerdict.NORMAL

    def __str__(self):
        if self.is_normal:
            return 'Normal({})'.format(self.checked_window)
        return 'NotNormal({})'.format(self.first_failure)

    def to_dict(self) -> dict:
        return {
            'verdict': str(self),
            'window': self.checked_window,
            'failures': [[n, list(w)] for n, w in self.failures],
            'closed_from': self.closed_from,
            'note': self.note,
        }


def normality_report(I: MonomialIdeal, window: Optional[int] = None) -> NormalityReport:
    """
    Check whether ``I, I^2, .., I^window`` are integrally closed

    Args:
        I (:class:`MonomialIdeal`): m-primary monomial ideal
        window (``int``, *optional*): Largest power to check, ``max(d - 1, 3)`` by default

    Raises:
        :class:`~blowup.errors.NotMPrimaryError` if ``I`` is not m-primary
        :class:`~blowup.errors.ConsistencyError` if a witness fails linear programming verification
    """
    I.require_m_primary()
    default = max(I.dimension - 1, 3)
    window = window or default
    failures = []
    for n in range(1, window + 1):
        power = I.power(n)
        closure = integral_closure_of_power(I, n)
        if closure == power:
            continue
        witness = closure_witness(power, closure)
        if witness is None or not np_membership(witness, power):
            raise ConsistencyError('closure of {}^{} disagrees with linear programming'.format(I, n))
        logger.debug('%s^%d is not integrally closed, witness %s', I, n, witness)
        failures.append((n, witness))
    failed = [n for n, _ in failures]
    closed_from = None
    if window not in failed:
        closed_from = max(failed) + 1 if failed else 1
    note = ('checked I^n for n = 1..{}; the default window max(d-1, 3) = {} reflects that integral closedness of '
            'I..I^(d-1) implies normality in d variables'.format(window, default))
    return NormalityReport(
        checked_window=window,
        failures=tuple(failures),
        verdict=NormalityVerdict.NOT_NORMAL if failures else NormalityVerdict.NORMAL,
        first_failure=failed[0] if failed else None,
        closed_from=closed_from,
        note=note,
    )


__all__ = [
    'default_ring', 'MonomialIdeal', 'NewtonPolyhedron', 'minimal_generators', 'np_membership',
    'power_test_membership', 'integral_closure', 'integral_closure_of_power', 'is_integrally_closed',
    'closure_witness', 'staircase_length', 'standard_monomial_exponents', 'covolume', 'multiplicity_from_volume',
    'NormalityVerdict', 'NormalityReport', 'normality_report',
]
