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

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.orderings import MonomialOrder as _SympyOrder, grevlex, lex
from sympy.polys.rings import PolyElement, PolyRing

from blowup.config import AnalysisConfig
from blowup.errors import InputError, LengthMismatchError, RingMismatchError, ZeroDenominatorError

ExponentVector = Tuple[int, ...]
Term = Tuple[Any, ExponentVector]

_IDENTIFIER = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')


# docstring magic ahead


class MonomialOrder(Enum):
    """
    An enumeration of monomial orders

    Members:
        * GREVLEX = 'grevlex'
        * LEX = 'lex'
        * BLOCK = 'block'
    """

    GREVLEX = 'grevlex'
    LEX = 'lex'
    BLOCK = 'block'


class Comparison(Enum):
    """
    Result of :func:`monomial_compare`

    Members:
        * LT = -1
        * EQ = 0
        * GT = 1
    """

    LT = -1
    EQ = 0
    GT = 1


class ArithmeticOp(Enum):
    """
    Operations understood by :func:`poly_arithmetic`

    Members:
        * ADD = 'add'
        * SUBTRACT = 'subtract'
        * MULTIPLY = 'multiply'
        * SCALE = 'scale'
    """

    ADD = 'add'
    SUBTRACT = 'subtract'
    MULTIPLY = 'multiply'
    SCALE = 'scale'


class EliminationOrder(_SympyOrder):
    """
    Lex on the first ``split`` variables, grevlex on the rest
    """

    alias = 'elimination'
    is_global = True

    def __init__(self, split: int):
        self.split = split

    def __call__(self, monomial):
        return tuple(monomial[:self.split]), grevlex(monomial[self.split:])

    def __repr__(self):
        return 'EliminationOrder({})'.format(self.split)

    def __eq__(self, other):
        return isinstance(other, EliminationOrder) and self.split == other.split

    def __hash__(self):
        return hash((EliminationOrder, self.split))


def sympy_order(order: MonomialOrder, split: int = 0) -> _SympyOrder:
    if order is MonomialOrder.GREVLEX:
        return grevlex
    if order is MonomialOrder.LEX:
        return lex
    return EliminationOrder(split)


@dataclass(frozen=True)
class CoefficientField:
    """
    Exact coefficient field: the rationals (``characteristic == 0``) or a prime field

    Args:
        characteristic (``int``): ``0`` for Q, otherwise the prime ``p`` of Fp
    """

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic and not isprime(self.characteristic):
            raise InputError('field characteristic {} is not a prime'.format(self.characteristic))

    @classmethod
    def rational(cls) -> 'CoefficientField':
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> 'CoefficientField':
        return cls(p)

    @classmethod
    def parse(cls, text: str, default_prime: Optional[int] = None) -> 'CoefficientField':
        """
        Parse a field spec of the form ``q``, ``fp:<p>`` or ``fp`` (case-insensitive, ``Q``/``QQ`` accepted)

        Args:
            text (``str``): Field spec
            default_prime (``int``, *optional*): Prime used for a bare ``fp``, the configured ``default_prime`` if
                not given

        Raises:
            :class:`~blowup.errors.InputError` on anything else
        """
        spec = text.strip().lower()
        if spec in ('q', 'qq'):
            return cls.rational()
        if spec == 'fp':
            return cls.prime(default_prime or AnalysisConfig.config['default_prime'])
        match = re.fullmatch(r'fp:(\d+)', spec)
        if match is None:
            raise InputError('unknown field spec {!r}, expected q, fp or fp:<p>'.format(text))
        return cls.prime(int(match.group(1)))

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @cached_property
    def domain(self):
        return QQ if self.is_rational else GF(self.characteristic)

    @property
    def name(self) -> str:
        return 'Q' if self.is_rational else 'fp:{}'.format(self.characteristic)

    def is_effectively_infinite(self, floor: int) -> bool:
        return self.is_rational or self.characteristic > floor

    def convert(self, value: Union[int, Fraction, str, Any]):
        """
        Convert an ``int``, ``Fraction``, ``p/q`` string or domain element to a domain element

        Raises:
            :class:`~blowup.errors.ZeroDenominatorError` if the denominator vanishes (modulo ``p`` for Fp)
        """
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            num, den = value.numerator, value.denominator
        elif isinstance(value, int):
            num, den = value, 1
        else:
            return self.domain.convert(value)
        if self.is_rational:
            return self.domain(num, den)
        if den % self.characteristic == 0:
            raise ZeroDenominatorError('denominator {} vanishes in {}'.format(den, self.name))
        return self.domain(num) / self.domain(den)

    def to_fraction(self, value) -> Fraction:
        if self.is_rational:
            return Fraction(int(value.numerator), int(value.denominator))
        return Fraction(self.domain.to_int(value))


@dataclass(frozen=True)
class RingDescriptor:
    """
    A polynomial ring k[x_1..x_d]

    Args:
        variable_names (``tuple`` of ``str``): Distinct identifiers
        field (:class:`CoefficientField`, *optional*): Coefficient field, Q by default
        order (:class:`MonomialOrder`, *optional*): Monomial order, grevlex by default
        block_split (``int``, *optional*): Size of the eliminated block for :attr:`MonomialOrder.BLOCK`

    Raises:
        :class:`~blowup.errors.InputError` if the names are not distinct identifiers
    """

    variable_names: Tuple[str, ...]
    field: CoefficientField = CoefficientField()
    order: MonomialOrder = MonomialOrder.GREVLEX
    block_split: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'variable_names', tuple(self.variable_names))
        if not self.variable_names:
            raise InputError('a ring needs at least one variable')
        for name in self.variable_names:
            if not _IDENTIFIER.match(name):
                raise InputError('variable name {!r} is not an identifier'.format(name))
        if len(set(self.variable_names)) != len(self.variable_names):
            raise InputError('variable names must be distinct: {}'.format(', '.join(self.variable_names)))
        if self.order is MonomialOrder.BLOCK and not 0 < self.block_split < len(self.variable_names):
            raise InputError('block split {} out of range'.format(self.block_split))

    @property
    def dimension(self) -> int:
        return len(self.variable_names)

    @cached_property
    def poly_ring(self) -> PolyRing:
        return PolyRing(self.variable_names, self.field.domain, sympy_order(self.order, self.block_split))

    @cached_property
    def order_key(self):
        return sympy_order(self.order, self.block_split)

    def zero(self) -> 'Polynomial':
        return Polynomial(self, self.poly_ring.zero)

    def one(self) -> 'Polynomial':
        return Polynomial(self, self.poly_ring.one)

    def variable(self, name: str) -> 'Polynomial':
        exponents = [0] * self.dimension
        exponents[self.variable_names.index(name)] = 1
        return Polynomial.monomial(self, exponents)

    def elimination_ring(self) -> 'RingDescriptor':
        """
        The ring with one fresh variable in front, ordered by a block order eliminating it
        """
        name = '_t'
        while name in self.variable_names:
            name += '_'
        return RingDescriptor((name,) + self.variable_names, self.field, MonomialOrder.BLOCK, 1)

    def check_same(self, other: 'RingDescriptor'):
        if self != other:
            raise RingMismatchError('ring mismatch: {} vs {}'.format(self, other))

    def __str__(self):
        return '{}[{}]'.format(self.field.name, ', '.join(self.variable_names))


class Polynomial:
    """
    Immutable exact polynomial over a :class:`RingDescriptor`

    The underlying ``PolyElement`` keeps no zero coefficients and no duplicate exponents, so two polynomials are
    equal iff their canonical term lists are.
    """

    __slots__ = ('ring', 'element')

    def __init__(self, ring: RingDescriptor, element: PolyElement):
        self.ring = ring
        self.element = element

    @classmethod
    def from_terms(cls, ring: RingDescriptor, terms: Iterable[Tuple[Any, Sequence[int]]]) -> 'Polynomial':
        data: Dict[ExponentVector, Any] = {}
        domain = ring.field.domain
        for coefficient, exponents in terms:
            exponents = tuple(exponents)
            if len(exponents) != ring.dimension:
                raise LengthMismatchError('exponent vector {} in a ring of dimension {}'.format(
                    exponents, ring.dimension))
            data[exponents] = data.get(exponents, domain.zero) + ring.field.convert(coefficient)
        return cls(ring, ring.poly_ring.from_dict({k: v for k, v in data.items() if v}))

    @classmethod
    def monomial(cls, ring: RingDescriptor, exponents: Sequence[int], coefficient=1) -> 'Polynomial':
        return cls.from_terms(ring, [(coefficient, exponents)])

    @property
    def terms(self) -> List[Term]:
        """
        ``list`` of ``(coefficient, exponents)`` strictly descending under the ring's order
        """
        return [(c, m) for m, c in self.element.terms()]

    def coefficients(self) -> List[Fraction]:
        return [self.ring.field.to_fraction(c) for c, _ in self.terms]

    def is_zero(self) -> bool:
        return not self.element

    def is_monomial(self) -> bool:
        return len(self.element) == 1

    def total_degree(self) -> int:
        return max((sum(m) for m in self.element.keys()), default=-1)

    def leading_exponent(self) -> ExponentVector:
        return self.element.LM

    def evaluate(self, point: Sequence[Any]):
        """
        Value at ``point`` (one coordinate per variable) as a field element
        """
        if len(point) != self.ring.dimension:
            raise LengthMismatchError('point of length {} in a ring of dimension {}'.format(
                len(point), self.ring.dimension))
        domain = self.ring.field.domain
        values = [self.ring.field.convert(p) for p in point]
        total = domain.zero
        for exponents, coefficient in self.element.items():
            term = coefficient
            for value, e in zip(values, exponents):
                term *= value ** e
            total += term
        return total

    def _lift(self, other) -> PolyElement:
        if isinstance(other, Polynomial):
            self.ring.check_same(other.ring)
            return other.element
        return self.ring.poly_ring.ground_new(self.ring.field.convert(other))

    def __add__(self, other):
        return Polynomial(self.ring, self.element + self._lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return Polynomial(self.ring, self.element - self._lift(other))

    def __rsub__(self, other):
        return Polynomial(self.ring, self._lift(other) - self.element)

    def __mul__(self, other):
        return Polynomial(self.ring, self.element * self._lift(other))

    __rmul__ = __mul__

    def __neg__(self):
        return Polynomial(self.ring, -self.element)

    def __pow__(self, n: int):
        if n < 0:
            raise InputError('negative power {}'.format(n))
        return Polynomial(self.ring, self.element ** n)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.ring == other.ring and self.element == other.element

    def __hash__(self):
        return hash((self.ring, frozenset(self.element.items())))

    def __bool__(self):
        return bool(self.element)

    def __str__(self):
        from blowup.parser import format_polynomial
        return format_polynomial(self)

    def __repr__(self):
        return 'Polynomial({!r}, {})'.format(str(self), self.ring)


def monomial_compare(a: Sequence[int], b: Sequence[int], order: MonomialOrder = MonomialOrder.GREVLEX,
                     split: int = 0) -> Comparison:
    """
    Compare two exponent vectors

    Args:
        a (``tuple`` of ``int``): First exponent vector
        b (``tuple`` of ``int``): Second exponent vector
        order (:class:`MonomialOrder`, *optional*): Order to compare under
        split (``int``, *optional*): Size of the eliminated block for :attr:`MonomialOrder.BLOCK`

    Returns:
        :class:`Comparison`

    Raises:
        :class:`~blowup.errors.LengthMismatchError` if the vectors have different lengths
    """
    if len(a) != len(b):
        raise LengthMismatchError('exponent vectors of lengths {} and {}'.format(len(a), len(b)))
    key = sympy_order(order, split)
    ka, kb = key(tuple(a)), key(tuple(b))
    if ka == kb:
        return Comparison.EQ
    return Comparison.GT if ka > kb else Comparison.LT


def poly_arithmetic(op: Union[ArithmeticOp, str], f: Polynomial, g) -> Polynomial:
    """
    Add, subtract or multiply two polynomials of the same ring, or scale one by a field element

    Raises:
        :class:`~blowup.errors.RingMismatchError` if the operands live in different rings
    """
    op = ArithmeticOp(op)
    if op is ArithmeticOp.SCALE:
        if isinstance(g, Polynomial):
            raise InputError('scale expects a field element, got a polynomial')
        return Polynomial(f.ring, f.element * f.ring.field.convert(g))
    if not isinstance(g, Polynomial):
        raise InputError('{} expects a polynomial operand'.format(op.value))
    f.ring.check_same(g.ring)
    if op is ArithmeticOp.ADD:
        return f + g
    if op is ArithmeticOp.SUBTRACT:
        return f - g
    return f * g


__all__ = [
    'ExponentVector', 'MonomialOrder', 'Comparison', 'ArithmeticOp', 'EliminationOrder', 'CoefficientField',
    'RingDescriptor', 'Polynomial', 'monomial_compare', 'poly_arithmetic',
]
