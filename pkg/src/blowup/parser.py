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
.. module:: parser
    :synopsis: Polynomial text format

The accepted grammar::

    polynomial := [sign] term (sign term)*
    term       := factor ('*' factor)*
    factor     := integer ['/' integer] | name ['^' integer]
    sign       := '+' | '-'

Whitespace between tokens is insignificant. The printer writes the same format with ``^`` for powers, ``*``
between factors and rational coefficients as ``p/q``.
"""

import re
from fractions import Fraction
from typing import List, Optional, Tuple

from blowup.errors import (
    ExponentOverflowError, PolynomialSyntaxError, UnknownVariableError, ZeroDenominatorError,
)
from blowup.rings import Polynomial, RingDescriptor
from blowup.utils import rational_to_str

DEFAULT_EXPONENT_CAP = 2 ** 31 - 1

_TOKEN = re.compile(r'\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^−]))')
_SPACE = re.compile(r'\s*')


class _Parser:
    def __init__(self, text: str, ring: RingDescriptor, exponent_cap: int):
        self.text = text
        self.ring = ring
        self.exponent_cap = exponent_cap
        self.index = {name: i for i, name in enumerate(ring.variable_names)}
        self.pos = 0
        self.token: Optional[Tuple[str, str, int]] = None
        self._advance()

    def _advance(self):
        match = _TOKEN.match(self.text, self.pos)
        if match is None:
            end = _SPACE.match(self.text, self.pos).end()
            if end == len(self.text):
                self.token = None
                self.pos = end
                return
            raise PolynomialSyntaxError('unexpected character {!r}'.format(self.text[end]), self.text, end)
        kind = match.lastgroup
        value = match.group(kind)
        if value == '−':
            value = '-'
        self.token = (kind, value, match.start(kind))
        self.pos = match.end()

    def _error(self, message: str, cls=PolynomialSyntaxError):
        position = self.token[2] if self.token else len(self.text)
        return cls(message, self.text, position)

    def _expect_number(self) -> int:
        if self.token is None or self.token[0] != 'number':
            raise self._error('expected an integer')
        value = int(self.token[1])
        self._advance()
        return value

    def parse(self) -> Polynomial:
        terms: List[Tuple[Fraction, Tuple[int, ...]]] = []
        sign = 1
        if self.token is not None and self.token[1] in '+-':
            sign = -1 if self.token[1] == '-' else 1
            self._advance()
        terms.append(self._term(sign))
        while self.token is not None:
            if self.token[1] not in '+-':
                raise self._error('expected + or -')
            sign = -1 if self.token[1] == '-' else 1
            self._advance()
            terms.append(self._term(sign))
        return Polynomial.from_terms(self.ring, terms)

    def _term(self, sign: int) -> Tuple[Fraction, Tuple[int, ...]]:
        coefficient = Fraction(sign)
        exponents = [0] * self.ring.dimension
        coefficient = self._factor(coefficient, exponents)
        while self.token is not None and self.token[1] == '*':
            self._advance()
            coefficient = self._factor(coefficient, exponents)
        return coefficient, tuple(exponents)

    def _factor(self, coefficient: Fraction, exponents: List[int]) -> Fraction:
        if self.token is None:
            raise self._error('unexpected end of input')
        kind, value, position = self.token
        if kind == 'number':
            numerator = self._expect_number()
            denominator = 1
            if self.token is not None and self.token[1] == '/':
                self._advance()
                den_position = self.token[2] if self.token else len(self.text)
                denominator = self._expect_number()
                if denominator == 0:
                    raise ZeroDenominatorError('zero denominator', self.text, den_position)
            return coefficient * Fraction(numerator, denominator)
        if kind == 'name':
            if value not in self.index:
                raise UnknownVariableError('unknown variable {!r}'.format(value), self.text, position)
            self._advance()
            power = 1
            if self.token is not None and self.token[1] == '^':
                self._advance()
                exp_position = self.token[2] if self.token else len(self.text)
                power = self._expect_number()
                if power > self.exponent_cap:
                    raise ExponentOverflowError('exponent {} exceeds cap {}'.format(power, self.exponent_cap),
                                                self.text, exp_position)
            i = self.index[value]
            exponents[i] += power
            if exponents[i] > self.exponent_cap:
                raise ExponentOverflowError('exponent of {} exceeds cap {}'.format(value, self.exponent_cap),
                                            self.text, position)
            return coefficient
        raise self._error('unexpected {!r}'.format(value))


def parse_polynomial(text: str, ring: RingDescriptor, exponent_cap: int = DEFAULT_EXPONENT_CAP) -> Polynomial:
    """
    Parse a polynomial written in the text format of this module

    Args:
        text (``str``): Polynomial expression, e.g. ``"x^2 + 3*x*y - 1/2"``
        ring (:class:`~blowup.rings.RingDescriptor`): Ring the variables belong to
        exponent_cap (``int``, *optional*): Largest exponent accepted

    Returns:
        Canonical :class:`~blowup.rings.Polynomial`

    Raises:
        :class:`~blowup.errors.PolynomialSyntaxError` (or one of its subclasses
        :class:`~blowup.errors.UnknownVariableError`, :class:`~blowup.errors.ZeroDenominatorError`,
        :class:`~blowup.errors.ExponentOverflowError`) carrying the offending position
    """
    return _Parser(text, ring, exponent_cap).parse()


def _format_monomial(names, exponents) -> str:
    factors = []
    for name, e in zip(names, exponents):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append('{}^{}'.format(name, e))
    return '*'.join(factors)


def format_polynomial(f: Polynomial) -> str:
    """
    Print ``f`` with its terms in descending order, e.g. ``x^2 - 1/2*x*y + 3``
    """
    if f.is_zero():
        return '0'
    field = f.ring.field
    names = f.ring.variable_names
    parts = []
    for coefficient, exponents in f.terms:
        c = field.to_fraction(coefficient)
        monomial = _format_monomial(names, exponents)
        if not monomial:
            body = rational_to_str(abs(c))
        elif abs(c) == 1:
            body = monomial
        else:
            body = '{}*{}'.format(rational_to_str(abs(c)), monomial)
        if not parts:
            parts.append('-' + body if c < 0 else body)
        else:
            parts.append(('- ' if c < 0 else '+ ') + body)
    return ' '.join(parts)


__all__ = ['parse_polynomial', 'format_polynomial', 'DEFAULT_EXPONENT_CAP']
