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
.. module:: hilbert
    :synopsis: Hilbert functions, h-vectors and Hilbert coefficients of filtrations

The Hilbert function ``H(n) = ℓ(A/a_{n+1})`` has the series ``Σ H(n) t^n = h(t)/(1-t)^{d+1}``. The h-vector is read
off by multiplying the tabulated series with ``(1-t)^{d+1}`` and is accepted only when a window of trailing
coefficients vanishes and the recurrence it implies predicts one further, freshly computed value.
"""

import json
import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Optional

from sympy import Matrix, Rational

from blowup.config import AnalysisConfig
from blowup.errors import ConsistencyError, InputError, StabilizationNotReachedError
from blowup.filtration import Filtration
from blowup.utils import binomial, polynomial_coefficients_product, rational_to_str

logger = logging.getLogger(__name__)


def binomial_polynomial(x: int, k: int) -> Fraction:
    """
    ``x (x-1) .. (x-k+1) / k!`` for any integer ``x``, the polynomial extension of ``C(x, k)``
    """
    if k < 0:
        return Fraction(0)
    value = Fraction(1)
    for j in range(k):
        value = value * (x - j) / (j + 1)
    return value


def series_numerator(H: List[int], d: int) -> List[int]:
    """
    Coefficients of ``(1-t)^{d+1} * Σ H(n) t^n`` in degrees ``0..len(H)-1``
    """
    factor = [(-1) ** j * binomial(d + 1, j) for j in range(d + 2)]
    return polynomial_coefficients_product(factor, list(H))[:len(H)]


def predict_from_h(h: List[int], d: int, n: int) -> int:
    """
    ``H(n) = Σ h_k C(n-k+d, d)``
    """
    return sum(hk * binomial(n - k + d, d) for k, hk in enumerate(h))


def coefficients_from_h(h: List[int], up_to: int) -> List[Fraction]:
    """
    ``e_i = h^(i)(1)/i! = Σ_k C(k, i) h_k`` for ``i = 0..up_to``
    """
    return [Fraction(sum(binomial(k, i) * hk for k, hk in enumerate(h))) for i in range(up_to + 1)]


@dataclass(frozen=True)
class HilbertData:
    """
    Hilbert function data of a filtration

    Attributes:
        H (``list`` of ``int``): ``H(n) = ℓ(A/a_{n+1})`` for ``n = 0..N``
        h_vector (``list`` of ``int`` | ``None``): ``h_0..h_s``
        e (``list`` of ``Fraction`` | ``None``): ``e_0..e_max``
        postulation_index (``int`` | ``None``): Smallest ``n0`` with ``H(n) = P(n)`` on the computed range ``n >= n0``
        stabilization_window (``int``): Number of vanishing coefficients demanded
        dimension (``int``): ``d``
    """

    H: List[int]
    h_vector: Optional[List[int]] = None
    e: Optional[List[Fraction]] = None
    postulation_index: Optional[int] = None
    stabilization_window: int = 0
    dimension: int = 0

    def hilbert_polynomial(self, n: int) -> Fraction:
        """
        ``P(n) = Σ (-1)^i e_i C(n+d-i, d-i)``
        """
        if self.e is None or len(self.e) <= self.dimension:
            raise InputError('Hilbert coefficients e_0..e_d are not available')
        d = self.dimension
        return sum(((-1) ** i * self.e[i] * binomial_polynomial(n + d - i, d - i) for i in range(d + 1)),
                   Fraction(0))

    @property
    def multiplicity(self) -> int:
        return int(self.e[0]) if self.e else sum(self.h_vector)

    def to_dict(self) -> dict:
        return {
            'H': list(self.H),
            'h': None if self.h_vector is None else list(self.h_vector),
            'e': None if self.e is None else [rational_to_str(v) for v in self.e],
            'postulation': self.postulation_index,
            'window': self.stabilization_window,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _table(F: Filtration, N: int) -> List[int]:
    return [F.length(n + 1) for n in range(N + 1)]


def _certify(F: Filtration, config: AnalysisConfig) -> HilbertData:
    d = F.dimension
    w = config.hilbert_vanish_window
    N = d + 1 + w
    while N <= config.hilbert_max_terms:
        H = _table(F, N)
        c = series_numerator(H, d)
        s = max((k for k, v in enumerate(c) if v), default=-1)
        if s >= 0 and N - s >= w:
            h = c[:s + 1]
            predicted = predict_from_h(h, d, N + 1)
            actual = F.length(N + 2)
            if predicted == actual:
                logger.debug('%s: h-vector %s certified with N = %d', F, h, N)
                return HilbertData(H + [actual], h_vector=h, stabilization_window=w, dimension=d)
            logger.debug('%s: prediction %d for H(%d) failed, got %d', F, predicted, N + 1, actual)
        N += 1
    raise StabilizationNotReachedError('{}: h-vector not certified within {} terms'.format(
        F, config.hilbert_max_terms), config.hilbert_max_terms)


def _postulation_index(H: List[int], e: List[Fraction], d: int) -> int:
    data = HilbertData(H, e=e, dimension=d)
    n0 = len(H)
    for n in range(len(H) - 1, -1, -1):
        if data.hilbert_polynomial(n) != H[n]:
            break
        n0 = n
    return n0


def _binomial_fit(F: Filtration, H: List[int], n0: int, d: int) -> List[Fraction]:
    points = list(range(n0, n0 + d + 1))
    values = [H[n] if n < len(H) else F.length(n + 1) for n in points]
    M = Matrix([[(-1) ** i * Rational(*_pair(binomial_polynomial(n + d - i, d - i))) for i in range(d + 1)]
                for n in points])
    solution = M.LUsolve(Matrix(values))
    return [Fraction(int(v.p), int(v.q)) for v in solution]


def _pair(value: Fraction):
    return value.numerator, value.denominator


def hilbert_function_table(F: Filtration, N: Optional[int] = None,
                           config: Optional[AnalysisConfig] = None) -> HilbertData:
    """
    Tabulate ``H(n)`` for ``n = 0..N``

    Args:
        F (:class:`~blowup.filtration.Filtration`): Filtration with Artinian quotients
        N (``int``, *optional*): Last index; in auto mode (``None``) the table extends until the h-vector is
            certified
    """
    if N is not None:
        if N < 0:
            raise InputError('table length must be non-negative, got {}'.format(N))
        return HilbertData(_table(F, N), dimension=F.dimension)
    return h_vector(F, config)


def h_vector(F: Filtration, config: Optional[AnalysisConfig] = None) -> HilbertData:
    """
    Certified h-vector of ``F``, memoized on the filtration

    Raises:
        :class:`~blowup.errors.StabilizationNotReachedError` if no certificate is found within
        ``hilbert_max_terms`` terms
    """
    if F.hilbert is None:
        F.hilbert = _certify(F, config or F.config)
    return F.hilbert


def hilbert_coefficients(F: Filtration, up_to: Optional[int] = None,
                         config: Optional[AnalysisConfig] = None) -> HilbertData:
    """
    Hilbert coefficients ``e_0..e_up_to`` from the h-vector

    ``e_0..e_d`` are cross-checked against a direct fit of ``H`` on the binomial basis over the postulation range.

    Args:
        F (:class:`~blowup.filtration.Filtration`): Filtration
        up_to (``int``, *optional*): Last coefficient, by default the larger of ``d`` and ``coefficient_count - 1``

    Raises:
        :class:`~blowup.errors.ConsistencyError` if the fit disagrees or ``e_0`` is not positive
    """
    config = config or F.config
    data = h_vector(F, config)
    d = data.dimension
    if up_to is None:
        up_to = max(d, config.coefficient_count - 1)
    e = coefficients_from_h(data.h_vector, max(up_to, d))
    if e[0] <= 0:
        raise ConsistencyError('{}: multiplicity {} is not positive'.format(F, e[0]))
    n0 = _postulation_index(data.H, e, d)
    fitted = _binomial_fit(F, data.H, n0, d)
    if fitted != e[:d + 1]:
        raise ConsistencyError('{}: coefficients {} disagree with the binomial fit {}'.format(F, e[:d + 1], fitted))
    return replace(data, e=e[:up_to + 1], postulation_index=n0)


__all__ = [
    'binomial_polynomial', 'series_numerator', 'predict_from_h', 'coefficients_from_h', 'HilbertData',
    'hilbert_function_table', 'h_vector', 'hilbert_coefficients',
]
