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

import os
import time
from datetime import datetime
from fractions import Fraction
from math import comb
from typing import Iterable, List, Sequence, Union

"""
.. module:: utils
    :synopsis: Utility functions for pyblowup
"""


def get_real_elapsed_time() -> float:
    return time.perf_counter()


def rational_to_str(value: Union[int, Fraction]) -> str:
    """
    Serialize an exact rational as ``p/q`` (``p`` alone for integers)

    Args:
        value (``int`` | ``Fraction``): Value to serialize

    Returns:
        Resulting ``str`` object
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def str_to_rational(value: Union[str, int]) -> Fraction:
    return Fraction(value)


def binomial(n: int, k: int) -> int:
    """
    Binomial coefficient extended by zero outside ``0 <= k <= n``
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def derive_seed(seed: int, index: int) -> int:
    """
    Seed of the ``index``-th task of a run seeded with ``seed``

    Args:
        seed (``int``): Run seed
        index (``int``): Task index

    Returns:
        ``seed ^ index``
    """
    return seed ^ index


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """
    ``True`` if ``a >= b`` componentwise, i.e. the monomial with exponent ``b`` divides the one with exponent ``a``
    """
    return all(x >= y for x, y in zip(a, b))


def add_exponents(a: Sequence[int], b: Sequence[int]) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def max_exponents(vectors: Iterable[Sequence[int]]) -> tuple:
    vectors = list(vectors)
    return tuple(max(column) for column in zip(*vectors))


def polynomial_coefficients_product(a: List[int], b: List[int]) -> List[int]:
    """
    Product of two integer polynomials given by coefficient lists, lowest degree first
    """
    if not a or not b:
        return []
    result = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                result[i + j] += x * y
    return result


def get_log_file_path(logs_dir: str, name: str) -> str:
    os.makedirs(logs_dir, exist_ok=True)
    now = datetime.now()
    fname = '{}_{}_{}_{}_{}_{}_{}.txt'.format(now.year, now.month, now.day, now.hour, now.minute, now.second, name)
    return os.path.abspath(os.path.join(logs_dir, fname))
