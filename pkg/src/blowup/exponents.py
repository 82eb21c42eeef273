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
.. module:: exponents
    :synopsis: Antichains of exponent vectors and staircase counting

Shared by the Gröbner layer (leading-term ideals) and the monomial toolkit.
"""

from typing import Iterable, List, Optional, Sequence, Tuple

from sympy.polys.orderings import grevlex

from blowup.errors import NotArtinianError
from blowup.utils import dominates

Vector = Tuple[int, ...]


def canonical_order(vectors: Iterable[Sequence[int]]) -> Tuple[Vector, ...]:
    """
    Sort exponent vectors descending under grevlex
    """
    return tuple(sorted((tuple(v) for v in vectors), key=grevlex, reverse=True))


def minimalize(vectors: Iterable[Sequence[int]]) -> Tuple[Vector, ...]:
    """
    Divisibility-minimal antichain of ``vectors``, canonically ordered
    """
    kept: List[Vector] = []
    for v in sorted(set(tuple(v) for v in vectors), key=lambda u: (sum(u), u)):
        if not any(dominates(v, u) for u in kept):
            kept.append(v)
    return canonical_order(kept)


def is_dominated(v: Sequence[int], generators: Iterable[Sequence[int]]) -> bool:
    return any(dominates(v, g) for g in generators)


def pure_power_bounds(generators: Sequence[Sequence[int]], dimension: int) -> Optional[Vector]:
    """
    Smallest pure power exponent per variable, ``None`` if some variable has none
    """
    bounds = []
    for i in range(dimension):
        exponents = [g[i] for g in generators if all(e == 0 for j, e in enumerate(g) if j != i)]
        if not exponents:
            return None
        bounds.append(min(exponents))
    return tuple(bounds)


def _count(generators: Tuple[Vector, ...]) -> int:
    if any(not any(g) for g in generators):
        return 0
    k = len(generators[0])
    if k == 1:
        return min(g[0] for g in generators)
    bound = min(g[-1] for g in generators if not any(g[:-1]))
    total = 0
    previous, previous_count = None, 0
    for j in range(bound):
        # (x'·x_k^j not in I) iff no generator with g_k <= j divides x'
        sliced = minimalize(g[:-1] for g in generators if g[-1] <= j)
        if sliced != previous:
            previous, previous_count = sliced, _count(sliced)
        total += previous_count
    return total


def staircase_count(generators: Sequence[Sequence[int]], dimension: int) -> int:
    """
    Number of exponent vectors dominated by no generator

    Raises:
        :class:`~blowup.errors.NotArtinianError` if some variable has no pure power among the generators
    """
    generators = minimalize(generators)
    if any(not any(g) for g in generators):
        return 0
    if pure_power_bounds(generators, dimension) is None:
        raise NotArtinianError('no pure power of every variable among {}'.format(list(generators)))
    return _count(generators)


def standard_monomials(generators: Sequence[Sequence[int]], dimension: int) -> List[Vector]:
    """
    Enumerate the exponent vectors counted by :func:`staircase_count`
    """
    bounds = pure_power_bounds(generators, dimension)
    if bounds is None:
        raise NotArtinianError('no pure power of every variable among {}'.format(list(generators)))
    result: List[Vector] = []

    def walk(prefix: List[int]):
        if len(prefix) == dimension:
            result.append(tuple(prefix))
            return
        i = len(prefix)
        for e in range(bounds[i]):
            candidate = prefix + [e]
            # prune: the partial vector padded with zeros is already in the ideal
            if is_dominated(candidate + [0] * (dimension - i - 1), generators):
                break
            walk(candidate)

    walk([])
    return [v for v in result if not is_dominated(v, generators)]


__all__ = ['canonical_order', 'minimalize', 'is_dominated', 'pure_power_bounds', 'staircase_count',
           'standard_monomials']
