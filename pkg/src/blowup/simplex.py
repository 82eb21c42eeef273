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
from fractions import Fraction
from typing import List, Optional, Sequence

logger = logging.getLogger(__name__)


class FeasibilityTableau:
    """
    First phase of the simplex method in exact rational arithmetic

    Decides whether ``A x = b, x >= 0`` has a solution. The tableau is kept in dictionary form: row ``i`` reads
    ``basic_i = b_i - sum_j A_ij * nonbasic_j``. Initially every row has its own artificial basic variable and the
    cost maximizes minus their sum; Bland's rule guarantees termination.

    Args:
        A (``list`` of ``list``): Constraint matrix, ``m`` rows of ``n`` rationals
        b (``list``): Right hand side, ``m`` rationals (rows with a negative entry are negated)
    """

    def __init__(self, A: Sequence[Sequence], b: Sequence):
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        self.A: List[List[Fraction]] = []
        self.b: List[Fraction] = []
        for row, rhs in zip(A, b):
            sign = -1 if rhs < 0 else 1
            self.A.append([Fraction(sign * a) for a in row])
            self.b.append(Fraction(sign * rhs))
        self.c = [Fraction(0)] * self.n
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))
        self.pivots = 0

    def pivot(self, i: int, j: int):
        piv = self.A[i][j]
        delta = self.c[j] / piv
        for l in range(self.n):
            self.c[l] -= delta * self.A[i][l]
        self.c[j] = -delta
        for l in range(self.n):
            self.A[i][l] = 1 / piv if l == j else self.A[i][l] / piv
        self.b[i] /= piv
        for k in range(self.m):
            if k != i:
                f = self.A[k][j]
                if f:
                    for l in range(self.n):
                        self.A[k][l] = -f / piv if l == j else self.A[k][l] - f * self.A[i][l]
                    self.b[k] -= f * self.b[i]
        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_primal_step(self) -> str:
        try:
            _, j = min((self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0)
        except ValueError:
            return 'optimal'
        try:
            _, _, i = min((self.b[i] / self.A[i][j], self.b_vars[i], i)
                          for i in range(self.m) if self.A[i][j] > 0)
        except ValueError:
            return 'unbounded'
        self.pivot(i, j)
        return 'go_on'

    def first_phase_cost(self):
        for j in range(self.n):
            self.c[j] = sum((self.A[i][j] for i in range(self.m)), Fraction(0))

    def solve(self) -> Optional[List[Fraction]]:
        """
        Run phase one

        Returns:
            A feasible ``x`` as a ``list`` of ``Fraction``, or ``None`` if the system is infeasible
        """
        self.first_phase_cost()
        while self.bland_primal_step() == 'go_on':
            pass
        # phase one is bounded above by zero, so 'unbounded' never happens
        if any(v >= self.n and self.b[i] for i, v in enumerate(self.b_vars)):
            logger.debug('infeasible after %d pivots', self.pivots)
            return None
        x = [Fraction(0)] * self.n
        for i, v in enumerate(self.b_vars):
            if v < self.n:
                x[v] = self.b[i]
        return x


def convex_combination_below(point: Sequence[int], vertices: Sequence[Sequence[int]],
                             total: int = 1) -> Optional[List[Fraction]]:
    """
    Weights ``lambda_j >= 0`` with ``sum(lambda) == total`` and ``sum(lambda_j * vertices[j]) <= point``

    Returns:
        The weights, or ``None`` if there are none
    """
    d = len(point)
    k = len(vertices)
    # columns: lambda_1..lambda_k, then one surplus variable per coordinate
    A = []
    for i in range(d):
        row = [vertices[j][i] for j in range(k)] + [1 if l == i else 0 for l in range(d)]
        A.append(row)
    A.append([1] * k + [0] * d)
    b = list(point) + [total]
    x = FeasibilityTableau(A, b).solve()
    return None if x is None else x[:k]


__all__ = ['FeasibilityTableau', 'convex_combination_below']
