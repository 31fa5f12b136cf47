# Copyright 2026 The racglattice developers
#
# This file is part of racglattice: you can redistribute it and/or
# modify it under the terms of the GNU General Public License as
# published by the Free Software Foundation, either version 3 of the
# License, or (at your option) any later version.
#
# racglattice is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with racglattice. If not, see <http://www.gnu.org/licenses/>.
"""Projection of the degenerate odd case onto O(Q_n)

For odd n, Q'_{n+1} has the radical spanned by u = (1, -1, 1, ..., -1). An
isometry fixing u acts on the quotient by u, which is identified with R^n
through the first n coordinates, where the induced form is Q_n.

"""

from typing import Sequence

from racglattice.errors import ContractViolation, DomainError
from racglattice.forms import alternating_signs, build_Q_prime
from racglattice.linalg import Matrix, Vector, vector


def check_odd(n: int):
    if isinstance(n, bool) or not isinstance(n, int) or n < 5 or n % 2 == 0:
        raise DomainError(f'the projection needs an odd n >= 5, it is {n}')


def project_vector(n: int, x: Sequence) -> Vector:
    """Returns the image of x in R^n, x[:n] + x[n+1] u[:n]"""
    check_odd(n)
    x = vector(x)
    if len(x) != n + 1:
        raise ContractViolation(f'{x} is not a vector of dimension {n + 1}')
    u = alternating_signs(n + 1)
    return tuple(x[i] + x[n] * u[i] for i in range(n))


def project_pi(n: int, matrix: Matrix) -> Matrix:
    """Projects an isometry of Q'_{n+1} fixing u to an isometry of Q_n

    Adds a_{n+1,j} u to the column j for j <= n, then deletes the last row
    and the last column.

    Raises
    ------
    DomainError if n is not odd >= 5

    ContractViolation if `matrix` does not preserve Q'_{n+1} or does not
    fix u

    """
    check_odd(n)
    form = build_Q_prime(n + 1)
    if matrix.shape != (n + 1, n + 1):
        raise ContractViolation(
            f'expected a {n + 1}x{n + 1} matrix, got {matrix.shape}')
    u = alternating_signs(n + 1)
    if not form.preserved_by(matrix):
        raise ContractViolation(f'the matrix does not preserve {form.name}')
    if matrix @ u != u:
        raise ContractViolation(f'the matrix does not fix u = {u}')

    return Matrix(
        [matrix[i, j] + matrix[n, j] * u[i] for j in range(n)]
        for i in range(n))
