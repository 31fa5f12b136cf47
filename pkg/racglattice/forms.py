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
"""Integral quadratic forms of the polygon lattices

Q_m is the m x m symmetric matrix with ones on the diagonal, zeros on the
entries next to the diagonal and -1 everywhere else. Q'_m is Q_m with the
corner entries (1, m) and (m, 1) set to zero. Indices of basis vectors are
counted from 1.

"""

from typing import Dict, Iterable, Optional, Sequence, Tuple

import attr

from racglattice.errors import (
    CertificateFailure, ContractViolation, DomainError, InternalError)
from racglattice.linalg import (
    Matrix, Signature, Vector, bilinear, primitive, rank_and_kernel,
    signature, unit, vector)


class QuadraticForm:
    """An integral symmetric bilinear form on Z^dim

    The signature and the kernel are computed once at construction.

    Parameters
    ----------
    matrix (Matrix) : The Gram matrix of the form on the standard basis

    name (str) : A display name such as 'Q_4'

    Raises
    ------
    ContractViolation if `matrix` is not symmetric with integer entries

    """
    def __init__(self, matrix: Matrix, name: str = ''):
        if not matrix.is_symmetric:
            raise ContractViolation(
                f'a quadratic form needs a symmetric matrix, got {matrix}')
        if not matrix.is_integral:
            raise ContractViolation(
                f'a quadratic form needs integer entries, got {matrix}')
        self._matrix = matrix
        self._name = name or f'form of dimension {matrix.nrows}'
        self._signature = signature(matrix)
        self._rank, self._kernel = rank_and_kernel(matrix)

    @property
    def matrix(self) -> Matrix:
        return self._matrix

    @property
    def name(self) -> str:
        return self._name

    @property
    def dim(self) -> int:
        return self._matrix.nrows

    @property
    def signature(self) -> Signature:
        return self._signature

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def kernel(self) -> Tuple[Vector, ...]:
        """Canonical basis of the radical of the form"""
        return self._kernel

    @property
    def is_lorentzian(self) -> bool:
        """True when the signature is (dim - 1, 1, 0)"""
        return self._signature.astuple() == (self.dim - 1, 1, 0)

    def entry(self, i: int, j: int):
        return self._matrix.entry(i, j)

    def bilinear(self, x: Sequence, y: Sequence):
        return bilinear(self._matrix, vector(x), vector(y))

    def norm(self, x: Sequence):
        return self.bilinear(x, x)

    def dual(self, x: Sequence) -> Vector:
        """Returns Q x, the coefficients of the linear form B(x, .)"""
        return self._matrix @ vector(x)

    def preserved_by(self, matrix: Matrix) -> bool:
        """True when matrix^T Q matrix = Q"""
        if matrix.shape != self._matrix.shape:
            raise ContractViolation(
                f'a {matrix.shape} matrix cannot act on {self._name}')
        return matrix.T @ self._matrix @ matrix == self._matrix

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuadraticForm):
            return NotImplemented
        return self._matrix == other._matrix

    def __hash__(self):
        return hash(self._matrix)

    def __repr__(self):
        return f'QuadraticForm({self._name})'


def _check_dimension(m: int):
    if isinstance(m, bool) or not isinstance(m, int) or m < 3:
        raise DomainError(f'the dimension must be an integer >= 3, it is {m}')


def build_Q(m: int) -> QuadraticForm:
    """Returns the form Q_m

    Raises
    ------
    DomainError if m < 3

    """
    _check_dimension(m)
    return QuadraticForm(
        Matrix(
            [[1 if i == j else 0 if abs(i - j) == 1 else -1
              for j in range(m)] for i in range(m)]),
        name=f'Q_{m}')


def build_Q_prime(m: int) -> QuadraticForm:
    """Returns the form Q'_m, the form Q_m with a zero in both corners

    Raises
    ------
    DomainError if m < 5, where a corner entry lies next to the diagonal

    """
    _check_dimension(m)
    if m < 5:
        raise DomainError(f"Q'_m needs m >= 5, it is {m}")
    matrix = build_Q(m).matrix.replace(1, m, 0).replace(m, 1, 0)
    return QuadraticForm(matrix, name=f"Q'_{m}")


def all_ones(dim: int) -> Vector:
    return vector([1] * dim)


def alternating_signs(dim: int) -> Vector:
    """Returns (1, -1, 1, ...) of length `dim`"""
    return vector([(-1) ** i for i in range(dim)])


def all_ones_value(n: int, prime: bool = False) -> int:
    """Computes v^T Q_{n+1} v exactly, with v the all-ones vector

    The value is checked against -n^2 + 2n + 1 for Q_{n+1}, and against
    -n^2 + 2n + 3 for Q'_{n+1} when `prime` is True. Both are negative for
    n >= 3.

    Raises
    ------
    DomainError if n < 2, or n < 4 with `prime`

    InternalError if the computed value differs from the closed form

    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise DomainError(f'n must be an integer >= 2, it is {n}')
    form = (build_Q_prime if prime else build_Q)(n + 1)
    value = form.norm(all_ones(n + 1))

    expected = -n * n + 2 * n + (3 if prime else 1)
    if value != expected:
        raise InternalError(
            f'the all-ones vector has norm {value} for {form.name}, '
            f'expected {expected}')
    return int(value)


def _check_index(form: QuadraticForm, index: int):
    if not 1 <= index <= form.dim:
        raise ContractViolation(
            f'index {index} out of range 1..{form.dim} for {form.name}')


def tangency_point(form: QuadraticForm, i: int, j: int) -> Vector:
    """Returns the isotropic vector where the hyperplanes e_i and e_j meet

    The point is the primitive integer generator of the radical of the form
    restricted to the Q-orthogonal of span(e_i, e_j). This radical is a line
    of isotropic vectors exactly when the hyperplanes are tangent.

    Raises
    ------
    CertificateFailure if the pair is not tangent or the radical is not a
    single isotropic line

    """
    _check_index(form, i)
    _check_index(form, j)
    if i == j or form.entry(i, j) != -1:
        raise CertificateFailure(
            f'hyperplanes {i} and {j} of {form.name} are not tangent')
    if not form.is_lorentzian:
        raise CertificateFailure(
            f'{form.name} has signature {form.signature}, tangency points '
            f'need a Lorentzian form')

    _, orthogonal = rank_and_kernel(
        Matrix([form.dual(unit(form.dim, i)), form.dual(unit(form.dim, j))]))
    basis = Matrix.from_columns(orthogonal)
    restricted = basis.T @ form.matrix @ basis

    if signature(restricted).negative != 0:
        raise CertificateFailure(
            f'the orthogonal of e_{i}, e_{j} in {form.name} is not '
            f'semi-definite')
    _, radical = rank_and_kernel(restricted)
    if len(radical) != 1:
        raise CertificateFailure(
            f'the orthogonal of e_{i}, e_{j} in {form.name} has a radical '
            f'of dimension {len(radical)}')

    point = primitive(basis @ radical[0])
    if form.norm(point) != 0:  # pragma: nocover
        raise CertificateFailure(f'tangency point {point} is not isotropic')
    return point


def common_orthogonal(form: QuadraticForm, indices: Iterable[int]) -> Vector:
    """Returns the primitive normal orthogonal to all the e_i, i in `indices`

    Raises
    ------
    CertificateFailure if the orthogonal is not a line or is not spacelike

    """
    indices = sorted(set(indices))
    if not indices:
        raise ContractViolation('common_orthogonal needs at least one index')
    for index in indices:
        _check_index(form, index)

    _, solutions = rank_and_kernel(
        Matrix([form.dual(unit(form.dim, i)) for i in indices]))
    if len(solutions) != 1:
        raise CertificateFailure(
            f'the common orthogonal of {indices} in {form.name} has '
            f'dimension {len(solutions)}')

    normal = solutions[0]
    if form.norm(normal) <= 0:
        raise CertificateFailure(
            f'the common orthogonal {normal} of {indices} in {form.name} '
            f'is not spacelike')
    return normal


@attr.s(frozen=True, auto_attribs=True)
class DistinguishedVectors:
    """Vectors attached to a polygon form

    all_ones is timelike for the polygon forms, alt_signs is the radical
    of Q'_m for even m, tangency holds the tangency point of each tangent
    pair (i, j), i < j.

    """
    all_ones: Vector
    alt_signs: Vector
    tangency: Dict[Tuple[int, int], Vector]
    radical: Optional[Vector] = None


def distinguished_vectors(form: QuadraticForm) -> DistinguishedVectors:
    tangency = {}
    if form.is_lorentzian:
        tangency = {
            (i, j): tangency_point(form, i, j)
            for i in range(1, form.dim + 1)
            for j in range(i + 1, form.dim + 1)
            if form.entry(i, j) == -1}
    return DistinguishedVectors(
        all_ones=all_ones(form.dim),
        alt_signs=alternating_signs(form.dim),
        tangency=tangency,
        radical=form.kernel[0] if len(form.kernel) == 1 else None)
