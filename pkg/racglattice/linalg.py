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
"""Exact linear algebra over the rationals

Every scalar is a :class:`fractions.Fraction`, no floating point value is
ever involved here. Vectors are tuples of fractions and matrices are
instances of the immutable :class:`Matrix`.

"""

import math
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import attr

from racglattice.errors import ContractViolation


Scalar = Fraction
Vector = Tuple[Fraction, ...]
Number = Union[int, Fraction, str]


def scalar(value: Number) -> Fraction:
    """Converts an integer, a fraction or a decimal string to a Fraction"""
    if isinstance(value, float):
        raise ContractViolation(f'floating point value {value} is not exact')
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise ContractViolation(
            f'cannot convert {value!r} to an exact scalar') from None


def vector(values: Iterable[Number]) -> Vector:
    """Returns `values` as a tuple of fractions"""
    return tuple(scalar(value) for value in values)


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    """Euclidean inner product of two vectors"""
    if len(x) != len(y):
        raise ContractViolation(
            f'vectors of length {len(x)} and {len(y)} are not compatible')
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def unit(dim: int, index: int) -> Vector:
    """Returns the standard basis vector e_index of dimension `dim`

    The `index` is 1-based, like all the generator indices of racglattice.

    """
    if not 1 <= index <= dim:
        raise ContractViolation(f'index {index} out of range 1..{dim}')
    return tuple(Fraction(int(i == index - 1)) for i in range(dim))


def scale(factor: Number, x: Sequence[Fraction]) -> Vector:
    factor = scalar(factor)
    return tuple(factor * a for a in x)


def add(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    if len(x) != len(y):
        raise ContractViolation(
            f'vectors of length {len(x)} and {len(y)} are not compatible')
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    return add(x, scale(-1, y))


def is_zero(x: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in x)


def is_integral_vector(x: Sequence[Fraction]) -> bool:
    return all(Fraction(a).denominator == 1 for a in x)


def primitive(x: Sequence[Number]) -> Vector:
    """Normalizes a nonzero rational vector to a primitive integer vector

    The result is the unique integer multiple of `x` whose entries have no
    common divisor and whose first nonzero entry is positive.

    Raises
    ------
    ContractViolation if `x` is the zero vector

    """
    x = vector(x)
    if is_zero(x):
        raise ContractViolation('the zero vector has no primitive form')

    lcm = 1
    for a in x:
        lcm = lcm * a.denominator // math.gcd(lcm, a.denominator)
    integers = [int(a * lcm) for a in x]

    gcd = 0
    for a in integers:
        gcd = math.gcd(gcd, a)
    sign = 1 if next(a for a in integers if a != 0) > 0 else -1
    return tuple(Fraction(sign * a // gcd) for a in integers)


def is_multiple(x: Sequence[Fraction], y: Sequence[Fraction]) -> bool:
    """True when the nonzero vectors `x` and `y` span the same line"""
    return primitive(x) == primitive(y)


class Matrix:
    """Immutable dense matrix with exact rational entries

    Matrices act on column vectors: ``A @ x`` is the image of the vector `x`
    and ``A @ B`` is the composition "B then A".

    Parameters
    ----------
    rows (iterable of iterables) : The matrix entries, row by row. Entries
        can be integers, fractions or decimal strings such as '-3/2'.

    Raises
    ------
    ContractViolation if the rows are empty or of different lengths

    """
    __slots__ = ('_entries', '_nrows', '_ncols', '_hash')

    def __init__(self, rows: Iterable[Iterable[Number]]):
        entries = tuple(vector(row) for row in rows)
        if not entries or not entries[0]:
            raise ContractViolation('a matrix must have at least one entry')
        ncols = len(entries[0])
        for index, row in enumerate(entries):
            if len(row) != ncols:
                raise ContractViolation(
                    f'row {index + 1} has {len(row)} entries, '
                    f'expected {ncols}')

        self._entries = entries
        self._nrows = len(entries)
        self._ncols = ncols
        self._hash = None

    @classmethod
    def identity(cls, dim: int) -> 'Matrix':
        return cls(
            [[int(i == j) for j in range(dim)] for i in range(dim)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> 'Matrix':
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def diagonal(cls, values: Sequence[Number]) -> 'Matrix':
        return cls(
            [[values[i] if i == j else 0 for j in range(len(values))]
             for i in range(len(values))])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Number]]) -> 'Matrix':
        if not columns:
            raise ContractViolation('a matrix must have at least one column')
        return cls(zip(*columns))

    @property
    def nrows(self) -> int:
        return self._nrows

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> Tuple[int, int]:
        return self._nrows, self._ncols

    @property
    def is_square(self) -> bool:
        return self._nrows == self._ncols

    @property
    def T(self) -> 'Matrix':  # pylint: disable=invalid-name
        """The transposed matrix"""
        return Matrix(zip(*self._entries))

    def rows(self) -> Tuple[Vector, ...]:
        return self._entries

    def row(self, index: int) -> Vector:
        """Returns the row `index`, counted from 1"""
        self._check_index(index, self._nrows)
        return self._entries[index - 1]

    def column(self, index: int) -> Vector:
        """Returns the column `index`, counted from 1"""
        self._check_index(index, self._ncols)
        return tuple(row[index - 1] for row in self._entries)

    def columns(self) -> Tuple[Vector, ...]:
        return tuple(zip(*self._entries))

    def entry(self, i: int, j: int) -> Fraction:
        """Returns the entry (i, j), counted from 1"""
        self._check_index(i, self._nrows)
        self._check_index(j, self._ncols)
        return self._entries[i - 1][j - 1]

    def tolist(self) -> List[List[Fraction]]:
        return [list(row) for row in self._entries]

    def replace(self, i: int, j: int, value: Number) -> 'Matrix':
        """Returns a copy of the matrix with entry (i, j) set to `value`"""
        rows = self.tolist()
        self._check_index(i, self._nrows)
        self._check_index(j, self._ncols)
        rows[i - 1][j - 1] = scalar(value)
        return Matrix(rows)

    def submatrix(self, nrows: int, ncols: int) -> 'Matrix':
        """Returns the upper left block of size `nrows` x `ncols`"""
        return Matrix(row[:ncols] for row in self._entries[:nrows])

    @property
    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self._entries[i][j] == self._entries[j][i]
            for i in range(self._nrows) for j in range(i + 1, self._ncols))

    @property
    def is_integral(self) -> bool:
        return all(is_integral_vector(row) for row in self._entries)

    @property
    def is_identity(self) -> bool:
        return self.is_square and self == Matrix.identity(self._nrows)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        # 0-based access for internal loops
        i, j = index
        return self._entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._entries)
        return self._hash

    def __repr__(self) -> str:
        rows = ', '.join(
            '[' + ', '.join(str(a) for a in row) + ']'
            for row in self._entries)
        return f'Matrix([{rows}])'

    def __neg__(self) -> 'Matrix':
        return Matrix((-a for a in row) for row in self._entries)

    def __add__(self, other: 'Matrix') -> 'Matrix':
        self._check_same_shape(other)
        return Matrix(
            (a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self._entries, other._entries))

    def __sub__(self, other: 'Matrix') -> 'Matrix':
        self._check_same_shape(other)
        return Matrix(
            (a - b for a, b in zip(r1, r2))
            for r1, r2 in zip(self._entries, other._entries))

    def __mul__(self, factor: Number) -> 'Matrix':
        factor = scalar(factor)
        return Matrix((factor * a for a in row) for row in self._entries)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self._ncols != other._nrows:
                raise ContractViolation(
                    f'cannot multiply {self.shape} by {other.shape} matrices')
            columns = other.columns()
            return Matrix(
                [sum((a * b for a, b in zip(row, col)), Fraction(0))
                 for col in columns]
                for row in self._entries)

        other = vector(other)
        if len(other) != self._ncols:
            raise ContractViolation(
                f'cannot multiply {self.shape} matrix by a vector of '
                f'length {len(other)}')
        return tuple(
            sum((a * b for a, b in zip(row, other)), Fraction(0))
            for row in self._entries)

    def __pow__(self, exponent: int) -> 'Matrix':
        if not self.is_square:
            raise ContractViolation(f'cannot power a {self.shape} matrix')
        if exponent < 0:
            return self.inverse() ** (-exponent)

        result = Matrix.identity(self._nrows)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def determinant(self) -> Fraction:
        """Exact determinant by Gaussian elimination"""
        if not self.is_square:
            raise ContractViolation(
                f'determinant of a non-square {self.shape} matrix')
        work = self.tolist()
        size = self._nrows
        det = Fraction(1)
        for col in range(size):
            pivot = next(
                (r for r in range(col, size) if work[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            det *= work[col][col]
            for r in range(col + 1, size):
                factor = work[r][col] / work[col][col]
                if factor:
                    work[r] = [
                        a - factor * b for a, b in zip(work[r], work[col])]
        return det

    def inverse(self) -> 'Matrix':
        """Exact inverse by Gauss-Jordan elimination

        Raises
        ------
        ContractViolation if the matrix is not square or is singular

        """
        if not self.is_square:
            raise ContractViolation(
                f'inverse of a non-square {self.shape} matrix')
        size = self._nrows
        augmented = Matrix(
            list(row) + [int(i == j) for j in range(size)]
            for i, row in enumerate(self._entries))
        reduced, pivots = _reduced_row_echelon(augmented)
        if pivots[:size] != list(range(size)):
            raise ContractViolation('the matrix is singular')
        return Matrix(row[size:] for row in reduced)

    @staticmethod
    def _check_index(index: int, bound: int):
        if not 1 <= index <= bound:
            raise ContractViolation(f'index {index} out of range 1..{bound}')

    def _check_same_shape(self, other: 'Matrix'):
        if self.shape != other.shape:
            raise ContractViolation(
                f'matrices of shapes {self.shape} and {other.shape} '
                f'are not compatible')


@attr.s(frozen=True, auto_attribs=True)
class Signature:
    """Inertia of a symmetric matrix: counts of positive, negative and zero
    eigenvalues"""
    positive: int
    negative: int
    zero: int

    def astuple(self) -> Tuple[int, int, int]:
        return self.positive, self.negative, self.zero

    def __str__(self):
        return f'({self.positive}, {self.negative}, {self.zero})'


def signature(matrix: Matrix) -> Signature:
    """Computes the signature of a symmetric matrix

    Uses symmetric Gaussian elimination by congruence. When no nonzero
    diagonal pivot is left, a basis vector e_i is replaced by e_i + e_j for a
    nonzero off-diagonal entry (i, j), which creates the pivot 2 a_ij.

    Raises
    ------
    ContractViolation if `matrix` is not square and symmetric

    """
    if not matrix.is_symmetric:
        raise ContractViolation(
            f'signature of a non-symmetric {matrix.shape} matrix')

    work = matrix.tolist()
    active = list(range(matrix.nrows))
    positive = negative = 0
    while active:
        pivot = next((i for i in active if work[i][i] != 0), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in active for j in active
                 if i < j and work[i][j] != 0), None)
            if pair is None:
                # the remaining block is zero
                break
            i, j = pair
            for k in active:
                work[i][k] += work[j][k]
            for k in active:
                work[k][i] += work[k][j]
            pivot = i

        diag = work[pivot][pivot]
        if diag > 0:
            positive += 1
        else:
            negative += 1

        active = [k for k in active if k != pivot]
        for r in active:
            factor = work[r][pivot] / diag
            if factor:
                for c in active:
                    work[r][c] -= factor * work[pivot][c]

    return Signature(
        positive, negative, matrix.nrows - positive - negative)


def _reduced_row_echelon(matrix: Matrix) -> Tuple[List[List[Fraction]], List[int]]:
    """Returns the reduced row echelon form of `matrix` and its pivot columns

    Pivot columns are 0-based.

    """
    work = matrix.tolist()
    nrows, ncols = matrix.shape
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        pivot = next(
            (r for r in range(row, nrows) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        lead = work[row][col]
        work[row] = [a / lead for a in work[row]]
        for r in range(nrows):
            if r != row and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[row])]
        pivots.append(col)
        row += 1
    return work, pivots


def rank_and_kernel(matrix: Matrix) -> Tuple[int, Tuple[Vector, ...]]:
    """Returns the rank of `matrix` and a basis of its right kernel

    The kernel basis is read from the reduced row echelon form, one vector per
    free column in increasing column order. Each vector is normalized with
    :func:`primitive`, so the basis is canonical.

    """
    reduced, pivots = _reduced_row_echelon(matrix)
    free = [c for c in range(matrix.ncols) if c not in pivots]

    kernel = []
    for column in free:
        solution = [Fraction(0)] * matrix.ncols
        solution[column] = Fraction(1)
        for index, pivot in enumerate(pivots):
            solution[pivot] = -reduced[index][column]
        kernel.append(primitive(solution))
    return len(pivots), tuple(kernel)


def is_unipotent(matrix: Matrix) -> bool:
    """True when (matrix - I)^d = 0 with d the size of the square `matrix`"""
    if not matrix.is_square:
        raise ContractViolation(
            f'unipotency of a non-square {matrix.shape} matrix')
    nilpotent = matrix - Matrix.identity(matrix.nrows)
    return (nilpotent ** matrix.nrows) == Matrix.zeros(*matrix.shape)


def bilinear(form: Matrix, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    """Returns x^T form y"""
    return dot(x, form @ y)
