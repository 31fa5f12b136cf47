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
"""Exact geometry of a Lorentzian lattice

Sheet preservation, unipotent transvections attached to an isotropic vector,
and the Gram matrix certificates of right-angled polygons.

"""

import collections
import itertools
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

import attr

from racglattice.coxeter import is_connected
from racglattice.errors import (
    CertificateFailure, ContractViolation, DomainError, InternalError)
from racglattice.forms import QuadraticForm, tangency_point
from racglattice.linalg import (
    Matrix, Vector, add, is_integral_vector, is_multiple, is_zero, primitive,
    rank_and_kernel, scale, sub, unit, vector)


def preserves_sheets(
        matrix: Matrix, form: QuadraticForm, x0: Sequence) -> bool:
    """True when `matrix` maps the timelike `x0` to the same sheet

    Raises
    ------
    ContractViolation if `x0` is not timelike or `matrix` does not preserve
    the form

    """
    x0 = vector(x0)
    if form.norm(x0) >= 0:
        raise ContractViolation(f'{x0} is not timelike for {form.name}')
    if not form.preserved_by(matrix):
        raise ContractViolation(f'the matrix does not preserve {form.name}')
    return form.bilinear(x0, matrix @ x0) < 0


@attr.s(frozen=True, auto_attribs=True)
class Transvection:
    """The unipotent isometry E(p, v) fixing the isotropic vector p

    E(p, v) maps x to x + B(x,p) v - B(x,v) p - B(v,v)/2 B(x,p) p.

    """
    p: Vector
    v: Vector
    matrix: Matrix

    def power(self, form: QuadraticForm, k: int) -> 'Transvection':
        """Returns E(p, v)^k = E(p, k v)"""
        return transvection(form, self.p, scale(k, self.v))

    @property
    def inverse(self) -> Matrix:
        """E(p, v)^-1 = E(p, -v), obtained exactly"""
        return self.matrix.inverse()


def transvection_matrix(form: QuadraticForm, p: Vector, v: Vector) -> Matrix:
    qp, qv = form.dual(p), form.dual(v)
    half = form.norm(v) / 2
    dim = form.dim
    return Matrix(
        [int(i == j) + v[i] * qp[j] - p[i] * qv[j] - half * p[i] * qp[j]
         for j in range(dim)]
        for i in range(dim))


def transvection(form: QuadraticForm, p: Sequence, v: Sequence) -> Transvection:
    """Builds the transvection E(p, v)

    Raises
    ------
    DomainError if p is zero or not isotropic, if v is not orthogonal to p,
    if p or v are not integral or if B(v, v) is odd

    InternalError if the resulting matrix is not integral

    """
    p, v = vector(p), vector(v)
    if len(p) != form.dim or len(v) != form.dim:
        raise DomainError(f'p and v must have dimension {form.dim}')
    if is_zero(p):
        raise DomainError('the transvection needs a nonzero vector p')
    if not (is_integral_vector(p) and is_integral_vector(v)):
        raise DomainError('p and v must be integral')
    if form.norm(p) != 0:
        raise DomainError(f'p = {p} is not isotropic')
    if form.bilinear(p, v) != 0:
        raise DomainError(f'v = {v} is not orthogonal to p = {p}')
    if form.norm(v) % 2 != 0:
        raise DomainError(
            f'v = {v} has odd norm {form.norm(v)}, scale it by 2')

    matrix = transvection_matrix(form, p, v)
    if not matrix.is_integral:  # pragma: nocover
        raise InternalError(f'E({p}, {v}) is not integral')
    return Transvection(p, v, matrix)


def _coefficients(size: int, bound: int):
    """Nonzero integer vectors of `size` entries within [-bound, bound]

    Sorted by increasing largest entry, then lexicographically.

    """
    for height in range(1, bound + 1):
        for coefficients in itertools.product(
                range(-height, height + 1), repeat=size):
            if max(abs(c) for c in coefficients) == height:
                yield coefficients


def translation_search(
        form: QuadraticForm, i: int, j: int,
        must_fix: Iterable[int] = (),
        must_move: Iterable[Sequence] = ()) -> Transvection:
    """Finds a translation fixing the tangency point of the pair (i, j)

    Solves exactly for an integer v orthogonal to p = tangency_point(i, j)
    and to every e_k, k in `must_fix`, with B(v, u) != 0 for u in
    `must_move` and v not a multiple of p. The candidates are the kernel
    basis vectors in order, their pairwise sums and differences, then every
    integer combination of the basis by increasing coefficients. v is
    doubled when its norm is odd.

    Each constraint on v excludes a proper subspace of the kernel, so
    when none of them covers the kernel, a combination with coefficients
    at most len(must_move) + 1 in absolute value satisfies them all.

    Raises
    ------
    CertificateFailure if the constraints cannot be satisfied: the kernel
    reduces to the line of p or a vector of `must_move` is orthogonal to
    the whole kernel

    """
    p = tangency_point(form, i, j)
    must_fix = sorted(set(must_fix))
    must_move = [vector(u) for u in must_move]

    rows = [form.dual(p)] + [form.dual(unit(form.dim, k)) for k in must_fix]
    _, basis = rank_and_kernel(Matrix(rows))

    def failure(reason):
        return CertificateFailure(
            f'no translation at the tangency point {p} of ({i}, {j}) in '
            f'{form.name} satisfies fix={must_fix} and move={must_move}: '
            f'{reason}')

    if not basis or (len(basis) == 1 and is_multiple(basis[0], p)):
        raise failure('the solutions are multiples of p')
    for u in must_move:
        if all(form.bilinear(b, u) == 0 for b in basis):
            raise failure(f'{u} is orthogonal to every solution')

    def combine(coefficients):
        v = tuple(Fraction(0) for _ in range(form.dim))
        for c, b in zip(coefficients, basis):
            v = add(v, scale(c, b))
        return v

    def candidates():
        yield from basis
        for a, b in itertools.combinations(basis, 2):
            yield add(a, b)
            yield sub(a, b)
        for coefficients in _coefficients(len(basis), len(must_move) + 1):
            yield combine(coefficients)

    for candidate in candidates():
        if is_zero(candidate) or is_multiple(candidate, p):
            continue
        if any(form.bilinear(candidate, u) == 0 for u in must_move):
            continue
        v = primitive(candidate)
        if form.norm(v) % 2:
            v = scale(2, v)
        return transvection(form, p, v)

    raise InternalError(str(failure('search exhausted')))  # pragma: nocover


ORTHOGONAL = 'orthogonal'
TANGENT = 'tangent'
DIVERGING = 'diverging'
INTERSECTING = 'intersecting'


def classify(entry: Fraction) -> str:
    """Classifies a pair of unit normals from their Gram entry"""
    if entry == 0:
        return ORTHOGONAL
    if abs(entry) == 1:
        return TANGENT
    if abs(entry) > 1:
        return DIVERGING
    return INTERSECTING


@attr.s(frozen=True, auto_attribs=True)
class GramCertificate:
    """The outcome of the right-angled polygon test on a cycle of normals

    `violations` maps each kind of violation ('size', 'norm', 'consecutive',
    'non-adjacent', 'sign') to its count, `evidence` describes the first
    violated pair if any.

    """
    size: int
    gram: Matrix
    signs: Tuple[int, ...]
    classification: Dict[Tuple[int, int], str]
    violations: Dict[str, int]
    evidence: str

    @property
    def passed(self) -> bool:
        return not any(self.violations.values())

    @property
    def min_separation(self) -> Optional[Fraction]:
        """The smallest |G_ij| over the non-adjacent pairs"""
        values = [
            abs(self.gram[i - 1, j - 1]) for (i, j) in self.classification
            if not _adjacent(i, j, self.size)]
        return min(values) if values else None


def _adjacent(i: int, j: int, size: int) -> bool:
    return (j - i) % size in (1, size - 1)


def gram_matrix(normals: Sequence[Sequence], form: QuadraticForm) -> Matrix:
    normals = [vector(u) for u in normals]
    duals = [form.dual(u) for u in normals]
    return Matrix(
        [sum((a * b for a, b in zip(u, du)), Fraction(0)) for du in duals]
        for u in normals)


def polygon_gram_certificate(
        normals: Sequence[Sequence],
        form: QuadraticForm,
        expected_size: Optional[int] = None) -> GramCertificate:
    """Checks that unit normals in cyclic order bound a right-angled polygon

    Cyclically consecutive normals must be orthogonal, and a sign ±1 per
    normal must make every non-adjacent entry e_i e_j G_ij at most -1. The
    signs are propagated along the non-adjacent pairs, starting each
    connected component with +1, so the search is exhaustive. A hyperbolic
    right-angled polygon has at least 5 sides.

    Geometric failures never raise, they are reported in the returned
    certificate.

    """
    gram = gram_matrix(normals, form)
    size = gram.nrows
    violations = collections.OrderedDict(
        (kind, 0) for kind in
        ('size', 'norm', 'consecutive', 'non-adjacent', 'sign'))
    evidence = []

    def violate(kind, message):
        violations[kind] += 1
        if not evidence:
            evidence.append(message)

    if size < 5:
        violate('size', f'{size} normals, a right-angled polygon needs >= 5')
    if expected_size is not None and size != expected_size:
        violate('size', f'{size} normals, expected {expected_size}')

    for i in range(size):
        if gram[i, i] != 1:
            violate('norm', f'normal {i + 1} has norm {gram[i, i]}')

    classification = collections.OrderedDict()
    relations = collections.defaultdict(list)
    for i, j in itertools.combinations(range(size), 2):
        entry = gram[i, j]
        classification[(i + 1, j + 1)] = classify(entry)
        if _adjacent(i, j, size):
            if entry != 0:
                violate(
                    'consecutive',
                    f'pair ({i + 1}, {j + 1}) has entry {entry}, expected 0')
        elif abs(entry) < 1:
            violate(
                'non-adjacent',
                f'pair ({i + 1}, {j + 1}) has entry {entry}, expected '
                f'|entry| >= 1')
        else:
            # same signs when the entry is negative
            relation = 1 if entry < 0 else -1
            relations[i].append((j, relation))
            relations[j].append((i, relation))

    signs = [0] * size
    conflicts = set()
    for start in range(size):
        if signs[start]:
            continue
        signs[start] = 1
        queue = collections.deque([start])
        while queue:
            vertex = queue.popleft()
            for other, relation in relations[vertex]:
                wanted = signs[vertex] * relation
                if not signs[other]:
                    signs[other] = wanted
                    queue.append(other)
                elif signs[other] != wanted:
                    pair = tuple(sorted((vertex + 1, other + 1)))
                    if pair in conflicts:
                        continue
                    conflicts.add(pair)
                    violate(
                        'sign',
                        f'no sign assignment makes pair {pair} '
                        f'non-intersecting')

    return GramCertificate(
        size=size,
        gram=gram,
        signs=tuple(signs),
        classification=dict(classification),
        violations=dict(violations),
        evidence=evidence[0] if evidence else 'pass')


@attr.s(frozen=True, auto_attribs=True)
class DensityReport:
    """Rank and irreducibility of a set of normals"""
    rank: int
    dim: int
    irreducible: bool

    @property
    def rank_ok(self) -> bool:
        return self.rank == self.dim

    @property
    def passed(self) -> bool:
        return self.rank_ok and self.irreducible


def zariski_density_certificate(
        normals: Sequence[Sequence], form: QuadraticForm) -> DensityReport:
    """The reflections in `normals` generate a Zariski dense subgroup of
    O(form) when the Gram matrix has full rank and the scheme is connected"""
    gram = gram_matrix(normals, form)
    rank, _ = rank_and_kernel(gram)
    size = gram.nrows
    irreducible = is_connected(size, (
        (i, j) for i, j in itertools.combinations(range(size), 2)
        if gram[i, j] != 0))
    return DensityReport(rank=rank, dim=form.dim, irreducible=irreducible)
