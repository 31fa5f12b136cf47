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
"""Spheres of the boundary at infinity, seen from an isotropic point

The boundary sphere minus the isotropic point p is identified with the
Euclidean space R^(n-1). A unit spacelike normal u orthogonal to p gives a
hyperplane of R^(n-1), any other gives a sphere. This chart is computed in
double precision and is only used for display: the exact Gram matrix stays
the reference.

"""

import itertools
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

import attr
import numpy as np

from racglattice.errors import DomainError
from racglattice.builder.certify import polygon_normals
from racglattice.forms import QuadraticForm, tangency_point
from racglattice.linalg import Matrix, rank_and_kernel, scale, sub, unit, vector
from racglattice.minkowski import gram_matrix


TOLERANCE = 1e-9
"""Maximal gap between a float inversive product and its exact value"""


@attr.s(frozen=True)
class Hyperplane:
    """The hyperplane {x : normal . x = offset} with a unit normal"""
    normal = attr.ib(converter=lambda x: tuple(float(a) for a in x))
    offset = attr.ib(converter=float)


@attr.s(frozen=True)
class Sphere:
    center = attr.ib(converter=lambda x: tuple(float(a) for a in x))
    radius = attr.ib(converter=float)


Item = Union[Hyperplane, Sphere]


def inversive_product(first: Item, second: Item) -> float:
    """Returns the inversive product of two spheres or hyperplanes

    Its absolute value is 0 for orthogonal items, 1 for tangent ones, and
    above 1 for disjoint ones.

    """
    if isinstance(first, Hyperplane) and isinstance(second, Hyperplane):
        return float(np.dot(first.normal, second.normal))
    if isinstance(first, Sphere) and isinstance(second, Hyperplane):
        first, second = second, first
    if isinstance(first, Hyperplane):
        return float(
            (np.dot(first.normal, second.center) - first.offset)
            / second.radius)

    distance = np.sum(
        (np.asarray(first.center) - np.asarray(second.center)) ** 2)
    return float(
        (distance - first.radius ** 2 - second.radius ** 2)
        / (2 * first.radius * second.radius))


@attr.s(frozen=True, auto_attribs=True)
class SphereConfiguration:
    """Spheres and hyperplanes in R^dimension with their product tables

    `products` holds the float inversive products and `gram` the exact
    absolute Gram entries they must match.

    """
    dimension: int
    items: Tuple[Item, ...]
    products: np.ndarray = attr.ib(eq=False)
    gram: np.ndarray = attr.ib(eq=False)

    @property
    def residuals(self) -> np.ndarray:
        return np.abs(np.abs(self.products) - self.gram)

    @property
    def max_residual(self) -> float:
        return float(self.residuals.max()) if self.items else 0.0

    @property
    def consistent(self) -> bool:
        return self.max_residual <= TOLERANCE

    def residual_table(self) -> List[Tuple[int, int, float, float, float]]:
        """Rows (i, j, product, |gram|, residual) over pairs i < j"""
        residuals = self.residuals
        return [
            (i + 1, j + 1, float(self.products[i, j]), float(self.gram[i, j]),
             float(residuals[i, j]))
            for i, j in itertools.combinations(range(len(self.items)), 2)]


def _chart(form: QuadraticForm, p):
    """Returns q isotropic with B(p, q) = -1 and an orthonormal basis of the
    orthogonal of span(p, q), as a float matrix with one basis vector per
    column"""
    y = next(
        unit(form.dim, i) for i in range(1, form.dim + 1)
        if form.bilinear(unit(form.dim, i), p) != 0)
    q = sub(y, scale(form.norm(y) / (2 * form.bilinear(y, p)), p))
    q = scale(Fraction(-1) / form.bilinear(q, p), q)

    _, kernel = rank_and_kernel(Matrix([form.dual(p), form.dual(q)]))
    basis = Matrix.from_columns(kernel)
    restricted = np.array(
        (basis.T @ form.matrix @ basis).tolist(), dtype=float)
    cholesky = np.linalg.cholesky(restricted)
    orthonormal = np.array(basis.tolist(), dtype=float) @ np.linalg.inv(
        cholesky).T
    return q, orthonormal


def spheres_from_normals(
        normals: Sequence[Sequence],
        form: QuadraticForm,
        p: Sequence) -> SphereConfiguration:
    """Maps spacelike normals to spheres and hyperplanes in R^(dim - 2)

    With q isotropic and B(p, q) = -1, a normal decomposes as
    u = a p + b q + w with w orthogonal to p and q. When b = 0 it gives the
    hyperplane of unit normal w and offset a, otherwise the sphere of center
    w / b and radius 1 / |b|, in coordinates of an orthonormal basis of the
    orthogonal of p and q.

    Raises
    ------
    DomainError if the form is not Lorentzian, p is not isotropic or a
    normal is not spacelike

    """
    p = vector(p)
    if not form.is_lorentzian:
        raise DomainError(
            f'{form.name} has signature {form.signature}, no boundary chart')
    if all(a == 0 for a in p) or form.norm(p) != 0:
        raise DomainError(f'{p} is not a nonzero isotropic vector')

    q, orthonormal = _chart(form, p)
    qform = np.array(form.matrix.tolist(), dtype=float)

    items = []
    for normal in normals:
        normal = vector(normal)
        norm = form.norm(normal)
        if norm <= 0:
            raise DomainError(f'{normal} is not spacelike')
        alpha = -form.bilinear(normal, q)
        beta = -form.bilinear(normal, p)
        rest = sub(normal, [alpha * a + beta * b for a, b in zip(p, q)])
        factor = 1 / np.sqrt(float(norm))

        coords = orthonormal.T @ qform @ np.array(rest, dtype=float) * factor
        if beta == 0:
            length = np.linalg.norm(coords)
            items.append(Hyperplane(
                coords / length, float(alpha) * factor / length))
        else:
            scaled = float(beta) * factor
            items.append(Sphere(coords / scaled, 1 / abs(scaled)))

    count = len(items)
    products = np.array(
        [[inversive_product(items[i], items[j]) for j in range(count)]
         for i in range(count)], dtype=float).reshape(count, count)

    exact = gram_matrix(normals, form) if count else None
    gram = np.array(
        [[abs(float(exact[i, j])) / np.sqrt(
            float(exact[i, i]) * float(exact[j, j]))
          for j in range(count)] for i in range(count)],
        dtype=float).reshape(count, count)

    return SphereConfiguration(
        dimension=form.dim - 2, items=tuple(items),
        products=products, gram=gram)


@attr.s(frozen=True, auto_attribs=True)
class BundleSpheres:
    """The sphere configuration of a bundle with display labels

    `translated` flags the items that are images under tau.

    """
    configuration: SphereConfiguration
    labels: Tuple[str, ...]
    translated: Tuple[bool, ...]


def bundle_spheres(bundle) -> BundleSpheres:
    """Computes the spheres of the polygon normals of a bundle

    The chart sends the tangency point fixed by tau to infinity. Bundles
    without translation use the tangency point of e_1 and e_3.

    Raises
    ------
    DomainError if the form of the bundle is not Lorentzian

    """
    form = QuadraticForm(bundle.form)
    if not form.is_lorentzian:
        raise DomainError(
            f'the form has signature {form.signature}, no boundary chart')

    n = bundle.n
    tau = bundle.translation.matrix if bundle.translation else None
    normals = polygon_normals(bundle.variant, n, tau)
    if bundle.translation is not None:
        p = bundle.translation.p
        originals = n + 1 if bundle.variant == 'polygon-2n' else n
    else:
        p = tangency_point(form, 1, 3)
        originals = len(normals)

    labels = [f'S{i}' for i in range(1, originals + 1)]
    if bundle.translation is not None:
        labels += [f'tau S{j}' for j in range(originals - 1, 1, -1)]
    return BundleSpheres(
        configuration=spheres_from_normals(normals, form, p),
        labels=tuple(labels),
        translated=tuple(index >= originals for index in range(len(labels))))
