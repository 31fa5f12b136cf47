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
"""Test of the sphere configurations at infinity and their SVG drawing"""

# pylint: disable=missing-docstring
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from racglattice import svg
from racglattice.build import build_2ngon, build_even, build_odd_projected
from racglattice.errors import DomainError
from racglattice.forms import all_ones, build_Q, build_Q_prime
from racglattice.linalg import unit
from racglattice.spheres import (
    TOLERANCE, Hyperplane, Sphere, bundle_spheres, inversive_product,
    spheres_from_normals)


@pytest.fixture(scope='module')
def hexagon():
    return build_2ngon(3)


def test_inversive_product():
    unit_circle = Sphere((0, 0), 1)
    assert inversive_product(unit_circle, Sphere((2, 0), 1)) == \
        pytest.approx(1)
    assert inversive_product(unit_circle, Sphere((1, 1), 1)) == \
        pytest.approx(0)
    assert inversive_product(unit_circle, Sphere((5, 0), 2)) == \
        pytest.approx(5)

    line = Hyperplane((0, 1), 0)
    assert inversive_product(line, Sphere((0, 2), 1)) == pytest.approx(2)
    assert inversive_product(Sphere((0, 2), 1), line) == pytest.approx(2)
    assert inversive_product(line, Hyperplane((0, -1), 3)) == \
        pytest.approx(-1)
    assert inversive_product(line, Hyperplane((1, 0), 3)) == \
        pytest.approx(0)


def test_items_are_float():
    item = Hyperplane([1, 0], 2)
    assert item.normal == (1.0, 0.0)
    assert isinstance(item.offset, float)


def test_chart_q4():
    form = build_Q(4)
    p = (1, 0, 0, 1)
    configuration = spheres_from_normals(
        [unit(4, i) for i in range(1, 5)], form, p)
    assert configuration.dimension == 2
    kinds = [type(item) for item in configuration.items]
    assert kinds == [Hyperplane, Sphere, Sphere, Hyperplane]
    assert configuration.consistent
    assert configuration.max_residual <= TOLERANCE
    # spheres of unit normals have radius 1 / |B(u, p)|
    assert configuration.items[1].radius == pytest.approx(1)


def test_chart_invalid():
    with pytest.raises(DomainError):
        spheres_from_normals([unit(6, 1)], build_Q_prime(6), unit(6, 1))

    form = build_Q(4)
    with pytest.raises(DomainError) as err:
        spheres_from_normals([unit(4, 1)], form, unit(4, 1))
    assert 'isotropic' in str(err)

    with pytest.raises(DomainError) as err:
        spheres_from_normals([all_ones(4)], form, (1, 0, 0, 1))
    assert 'spacelike' in str(err)


def test_bundle_hexagon(hexagon):
    spheres = bundle_spheres(hexagon)
    configuration = spheres.configuration
    assert spheres.labels == ('S1', 'S2', 'S3', 'S4', 'tau S3', 'tau S2')
    assert spheres.translated == (False,) * 4 + (True,) * 2
    assert configuration.dimension == 2
    assert configuration.consistent
    assert len(configuration.residual_table()) == 15

    lines = [isinstance(item, Hyperplane) for item in configuration.items]
    assert lines == [True, False, False, True, False, False]

    # consecutive items are orthogonal, non-adjacent ones are disjoint
    products = np.abs(configuration.products)
    for i in range(6):
        assert products[i, (i + 1) % 6] == pytest.approx(0, abs=1e-9)
    assert products[1, 5] == pytest.approx(7)


def test_bundle_even():
    spheres = bundle_spheres(build_even(4))
    assert spheres.configuration.dimension == 3
    assert spheres.labels == ('S1', 'S2', 'S3', 'S4', 'S5')
    assert not any(spheres.translated)
    assert spheres.configuration.consistent


def test_bundle_degenerate():
    with pytest.raises(DomainError):
        bundle_spheres(build_odd_projected(5))


def test_svg(hexagon):
    root = svg.to_svg(bundle_spheres(hexagon))
    assert root.tag == 'svg'
    assert root.get('version') == '1.1'
    assert len(list(root.iter('circle'))) == 4
    assert len(list(root.iter('line'))) == 2
    dashed = [e for e in root.iter() if e.get('stroke-dasharray')]
    assert [e.get('id') for e in dashed] == ['tau-S3', 'tau-S2']
    assert [e.text for e in root.iter('text')] == [
        'S1', 'S2', 'S3', 'S4', 'tau S3', 'tau S2']
    assert root.find('desc').text.startswith('pair product')

    text = svg.to_string(bundle_spheres(hexagon))
    assert ET.fromstring(text).tag.endswith('svg')


def test_svg_not_planar():
    with pytest.raises(DomainError):
        svg.to_svg(bundle_spheres(build_even(4)))
