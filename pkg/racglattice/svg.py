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
"""SVG 1.1 drawing of a planar sphere configuration

Circles and lines of the original hyperplanes are solid, their images under
tau are dashed. The residual table is stored in the <desc> element.

"""

import xml.etree.ElementTree as ET
from typing import List, Tuple

import numpy as np

from racglattice.errors import DomainError
from racglattice.spheres import BundleSpheres, Hyperplane, Sphere


SCALE = 100
"""Pixels per unit length"""

MARGIN = 0.5


def _fmt(value: float) -> str:
    return f'{value:.6f}'.rstrip('0').rstrip('.')


def _bounds(items) -> Tuple[float, float, float, float]:
    """Bounding box of the circles and of the points of the lines closest
    to the origin"""
    points = []
    for item in items:
        if isinstance(item, Sphere):
            x, y = item.center
            points += [(x - item.radius, y - item.radius),
                       (x + item.radius, y + item.radius)]
        else:
            points.append(tuple(np.asarray(item.normal) * item.offset))
    points = np.asarray(points or [(0.0, 0.0)])
    low = points.min(axis=0) - MARGIN
    high = points.max(axis=0) + MARGIN
    return low[0], low[1], high[0], high[1]


def _segment(line: Hyperplane, bounds) -> List[Tuple[float, float]]:
    """The two ends of the part of the line seen in the bounding box"""
    normal = np.asarray(line.normal)
    base = normal * line.offset
    direction = np.array([-normal[1], normal[0]])
    half = np.hypot(bounds[2] - bounds[0], bounds[3] - bounds[1])
    return [tuple(base - half * direction), tuple(base + half * direction)]


def to_svg(spheres: BundleSpheres) -> ET.Element:
    """Returns the root <svg> element drawing a configuration of the plane

    Raises
    ------
    DomainError if the configuration does not live in the plane

    """
    configuration = spheres.configuration
    if configuration.dimension != 2:
        raise DomainError(
            f'only planar configurations are drawn, got dimension '
            f'{configuration.dimension}')

    bounds = _bounds(configuration.items)
    width = (bounds[2] - bounds[0]) * SCALE
    height = (bounds[3] - bounds[1]) * SCALE

    # y axis pointing up
    root = ET.Element(
        'svg', xmlns='http://www.w3.org/2000/svg', version='1.1',
        width=f'{_fmt(width)}px', height=f'{_fmt(height)}px',
        viewBox=(
            f'{_fmt(bounds[0] * SCALE)} {_fmt(-bounds[3] * SCALE)} '
            f'{_fmt(width)} {_fmt(height)}'))

    desc = ET.SubElement(root, 'desc')
    desc.text = '\n'.join(
        ['pair product |gram| residual']
        + [f'{i} {j} {product:.12g} {gram:.12g} {residual:.3e}'
           for i, j, product, gram, residual
           in configuration.residual_table()])

    group = ET.SubElement(
        root, 'g', fill='none', stroke='black',
        **{'stroke-width': '1.5'})
    for label, translated, item in zip(
            spheres.labels, spheres.translated, configuration.items):
        style = {'stroke-dasharray': '6,4'} if translated else {}
        if isinstance(item, Sphere):
            x, y = item.center
            ET.SubElement(
                group, 'circle', cx=_fmt(x * SCALE), cy=_fmt(-y * SCALE),
                r=_fmt(item.radius * SCALE), id=_identifier(label), **style)
            anchor = (x, y)
        else:
            (x1, y1), (x2, y2) = _segment(item, bounds)
            ET.SubElement(
                group, 'line', x1=_fmt(x1 * SCALE), y1=_fmt(-y1 * SCALE),
                x2=_fmt(x2 * SCALE), y2=_fmt(-y2 * SCALE),
                id=_identifier(label), **style)
            anchor = tuple(np.asarray(item.normal) * item.offset)

        text = ET.SubElement(
            root, 'text', x=_fmt(anchor[0] * SCALE),
            y=_fmt(-anchor[1] * SCALE), **{'font-size': '12'})
        text.text = label
    return root


def _identifier(label: str) -> str:
    return label.replace(' ', '-')


def to_string(spheres: BundleSpheres) -> str:
    return ET.tostring(to_svg(spheres), encoding='unicode') + '\n'
