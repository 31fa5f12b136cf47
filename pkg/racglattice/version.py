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
"""racglattice version description"""

import importlib.metadata

import racglattice


def version():
    """Return version information for racglattice and its numeric stack"""
    dependencies = ', '.join(
        f'{name}-{importlib.metadata.version(name)}'
        for name in ('numpy', 'joblib', 'attrs'))
    return f'racglattice-{racglattice.__version__}\nusing {dependencies}'
