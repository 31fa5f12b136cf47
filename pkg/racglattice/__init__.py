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
"""Certified right-angled polygon subgroups of integral Lorentzian lattices"""

__version__ = '1.0.0'
"""racglattice version"""

from .build import build  # pylint: disable=unused-import,wrong-import-position
