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
"""Certificate bundles produced by the builders"""

from typing import Optional, Tuple

import attr
from typing_extensions import Literal

from racglattice.linalg import Matrix, Vector


SCHEMA_VERSION = 1

Variant = Literal['polygon-2n', 'polygon-2n-2', 'even-prime', 'odd-projected']

PASS = 'pass'
FAIL = 'fail'


@attr.s(frozen=True, auto_attribs=True)
class Certificate:
    id: str
    status: str
    evidence: str

    @property
    def passed(self) -> bool:
        return self.status == PASS


@attr.s(frozen=True, auto_attribs=True)
class BundleGenerator:
    """A named generator with the word it evaluates from

    The word is made of generator symbols ('g1', 'tau', 'tau^-1'), a leading
    'pi' tag means the projection of the remaining word.

    """
    name: str
    word: Tuple[str, ...]
    matrix: Matrix


@attr.s(frozen=True, auto_attribs=True)
class TranslationRecord:
    """The translation tau = E(p, k v)"""
    p: Vector
    v: Vector
    k: int
    matrix: Matrix


@attr.s(frozen=True, auto_attribs=True)
class CertificateBundle:
    schema: int
    n: int
    variant: str
    form: Matrix
    generators: Tuple[BundleGenerator, ...]
    translation: Optional[TranslationRecord]
    certificates: Tuple[Certificate, ...]
    deviations: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.certificates)

    @property
    def failed(self) -> Tuple[Certificate, ...]:
        return tuple(c for c in self.certificates if not c.passed)

    def certificate(self, identifier: str) -> Certificate:
        for certificate in self.certificates:
            if certificate.id == identifier:
                return certificate
        raise KeyError(identifier)

    def generator(self, name: str) -> BundleGenerator:
        for generator in self.generators:
            if generator.name == name:
                return generator
        raise KeyError(name)
