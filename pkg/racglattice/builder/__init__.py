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
"""Builders of certificate bundles and their verification"""

from logging import Logger
from typing import Optional, Tuple

import attr

from .bundle import (
    SCHEMA_VERSION, BundleGenerator, Certificate, CertificateBundle,
    TranslationRecord)
from .certify import certify
from .polygon import Polygon2nBuilder, Polygon2nMinus2Builder
from .prime import EvenPrimeBuilder, OddProjectedBuilder
from racglattice.logger import get_logger, log_certificates


BUILDERS = {b.name(): b for b in (
    Polygon2nBuilder, Polygon2nMinus2Builder,
    EvenPrimeBuilder, OddProjectedBuilder)}
"""The different builders as a mapping (variant name, class)"""


CLI_VARIANTS = {b.cli_name(): b.name() for b in BUILDERS.values()}
"""Command line spelling of the variants -> bundle spelling"""


@attr.s(frozen=True, auto_attribs=True)
class VerifyReport:
    """Stored certificates of a bundle and their recomputation"""
    stored: Tuple[Certificate, ...]
    recomputed: Tuple[Certificate, ...]

    @property
    def mismatches(self) -> Tuple[str, ...]:
        """Ids whose stored status differs from the recomputed one"""
        stored = {c.id: c.status for c in self.stored}
        recomputed = {c.id: c.status for c in self.recomputed}
        return tuple(
            identifier for identifier in sorted(
                set(stored) | set(recomputed),
                key=lambda i: _order(i, self.recomputed, self.stored))
            if stored.get(identifier) != recomputed.get(identifier))

    @property
    def failed(self) -> Tuple[str, ...]:
        return tuple(c.id for c in self.recomputed if not c.passed)

    @property
    def passed(self) -> bool:
        return not self.failed and not self.mismatches and [
            c.id for c in self.stored] == [c.id for c in self.recomputed]


def _order(identifier, *lists):
    for offset, certificates in enumerate(lists):
        for index, certificate in enumerate(certificates):
            if certificate.id == identifier:
                return offset, index
    return len(lists), 0  # pragma: nocover


def verify(bundle: CertificateBundle,
           logger: Optional[Logger] = None) -> VerifyReport:
    """Recomputes the certificates of `bundle` from its stored matrices"""
    if logger is None:
        logger = get_logger()
    recomputed = certify(
        bundle.variant, bundle.n, bundle.form, bundle.generators,
        bundle.translation, logger=logger)
    report = VerifyReport(bundle.certificates, recomputed)
    log_certificates(
        logger, f'{bundle.variant} bundle for n={bundle.n}', recomputed)
    for identifier in report.mismatches:
        logger.warning('certificate %s does not match its recomputation',
                       identifier)
    return report
