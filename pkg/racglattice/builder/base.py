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
"""Abstract base class for the certificate bundle builders"""

import abc
from logging import Logger
from typing import List, Optional, Tuple

from racglattice.builder.bundle import (
    SCHEMA_VERSION, BundleGenerator, CertificateBundle, TranslationRecord)
from racglattice.builder.certify import certify, expected_form, word_name
from racglattice.coxeter import ReflectionSystem, tits_reflections
from racglattice.errors import CertificateFailure, DomainError
from racglattice.forms import QuadraticForm
from racglattice.logger import get_logger, log_certificates
from racglattice.utils import resolve_max_power


class BaseBuilder(abc.ABC):
    """Abstract base class of all the bundle builders

    Provides a common interface to all builders. The central method is
    `build()`, which assembles the generators of the variant and computes
    the certificates of the resulting bundle.

    Parameters
    ----------
    n: int
        The dimension of the hyperbolic space, the lattice acts on R^(n+1).
        Must be in the range supported by the builder.

    max_power: int
        The bound on the power of the translation searched by the polygon
        builders. When None, use the RACGLATTICE_MAX_POWER environment
        variable or the default of 64.

    logger: logging.Logger
        the logging instance where to send messages. If not specified, use
        the default racglattice logger.

    Raises
    ------
    DomainError
        if `n` is not supported by the builder

    """
    def __init__(self, n: int,
                 max_power: Optional[int] = None,
                 logger: Optional[Logger] = None):
        if logger is None:
            logger = get_logger()

        self.check_dimension(n)
        self._n = n
        self._max_power = resolve_max_power(max_power)
        self._logger = logger
        self._logger.info('initializing builder %s for n=%s', self.name(), n)

    @property
    def logger(self) -> Logger:
        """A logging.Logger instance where to send messages"""
        return self._logger

    @property
    def n(self) -> int:
        return self._n

    @property
    def max_power(self) -> int:
        return self._max_power

    @staticmethod
    @abc.abstractmethod
    def name() -> str:
        """The variant name of the builder, as stored in the bundles"""

    @staticmethod
    @abc.abstractmethod
    def cli_name() -> str:
        """The variant name on the command line"""

    @staticmethod
    @abc.abstractmethod
    def description() -> str:
        """A one-line description of the construction"""

    @classmethod
    @abc.abstractmethod
    def check_dimension(cls, n: int):
        """Raises DomainError if `n` is not supported by the builder"""

    @staticmethod
    def _check_integer(n: int, minimum: int, parity: Optional[int] = None,
                       hint: str = ''):
        if isinstance(n, bool) or not isinstance(n, int) or n < minimum:
            raise DomainError(f'n must be an integer >= {minimum}, it is {n}')
        if parity is not None and n % 2 != parity:
            kind = 'even' if parity == 0 else 'odd'
            raise DomainError(f'n must be {kind}, it is {n}{hint}')

    def deviations(self) -> List[str]:
        """Notes on how the construction departs from the abstract one"""
        return []

    def _form(self) -> QuadraticForm:
        form = expected_form(self.name(), self.n)
        self.logger.info('%s has signature %s', form.name, form.signature)
        return form

    @abc.abstractmethod
    def _assemble(
            self, form: QuadraticForm, system: ReflectionSystem) -> Tuple[
                List[BundleGenerator], Optional[TranslationRecord]]:
        """Returns the generators and the translation of the bundle"""

    def build(self) -> CertificateBundle:
        """Builds the generators of the variant and certifies them

        Returns
        -------
        bundle: CertificateBundle
            The bundle, with a failed certificate for each property that
            does not hold.

        Raises
        ------
        CertificateFailure
            if a step of the construction cannot be completed

        """
        form = self._form()
        system = tits_reflections(form)
        generators, translation = self._assemble(form, system)

        certificates = certify(
            self.name(), self.n, form.matrix, generators, translation,
            logger=self.logger)
        bundle = CertificateBundle(
            schema=SCHEMA_VERSION,
            n=self.n,
            variant=self.name(),
            form=form.matrix,
            generators=tuple(generators),
            translation=translation,
            certificates=certificates,
            deviations=tuple(self.deviations()))

        log_certificates(
            self.logger, f'{self.name()} for n={self.n}', certificates)
        return bundle

    @staticmethod
    def _generator(word, matrix) -> BundleGenerator:
        word = tuple(word)
        return BundleGenerator(word_name(word), word, matrix)

    @staticmethod
    def _require(condition: bool, message: str):
        if not condition:
            raise CertificateFailure(message)
