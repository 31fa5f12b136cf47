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
"""Provides the build function

To use it in your own code, type:

    from racglattice import build

"""

from logging import Logger
from typing import Optional

from typing_extensions import Literal

from racglattice.builder import BUILDERS, CLI_VARIANTS
from racglattice.builder.bundle import CertificateBundle
from racglattice.errors import DomainError
from racglattice.logger import get_logger

Variant = Literal[
    'polygon-2n', 'polygon-2n-2', 'even-prime', 'odd-projected']


def build(n: int,
          variant: Variant = 'polygon-2n',
          max_power: Optional[int] = None,
          logger: Optional[Logger] = None) -> CertificateBundle:
    """Builds the certificate bundle of a construction

    Parameters
    ----------
    n: int
        The dimension of the hyperbolic space, the generators are
        (n+1) x (n+1) integer matrices.

    variant: str
        The construction to build, must be 'polygon-2n' (n >= 3),
        'polygon-2n-2' (n >= 4), 'even-prime' (n even >= 4) or
        'odd-projected' (n odd >= 5). The command line spellings
        'polygon2n', 'polygon2n-2', 'even' and 'odd-project' are accepted as
        well.

    max_power: int
        The bound on the power of the translation for the polygon variants,
        default to the RACGLATTICE_MAX_POWER environment variable or 64.

    logger: logging.Logger
        the logging instance where to send messages. If not specified, use
        the default racglattice logger.

    Returns
    -------
    bundle: CertificateBundle
        The generators with their certificates. A failed certificate is
        reported in the bundle, not raised.

    Raises
    ------
    DomainError
        if the variant is unknown or does not support `n`

    """
    if logger is None:
        logger = get_logger()
    variant = _check_arguments(variant)
    return BUILDERS[variant](n, max_power=max_power, logger=logger).build()


def _check_arguments(variant: str) -> str:
    """Auxiliary function to build()

    Returns the bundle spelling of the variant, raises a DomainError if the
    variant is unknown.

    """
    variant = CLI_VARIANTS.get(variant, variant)
    if variant not in BUILDERS:
        raise DomainError(
            f'{variant} is not a supported variant, choose in '
            f'{", ".join(BUILDERS)}')
    return variant


def build_2ngon(n: int, max_power: Optional[int] = None,
                logger: Optional[Logger] = None) -> CertificateBundle:
    """The right-angled 2n-gon bundle in O(Q_{n+1}; Z)"""
    return build(n, 'polygon-2n', max_power=max_power, logger=logger)


def build_2n_minus_2_gon(n: int, max_power: Optional[int] = None,
                         logger: Optional[Logger] = None) -> CertificateBundle:
    """The right-angled 2(n-1)-gon bundle in O(Q_{n+1}; Z)"""
    return build(n, 'polygon-2n-2', max_power=max_power, logger=logger)


def build_even(n: int,
               logger: Optional[Logger] = None) -> CertificateBundle:
    return build(n, 'even-prime', logger=logger)


def build_odd_projected(n: int,
                        logger: Optional[Logger] = None) -> CertificateBundle:
    return build(n, 'odd-projected', logger=logger)
