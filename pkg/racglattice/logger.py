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
"""Logging facilities for racglattice

Log messages always go to stderr: stdout is reserved for the certificate
tables and the SVG/JSON outputs, which must stay byte-reproducible.

"""

import logging
import sys
from logging import Logger
from typing import Iterable


_LEVELS = {
    'verbose': logging.DEBUG,
    'normal': logging.WARNING,
    'quiet': logging.WARNING}


def get_logger(verbosity: str = 'quiet', name: str = 'racglattice') -> Logger:
    """Returns a configured logging.Logger instance

    Parameters
    ----------
    verbosity (str) : 'verbose' displays the search steps and every
      certificate, 'normal' only the warnings (failed certificates,
      exhausted searches) and 'quiet' nothing at all.
    name (str) : The logger name, default to 'racglattice'

    Raises
    ------
    RuntimeError if `verbosity` is not 'normal', 'verbose', or 'quiet'.

    """
    try:
        level = _LEVELS[verbosity]
    except (KeyError, TypeError):
        raise RuntimeError(
            f'verbosity is {verbosity} but must be in '
            f'{", ".join(_LEVELS)}') from None

    logger = logging.getLogger(name)
    logger.setLevel(level)

    if verbosity == 'quiet':
        handler = logging.NullHandler()
    else:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter('[%(levelname)s] %(message)s'))
    logger.handlers = [handler]
    return logger


def log_certificates(logger: Logger, subject: str, certificates: Iterable):
    """Reports the outcome of a list of certificates about `subject`

    Each certificate goes to debug level, then a single summary line is
    emitted: a warning naming the failed ids, or an info line counting the
    passing ones.

    """
    failed, total = [], 0
    for certificate in certificates:
        total += 1
        logger.debug(
            'certificate %s: %s (%s)',
            certificate.id, certificate.status, certificate.evidence)
        if not certificate.passed:
            failed.append(certificate.id)

    if failed:
        logger.warning('%s failed %s', subject, ', '.join(failed))
    else:
        logger.info('%s: %s certificates pass', subject, total)
