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
"""Exceptions raised by racglattice

Each exception carries the exit code the command-line tool returns when it
escapes a sub-command: 1 for a verification failure, 2 for a usage or format
error and 3 when a resource limit is reached.

"""


class RacgError(RuntimeError):
    """Base class of all the racglattice errors"""
    exit_code = 1


class ContractViolation(RacgError, ValueError):
    """An input does not satisfy the precondition of an operation

    Raised on shape mismatches, non-symmetric forms or matrices outside the
    group an operation is defined on.

    """
    exit_code = 2


class DomainError(RacgError, ValueError):
    """A parameter is outside of the range an operation is defined for"""
    exit_code = 2


class CertificateFailure(RacgError):
    """A certified computation cannot be completed"""


class InternalError(RacgError):
    """An exact computation produced a result it never should"""


class ResourceLimit(RacgError):
    """A search exhausted its configured bound"""
    exit_code = 3


class BundleFormatError(RacgError, ValueError):
    """A bundle file is malformed, the message gives the faulty location"""
    exit_code = 2
