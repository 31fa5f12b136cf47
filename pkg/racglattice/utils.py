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
"""Provides utility functions for racglattice"""

import os
from numbers import Number
from typing import List, Tuple, Iterable, Optional, Sequence, TypeVar

from racglattice.errors import DomainError

T = TypeVar('T')

DEFAULT_MAX_POWER = 64
"""Default bound on the power of the translation searched by the builders"""


def cumsum(iterable: Iterable[Number]) -> List[Number]:
    """Returns the cumulative sum of the `iterable` as a list"""
    res = []
    cumulative = 0
    for value in iterable:
        cumulative += value
        res.append(cumulative)
    return res


def chunks(items: Sequence[T], num: int) -> Tuple[List[List[T]], List[int]]:
    """Return a maximum of `num` equally sized chunks of `items`

    This method is used to dispatch independent checks on multiple jobs.

    The exact number of chunks returned is `m = min(num, len(items))`. Only
    the m-1 first chunks have equal size. The last chunk can be longer.

    Parameters
    ----------
    items (sequence) : The items to divide in chunks

    num (int) : The number of chunks to build, must be a strictly positive
    integer.

    Returns
    -------
    chunks (list of list) : The chunked items.

    offsets (list of int) : offset of each chunk's first item in `items`, used
        to reassemble results in canonical order.

    """
    items = list(items)
    size = int(max(1, len(items) / num))  # noqa
    nchunks = min(num, len(items))

    item_chunks = [
        items[i * size:(i + 1) * size] for i in range(nchunks - 1)]

    last = items[(nchunks - 1) * size:]
    if last:
        item_chunks.append(last)

    offsets = [0] + cumsum((len(c) for c in item_chunks[:-1]))
    return item_chunks, offsets


def resolve_max_power(max_power: Optional[int] = None) -> int:
    """Returns the bound on translation powers to use

    The following precedence rule applies:

    1. As specified by the `max_power` argument
    2. Or as specified by the environment variable RACGLATTICE_MAX_POWER
    3. Or the default value of 64

    Raises
    ------
    DomainError if the bound is not a strictly positive integer

    """
    source = 'max_power'
    if max_power is None and 'RACGLATTICE_MAX_POWER' in os.environ:
        source = 'RACGLATTICE_MAX_POWER'
        try:
            max_power = int(os.environ['RACGLATTICE_MAX_POWER'])
        except ValueError:
            raise DomainError(
                f'RACGLATTICE_MAX_POWER='
                f'{os.environ["RACGLATTICE_MAX_POWER"]} is not an '
                f'integer') from None
    elif max_power is None:
        max_power = DEFAULT_MAX_POWER

    if isinstance(max_power, bool) or not isinstance(max_power, int) \
            or max_power < 1:
        raise DomainError(
            f'{source} must be a strictly positive integer, it is {max_power}')
    return max_power
