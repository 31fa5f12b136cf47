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
"""Right-angled Coxeter groups and their Tits representation

Generators are named 'g1', 'g2', ... and indexed from 1. The greek spelling
'γ1' is accepted as an alias when parsing words, as are 'τ' for 'tau' and
'τ^-1' for 'tau^-1'.

"""

import collections
from typing import (
    Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple, Union)

import attr

from racglattice.errors import CertificateFailure, DomainError
from racglattice.forms import QuadraticForm
from racglattice.linalg import Matrix


Symbol = Union[str, int]
Word = Tuple[str, ...]


def generator_symbol(index: int, prefix: str = 'g') -> str:
    return f'{prefix}{index}'


def normalize_symbol(symbol: Symbol) -> str:
    """Returns the canonical spelling of a generator symbol"""
    if isinstance(symbol, int) and not isinstance(symbol, bool):
        return generator_symbol(symbol)
    symbol = str(symbol).strip()
    if symbol.startswith('γ'):
        symbol = 'g' + symbol[1:]
    return symbol.replace('τ', 'tau')


def parse_word(text: Union[str, Iterable[Symbol]]) -> Word:
    """Parses a word given as a space separated string or a sequence"""
    if isinstance(text, str):
        text = text.split()
    return tuple(normalize_symbol(symbol) for symbol in text)


def is_connected(size: int, edges: Iterable[Tuple[int, int]]) -> bool:
    """True when the graph on vertices 0..size-1 with `edges` is connected"""
    if size <= 1:
        return True
    neighbors = collections.defaultdict(set)
    for i, j in edges:
        neighbors[i].add(j)
        neighbors[j].add(i)

    seen = {0}
    queue = collections.deque([0])
    while queue:
        vertex = queue.popleft()
        for other in sorted(neighbors[vertex] - seen):
            seen.add(other)
            queue.append(other)
    return len(seen) == size


@attr.s(frozen=True, auto_attribs=True)
class RacgPresentation:
    """A right-angled Coxeter presentation

    Every generator is an involution, and the only other relations are the
    commutations of the pairs in `commuting`, stored as (i, j) with i < j.

    """
    generator_count: int
    commuting: FrozenSet[Tuple[int, int]]

    @classmethod
    def from_form(cls, form: QuadraticForm) -> 'RacgPresentation':
        """Generators i and j commute when the form entry (i, j) is zero"""
        return cls(form.dim, frozenset(
            (i, j) for i in range(1, form.dim + 1)
            for j in range(i + 1, form.dim + 1)
            if form.entry(i, j) == 0))

    @classmethod
    def cycle(cls, count: int) -> 'RacgPresentation':
        """The right-angled `count`-gon group: cyclic neighbours commute"""
        if count < 3:
            raise DomainError(f'a polygon needs at least 3 sides, got {count}')
        return cls(count, frozenset(
            tuple(sorted((i, i % count + 1))) for i in range(1, count + 1)))

    def commute(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.commuting

    def check_index(self, index: int):
        if isinstance(index, bool) or not isinstance(index, int) \
                or not 1 <= index <= self.generator_count:
            raise DomainError(
                f'invalid generator index {index!r}, must be in '
                f'1..{self.generator_count}')


@attr.s(frozen=True, auto_attribs=True)
class GroupElement:
    """A matrix together with the word it was evaluated from"""
    matrix: Matrix
    word: Word = ()

    def __matmul__(self, other: 'GroupElement') -> 'GroupElement':
        return GroupElement(self.matrix @ other.matrix, self.word + other.word)

    @property
    def is_identity(self) -> bool:
        return self.matrix.is_identity


@attr.s(frozen=True, auto_attribs=True)
class ReflectionSystem:
    """The Tits reflections of a form with unit diagonal"""
    form: QuadraticForm
    generators: Tuple[GroupElement, ...]
    presentation: RacgPresentation

    def generator(self, index: int) -> GroupElement:
        self.presentation.check_index(index)
        return self.generators[index - 1]

    @property
    def symbols(self) -> Dict[str, GroupElement]:
        return {g.word[0]: g for g in self.generators}


def tits_reflection(form: QuadraticForm, index: int) -> Matrix:
    """Returns I - 2 e_i (row i of Q), the reflection in the hyperplane e_i"""
    rows = Matrix.identity(form.dim).tolist()
    qrow = form.matrix.row(index)
    rows[index - 1] = [
        a - 2 * b for a, b in zip(rows[index - 1], qrow)]
    return Matrix(rows)


def tits_reflections(form: QuadraticForm) -> ReflectionSystem:
    """Builds the Tits representation of the Coxeter system of `form`

    The defining properties of every generator are checked exactly: it
    preserves the form, is an involution of determinant -1 and has integer
    entries.

    Raises
    ------
    DomainError if the form has a diagonal entry other than 1

    CertificateFailure if a generator misses one of its defining properties

    """
    for i in range(1, form.dim + 1):
        if form.entry(i, i) != 1:
            raise DomainError(
                f'{form.name} has diagonal entry {form.entry(i, i)} at {i}, '
                f'the Tits reflections need a unit diagonal')

    identity = Matrix.identity(form.dim)
    generators = []
    for i in range(1, form.dim + 1):
        matrix = tits_reflection(form, i)
        if not (form.preserved_by(matrix)
                and matrix @ matrix == identity
                and matrix.determinant() == -1
                and matrix.is_integral):  # pragma: nocover
            raise CertificateFailure(
                f'generator {i} of {form.name} is not an integral '
                f'reflection preserving the form')
        generators.append(GroupElement(matrix, (generator_symbol(i),)))

    return ReflectionSystem(
        form, tuple(generators), RacgPresentation.from_form(form))


def scheme_is_irreducible(form: Union[QuadraticForm, Matrix]) -> bool:
    """True when the Coxeter scheme of `form` is connected

    The scheme has one vertex per generator and an edge for each nonzero
    off-diagonal entry.

    """
    matrix = form.matrix if isinstance(form, QuadraticForm) else form
    size = matrix.nrows
    return is_connected(size, (
        (i, j) for i in range(size) for j in range(i + 1, size)
        if matrix[i, j] != 0))


def racg_normal_form(
        word: Sequence[int],
        presentation: RacgPresentation) -> Tuple[int, ...]:
    """Returns the canonical reduced form of a word in a right-angled group

    The letters are pushed on piles, one pile per generator. A new letter i
    cancels when the top of the pile i is an i that commutes with every
    letter written after it. The piles are then emptied by always taking the
    smallest generator whose pile starts with a letter, which gives the
    shortlex least reduced word.

    Parameters
    ----------
    word (sequence of int) : the letters, as 1-based generator indices

    presentation (RacgPresentation) : the group the word lives in

    Raises
    ------
    DomainError if a letter is not a valid generator index

    """
    count = presentation.generator_count
    blocking = {
        i: [j for j in range(1, count + 1)
            if j != i and not presentation.commute(i, j)]
        for i in range(1, count + 1)}

    piles = {i: collections.deque() for i in range(1, count + 1)}
    for letter in word:
        presentation.check_index(letter)
        if piles[letter] and piles[letter][-1] == 1:
            piles[letter].pop()
            for other in blocking[letter]:
                piles[other].pop()
        else:
            piles[letter].append(1)
            for other in blocking[letter]:
                piles[other].append(0)

    normal = []
    while True:
        letter = next(
            (i for i in range(1, count + 1)
             if piles[i] and piles[i][0] == 1), None)
        if letter is None:
            break
        normal.append(letter)
        piles[letter].popleft()
        for other in blocking[letter]:
            piles[other].popleft()
    return tuple(normal)


def eval_word(
        word: Union[str, Iterable[Symbol]],
        system: ReflectionSystem,
        extra: Optional[Mapping[str, Matrix]] = None) -> GroupElement:
    """Evaluates a word in the generators of `system`

    Parameters
    ----------
    word (str or sequence) : symbols such as 'g1', 'γ3' or 1-based indices

    system (ReflectionSystem) : provides the generators 'g1', 'g2', ...

    extra (mapping) : additional named matrices, for instance 'tau' and
        'tau^-1'

    Raises
    ------
    DomainError if a symbol is unknown

    """
    symbols = {key: g.matrix for key, g in system.symbols.items()}
    if extra:
        symbols.update(
            {normalize_symbol(key): value for key, value in extra.items()})

    word = parse_word(word)
    matrix = Matrix.identity(system.form.dim)
    for symbol in word:
        try:
            matrix = matrix @ symbols[symbol]
        except KeyError:
            raise DomainError(f'unknown symbol {symbol!r}') from None
    return GroupElement(matrix, word)
