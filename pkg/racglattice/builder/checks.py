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
"""Desk-scale checks of the group structure of a polygon bundle

`hnn_sample_check` evaluates random reduced words of the HNN extension of
the reflection group by tau, which must never give the identity.
`word_problem_crosscheck` enumerates the polygon group up to a word length
and compares its word problem with the matrices.

"""

import itertools
from logging import Logger
from typing import Dict, List, Optional, Sequence, Tuple

import attr
import joblib
import numpy as np

from racglattice.builder.bundle import CertificateBundle
from racglattice.coxeter import (
    RacgPresentation, Word, racg_normal_form, tits_reflections)
from racglattice.errors import DomainError
from racglattice.forms import QuadraticForm
from racglattice.linalg import Matrix
from racglattice.logger import get_logger
from racglattice.utils import chunks


@attr.s(frozen=True, auto_attribs=True)
class HnnReport:
    samples: int
    seed: int
    syllable_bound: int
    identities: Tuple[Word, ...]

    @property
    def passed(self) -> bool:
        return not self.identities


@attr.s(frozen=True, auto_attribs=True)
class CrosscheckReport:
    length_bound: int
    elements: int
    products: int
    mismatches: Tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def _random_element(rng, presentation, max_length=3) -> Tuple[int, ...]:
    length = int(rng.integers(0, max_length + 1))
    word = [int(a) + 1 for a in rng.integers(
        0, presentation.generator_count, size=length)]
    return racg_normal_form(word, presentation)


def sample_britton_word(
        rng: np.random.Generator, n: int, syllable_bound: int,
        presentation: RacgPresentation) -> Word:
    """Draws a reduced word g_0 tau^e_1 g_1 ... tau^e_m g_m

    No interior g_i between opposite powers of tau lies in the subgroup
    generated by g_1 and g_{n+1}, which tau centralizes. Membership is read
    on the support of the normal form. The word is never empty.

    """
    subgroup = {1, n + 1}
    syllables = int(rng.integers(0, syllable_bound + 1))
    signs = [int(rng.choice([1, -1])) for _ in range(syllables)]
    elements = [
        _random_element(rng, presentation) for _ in range(syllables + 1)]

    for index in range(1, syllables):
        if signs[index - 1] == -signs[index] and \
                set(elements[index]) <= subgroup:
            letter = int(rng.integers(2, n + 1))
            elements[index] = racg_normal_form(
                elements[index] + (letter,), presentation)

    if not syllables and not elements[0]:
        elements[0] = (int(rng.integers(1, n + 2)),)

    word = [f'g{a}' for a in elements[0]]
    for sign, element in zip(signs, elements[1:]):
        word.append('tau' if sign == 1 else 'tau^-1')
        word.extend(f'g{a}' for a in element)
    return tuple(word)


def _identities(words: Sequence[Word], offset: int,
                symbols: Dict[str, Matrix], dim: int) -> List[int]:
    """Indices, shifted by `offset`, of the words evaluating to the identity"""
    result = []
    for index, word in enumerate(words):
        matrix = Matrix.identity(dim)
        for symbol in word:
            matrix = matrix @ symbols[symbol]
        if matrix.is_identity:
            result.append(offset + index)
    return result


def hnn_sample_check(
        bundle: CertificateBundle,
        syllable_bound: int = 4,
        sample_count: int = 1000,
        seed: int = 0,
        njobs: int = 1,
        logger: Optional[Logger] = None) -> HnnReport:
    """Samples reduced words of the HNN extension by tau

    Parameters
    ----------
    bundle: CertificateBundle
        A polygon-2n bundle, providing the form and tau

    syllable_bound: int
        The maximal number of occurrences of tau or its inverse in a word

    sample_count: int
        The number of words to draw

    seed: int
        The seed of the random generator, the sample only depends on it

    njobs: int
        The number of parallel jobs evaluating the words

    Returns
    -------
    report: HnnReport
        Lists the sampled words evaluating to the identity, if any

    Raises
    ------
    DomainError
        if the bundle is not a polygon-2n bundle

    """
    if logger is None:
        logger = get_logger()
    if bundle.variant != 'polygon-2n' or bundle.translation is None:
        raise DomainError(
            f'the HNN check needs a polygon-2n bundle, got {bundle.variant}')

    system = tits_reflections(QuadraticForm(bundle.form))
    tau = bundle.translation.matrix
    symbols = {key: g.matrix for key, g in system.symbols.items()}
    symbols.update({'tau': tau, 'tau^-1': tau.inverse()})

    rng = np.random.default_rng(seed)
    words = [
        sample_britton_word(rng, bundle.n, syllable_bound, system.presentation)
        for _ in range(sample_count)]

    if njobs == 1:
        identities = _identities(words, 0, symbols, system.form.dim)
    else:
        logger.info('evaluating %s words on %s jobs', len(words), njobs)
        word_chunks, offsets = chunks(words, njobs)
        identities = sorted(itertools.chain(*joblib.Parallel(n_jobs=njobs)(
            joblib.delayed(_identities)(
                chunk, offset, symbols, system.form.dim)
            for chunk, offset in zip(word_chunks, offsets))))

    counterexamples = tuple(words[index] for index in identities)
    for word in counterexamples:
        logger.error('reduced word evaluates to identity: %s', ' '.join(word))
    logger.info(
        'HNN check: %s samples, %s identities', len(words),
        len(counterexamples))
    return HnnReport(len(words), seed, syllable_bound, counterexamples)


def word_problem_crosscheck(
        bundle: CertificateBundle,
        length_bound: int = 6,
        logger: Optional[Logger] = None) -> CrosscheckReport:
    """Compares the word problem of the polygon group with the matrices

    The elements are enumerated by normal forms, extending each element of
    length L by every generator. A word is trivial in the right-angled
    polygon group exactly when its normal form is empty, and this must
    agree with its matrix being the identity. Distinct elements must also
    have distinct matrices.

    Raises
    ------
    DomainError
        if the bundle is not a polygon bundle

    """
    if logger is None:
        logger = get_logger()
    if not bundle.variant.startswith('polygon'):
        raise DomainError(
            f'the cross-check needs a polygon bundle, got {bundle.variant}')

    matrices = [g.matrix for g in bundle.generators]
    presentation = RacgPresentation.cycle(len(matrices))
    known = {(): Matrix.identity(bundle.form.nrows)}
    frontier = [()]
    products = 0
    mismatches = []

    for _ in range(length_bound):
        next_frontier = []
        for word in frontier:
            for letter, generator in enumerate(matrices, start=1):
                normal = racg_normal_form(word + (letter,), presentation)
                matrix = known[word] @ generator
                products += 1
                if normal not in known:
                    known[normal] = matrix
                    next_frontier.append(normal)
                elif known[normal] != matrix:
                    mismatches.append(
                        f'{_word(word + (letter,))} reduces to '
                        f'{_word(normal)} but the matrices differ')
        frontier = next_frontier

    by_matrix = {}
    for normal, matrix in known.items():
        if normal and matrix.is_identity:
            mismatches.append(
                f'nontrivial element {_word(normal)} evaluates to identity')
        elif matrix in by_matrix:
            mismatches.append(
                f'{_word(by_matrix[matrix])} and {_word(normal)} have the '
                f'same matrix')
        else:
            by_matrix[matrix] = normal

    logger.info(
        'word problem cross-check: %s elements up to length %s, '
        '%s mismatches', len(known), length_bound, len(mismatches))
    return CrosscheckReport(
        length_bound, len(known), products, tuple(mismatches))


def _word(word: Sequence[int]) -> str:
    return ' '.join(f'r{a}' for a in word) or '1'
