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
"""Test of the HNN sampling and of the word problem cross-check"""

# pylint: disable=missing-docstring
import attr
import numpy as np
import pytest

from racglattice.build import build_2n_minus_2_gon, build_2ngon, build_even
from racglattice.builder.checks import (
    _identities, hnn_sample_check, sample_britton_word,
    word_problem_crosscheck)
from racglattice.coxeter import RacgPresentation, racg_normal_form
from racglattice.errors import DomainError
from racglattice.forms import build_Q
from racglattice.linalg import Matrix


@pytest.fixture(scope='module')
def hexagon():
    return build_2ngon(3)


def test_britton_words():
    presentation = RacgPresentation.from_form(build_Q(4))
    rng = np.random.default_rng(0)
    for _ in range(200):
        word = sample_britton_word(rng, 3, 4, presentation)
        assert word
        assert sum(s in ('tau', 'tau^-1') for s in word) <= 4

        # split on tau: no pinch tau g tau^-1 with g in <g1, g4>
        syllables, signs, current = [], [], []
        for symbol in word:
            if symbol in ('tau', 'tau^-1'):
                syllables.append(current)
                signs.append(1 if symbol == 'tau' else -1)
                current = []
            else:
                current.append(int(symbol[1:]))
        syllables.append(current)
        for index in range(1, len(signs)):
            if signs[index - 1] == -signs[index]:
                normal = racg_normal_form(syllables[index], presentation)
                assert not set(normal) <= {1, 4}


def test_hnn_deterministic(hexagon):
    first = hnn_sample_check(hexagon, sample_count=50, seed=3)
    second = hnn_sample_check(hexagon, sample_count=50, seed=3)
    assert first == second
    assert first.passed
    assert first.samples == 50
    assert first.syllable_bound == 4


@pytest.mark.parametrize('njobs', [1, 3])
def test_hnn_njobs(hexagon, njobs):
    report = hnn_sample_check(hexagon, sample_count=60, seed=1, njobs=njobs)
    assert report.passed
    assert report.samples == 60


def test_identities_offset():
    swap = Matrix([[0, 1], [1, 0]])
    symbols = {'a': Matrix.identity(2), 'b': swap}
    words = [('a',), ('b',), ('b', 'b'), ('a', 'b')]
    assert _identities(words, 0, symbols, 2) == [0, 2]
    assert _identities(words, 5, symbols, 2) == [5, 7]
    assert _identities([], 3, symbols, 2) == []


def test_hnn_njobs_counterexamples(hexagon):
    # with tau the identity, the reduced words collapse to RACG words
    translation = attr.evolve(
        hexagon.translation, matrix=Matrix.identity(hexagon.form.nrows))
    bundle = attr.evolve(hexagon, translation=translation)
    reports = [
        hnn_sample_check(bundle, sample_count=400, seed=2, njobs=njobs)
        for njobs in (1, 3)]
    assert not reports[0].passed
    assert reports[0].identities == reports[1].identities


def test_hnn_invalid():
    with pytest.raises(DomainError):
        hnn_sample_check(build_even(4), sample_count=1)
    with pytest.raises(DomainError):
        hnn_sample_check(build_2n_minus_2_gon(4), sample_count=1)


def test_crosscheck(hexagon):
    report = word_problem_crosscheck(hexagon, length_bound=4)
    assert report.passed, report.mismatches
    # 1 + 6 + 24 + 90 + 336 elements of length <= 4 in the hexagon group
    assert report.elements == 457
    assert report.products == 6 * (1 + 6 + 24 + 90)


def test_crosscheck_detects_collision(hexagon):
    # g1 in place of g3 makes distinct elements collide
    generators = list(hexagon.generators)
    generators[2] = generators[0]
    bundle = attr.evolve(hexagon, generators=tuple(generators))
    report = word_problem_crosscheck(bundle, length_bound=2)
    assert not report.passed


def test_crosscheck_invalid():
    with pytest.raises(DomainError):
        word_problem_crosscheck(build_even(4))
