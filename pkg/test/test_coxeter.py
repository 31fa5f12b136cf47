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
"""Test of the racglattice.coxeter module"""

# pylint: disable=missing-docstring
import itertools

import numpy as np
import pytest

from racglattice.coxeter import (
    RacgPresentation, eval_word, is_connected, normalize_symbol, parse_word,
    racg_normal_form, scheme_is_irreducible, tits_reflection,
    tits_reflections)
from racglattice.errors import DomainError
from racglattice.forms import QuadraticForm, build_Q, build_Q_prime
from racglattice.linalg import Matrix


def test_symbols():
    assert normalize_symbol(3) == 'g3'
    assert normalize_symbol('γ2') == 'g2'
    assert normalize_symbol('τ') == 'tau'
    assert normalize_symbol('τ^-1') == 'tau^-1'
    assert parse_word('g1 γ2  tau') == ('g1', 'g2', 'tau')
    assert parse_word([1, 'g2']) == ('g1', 'g2')
    assert parse_word('') == ()


def test_is_connected():
    assert is_connected(1, [])
    assert is_connected(3, [(0, 1), (1, 2)])
    assert not is_connected(3, [(0, 1)])


def test_tits_reflection_q4():
    assert tits_reflection(build_Q(4), 1) == Matrix([
        [-1, 0, 2, 2],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1]])


@pytest.mark.parametrize('form', [
    build_Q(4), build_Q(7), build_Q_prime(5), build_Q_prime(6)])
def test_tits_reflections(form):
    system = tits_reflections(form)
    identity = Matrix.identity(form.dim)
    assert len(system.generators) == form.dim
    assert list(system.symbols) == [f'g{i}' for i in range(1, form.dim + 1)]
    for i, j in itertools.combinations(range(1, form.dim + 1), 2):
        product = system.generator(i).matrix @ system.generator(j).matrix
        if form.entry(i, j) == 0:
            # right angle
            assert product @ product == identity
            assert system.presentation.commute(i, j)
        else:
            assert product @ product != identity
            assert not system.presentation.commute(i, j)
    for generator in system.generators:
        assert form.preserved_by(generator.matrix)
        assert generator.matrix @ generator.matrix == identity


def test_tits_reflections_unit_diagonal():
    with pytest.raises(DomainError):
        tits_reflections(QuadraticForm(Matrix([[2, 0], [0, 1]])))


def test_scheme_irreducible():
    assert scheme_is_irreducible(build_Q(5))
    assert scheme_is_irreducible(build_Q_prime(6).matrix)
    assert not scheme_is_irreducible(Matrix.identity(3))


def test_presentation():
    hexagon = RacgPresentation.cycle(6)
    assert hexagon.commute(1, 2)
    assert hexagon.commute(6, 1)
    assert not hexagon.commute(1, 3)
    assert RacgPresentation.from_form(build_Q_prime(6)) == hexagon

    with pytest.raises(DomainError):
        RacgPresentation.cycle(2)
    with pytest.raises(DomainError):
        hexagon.check_index(7)
    with pytest.raises(DomainError):
        hexagon.check_index(0)


@pytest.mark.parametrize('word, expected', [
    ((), ()),
    ((1, 1), ()),
    ((2, 1), (1, 2)),
    ((1, 3), (1, 3)),
    ((3, 1), (3, 1)),
    ((1, 2, 1), (2,)),
    ((1, 3, 1), (1, 3, 1)),
    ((2, 1, 3, 3, 2), (1,)),
    ((6, 1, 6), (1,)),
    ((4, 3, 2, 1), (3, 4, 1, 2))])
def test_normal_form(word, expected):
    assert racg_normal_form(word, RacgPresentation.cycle(6)) == expected


def test_normal_form_invalid():
    with pytest.raises(DomainError):
        racg_normal_form((1, 7), RacgPresentation.cycle(6))


def test_normal_form_matches_matrices():
    # the Tits representation of the hexagon group of Q'_6 is faithful
    form = build_Q_prime(6)
    system = tits_reflections(form)
    presentation = RacgPresentation.cycle(6)
    for word in itertools.product(range(1, 7), repeat=4):
        normal = racg_normal_form(word, presentation)
        assert eval_word(word, system).matrix == eval_word(
            normal, system).matrix
        assert (not normal) == eval_word(word, system).is_identity


def _random_word(rng, count, length):
    return tuple(int(k) for k in rng.integers(1, count + 1, size=length))


def _shuffle_commuting(rng, word, presentation):
    # swaps random adjacent letters that commute
    word = list(word)
    for _ in range(4 * len(word)):
        k = int(rng.integers(0, len(word) - 1))
        if presentation.commute(word[k], word[k + 1]):
            word[k], word[k + 1] = word[k + 1], word[k]
    return tuple(word)


@pytest.mark.parametrize('form', [build_Q(5), build_Q_prime(6)])
def test_normal_form_commuting_shuffles(form):
    rng = np.random.default_rng(0)
    presentation = RacgPresentation.from_form(form)
    for length in range(2, 13):
        for _ in range(20):
            word = _random_word(rng, form.dim, length)
            normal = racg_normal_form(word, presentation)
            assert racg_normal_form(normal, presentation) == normal
            assert racg_normal_form(
                _shuffle_commuting(rng, word, presentation),
                presentation) == normal


@pytest.mark.parametrize('form', [build_Q(4), build_Q(5), build_Q_prime(6)])
def test_random_words(form):
    rng = np.random.default_rng(1)
    system = tits_reflections(form)
    presentation = RacgPresentation.from_form(form)
    for length in range(13):
        for _ in range(5):
            word = _random_word(rng, form.dim, length)
            element = eval_word(word, system)
            normal = racg_normal_form(word, presentation)
            assert form.preserved_by(element.matrix)
            assert element.matrix == eval_word(normal, system).matrix
            assert element.is_identity == (not normal)


def test_eval_word():
    system = tits_reflections(build_Q(4))
    element = eval_word('g1 g2', system)
    assert element.word == ('g1', 'g2')
    assert element.matrix == system.generator(1).matrix @ \
        system.generator(2).matrix
    assert eval_word('γ1 γ1', system).is_identity
    assert (system.generator(1) @ system.generator(1)).is_identity

    extra = {'tau': Matrix.identity(4)}
    assert eval_word(['tau', 'g3'], system, extra).matrix == \
        system.generator(3).matrix

    with pytest.raises(DomainError) as err:
        eval_word('g1 tau', system)
    assert "unknown symbol 'tau'" in str(err)
