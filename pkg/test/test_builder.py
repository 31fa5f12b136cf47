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
"""Test of the bundle builders and of the certificates"""

# pylint: disable=missing-docstring
import importlib
import logging

import attr
import pytest

from racglattice import build
from racglattice.build import (
    build_2n_minus_2_gon, build_2ngon, build_even, build_odd_projected)
from racglattice.builder import BUILDERS, CLI_VARIANTS, verify
from racglattice.builder.bundle import FAIL, PASS, SCHEMA_VERSION
from racglattice.builder.certify import (
    CERTIFICATE_IDS, certify, expected_words, word_name)
from racglattice.builder.polygon import Polygon2nBuilder
from racglattice.errors import DomainError
from racglattice.forms import build_Q, build_Q_prime, distinguished_vectors
from racglattice.linalg import Matrix, vector


@pytest.fixture(scope='module')
def hexagon():
    return build_2ngon(3)


def test_variants():
    assert list(BUILDERS) == [
        'polygon-2n', 'polygon-2n-2', 'even-prime', 'odd-projected']
    assert CLI_VARIANTS == {
        'polygon2n': 'polygon-2n',
        'polygon2n-2': 'polygon-2n-2',
        'even': 'even-prime',
        'odd-project': 'odd-projected'}
    for builder in BUILDERS.values():
        assert builder.description()


def test_words():
    assert expected_words('polygon-2n', 3) == [
        ('g1',), ('g2',), ('g3',), ('g4',),
        ('tau', 'g3', 'tau^-1'), ('tau', 'g2', 'tau^-1')]
    assert len(expected_words('polygon-2n-2', 5)) == 8
    assert expected_words('odd-projected', 5)[-1] == ('pi', 'g6')
    assert word_name(('tau', 'g3', 'tau^-1')) == 'tau g3 tau^-1'
    assert word_name(('pi', 'g3')) == 'pi(g3)'
    with pytest.raises(DomainError):
        expected_words('square', 3)


def test_hexagon(hexagon):
    assert hexagon.schema == SCHEMA_VERSION
    assert hexagon.variant == 'polygon-2n'
    assert hexagon.n == 3
    assert hexagon.form == build_Q(4).matrix
    assert [g.name for g in hexagon.generators] == [
        'g1', 'g2', 'g3', 'g4', 'tau g3 tau^-1', 'tau g2 tau^-1']
    assert [c.id for c in hexagon.certificates] == list(
        CERTIFICATE_IDS['polygon-2n'])
    assert hexagon.passed, hexagon.failed
    assert hexagon.deviations

    translation = hexagon.translation
    assert translation.p == vector([1, 0, 0, 1])
    assert translation.v == vector([2, -2, 2, 0])
    assert translation.k == 2
    assert hexagon.certificate('power-search').evidence == \
        'minimal passing power k = 2'

    tau = translation.matrix
    assert hexagon.generator('tau g3 tau^-1').matrix == \
        tau @ hexagon.generator('g3').matrix @ tau.inverse()
    with pytest.raises(KeyError):
        hexagon.generator('g5')
    with pytest.raises(KeyError):
        hexagon.certificate('unknown')


@pytest.mark.parametrize('n', [4, 5])
def test_polygon_2n(n):
    bundle = build_2ngon(n)
    assert len(bundle.generators) == 2 * n
    assert bundle.passed, bundle.failed
    assert bundle.translation.k >= 1


@pytest.mark.parametrize('n', [4, 5])
def test_polygon_2n_minus_2(n):
    bundle = build_2n_minus_2_gon(n)
    assert len(bundle.generators) == 2 * n - 2
    assert [c.id for c in bundle.certificates] == list(
        CERTIFICATE_IDS['polygon-2n-2'])
    assert bundle.passed, bundle.failed
    assert bundle.certificate('translation-moves-orthogonal').passed


@pytest.mark.parametrize('n', [4, 6])
def test_even(n):
    bundle = build_even(n)
    assert bundle.form == build_Q_prime(n + 1).matrix
    assert bundle.translation is None
    assert len(bundle.generators) == n + 1
    assert bundle.passed, bundle.failed


@pytest.mark.parametrize('n', [5, 7])
def test_odd(n):
    bundle = build_odd_projected(n)
    assert len(bundle.generators) == 2 * (n + 1)
    assert bundle.generators[n + 1].name == 'pi(g1)'
    assert bundle.generator('pi(g1)').matrix.shape == (n, n)
    assert [c.id for c in bundle.certificates] == list(
        CERTIFICATE_IDS['odd-projected'])
    assert bundle.passed, bundle.failed


@pytest.mark.parametrize('n, variant', [
    (2, 'polygon-2n'), (3, 'polygon-2n-2'), (5, 'even-prime'),
    (2, 'even-prime'), (4, 'odd-projected'), (3, 'odd-projected'),
    (3.0, 'polygon-2n'), (3, 'polygon3n')])
def test_invalid(n, variant):
    with pytest.raises(DomainError):
        build(n, variant=variant)


def test_parity_hint():
    with pytest.raises(DomainError) as err:
        build(5, variant='even')
    assert 'odd-projected' in str(err)


def test_cli_spelling():
    assert build(4, variant='even').variant == 'even-prime'


def test_exhausted(caplog):
    builder = Polygon2nBuilder(3, max_power=1)
    with caplog.at_level(logging.WARNING):
        bundle = builder.build()
    assert builder.exhausted
    assert bundle.translation.k == 1
    failed = [c.id for c in bundle.failed]
    assert 'power-search' in failed
    assert 'gram-pattern' in failed
    assert bundle.certificate('translation-consistency').passed
    assert 'no power k <= 1 gives a 6-gon' in caplog.text


def test_max_power_env(monkeypatch):
    monkeypatch.setenv('RACGLATTICE_MAX_POWER', '1')
    assert Polygon2nBuilder(3).max_power == 1
    assert not build(3).passed


def test_verify(hexagon):
    report = verify(hexagon)
    assert report.passed
    assert report.stored == report.recomputed
    assert not report.mismatches
    assert not report.failed


def test_verify_flipped_status(hexagon):
    certificates = list(hexagon.certificates)
    certificates[0] = attr.evolve(certificates[0], status=FAIL)
    report = verify(attr.evolve(hexagon, certificates=tuple(certificates)))
    assert not report.passed
    assert report.mismatches == ('form-definition',)
    assert not report.failed


def test_verify_reordered(hexagon):
    bundle = attr.evolve(
        hexagon, certificates=tuple(reversed(hexagon.certificates)))
    assert not verify(bundle).passed


def test_verify_tampered_generator(hexagon):
    generators = list(hexagon.generators)
    matrix = generators[4].matrix
    generators[4] = attr.evolve(
        generators[4], matrix=matrix.replace(1, 1, matrix.entry(1, 1) + 1))
    report = verify(attr.evolve(hexagon, generators=tuple(generators)))
    assert not report.passed
    assert 'generator-words' in report.failed


def test_verify_tampered_translation(hexagon):
    tau = hexagon.translation.matrix
    translation = attr.evolve(
        hexagon.translation, matrix=tau.replace(2, 3, tau.entry(2, 3) - 1))
    report = verify(attr.evolve(hexagon, translation=translation))
    assert not report.passed
    assert 'translation-consistency' in report.failed


def test_certify_failures(hexagon):
    # a non-symmetric form fails the checks, it does not raise
    form = hexagon.form.replace(1, 2, 5)
    certificates = certify(
        'polygon-2n', 3, form, hexagon.generators, hexagon.translation)
    statuses = {c.id: c.status for c in certificates}
    assert statuses['form-definition'] == FAIL
    assert statuses['signature'] == FAIL
    assert 'ContractViolation' in certificates[1].evidence

    # no translation
    certificates = certify(
        'polygon-2n', 3, hexagon.form, hexagon.generators, None)
    statuses = {c.id: c.status for c in certificates}
    assert statuses['form-definition'] == PASS
    assert statuses['translation-consistency'] == FAIL
    assert statuses['conjugation-fixed'] == FAIL

    with pytest.raises(DomainError):
        certify('square', 3, hexagon.form, hexagon.generators, None)


def test_certify_wrong_identity():
    bundle = build_even(4)
    generators = list(bundle.generators)
    generators[0], generators[1] = generators[1], generators[0]
    certificates = certify(
        'even-prime', 4, bundle.form, generators, None)
    statuses = {c.id: c.status for c in certificates}
    assert statuses['generator-words'] == FAIL
    assert statuses['form-preservation'] == PASS


def test_parabolic_witnesses(hexagon, monkeypatch):
    certificate = hexagon.certificate('parabolic-witnesses')
    assert certificate.passed
    assert certificate.evidence == '3 tangent pairs give parabolic elements'

    def moved(form):
        vectors = distinguished_vectors(form)
        tangency = dict(vectors.tangency)
        tangency[(1, 3)] = vectors.all_ones
        return attr.evolve(vectors, tangency=tangency)

    monkeypatch.setattr(
        importlib.import_module('racglattice.builder.certify'),
        'distinguished_vectors', moved)
    certificates = certify(
        'polygon-2n', 3, hexagon.form, hexagon.generators, hexagon.translation)
    witnesses = [c for c in certificates if c.id == 'parabolic-witnesses'][0]
    assert witnesses.status == FAIL
    assert witnesses.evidence.startswith('g1 g3 moves the tangency point')


def test_nonuniformity_witness(hexagon):
    product = hexagon.generator('g1').matrix @ hexagon.generator('g3').matrix
    assert product != Matrix.identity(4)
    assert hexagon.certificate('nonuniformity').passed
