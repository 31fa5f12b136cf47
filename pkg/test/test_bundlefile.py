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
"""Test of the bundle files"""

# pylint: disable=missing-docstring
import json

import pytest

from racglattice import bundlefile
from racglattice.build import build, build_2ngon, build_odd_projected
from racglattice.errors import BundleFormatError
from racglattice.spheres import bundle_spheres


@pytest.fixture(scope='module')
def hexagon():
    return build_2ngon(3)


@pytest.fixture
def document(hexagon):
    return bundlefile.to_dict(hexagon)


def _error(document):
    with pytest.raises(BundleFormatError) as err:
        bundlefile.loads(json.dumps(document))
    return str(err.value)


def test_layout(hexagon):
    text = bundlefile.dumps(hexagon)
    assert text.endswith('}\n')
    assert text.isascii()
    assert list(json.loads(text)) == [
        'schema', 'n', 'variant', 'form', 'generators', 'translation',
        'certificates', 'deviations']

    document = json.loads(text)
    assert document['form'] == {
        'dim': 4,
        'entries': [
            ['1', '0', '-1', '-1'],
            ['0', '1', '0', '-1'],
            ['-1', '0', '1', '0'],
            ['-1', '-1', '0', '1']]}
    assert document['generators'][4]['word'] == ['tau', 'g3', 'tau^-1']
    assert document['translation']['k'] == 2
    assert document['translation']['p'] == ['1', '0', '0', '1']
    assert document['certificates'][0] == {
        'id': 'form-definition', 'status': 'pass', 'evidence': 'form is Q_4'}


def test_reproducible():
    assert bundlefile.dumps(build_2ngon(3)) == bundlefile.dumps(build_2ngon(3))


def test_loads(hexagon):
    assert bundlefile.loads(bundlefile.dumps(hexagon)) == hexagon
    bundle = build_odd_projected(5)
    loaded = bundlefile.loads(bundlefile.dumps(bundle))
    assert loaded == bundle
    assert loaded.translation is None


ROUND_TRIPS = (
    [('polygon-2n', n) for n in range(3, 11)]
    + [('polygon-2n-2', n) for n in range(4, 11)]
    + [('even-prime', n) for n in range(4, 11, 2)]
    + [('odd-projected', n) for n in range(5, 11, 2)])


@pytest.mark.parametrize('variant, n', ROUND_TRIPS)
def test_round_trip(variant, n):
    bundle = build(n, variant=variant)
    text = bundlefile.dumps(bundle)
    loaded = bundlefile.loads(text)
    assert loaded == bundle
    assert bundlefile.dumps(loaded) == text


def test_read_write(hexagon, tmp_path):
    path = tmp_path / 'hexagon.json'
    bundlefile.write_bundle(hexagon, path)
    assert bundlefile.read_bundle(path) == hexagon
    assert list(tmp_path.iterdir()) == [path]

    with pytest.raises(BundleFormatError):
        bundlefile.read_bundle(tmp_path / 'missing.json')


def test_write_failures(tmp_path):
    # a lone surrogate cannot be encoded in utf8
    with pytest.raises(UnicodeEncodeError):
        bundlefile.write_text('\ud800', tmp_path / 'bundle.json')
    assert list(tmp_path.iterdir()) == []

    # the rename onto a directory fails
    target = tmp_path / 'bundle.json'
    target.mkdir()
    with pytest.raises(OSError):
        bundlefile.write_text('{}\n', target)
    assert list(tmp_path.iterdir()) == [target]


def test_not_json():
    with pytest.raises(BundleFormatError) as err:
        bundlefile.loads('{"schema": 1,')
    assert 'line 1' in str(err.value)


def test_schema(document):
    document['schema'] = 2
    assert _error(document).startswith('$.schema: unsupported')

    document['schema'] = '1'
    assert _error(document) == '$.schema: expected an integer'

    del document['schema']
    assert _error(document) == '$: missing key "schema"'


def test_variant(document):
    document['variant'] = 'square'
    assert _error(document).startswith('$.variant')


def test_entries(document):
    document['form']['entries'][0][0] = '1.5'
    assert _error(document).startswith('$.form.entries[0][0]')

    document['form']['entries'][0][0] = 1
    assert _error(document).startswith('$.form.entries[0][0]')

    document['form']['entries'][0][0] = '3/0'
    assert _error(document).startswith('$.form.entries[0][0]')

    document['form']['entries'][0][0] = '-3/2'
    assert bundlefile.loads(json.dumps(document)).form.entry(1, 1) == \
        pytest.approx(-1.5)


def test_shapes(document):
    document['form']['entries'].pop()
    assert _error(document) == '$.form.entries: expected 4 rows, got 3'


def test_generators(document):
    document['generators'][1]['word'] = ['g2', 2]
    assert _error(document) == \
        '$.generators[1].word: expected an array of strings'

    del document['generators'][1]['word']
    assert _error(document) == '$.generators[1]: missing key "word"'


def test_translation(document):
    document['translation']['p'] = ['1', '0', '0']
    assert _error(document) == \
        '$.translation.p: expected 4 entries, got 3'

    del document['translation']
    assert _error(document) == '$: missing key "translation"'


def test_certificates(document):
    document['certificates'][3]['status'] = 'ok'
    assert _error(document) == \
        "$.certificates[3].status: invalid status 'ok'"


def test_deviations(document):
    document['deviations'] = [1]
    assert _error(document) == '$.deviations: expected an array of strings'


def test_spheres(hexagon):
    document = bundlefile.spheres_to_dict(bundle_spheres(hexagon))
    assert document['dimension'] == 2
    assert [item['kind'] for item in document['items']] == [
        'hyperplane', 'sphere', 'sphere', 'hyperplane', 'sphere', 'sphere']
    assert [item['label'] for item in document['items']][-1] == 'tau S2'
    assert len(document['residuals']) == 15
    assert document['max_residual'] < 1e-9

    text = bundlefile.spheres_dumps(bundle_spheres(hexagon))
    assert json.loads(text) == json.loads(json.dumps(document))
