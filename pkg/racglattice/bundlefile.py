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
"""Reads and writes certificate bundles as JSON files

The JSON document has the keys, in that order: "schema", "n", "variant",
"form" ({"dim", "entries"}), "generators" ([{"name", "word", "matrix"}]),
"translation" ({"p", "v", "k", "matrix"} or null), "certificates"
([{"id", "status", "evidence"}]) and "deviations". Every matrix or vector
entry is a decimal string such as "-12" or "3/2".

"""

import json
import os
import pathlib
import re
import tempfile
from fractions import Fraction
from typing import Any, Dict, List, Union

from racglattice.builder.bundle import (
    FAIL, PASS, SCHEMA_VERSION, BundleGenerator, Certificate,
    CertificateBundle, TranslationRecord)
from racglattice.builder.certify import VARIANTS
from racglattice.errors import BundleFormatError
from racglattice.linalg import Matrix
from racglattice.spheres import BundleSpheres, Hyperplane


_DECIMAL = re.compile(r'^-?[0-9]+(/[0-9]*[1-9][0-9]*)?$')


def _entries(values) -> List[str]:
    return [str(value) for value in values]


def _matrix(matrix: Matrix) -> List[List[str]]:
    return [_entries(row) for row in matrix.rows()]


def to_dict(bundle: CertificateBundle) -> Dict[str, Any]:
    translation = None
    if bundle.translation is not None:
        translation = {
            'p': _entries(bundle.translation.p),
            'v': _entries(bundle.translation.v),
            'k': bundle.translation.k,
            'matrix': _matrix(bundle.translation.matrix)}

    return {
        'schema': bundle.schema,
        'n': bundle.n,
        'variant': bundle.variant,
        'form': {
            'dim': bundle.form.nrows,
            'entries': _matrix(bundle.form)},
        'generators': [
            {'name': g.name, 'word': list(g.word), 'matrix': _matrix(g.matrix)}
            for g in bundle.generators],
        'translation': translation,
        'certificates': [
            {'id': c.id, 'status': c.status, 'evidence': c.evidence}
            for c in bundle.certificates],
        'deviations': list(bundle.deviations)}


def dumps(bundle: CertificateBundle) -> str:
    """Serializes a bundle, the output only depends on the bundle"""
    return json.dumps(to_dict(bundle), indent=1, ensure_ascii=True) + '\n'


class _Parser:
    """Validates a decoded JSON document, errors carry their location"""
    @staticmethod
    def fail(location: str, message: str):
        raise BundleFormatError(f'{location}: {message}')

    def field(self, obj, key, kind, location):
        if not isinstance(obj, dict):
            self.fail(location, 'expected an object')
        if key not in obj:
            self.fail(location, f'missing key "{key}"')
        value = obj[key]
        if kind is int and (isinstance(value, bool) or
                            not isinstance(value, int)):
            self.fail(f'{location}.{key}', 'expected an integer')
        if not isinstance(value, kind):
            self.fail(f'{location}.{key}', f'expected {kind.__name__}')
        return value

    def scalar(self, value, location) -> Fraction:
        if not isinstance(value, str) or not _DECIMAL.match(value):
            self.fail(location, f'expected a decimal string, got {value!r}')
        return Fraction(value)

    def vector(self, values, location, dim=None):
        if not isinstance(values, list) or not values:
            self.fail(location, 'expected a non-empty array')
        if dim is not None and len(values) != dim:
            self.fail(location, f'expected {dim} entries, got {len(values)}')
        return tuple(
            self.scalar(value, f'{location}[{index}]')
            for index, value in enumerate(values))

    def matrix(self, rows, location, dim=None) -> Matrix:
        if not isinstance(rows, list) or not rows:
            self.fail(location, 'expected a non-empty array of rows')
        if dim is not None and len(rows) != dim:
            self.fail(location, f'expected {dim} rows, got {len(rows)}')
        width = dim or (len(rows[0]) if isinstance(rows[0], list) else None)
        return Matrix(
            self.vector(row, f'{location}[{index}]', width)
            for index, row in enumerate(rows))

    def bundle(self, document) -> CertificateBundle:
        schema = self.field(document, 'schema', int, '$')
        if schema != SCHEMA_VERSION:
            self.fail('$.schema', f'unsupported schema version {schema}')
        n = self.field(document, 'n', int, '$')
        variant = self.field(document, 'variant', str, '$')
        if variant not in VARIANTS:
            self.fail('$.variant', f'unknown variant {variant!r}')

        form = self.field(document, 'form', dict, '$')
        dim = self.field(form, 'dim', int, '$.form')
        if dim < 1:
            self.fail('$.form.dim', f'invalid dimension {dim}')
        form = self.matrix(
            self.field(form, 'entries', list, '$.form'),
            '$.form.entries', dim)

        generators = []
        for index, generator in enumerate(
                self.field(document, 'generators', list, '$')):
            location = f'$.generators[{index}]'
            word = self.field(generator, 'word', list, location)
            if not all(isinstance(symbol, str) for symbol in word):
                self.fail(f'{location}.word', 'expected an array of strings')
            generators.append(BundleGenerator(
                name=self.field(generator, 'name', str, location),
                word=tuple(word),
                matrix=self.matrix(
                    self.field(generator, 'matrix', list, location),
                    f'{location}.matrix')))

        translation = document.get('translation') if isinstance(
            document, dict) else None
        if 'translation' not in document:
            self.fail('$', 'missing key "translation"')
        if translation is not None:
            location = '$.translation'
            translation = TranslationRecord(
                p=self.vector(
                    self.field(translation, 'p', list, location),
                    f'{location}.p', dim),
                v=self.vector(
                    self.field(translation, 'v', list, location),
                    f'{location}.v', dim),
                k=self.field(translation, 'k', int, location),
                matrix=self.matrix(
                    self.field(translation, 'matrix', list, location),
                    f'{location}.matrix', dim))

        certificates = []
        for index, certificate in enumerate(
                self.field(document, 'certificates', list, '$')):
            location = f'$.certificates[{index}]'
            status = self.field(certificate, 'status', str, location)
            if status not in (PASS, FAIL):
                self.fail(f'{location}.status', f'invalid status {status!r}')
            certificates.append(Certificate(
                id=self.field(certificate, 'id', str, location),
                status=status,
                evidence=self.field(certificate, 'evidence', str, location)))

        deviations = self.field(document, 'deviations', list, '$')
        if not all(isinstance(note, str) for note in deviations):
            self.fail('$.deviations', 'expected an array of strings')

        return CertificateBundle(
            schema=schema, n=n, variant=variant, form=form,
            generators=tuple(generators), translation=translation,
            certificates=tuple(certificates), deviations=tuple(deviations))


def loads(text: str) -> CertificateBundle:
    """Parses a bundle from its JSON text

    Raises
    ------
    BundleFormatError if the text is not valid JSON or misses a field, the
    message gives the location of the error

    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as err:
        raise BundleFormatError(
            f'line {err.lineno} column {err.colno}: {err.msg}') from None
    return _Parser().bundle(document)


def write_text(text: str, path: Union[str, pathlib.Path]):
    """Writes `text` to `path` through a temporary file and a rename

    The temporary file is removed when the write or the rename fails.

    """
    path = pathlib.Path(path)
    stream = tempfile.NamedTemporaryFile(
        'w', encoding='utf8', dir=path.parent or '.',
        prefix=f'.{path.name}.', delete=False)
    try:
        with stream:
            stream.write(text)
        os.replace(stream.name, path)
    except BaseException:
        os.unlink(stream.name)
        raise


def write_bundle(bundle: CertificateBundle, path: Union[str, pathlib.Path]):
    write_text(dumps(bundle), path)


def read_bundle(path: Union[str, pathlib.Path]) -> CertificateBundle:
    """Reads a bundle file

    Raises
    ------
    BundleFormatError if the file cannot be read or is malformed

    """
    try:
        text = pathlib.Path(path).read_text(encoding='utf8')
    except (OSError, UnicodeDecodeError) as err:
        raise BundleFormatError(f'{path}: {err}') from None
    return loads(text)


def spheres_to_dict(spheres: BundleSpheres) -> Dict[str, Any]:
    """The sphere configuration with its float-versus-exact residual table"""
    configuration = spheres.configuration
    items = []
    for label, translated, item in zip(
            spheres.labels, spheres.translated, configuration.items):
        if isinstance(item, Hyperplane):
            items.append({
                'label': label, 'translated': translated, 'kind': 'hyperplane',
                'normal': list(item.normal), 'offset': item.offset})
        else:
            items.append({
                'label': label, 'translated': translated, 'kind': 'sphere',
                'center': list(item.center), 'radius': item.radius})
    return {
        'dimension': configuration.dimension,
        'items': items,
        'residuals': [
            {'pair': [i, j], 'product': product, 'gram': gram,
             'residual': residual}
            for i, j, product, gram, residual in
            configuration.residual_table()],
        'max_residual': configuration.max_residual}


def spheres_dumps(spheres: BundleSpheres) -> str:
    return json.dumps(spheres_to_dict(spheres), indent=1) + '\n'
