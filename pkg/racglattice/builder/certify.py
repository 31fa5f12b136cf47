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
"""Computes the certificates of a bundle from its stored data

The same routine is used when building a bundle and when verifying one read
from disk, so a bundle is accepted exactly when a rebuild of its
certificates from the stored form, generators and translation agrees with
the stored statuses.

"""

import functools
import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from racglattice.builder.bundle import (
    FAIL, PASS, BundleGenerator, Certificate, TranslationRecord)
from racglattice.coxeter import (
    RacgPresentation, eval_word, racg_normal_form, tits_reflections)
from racglattice.errors import DomainError, RacgError
from racglattice.forms import (
    QuadraticForm, all_ones, all_ones_value, alternating_signs, build_Q,
    build_Q_prime, common_orthogonal, distinguished_vectors, tangency_point)
from racglattice.linalg import (
    Matrix, is_integral_vector, is_unipotent, scale, unit)
from racglattice.logger import get_logger
from racglattice.minkowski import (
    polygon_gram_certificate, preserves_sheets, transvection_matrix,
    zariski_density_certificate)
from racglattice.projection import project_pi, project_vector


VARIANTS = ('polygon-2n', 'polygon-2n-2', 'even-prime', 'odd-projected')

SAMPLE_SEED = 0
"""Seed of the sampled checks of the odd projection"""


def expected_words(variant: str, n: int) -> List[Tuple[str, ...]]:
    """Returns the words of the generators a bundle of `variant` holds"""
    if variant == 'polygon-2n':
        return (
            [(f'g{i}',) for i in range(1, n + 2)]
            + [('tau', f'g{j}', 'tau^-1') for j in range(n, 1, -1)])
    if variant == 'polygon-2n-2':
        return (
            [(f'g{i}',) for i in range(1, n + 1)]
            + [('tau', f'g{j}', 'tau^-1') for j in range(n - 1, 1, -1)])
    if variant == 'even-prime':
        return [(f'g{i}',) for i in range(1, n + 2)]
    if variant == 'odd-projected':
        return (
            [(f'g{i}',) for i in range(1, n + 2)]
            + [('pi', f'g{i}') for i in range(1, n + 2)])
    raise DomainError(f'unknown variant {variant}')


def word_name(word: Sequence[str]) -> str:
    """'tau g3 tau^-1' or 'pi(g3)'"""
    if word and word[0] == 'pi':
        return f'pi({" ".join(word[1:])})'
    return ' '.join(word)


def tangent_pair(variant: str, n: int) -> Tuple[int, int]:
    """The tangent pair whose tangency point the translation fixes"""
    return (1, n + 1) if variant == 'polygon-2n' else (1, n)


def expected_form(variant: str, n: int) -> QuadraticForm:
    if variant in ('polygon-2n', 'polygon-2n-2'):
        return build_Q(n + 1)
    return build_Q_prime(n + 1)


def expected_signature(variant: str, n: int) -> Tuple[int, int, int]:
    if variant == 'odd-projected':
        return n - 1, 1, 1
    return n, 1, 0


def polygon_normals(
        variant: str, n: int, tau: Optional[Matrix]) -> List[Tuple]:
    """The cyclic list of unit normals of the polygon of a variant

    e_1, ..., e_{n+1}, tau e_n, ..., tau e_2 for the 2n-gon, e_1, ..., e_n,
    tau e_{n-1}, ..., tau e_2 for the 2(n-1)-gon and e_1, ..., e_{n+1}
    otherwise.

    """
    dim = n + 1
    if variant == 'polygon-2n':
        return (
            [unit(dim, i) for i in range(1, n + 2)]
            + [tau.column(j) for j in range(n, 1, -1)])
    if variant == 'polygon-2n-2':
        return (
            [unit(dim, i) for i in range(1, n + 1)]
            + [tau.column(j) for j in range(n - 1, 1, -1)])
    return [unit(dim, i) for i in range(1, n + 2)]


def polygon_size(variant: str, n: int) -> int:
    return {
        'polygon-2n': 2 * n,
        'polygon-2n-2': 2 * n - 2}.get(variant, n + 1)


class _Context:
    """Lazily recomputed data shared by the checks of one bundle"""
    def __init__(self, variant, n, form, generators, translation):
        self.variant = variant
        self.n = n
        self.stored_form = form
        self.generators = tuple(generators)
        self.translation = translation

    @functools.cached_property
    def form(self) -> QuadraticForm:
        return QuadraticForm(self.stored_form)

    @functools.cached_property
    def system(self):
        return tits_reflections(self.form)

    @functools.cached_property
    def tau(self) -> Matrix:
        if self.translation is None:
            raise DomainError('the bundle has no translation')
        return self.translation.matrix

    @functools.cached_property
    def tau_inverse(self) -> Matrix:
        return self.tau.inverse()

    @functools.cached_property
    def projected_form(self) -> QuadraticForm:
        return build_Q(self.n)

    @property
    def base(self) -> Tuple[BundleGenerator, ...]:
        """Generators acting on the stored form"""
        return tuple(g for g in self.generators if g.word[:1] != ('pi',))

    @property
    def projected(self) -> Tuple[BundleGenerator, ...]:
        return tuple(g for g in self.generators if g.word[:1] == ('pi',))

    def groups(self):
        """Pairs (generators, form) of the polygons held by the bundle"""
        groups = [(self.base, self.form)]
        if self.projected:
            groups.append((self.projected, self.projected_form))
        return groups

    def matrices(self) -> List[Tuple[str, Matrix, QuadraticForm]]:
        """All the stored matrices with the form they act on"""
        matrices = [
            (g.name, g.matrix, form)
            for generators, form in self.groups() for g in generators]
        if self.translation is not None:
            matrices.append(('tau', self.tau, self.form))
        return matrices

    def named(self, name: str) -> Matrix:
        for generator in self.generators:
            if generator.name == name:
                return generator.matrix
        raise DomainError(f'the bundle has no generator {name}')

    @functools.cached_property
    def normals(self):
        tau = self.tau if self.variant.startswith('polygon') else None
        return polygon_normals(self.variant, self.n, tau)

    @functools.cached_property
    def projected_normals(self):
        return [project_vector(self.n, u) for u in self.normals]


def _first_mismatch(stored: Matrix, expected: Matrix) -> str:
    if stored.shape != expected.shape:
        return f'shape {stored.shape}, expected {expected.shape}'
    for i in range(stored.nrows):
        for j in range(stored.ncols):
            if stored[i, j] != expected[i, j]:
                return (
                    f'entry ({i + 1}, {j + 1}) is {stored[i, j]}, '
                    f'expected {expected[i, j]}')
    return 'equal'  # pragma: nocover


def _check_form_definition(ctx):
    expected = expected_form(ctx.variant, ctx.n)
    if ctx.stored_form == expected.matrix:
        return True, f'form is {expected.name}'
    return False, (
        f'form differs from {expected.name}: '
        f'{_first_mismatch(ctx.stored_form, expected.matrix)}')


def _check_signature(ctx):
    signature = ctx.form.signature
    expected = expected_signature(ctx.variant, ctx.n)
    return signature.astuple() == expected, (
        f'signature {signature}, expected {expected}')


def _check_kernel(ctx):
    vectors = distinguished_vectors(ctx.form)
    return len(ctx.form.kernel) == 1 and \
        vectors.radical == vectors.alt_signs, (
        f'kernel basis {[list(map(str, k)) for k in ctx.form.kernel]}')


def _check_all_ones(ctx):
    value = ctx.form.norm(all_ones(ctx.form.dim))
    expected = all_ones_value(ctx.n, prime=ctx.variant.endswith(
        ('prime', 'projected')))
    return value == expected and value < 0, (
        f'all-ones norm {value}, expected {expected}')


def _evaluate(ctx, word: Sequence[str]) -> Matrix:
    if word[:1] == ('pi',):
        return project_pi(ctx.n, _evaluate(ctx, word[1:]))
    extra = {}
    if ctx.translation is not None:
        extra = {'tau': ctx.tau, 'tau^-1': ctx.tau_inverse}
    return eval_word(word, ctx.system, extra).matrix


def _check_generator_words(ctx):
    words = [g.word for g in ctx.generators]
    expected = expected_words(ctx.variant, ctx.n)
    if words != expected:
        return False, f'generator words {words}, expected {expected}'
    for generator in ctx.generators:
        if generator.name != word_name(generator.word):
            return False, (
                f'generator {generator.name} is named after '
                f'{word_name(generator.word)}')
        matrix = _evaluate(ctx, generator.word)
        if generator.matrix != matrix:
            return False, (
                f'{generator.name}: '
                f'{_first_mismatch(generator.matrix, matrix)}')
    return True, f'{len(words)} generators match their words'


def _check_translation_consistency(ctx):
    record = ctx.translation
    if record is None:
        return False, 'no translation'
    i, j = tangent_pair(ctx.variant, ctx.n)
    form = ctx.form
    p = tangency_point(form, i, j)
    if record.p != p:
        return False, f'p = {record.p}, expected the tangency point {p}'
    if record.k < 1:
        return False, f'power k = {record.k} must be positive'
    if not is_integral_vector(record.v) or len(record.v) != form.dim:
        return False, f'v = {record.v} is not an integral vector'
    if form.bilinear(record.v, p) != 0:
        return False, f'v = {record.v} is not orthogonal to p'
    for index in (i, j):
        if form.bilinear(record.v, unit(form.dim, index)) != 0:
            return False, f'v = {record.v} is not orthogonal to e_{index}'
    if form.norm(record.v) % 2:
        return False, f'v = {record.v} has odd norm'
    expected = transvection_matrix(form, p, scale(record.k, record.v))
    if record.matrix != expected:
        return False, (
            f'tau differs from E(p, {record.k} v): '
            f'{_first_mismatch(record.matrix, expected)}')
    return True, (
        f'tau = E(p, {record.k} v) with p = {_vec(p)}, v = {_vec(record.v)}')


def _check_translation_moves(ctx):
    u = common_orthogonal(ctx.form, range(1, ctx.n + 1))
    value = ctx.form.bilinear(ctx.translation.v, u)
    return value != 0, f'B(v, u_S) = {value} with u_S = {_vec(u)}'


def _check_translation_unipotent(ctx):
    tau, form = ctx.tau, ctx.form
    checks = {
        'unipotent': is_unipotent(tau),
        'det 1': tau.determinant() == 1,
        'fixes p': tau @ ctx.translation.p == ctx.translation.p,
        'preserves form': form.preserved_by(tau),
        'nontrivial': not tau.is_identity}
    failed = [name for name, ok in checks.items() if not ok]
    return not failed, (
        f'tau fails {", ".join(failed)}' if failed
        else 'tau is a nontrivial unipotent isometry fixing p')


def _check_conjugation_fixed(ctx):
    for index in tangent_pair(ctx.variant, ctx.n):
        gamma = ctx.system.generator(index).matrix
        conjugate = ctx.tau @ gamma @ ctx.tau_inverse
        if conjugate != gamma:
            return False, f'tau g{index} tau^-1 differs from g{index}'
        column = ctx.tau.column(index)
        if column != unit(ctx.form.dim, index):
            return False, f'tau moves e_{index}'
    i, j = tangent_pair(ctx.variant, ctx.n)
    return True, f'tau fixes e_{i}, e_{j} and commutes with g{i}, g{j}'


def _check_involutions(ctx):
    for generators, form in ctx.groups():
        identity = Matrix.identity(form.dim)
        for g in generators:
            if g.matrix @ g.matrix != identity:
                return False, f'{g.name} squared is not the identity'
            if g.matrix.determinant() != -1:
                return False, f'{g.name} has determinant {g.matrix.determinant()}'
    return True, f'{len(ctx.generators)} involutions of determinant -1'


def _check_form_preservation(ctx):
    for name, matrix, form in ctx.matrices():
        if not form.preserved_by(matrix):
            return False, f'{name} does not preserve {form.name}'
    return True, f'{len(ctx.matrices())} matrices preserve the form'


def _check_integrality(ctx):
    for name, matrix, _ in ctx.matrices():
        if not matrix.is_integral:
            return False, f'{name} has a non-integral entry'
    return True, f'{len(ctx.matrices())} integral matrices'


def _check_sheets(ctx):
    for name, matrix, form in ctx.matrices():
        if not preserves_sheets(matrix, form, all_ones(form.dim)):
            return False, f'{name} swaps the sheets'
    return True, f'{len(ctx.matrices())} matrices preserve each sheet'


def _check_relations(ctx):
    count = 0
    for generators, form in ctx.groups():
        identity = Matrix.identity(form.dim)
        size = len(generators)
        for index in range(size):
            first = generators[index]
            second = generators[(index + 1) % size]
            product = first.matrix @ second.matrix
            if product.is_identity or product @ product != identity:
                return False, (
                    f'{first.name} and {second.name} do not generate '
                    f'a right angle')
            count += 1
    return True, f'{count} consecutive pairs commute'


def _check_parabolic_witnesses(ctx):
    count = 0
    form = ctx.form
    tangency = distinguished_vectors(form).tangency
    for i in range(1, form.dim + 1):
        for j in range(i + 1, form.dim + 1):
            if form.entry(i, j) != -1:
                continue
            product = (
                ctx.system.generator(i).matrix
                @ ctx.system.generator(j).matrix)
            nilpotent = product - Matrix.identity(form.dim)
            if product.is_identity or not (
                    nilpotent ** 3 == Matrix.zeros(form.dim, form.dim)):
                return False, f'g{i} g{j} is not a nontrivial unipotent'
            # degenerate forms have no tangency points
            p = tangency.get((i, j))
            if p is not None and product @ p != p:
                return False, f'g{i} g{j} moves the tangency point {p}'
            count += 1
    return True, f'{count} tangent pairs give parabolic elements'


def _gram(ctx, normals, form, size):
    certificate = polygon_gram_certificate(normals, form, expected_size=size)
    if certificate.passed:
        return True, (
            f'{certificate.size}-gon, min non-adjacent separation '
            f'{certificate.min_separation}')
    return False, certificate.evidence


def _check_gram_pattern(ctx):
    return _gram(
        ctx, ctx.normals, ctx.form, polygon_size(ctx.variant, ctx.n))


def _check_projected_gram_pattern(ctx):
    return _gram(ctx, ctx.projected_normals, ctx.projected_form, ctx.n + 1)


def _check_power_search(ctx):
    record = ctx.translation
    if not polygon_gram_certificate(
            ctx.normals, ctx.form,
            polygon_size(ctx.variant, ctx.n)).passed:
        return False, f'no passing power up to k = {record.k}'
    if record.k > 1:
        previous = transvection_matrix(
            ctx.form, record.p, scale(record.k - 1, record.v))
        normals = polygon_normals(ctx.variant, ctx.n, previous)
        if polygon_gram_certificate(
                normals, ctx.form, polygon_size(ctx.variant, ctx.n)).passed:
            return False, f'power k = {record.k} is not minimal'
    return True, f'minimal passing power k = {record.k}'


def _density(normals, form):
    report = zariski_density_certificate(normals, form)
    return report.passed, (
        f'rank {report.rank}/{report.dim}, scheme '
        f'{"connected" if report.irreducible else "disconnected"}')


def _check_zariski_density(ctx):
    return _density(ctx.normals, ctx.form)


def _check_projected_density(ctx):
    return _density(ctx.projected_normals, ctx.projected_form)


def _check_nonuniformity(ctx):
    if ctx.variant == 'odd-projected':
        first, second = ctx.named('pi(g1)'), ctx.named('pi(g3)')
    else:
        first, second = ctx.named('g1'), ctx.named('g3')
    product = first @ second
    ok = is_unipotent(product) and not product.is_identity
    return ok, (
        'g1 g3 is a nontrivial unipotent' if ok
        else 'g1 g3 is not a nontrivial unipotent')


def _check_stabilizer(ctx):
    u = alternating_signs(ctx.form.dim)
    for g in ctx.base:
        if g.matrix @ u != u:
            return False, f'{g.name} does not fix u'
    return True, f'{len(ctx.base)} generators fix u = {_vec(u)}'


def _check_projection_identity(ctx):
    target = tits_reflections(ctx.projected_form)
    for i in range(1, ctx.n + 1):
        if ctx.named(f'pi(g{i})') != target.generator(i).matrix:
            return False, f'pi(g{i}) differs from g{i} of {target.form.name}'
    return True, (
        f'pi(g_i) is the reflection g_i of {target.form.name}, '
        f'i = 1..{ctx.n}')


def _random_words(rng, count: int, letters: int, max_length: int = 8):
    for _ in range(count):
        length = int(rng.integers(0, max_length + 1))
        yield tuple(int(a) + 1 for a in rng.integers(0, letters, size=length))


def _base_matrix(ctx, word: Sequence[int]) -> Matrix:
    matrix = Matrix.identity(ctx.form.dim)
    for letter in word:
        matrix = matrix @ ctx.base[letter - 1].matrix
    return matrix


def _check_homomorphism(ctx, pairs: int = 100):
    rng = np.random.default_rng(SAMPLE_SEED)
    words = list(_random_words(rng, 2 * pairs, len(ctx.base)))
    for first, second in zip(words[::2], words[1::2]):
        a, b = _base_matrix(ctx, first), _base_matrix(ctx, second)
        if project_pi(ctx.n, a @ b) != (
                project_pi(ctx.n, a) @ project_pi(ctx.n, b)):
            return False, f'pi is not multiplicative on {first}, {second}'
    return True, f'pi(AB) = pi(A) pi(B) on {pairs} sampled pairs'


def _check_injectivity(ctx, samples: int = 200):
    presentation = RacgPresentation.cycle(len(ctx.base))
    rng = np.random.default_rng(SAMPLE_SEED + 1)
    images = {project_pi(ctx.n, Matrix.identity(ctx.form.dim)): ()}
    for word in _random_words(rng, samples, len(ctx.base)):
        normal = racg_normal_form(word, presentation)
        if normal in images.values():
            continue
        image = project_pi(ctx.n, _base_matrix(ctx, normal))
        if image in images:
            return False, f'{images[image]} and {normal} have the same image'
        images[image] = normal
    return True, f'{len(images)} distinct elements have distinct images'


def _vec(x) -> str:
    return '(' + ', '.join(str(a) for a in x) + ')'


CHECKS: Dict[str, Callable] = {
    'form-definition': _check_form_definition,
    'signature': _check_signature,
    'kernel': _check_kernel,
    'all-ones-timelike': _check_all_ones,
    'generator-words': _check_generator_words,
    'translation-consistency': _check_translation_consistency,
    'translation-moves-orthogonal': _check_translation_moves,
    'translation-unipotent': _check_translation_unipotent,
    'conjugation-fixed': _check_conjugation_fixed,
    'stabilizer': _check_stabilizer,
    'involutions': _check_involutions,
    'form-preservation': _check_form_preservation,
    'integrality': _check_integrality,
    'sheet-preservation': _check_sheets,
    'relations': _check_relations,
    'parabolic-witnesses': _check_parabolic_witnesses,
    'gram-pattern': _check_gram_pattern,
    'power-search': _check_power_search,
    'zariski-density': _check_zariski_density,
    'projection-identity': _check_projection_identity,
    'homomorphism': _check_homomorphism,
    'injectivity-sample': _check_injectivity,
    'projected-gram-pattern': _check_projected_gram_pattern,
    'projected-density': _check_projected_density,
    'nonuniformity': _check_nonuniformity,
}


_POLYGON = (
    'form-definition', 'signature', 'all-ones-timelike', 'generator-words',
    'translation-consistency', 'translation-unipotent', 'conjugation-fixed',
    'involutions', 'form-preservation', 'integrality', 'sheet-preservation',
    'relations', 'parabolic-witnesses', 'gram-pattern', 'power-search',
    'zariski-density', 'nonuniformity')


CERTIFICATE_IDS: Dict[str, Tuple[str, ...]] = {
    'polygon-2n': _POLYGON,
    'polygon-2n-2': (
        _POLYGON[:5] + ('translation-moves-orthogonal',) + _POLYGON[5:]),
    'even-prime': (
        'form-definition', 'signature', 'all-ones-timelike',
        'generator-words', 'involutions', 'form-preservation',
        'integrality', 'sheet-preservation', 'relations',
        'parabolic-witnesses', 'gram-pattern', 'zariski-density',
        'nonuniformity'),
    'odd-projected': (
        'form-definition', 'signature', 'kernel', 'all-ones-timelike',
        'generator-words', 'stabilizer', 'involutions', 'form-preservation',
        'integrality', 'sheet-preservation', 'relations',
        'parabolic-witnesses', 'gram-pattern', 'projection-identity',
        'homomorphism', 'injectivity-sample', 'projected-gram-pattern',
        'projected-density', 'nonuniformity'),
}
"""The certificates of each variant, in bundle order"""


def certify(
        variant: str,
        n: int,
        form: Matrix,
        generators: Sequence[BundleGenerator],
        translation: Optional[TranslationRecord],
        logger: Optional[logging.Logger] = None) -> Tuple[Certificate, ...]:
    """Computes the certificates of a bundle from scratch

    Each certificate is computed independently: a check that cannot be
    completed on the given data (a singular tau, a non-symmetric form...)
    fails with the error message as evidence.

    Raises
    ------
    DomainError if `variant` is unknown

    """
    if variant not in CERTIFICATE_IDS:
        raise DomainError(
            f'unknown variant {variant}, must be in {", ".join(VARIANTS)}')
    logger = logger or get_logger()

    ctx = _Context(variant, n, form, generators, translation)
    certificates = []
    for identifier in CERTIFICATE_IDS[variant]:
        try:
            passed, evidence = CHECKS[identifier](ctx)
        except (RacgError, ArithmeticError, LookupError, AttributeError,
                TypeError, ValueError) as err:
            passed, evidence = False, f'{type(err).__name__}: {err}'
            logger.debug('%s could not be computed: %s', identifier, evidence)
        certificates.append(
            Certificate(identifier, PASS if passed else FAIL, evidence))
    return tuple(certificates)
