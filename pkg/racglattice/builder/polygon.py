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
"""Right-angled polygon subgroups of O(Q_{n+1}; Z)

The reflections in the hyperplanes e_1, ..., e_{n+1} and in their images
under a translation tau fixing a cusp generate a right-angled polygon group
as soon as the images are far enough from the originals. The builders
search the smallest power of a base translation achieving this.

"""

from typing import List, Optional, Sequence, Tuple

from racglattice.builder.base import BaseBuilder
from racglattice.builder.bundle import BundleGenerator, TranslationRecord
from racglattice.builder.certify import (
    expected_words, polygon_normals, polygon_size, tangent_pair)
from racglattice.coxeter import ReflectionSystem, eval_word
from racglattice.forms import QuadraticForm, common_orthogonal
from racglattice.linalg import Vector, scale
from racglattice.minkowski import (
    polygon_gram_certificate, transvection_matrix, translation_search)


class _PolygonBuilder(BaseBuilder):
    """Common part of the 2n-gon and 2(n-1)-gon builders"""
    def __init__(self, n, max_power=None, logger=None):
        super().__init__(n, max_power=max_power, logger=logger)
        self._exhausted = False

    @property
    def exhausted(self) -> bool:
        """True when the last build found no passing power"""
        return self._exhausted

    def deviations(self):
        return [
            'tau is the explicit transvection E(p, k v) of an integral '
            'vector v, then powered until the polygon certificate passes',
            'only the index-2 subgroup of even-length words preserves the '
            'orientation, no generating set of it is extracted']

    def _constraints(
            self, form: QuadraticForm) -> Tuple[Sequence[int], List[Vector]]:
        """Returns the indices tau must fix and the vectors it must move"""
        return tangent_pair(self.name(), self.n), []

    def _assemble(self, form: QuadraticForm, system: ReflectionSystem) -> \
            Tuple[List[BundleGenerator], Optional[TranslationRecord]]:
        self._require(
            form.is_lorentzian,
            f'{form.name} has signature {form.signature}')

        i, j = tangent_pair(self.name(), self.n)
        must_fix, must_move = self._constraints(form)
        base = translation_search(
            form, i, j, must_fix=must_fix, must_move=must_move)
        self.logger.info(
            'tangency point of (%s, %s) is %s, translation vector is %s',
            i, j, _str(base.p), _str(base.v))

        size = polygon_size(self.name(), self.n)
        self._exhausted = True
        for k in range(1, self.max_power + 1):
            tau = transvection_matrix(form, base.p, scale(k, base.v))
            certificate = polygon_gram_certificate(
                polygon_normals(self.name(), self.n, tau), form,
                expected_size=size)
            if certificate.passed:
                self._exhausted = False
                self.logger.info('minimal passing power is k=%s', k)
                break
            self.logger.debug(
                'power k=%s fails: %s', k, certificate.evidence)
        else:
            self.logger.warning(
                'no power k <= %s gives a %s-gon: %s',
                self.max_power, size, certificate.evidence)

        extra = {'tau': tau, 'tau^-1': tau.inverse()}
        generators = [
            self._generator(word, eval_word(word, system, extra).matrix)
            for word in expected_words(self.name(), self.n)]
        return generators, TranslationRecord(base.p, base.v, k, tau)


def _str(vector) -> str:
    return '(' + ', '.join(str(a) for a in vector) + ')'


class Polygon2nBuilder(_PolygonBuilder):
    """The right-angled 2n-gon group

    Generated by g_1, ..., g_{n+1} and tau g_j tau^-1 for j = n..2, with tau
    fixing the tangency point of the hyperplanes e_1 and e_{n+1}.

    """
    @staticmethod
    def name():
        return 'polygon-2n'

    @staticmethod
    def cli_name():
        return 'polygon2n'

    @staticmethod
    def description():
        return 'right-angled 2n-gon group in O(Q_{n+1}; Z), n >= 3'

    @classmethod
    def check_dimension(cls, n):
        cls._check_integer(n, 3)


class Polygon2nMinus2Builder(_PolygonBuilder):
    """The right-angled 2(n-1)-gon group

    Generated by g_1, ..., g_n and tau g_j tau^-1 for j = n-1..2. Here tau
    fixes the tangency point of e_1 and e_n and moves the normal to the
    sphere orthogonal to e_1, ..., e_n, so that no sphere is orthogonal to
    the whole polygon.

    """
    @staticmethod
    def name():
        return 'polygon-2n-2'

    @staticmethod
    def cli_name():
        return 'polygon2n-2'

    @staticmethod
    def description():
        return 'right-angled 2(n-1)-gon group in O(Q_{n+1}; Z), n >= 4'

    @classmethod
    def check_dimension(cls, n):
        cls._check_integer(n, 4)

    def _constraints(self, form):
        orthogonal = common_orthogonal(form, range(1, self.n + 1))
        self.logger.info(
            'normal orthogonal to e_1..e_%s is %s', self.n, _str(orthogonal))
        return tangent_pair(self.name(), self.n), [orthogonal]
