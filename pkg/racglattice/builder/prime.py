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
"""The (n+1)-gon groups of the forms Q'_{n+1}"""

from racglattice.builder.base import BaseBuilder
from racglattice.builder.certify import expected_words
from racglattice.coxeter import eval_word
from racglattice.projection import project_pi


class EvenPrimeBuilder(BaseBuilder):
    """Tits reflections of Q'_{n+1} for even n

    The form is Lorentzian and its Coxeter group is the right-angled
    (n+1)-gon group.

    """
    @staticmethod
    def name():
        return 'even-prime'

    @staticmethod
    def cli_name():
        return 'even'

    @staticmethod
    def description():
        return "right-angled (n+1)-gon group of Q'_{n+1}, n even >= 4"

    @classmethod
    def check_dimension(cls, n):
        cls._check_integer(
            n, 4, parity=0, hint=', use odd-projected for odd n')

    def _assemble(self, form, system):
        self._require(
            form.is_lorentzian, f'{form.name} has signature {form.signature}')
        generators = [
            self._generator(word, eval_word(word, system).matrix)
            for word in expected_words(self.name(), self.n)]
        return generators, None


class OddProjectedBuilder(BaseBuilder):
    """Tits reflections of Q'_{n+1} for odd n and their projection

    The form is degenerate with radical spanned by u = (1, -1, ..., -1). The
    reflections fix u and project to isometries of Q_n, the first n of them
    onto the Tits reflections of Q_n.

    """
    @staticmethod
    def name():
        return 'odd-projected'

    @staticmethod
    def cli_name():
        return 'odd-project'

    @staticmethod
    def description():
        return "projection of the Q'_{n+1} polygon group to O(Q_n; Z), n odd >= 5"

    @classmethod
    def check_dimension(cls, n):
        cls._check_integer(
            n, 5, parity=1, hint=', use even-prime for even n')

    def deviations(self):
        return [
            'injectivity of the projection is sampled on random words, '
            'not proved']

    def _assemble(self, form, system):
        self._require(
            len(form.kernel) == 1,
            f'{form.name} has a kernel of dimension {len(form.kernel)}')
        generators = []
        for word in expected_words(self.name(), self.n):
            if word[0] == 'pi':
                matrix = project_pi(
                    self.n, eval_word(word[1:], system).matrix)
            else:
                matrix = eval_word(word, system).matrix
            generators.append(self._generator(word, matrix))
        return generators, None
