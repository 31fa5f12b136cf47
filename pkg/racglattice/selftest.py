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
"""Acceptance suite run by 'racglattice selftest'

Each criterion returns a pass/fail status with a deterministic detail
string, so that two runs print the same table. Durations only go to the
log.

"""

import argparse
import contextlib
import io
import pathlib
import tempfile
import time
from logging import Logger
from typing import Callable, List, Optional, Tuple

import attr
import numpy as np

from racglattice.build import (
    build_2n_minus_2_gon, build_2ngon, build_even, build_odd_projected)
from racglattice.builder.checks import hnn_sample_check, word_problem_crosscheck
from racglattice.bundlefile import write_bundle
from racglattice.forms import (
    all_ones, all_ones_value, alternating_signs, build_Q, build_Q_prime)
from racglattice.linalg import Matrix, Signature, rank_and_kernel, signature
from racglattice.logger import get_logger
from racglattice.spheres import Hyperplane, Sphere, bundle_spheres


MUTATIONS = 20
"""Number of single-entry mutations of the tamper evidence criterion"""


@attr.s(frozen=True, auto_attribs=True)
class Criterion:
    id: str
    passed: bool
    detail: str

    def __str__(self):
        return f'{self.id:<5} {"pass" if self.passed else "FAIL":<5} {self.detail}'


class Selftest:
    """The acceptance criteria AC1 to AC10

    Parameters
    ----------
    quick: bool
        When True, the 2n-gon builds are limited to n = 3..5

    signature_routine: callable
        Replaces the signature computation of AC1, used to check that a
        broken routine makes the suite fail

    njobs: int
        Number of parallel jobs of the sampled Britton check

    """
    def __init__(self, quick: bool = False,
                 signature_routine: Optional[Callable[[Matrix], Signature]] = None,
                 logger: Optional[Logger] = None,
                 njobs: int = 1):
        self._quick = quick
        self._njobs = njobs
        self._signature = signature_routine or signature
        self._logger = logger or get_logger()
        self._hexagon = None

    @property
    def hexagon(self):
        """The n = 3 polygon-2n bundle shared by several criteria"""
        if self._hexagon is None:
            self._hexagon = build_2ngon(3, logger=self._logger)
        return self._hexagon

    def ac1(self) -> Tuple[bool, str]:
        failures = []
        for n in range(3, 11):
            if self._signature(build_Q(n + 1).matrix).astuple() != (n, 1, 0):
                failures.append(f'Q_{n + 1}')
        for n in range(4, 11, 2):
            if self._signature(
                    build_Q_prime(n + 1).matrix).astuple() != (n, 1, 0):
                failures.append(f"Q'_{n + 1}")
        for n in range(5, 10, 2):
            matrix = build_Q_prime(n + 1).matrix
            if self._signature(matrix).astuple() != (n - 1, 1, 1) or \
                    rank_and_kernel(matrix)[1] != (alternating_signs(n + 1),):
                failures.append(f"Q'_{n + 1}")
        return not failures, (
            'wrong signature for ' + ', '.join(failures) if failures
            else '15 signatures and 3 kernels')

    def ac2(self) -> Tuple[bool, str]:
        values = []
        for n in range(2, 11):
            form = build_Q(n + 1)
            value = form.norm(all_ones(n + 1))
            if value != all_ones_value(n) or value != -n * n + 2 * n + 1:
                return False, f'wrong all-ones value at n={n}'
            values.append(int(value))
        ok = values[0] > 0 and all(v < 0 for v in values[1:])
        return ok, 'values ' + ' '.join(str(v) for v in values)

    def ac3(self) -> Tuple[bool, str]:
        dims = range(3, 6) if self._quick else range(3, 9)
        powers = []
        for n in dims:
            bundle = self.hexagon if n == 3 else build_2ngon(
                n, logger=self._logger)
            if not bundle.passed:
                return False, (
                    f'n={n} fails {", ".join(c.id for c in bundle.failed)}')
            powers.append(f'n={n}:k={bundle.translation.k}')
        return True, 'minimal powers ' + ' '.join(powers)

    def ac4(self) -> Tuple[bool, str]:
        powers = []
        for n in range(4, 7):
            bundle = build_2n_minus_2_gon(n, logger=self._logger)
            if not bundle.passed:
                return False, (
                    f'n={n} fails {", ".join(c.id for c in bundle.failed)}')
            powers.append(f'n={n}:k={bundle.translation.k}')
        return True, 'minimal powers ' + ' '.join(powers)

    def ac5(self) -> Tuple[bool, str]:
        bundles = [
            ('even', n, build_even(n, logger=self._logger)) for n in (4, 6)]
        bundles += [
            ('odd', n, build_odd_projected(n, logger=self._logger))
            for n in (5, 7)]
        for kind, n, bundle in bundles:
            if not bundle.passed:
                return False, (
                    f'{kind} n={n} fails '
                    f'{", ".join(c.id for c in bundle.failed)}')
        return True, 'even n=4,6 and odd n=5,7 pass'

    def ac6(self) -> Tuple[bool, str]:
        report = word_problem_crosscheck(
            self.hexagon, length_bound=6, logger=self._logger)
        return report.passed, (
            f'{report.elements} elements, {len(report.mismatches)} mismatches')

    def ac7(self) -> Tuple[bool, str]:
        report = hnn_sample_check(
            self.hexagon, syllable_bound=4, sample_count=1000, seed=0,
            njobs=self._njobs, logger=self._logger)
        return report.passed, (
            f'{report.samples} samples, {len(report.identities)} identities')

    def ac8(self) -> Tuple[bool, str]:
        spheres = bundle_spheres(self.hexagon)
        items = spheres.configuration.items
        lines = sum(isinstance(item, Hyperplane) for item in items)
        circles = sum(isinstance(item, Sphere) for item in items)
        products = np.abs(spheres.configuration.products)
        pattern = (
            isinstance(items[0], Hyperplane)
            and isinstance(items[3], Hyperplane)
            and abs(products[0, 3] - 1) < 1e-9
            and products[0, 1] < 1e-9
            and abs(products[1, 3] - 1) < 1e-9)
        ok = (lines, circles) == (2, 4) and pattern and \
            spheres.configuration.consistent
        return ok, f'{lines} lines, {circles} circles, ' + (
            'residuals within 1e-9' if spheres.configuration.consistent
            else 'residuals above 1e-9')

    def ac9(self) -> Tuple[bool, str]:
        from racglattice import main  # main imports this module

        detected = 0
        with tempfile.TemporaryDirectory() as directory, \
                contextlib.redirect_stdout(io.StringIO()):
            path = pathlib.Path(directory) / 'hexagon.json'
            args = argparse.Namespace(path=path)
            write_bundle(self.hexagon, path)
            clean = main.cmd_verify(args, self._logger)
            for bundle in mutations(self.hexagon, MUTATIONS, seed=0):
                write_bundle(bundle, path)
                if main.cmd_verify(args, self._logger) == 1:
                    detected += 1

        detail = f'{detected}/{MUTATIONS} mutations detected'
        if clean != 0:
            detail += f', verify exits with {clean} on the clean bundle'
        return clean == 0 and detected == MUTATIONS, detail

    def ac10(self) -> Tuple[bool, str]:
        from racglattice import main  # main imports this module

        with tempfile.TemporaryDirectory() as directory, \
                contextlib.redirect_stdout(io.StringIO()):
            for n in (3, 4, 5):
                contents = []
                for run in (1, 2):
                    path = pathlib.Path(directory) / f'n{n}-{run}.json'
                    code = main.cmd_build(argparse.Namespace(
                        n=n, variant='polygon2n', max_power=None, out=path),
                        self._logger)
                    if code != 0:
                        return False, f'n={n} build exits with {code}'
                    contents.append(path.read_bytes())
                if contents[0] != contents[1]:
                    return False, f'n={n} bundles differ'
        return True, 'n=3,4,5 bundles are byte-identical'

    def run(self) -> List[Criterion]:
        criteria = []
        for index in range(1, 11):
            start = time.perf_counter()
            passed, detail = getattr(self, f'ac{index}')()
            self._logger.info(
                'AC%s done in %.1fs', index, time.perf_counter() - start)
            criteria.append(Criterion(f'AC{index}', passed, detail))
        return criteria


def mutations(bundle, count: int, seed: int = 0):
    """Yields copies of `bundle` with a single matrix entry altered"""
    rng = np.random.default_rng(seed)
    targets = ['form'] + [
        f'generator {i}' for i in range(len(bundle.generators))]
    if bundle.translation is not None:
        targets.append('translation')

    for _ in range(count):
        target = targets[int(rng.integers(0, len(targets)))]
        if target == 'form':
            matrix = bundle.form
        elif target == 'translation':
            matrix = bundle.translation.matrix
        else:
            matrix = bundle.generators[int(target.split()[1])].matrix
        i = int(rng.integers(1, matrix.nrows + 1))
        j = int(rng.integers(1, matrix.ncols + 1))
        delta = int(rng.integers(1, 4)) * int(rng.choice([1, -1]))
        altered = matrix.replace(i, j, matrix.entry(i, j) + delta)

        if target == 'form':
            yield attr.evolve(bundle, form=altered)
        elif target == 'translation':
            yield attr.evolve(bundle, translation=attr.evolve(
                bundle.translation, matrix=altered))
        else:
            generators = list(bundle.generators)
            index = int(target.split()[1])
            generators[index] = attr.evolve(generators[index], matrix=altered)
            yield attr.evolve(bundle, generators=tuple(generators))


def run_selftest(quick: bool = False,
                 signature_routine: Optional[Callable] = None,
                 logger: Optional[Logger] = None,
                 njobs: int = 1) -> List[Criterion]:
    """Runs the acceptance criteria and returns their statuses in order"""
    return Selftest(quick, signature_routine, logger, njobs).run()
