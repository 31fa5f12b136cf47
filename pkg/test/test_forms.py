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
"""Test of the racglattice.forms module"""

# pylint: disable=missing-docstring
import pytest

from racglattice import forms
from racglattice.coxeter import tits_reflections
from racglattice.errors import (
    CertificateFailure, ContractViolation, DomainError, InternalError)
from racglattice.forms import (
    QuadraticForm, all_ones, all_ones_value, alternating_signs, build_Q,
    build_Q_prime, common_orthogonal, distinguished_vectors, tangency_point)
from racglattice.linalg import Matrix, is_multiple, vector


def test_q4():
    form = build_Q(4)
    assert form.name == 'Q_4'
    assert form.matrix == Matrix([
        [1, 0, -1, -1],
        [0, 1, 0, -1],
        [-1, 0, 1, 0],
        [-1, -1, 0, 1]])
    assert form.is_lorentzian
    assert form.kernel == ()


def test_q_prime6():
    form = build_Q_prime(6)
    assert form.name == "Q'_6"
    assert form.entry(1, 6) == form.entry(6, 1) == 0
    assert form.entry(1, 5) == -1
    assert form.signature.astuple() == (4, 1, 1)
    assert form.kernel == (alternating_signs(6),)
    assert not form.is_lorentzian


@pytest.mark.parametrize('n', range(3, 11))
def test_signature_q(n):
    assert build_Q(n + 1).signature.astuple() == (n, 1, 0)


@pytest.mark.parametrize('n', range(4, 11))
def test_signature_q_prime(n):
    form = build_Q_prime(n + 1)
    if n % 2 == 0:
        assert form.signature.astuple() == (n, 1, 0)
        assert form.rank == n + 1
    else:
        assert form.signature.astuple() == (n - 1, 1, 1)
        assert form.kernel == (alternating_signs(n + 1),)


@pytest.mark.parametrize('n', range(2, 11))
def test_all_ones(n):
    value = build_Q(n + 1).norm(all_ones(n + 1))
    assert value == all_ones_value(n) == -n * n + 2 * n + 1
    if n >= 3:
        assert value < 0
    else:
        assert value > 0


@pytest.mark.parametrize('n', range(4, 11))
def test_all_ones_prime(n):
    value = build_Q_prime(n + 1).norm(all_ones(n + 1))
    assert value == all_ones_value(n, prime=True) == -n * n + 2 * n + 3
    assert value < 0


def test_all_ones_three():
    # the 3 x 3 form is positive on the all-ones vector
    assert build_Q(3).matrix == Matrix([[1, 0, -1], [0, 1, 0], [-1, 0, 1]])
    assert all_ones_value(2) == 1


@pytest.mark.parametrize('n', [2, 3])
def test_all_ones_prime_too_small(n):
    with pytest.raises(DomainError, match="Q'_m needs m >= 5"):
        all_ones_value(n, prime=True)


def test_all_ones_computed(monkeypatch):
    # the value comes from the matrix, not from the closed form
    original = forms.build_Q

    def zero_corners(m):
        matrix = original(m).matrix
        return QuadraticForm(matrix.replace(1, m, 0).replace(m, 1, 0))

    monkeypatch.setattr(forms, 'build_Q', zero_corners)
    with pytest.raises(InternalError, match="norm -5 .* expected -7"):
        all_ones_value(4)


def test_invalid_dimensions():
    for m in (2, 0, True, 3.0):
        with pytest.raises(DomainError):
            build_Q(m)
    with pytest.raises(DomainError):
        build_Q_prime(4)
    with pytest.raises(DomainError):
        all_ones_value(1)


def test_quadratic_form_contract():
    with pytest.raises(ContractViolation):
        QuadraticForm(Matrix([[1, 2], [0, 1]]))
    with pytest.raises(ContractViolation):
        QuadraticForm(Matrix([[1, '1/2'], ['1/2', 1]]))

    form = build_Q(4)
    assert form == QuadraticForm(form.matrix)
    assert form.dual(vector([1, 0, 0, 0])) == form.matrix.column(1)
    assert form.preserved_by(Matrix.identity(4))
    assert not form.preserved_by(Matrix.identity(4) * 2)
    with pytest.raises(ContractViolation):
        form.preserved_by(Matrix.identity(3))


def test_tangency_point():
    form = build_Q(4)
    p = tangency_point(form, 1, 4)
    assert p == vector([1, 0, 0, 1])
    assert form.norm(p) == 0
    assert form.bilinear(p, vector([1, 0, 0, 0])) == 0
    assert form.bilinear(p, vector([0, 0, 0, 1])) == 0

    # not tangent
    with pytest.raises(CertificateFailure):
        tangency_point(form, 1, 2)
    with pytest.raises(CertificateFailure):
        tangency_point(form, 1, 1)
    with pytest.raises(ContractViolation):
        tangency_point(form, 1, 5)


def test_tangency_point_q4_13():
    form = build_Q(4)
    # e_1 and e_3 force x1 = x3 and x4 = 0, the norm is then x2^2
    p = tangency_point(form, 1, 3)
    assert p == vector([1, 0, 1, 0])
    assert form.norm(p) == 0
    assert form.dual(p)[0] == form.dual(p)[2] == 0


@pytest.mark.parametrize('form', (
    [build_Q(n + 1) for n in range(3, 8)]
    + [build_Q_prime(n + 1) for n in (4, 6)]))
def test_tangency_point_fixed(form):
    assert form.is_lorentzian
    system = tits_reflections(form)
    for (i, j), p in distinguished_vectors(form).tangency.items():
        for index in (i, j):
            image = system.generator(index).matrix @ p
            assert image == p
            assert is_multiple(image, p)


@pytest.mark.parametrize('n', range(3, 8))
def test_tangency_points_isotropic(n):
    form = build_Q(n + 1)
    vectors = distinguished_vectors(form)
    assert (1, n + 1) in vectors.tangency
    assert (1, 2) not in vectors.tangency
    for (i, j), p in vectors.tangency.items():
        assert form.norm(p) == 0
        assert form.dual(p)[i - 1] == form.dual(p)[j - 1] == 0
    assert vectors.radical is None


def test_distinguished_degenerate():
    vectors = distinguished_vectors(build_Q_prime(6))
    assert vectors.radical == alternating_signs(6)
    assert vectors.tangency == {}
    assert vectors.all_ones == all_ones(6)


@pytest.mark.parametrize('n', range(4, 8))
def test_common_orthogonal(n):
    form = build_Q(n + 1)
    u = common_orthogonal(form, range(1, n + 1))
    assert form.norm(u) > 0
    for i in range(1, n + 1):
        assert form.dual(u)[i - 1] == 0


def test_common_orthogonal_not_a_line():
    form = build_Q(5)
    with pytest.raises(CertificateFailure):
        common_orthogonal(form, [1, 2])
    with pytest.raises(ContractViolation):
        common_orthogonal(form, [])
