import numpy as np
import pytest

from pttra.eigen import householder_tridiagonalize, jacobi_matrix, tridiag_eigen
from pttra.hamiltonian import BasisSpec, PotentialSpec, assemble
from pttra.util import DegenerateRecursionError
from pttra.wavefunction import check_offdiag, recursion_eval


@pytest.fixture
def tridiagonal():
    return jacobi_matrix([1.0, 2.0, 3.0, 4.0], [0.5, 0.7, 0.9])


def test_recursion_matches_eigenvectors(tridiagonal):
    spectrum = tridiag_eigen(tridiagonal)
    for k, energy in enumerate(spectrum.values.real):
        polys = recursion_eval(tridiagonal, float(energy))
        v = spectrum.vectors[:, k]
        assert len(polys) == 4
        np.testing.assert_allclose(polys.values, v / v[0], rtol=1e-9, atol=1e-9)
        assert abs(polys.characteristic()) <= 1e-9


def test_characteristic_polynomial(tridiagonal):
    # det(E - T) / (b_0 b_1 b_2)
    energy = 0.3
    det = np.linalg.det(energy * np.eye(4) - tridiagonal.to_dense())
    polys = recursion_eval(tridiagonal, energy)
    assert polys.characteristic() == pytest.approx(det / (0.5 * 0.7 * 0.9), rel=1e-12)


def test_first_steps(tridiagonal):
    polys = recursion_eval(tridiagonal, 2.0)
    assert polys.values[0] == 1.0
    assert polys.values[1] == pytest.approx((2.0 - 1.0) / 0.5)
    assert polys.values.dtype == float
    with pytest.raises(ValueError):
        polys.values[0] = 3.0


def test_complex_continuation(tridiagonal):
    polys = recursion_eval(tridiagonal, 1.0 + 0.5j)
    assert np.iscomplexobj(polys.values)
    assert polys.values[1] == pytest.approx(0.5j / 0.5)


def test_single_level():
    polys = recursion_eval(jacobi_matrix([2.0], []), 5.0)
    np.testing.assert_array_equal(polys.values, [1.0])
    assert polys.characteristic() == 3.0


def test_degenerate_recursion():
    t = jacobi_matrix([1.0, 2.0, 3.0], [1.0, 0.0])
    with pytest.raises(DegenerateRecursionError) as excinfo:
        recursion_eval(t, 1.0)
    assert excinfo.value.diagnostics['index'] == 1
    with pytest.raises(DegenerateRecursionError):
        check_offdiag(jacobi_matrix([1.0, 1.0], [1e-15]))
    check_offdiag(jacobi_matrix([1.0, 1.0], [1e-10]))


@pytest.mark.parametrize('n', [1.0, 2.0])
def test_characteristic_between_eigenvalues(n):
    h = assemble(BasisSpec(lam=1.0, size=10), PotentialSpec(N=n)).entries.real
    t = householder_tridiagonalize(h)
    energies = np.sort(tridiag_eigen(t).values.real)
    midpoints = 0.5 * (energies[1:] + energies[:-1])
    values = np.array([recursion_eval(t, float(e)).characteristic() for e in midpoints])
    # det(E - T) / (b_0 ... b_{M-2}) written over the spectrum
    expected = np.array([np.prod(e - energies) for e in midpoints]) / np.prod(t.offdiag)
    np.testing.assert_allclose(values, expected, rtol=1e-6)
    assert np.all(np.abs(values) >= 1e-3 * np.abs(expected))
    assert np.all(np.sign(values[1:]) == -np.sign(values[:-1]))
