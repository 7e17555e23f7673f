import numpy as np
import pytest

from pttra.eigen import TridiagonalSymmetric, jacobi_matrix, symmetric_eigen, tridiag_eigen
from pttra.eigen.ql import _implicit_ql
from pttra.util import ContractError, NumericError


def test_diagonal_input():
    spectrum = tridiag_eigen(jacobi_matrix([5.0, 1.0, 3.0], [0.0, 0.0]))
    np.testing.assert_array_equal(spectrum.values.real, [1.0, 3.0, 5.0])
    assert spectrum.iterations == 0
    assert spectrum.summary() == (3, 0)


def test_two_by_two():
    spectrum = tridiag_eigen(jacobi_matrix([2.0, 2.0], [1.0]))
    np.testing.assert_allclose(spectrum.values.real, [1.0, 3.0], atol=1e-14)
    v = spectrum.vectors
    np.testing.assert_allclose(np.abs(v), np.full((2, 2), np.sqrt(0.5)), atol=1e-14)
    # first significant entry is positive
    assert np.all(v[0] > 0.0)


def test_matches_numpy(random_symmetric):
    a = random_symmetric(12)
    spectrum = symmetric_eigen(a)
    np.testing.assert_allclose(spectrum.values.real, np.linalg.eigvalsh(a), atol=1e-11)
    assert np.all(spectrum.values.imag == 0.0)
    assert spectrum.residual <= 1e-12
    v = spectrum.vectors
    np.testing.assert_allclose(v.T @ v, np.eye(12), atol=1e-11)


def test_values_only():
    spectrum = tridiag_eigen(jacobi_matrix([1.0, 2.0, 3.0], [1.0, 1.0]), vectors=False)
    assert spectrum.vectors is None
    assert spectrum.residual is None
    assert len(spectrum) == 3


def test_harmonic_spectrum(harmonic_matrix):
    h = harmonic_matrix(5)
    spectrum = symmetric_eigen(h.entries.real)
    np.testing.assert_allclose(spectrum.values.real, [3.0, 7.0, 11.0, 15.0, 19.0], atol=1e-12)


def test_sweep_limit():
    d = [1.0, 2.0, 3.0]
    e = [1.0, 1.0, 0.0]
    with pytest.raises(NumericError) as excinfo:
        _implicit_ql(d, e, None, max_sweeps=0)
    assert excinfo.value.diagnostics['sweeps'] == 0
    assert excinfo.value.partial == []


def test_complex_coefficients_rejected():
    with pytest.raises(ContractError):
        tridiag_eigen(TridiagonalSymmetric(diag=np.array([1.0 + 1.0j, 2.0]), offdiag=np.array([1.0])))
