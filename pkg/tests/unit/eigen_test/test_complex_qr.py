import numpy as np
import pytest

from pttra.eigen import complex_eigen, hessenberg_reduce
from pttra.util import ContractError


def test_complex_symmetric_pair():
    a = np.array([[1.0, 1.0j], [1.0j, 1.0]])
    spectrum = complex_eigen(a)
    np.testing.assert_allclose(spectrum.values, [1.0 - 1.0j, 1.0 + 1.0j], atol=1e-13)
    assert spectrum.classification == ['complex', 'complex']
    assert spectrum.summary() == (0, 2)
    assert spectrum.residual <= 1e-13


def test_hessenberg_similarity(rng):
    a = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    h, z = hessenberg_reduce(a)
    np.testing.assert_allclose(z.conj().T @ z, np.eye(6), atol=1e-13)
    np.testing.assert_allclose(z.conj().T @ a @ z, h, atol=1e-12)
    assert np.all(np.abs(np.tril(h, -2)) <= 1e-14)


def test_matches_numpy(rng):
    b = rng.standard_normal((10, 10)) + 1j * rng.standard_normal((10, 10))
    a = b + b.T
    spectrum = complex_eigen(a)
    expected = np.linalg.eigvals(a)
    expected = expected[np.lexsort((expected.imag, expected.real))]
    np.testing.assert_allclose(spectrum.values, expected, atol=1e-10)
    assert spectrum.residual <= 1e-10


def test_real_input_gives_real_classification(random_symmetric):
    spectrum = complex_eigen(random_symmetric(6))
    assert spectrum.summary() == (6, 0)
    np.testing.assert_allclose(np.sort(spectrum.values.real), spectrum.values.real)


def test_values_only():
    spectrum = complex_eigen(np.diag([3.0, 1.0 + 2.0j, 1.0]), vectors=False)
    assert spectrum.vectors is None
    np.testing.assert_allclose(spectrum.values, [1.0, 1.0 + 2.0j, 3.0])


def test_contract():
    with pytest.raises(ContractError):
        complex_eigen(np.ones((2, 3)))
    with pytest.raises(ContractError):
        complex_eigen(np.eye(129))
