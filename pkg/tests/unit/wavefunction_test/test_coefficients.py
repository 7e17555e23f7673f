import numpy as np
import pytest

from pttra.hamiltonian import BasisSpec, PotentialSpec, assemble
from pttra.util import ParameterError
from pttra.wavefunction import (
    coefficient_residual,
    eigenpair,
    expansion_coefficients,
    recursion_coefficients,
    solve,
)


def test_harmonic_ground_state(harmonic_matrix):
    h = harmonic_matrix(5)
    energy, f, spectrum = eigenpair(h, 0)
    assert energy == pytest.approx(3.0)
    np.testing.assert_allclose(np.abs(f), [1.0, 0.0, 0.0, 0.0, 0.0], atol=1e-12)
    assert f[0] > 0.0
    assert spectrum.summary() == (5, 0)


def test_real_and_complex_paths():
    real = solve(assemble(BasisSpec(lam=1.0, size=5), PotentialSpec(N=2.0)))
    assert not np.iscomplexobj(real.vectors)
    assert np.all(real.values.imag == 0.0)
    h = assemble(BasisSpec(lam=1.0, size=5), PotentialSpec(N=1.1))
    spectrum = solve(h)
    assert np.iscomplexobj(spectrum.vectors)
    np.testing.assert_allclose(np.sort_complex(spectrum.values), np.sort_complex(np.linalg.eigvals(h.entries)), atol=1e-9)


@pytest.mark.parametrize('n', [1.0, 1.1, 2.0])
def test_expansion_coefficients(n):
    h = assemble(BasisSpec(lam=1.0, size=6), PotentialSpec(N=n))
    for which in range(6):
        energy, f, _ = eigenpair(h, which)
        assert np.linalg.norm(f) == pytest.approx(1.0, abs=1e-12)
        assert coefficient_residual(h, energy, f) <= 1e-9 * h.scale()
        np.testing.assert_array_equal(expansion_coefficients(h, which), f)


def test_recursion_coefficients_agree():
    h = assemble(BasisSpec(lam=1.0, size=6), PotentialSpec(N=2.0))
    for which in range(6):
        f = expansion_coefficients(h, which)
        g = recursion_coefficients(h, which)
        np.testing.assert_allclose(g, f, atol=1e-7)


def test_invalid_level():
    h = assemble(BasisSpec(lam=1.0, size=3), PotentialSpec(N=1.0))
    with pytest.raises(ParameterError):
        eigenpair(h, 3)
    with pytest.raises(ParameterError):
        expansion_coefficients(h, -1)
    with pytest.raises(ParameterError):
        recursion_coefficients(assemble(BasisSpec(lam=1.0, size=3), PotentialSpec(N=1.1)), 0)


def test_spectrum_convergence_at_unit_scale():
    spectrum = solve(assemble(BasisSpec(lam=1.0, size=32), PotentialSpec(N=1.0)))
    np.testing.assert_allclose(spectrum.values[:3].real, [3.0, 7.0, 11.0], atol=1e-6)
