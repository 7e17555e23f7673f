import numpy as np
import pytest

from pttra.hamiltonian import BasisSpec
from pttra.util import ParameterError


def test_basis_spec():
    basis = BasisSpec(lam=2, size=5.0)
    assert basis.lam == 2.0
    assert basis.size == 5
    assert isinstance(basis.size, int)
    assert basis.d == pytest.approx(0.25 - 0.5 / 16.0)
    assert BasisSpec(lam=1.0, size=1).d == -0.25
    assert basis.to_dict() == {'lambda': 2.0, 'size': 5, 'nu': 0.5, 'alpha': 0.5, 'beta': 0.5}


@pytest.mark.parametrize('lam, size', [(0.0, 5), (-1.0, 5), (float('nan'), 5), (1.0, 0), (1.0, 2.5), (1.0, True)])
def test_invalid_basis(lam, size):
    with pytest.raises(ParameterError):
        BasisSpec(lam=lam, size=size)


def test_unsupported_parameters():
    with pytest.raises(ParameterError):
        BasisSpec(lam=1.0, size=3, nu=1.5)
    with pytest.raises(ParameterError):
        BasisSpec(lam=1.0, size=3, beta=1.0)


def test_grid():
    basis = BasisSpec(lam=1.0, size=3)
    assert basis.default_x_max() == 6.0
    assert BasisSpec(lam=3.0, size=3).default_x_max() == 4.0
    x = basis.grid()
    assert len(x) == 401
    assert x[0] == -6.0 and x[-1] == 6.0
    assert abs(x[200]) <= 1e-15
    np.testing.assert_allclose(basis.grid(points=5, x_max=2.0), [-2.0, -1.0, 0.0, 1.0, 2.0])
    with pytest.raises(ParameterError):
        basis.grid(points=2)
    with pytest.raises(ParameterError):
        basis.grid(x_max=0.0)
