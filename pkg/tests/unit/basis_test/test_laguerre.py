import numpy as np
import pytest
from scipy.special import eval_genlaguerre, gamma

from pttra.basis import (
    LaguerreParams,
    laguerre_derivative_identity,
    laguerre_derivatives,
    laguerre_eval,
    laguerre_norm,
    laguerre_ode_residual,
    laguerre_table,
)
from pttra.util import ParameterError


def test_laguerre_eval_low_degrees():
    assert laguerre_eval(0, 0.5, 3.0) == 1.0
    assert laguerre_eval(1, 0.5, 1.0) == pytest.approx(0.5)
    assert laguerre_eval(2, 0.5, 1.0) == pytest.approx(-0.125)


@pytest.mark.parametrize('nu', [0.0, 0.5, 2.0, 2.6])
def test_laguerre_table_matches_scipy(nu):
    y = np.array([0.0, 0.1, 1.0, 4.5, 10.0, 30.0])
    table = laguerre_table(12, nu, y)
    assert table.shape == (13, 6)
    for n in range(13):
        expected = eval_genlaguerre(n, nu, y)
        np.testing.assert_allclose(table[n], expected, rtol=1e-10, atol=1e-10)


def test_laguerre_eval_array_and_scalar():
    y = np.linspace(0.0, 5.0, 7)
    values = laguerre_eval(3, 0.5, y)
    assert isinstance(values, np.ndarray)
    assert isinstance(laguerre_eval(3, 0.5, 2.0), float)
    np.testing.assert_allclose(values, eval_genlaguerre(3, 0.5, y), rtol=1e-12, atol=1e-12)


def test_invalid_arguments():
    with pytest.raises(ParameterError):
        laguerre_eval(-1, 0.5, 1.0)
    with pytest.raises(ParameterError):
        laguerre_eval(1.5, 0.5, 1.0)
    with pytest.raises(ParameterError):
        laguerre_eval(2, -1.0, 1.0)
    with pytest.raises(ParameterError):
        laguerre_eval(2, 0.5, -0.1)
    with pytest.raises(ParameterError):
        LaguerreParams(nu=-2.0, n=1)
    assert LaguerreParams(nu=0.5, n=3).n == 3


def test_laguerre_norm():
    assert laguerre_norm(0, 0.5) == pytest.approx(0.8862269, abs=1e-7)
    assert laguerre_norm(1, 0.5) == pytest.approx(1.3293404, abs=1e-7)
    assert laguerre_norm(4, 2.0) == pytest.approx(gamma(7.0) / gamma(5.0), rel=1e-13)
    # log-gamma differences stay finite for large degrees
    assert np.isfinite(laguerre_norm(500, 0.5))


@pytest.mark.parametrize('y', [0.1, 1.0, 10.0])
def test_recurrence_consistency(y):
    table = laguerre_table(11, 0.5, y)
    for n in range(11):
        lower = table[n - 1] if n > 0 else 0.0
        rhs = (2 * n + 1.5) * table[n] - (n + 0.5) * lower - (n + 1) * table[n + 1]
        scale = abs(y * table[n]) + abs((2 * n + 1.5) * table[n]) + abs(lower) * (n + 0.5) + abs(table[n + 1]) * (n + 1)
        assert abs(y * table[n] - rhs) <= 1e-12 * (1.0 + scale)


def test_derivatives_match_scipy():
    y = 1.7
    for n in range(1, 8):
        value, first, second = laguerre_derivatives(n, 0.5, y)
        assert value == pytest.approx(eval_genlaguerre(n, 0.5, y), rel=1e-12)
        # d/dy L_n^nu = -L_{n-1}^{nu+1}
        assert first == pytest.approx(-eval_genlaguerre(n - 1, 1.5, y), rel=1e-11, abs=1e-12)
        if n >= 2:
            assert second == pytest.approx(eval_genlaguerre(n - 2, 2.5, y), rel=1e-11, abs=1e-12)


def test_derivative_identity():
    assert laguerre_derivative_identity(0, 0.5, 2.0) == (0.0, 0.0)
    for n in range(1, 8):
        lhs, rhs = laguerre_derivative_identity(n, 0.5, 2.5)
        assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-10)
    with pytest.raises(ParameterError):
        laguerre_derivative_identity(2, 0.5, 0.0)


@pytest.mark.parametrize('y', [0.5, 2.0, 8.0])
def test_ode_residual(y):
    for n in range(9):
        assert abs(laguerre_ode_residual(n, 0.5, y)) <= 1e-9
    with pytest.raises(ParameterError):
        laguerre_ode_residual(1, 0.5, -1.0)
