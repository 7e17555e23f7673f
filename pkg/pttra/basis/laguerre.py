"""Generalized Laguerre polynomials L_n^nu(y).

Evaluation uses the upward three-term recurrence

    (n + 1) L_{n+1} = (2n + nu + 1 - y) L_n - (n + nu) L_{n-1},

started from L_0 = 1 and L_1 = nu + 1 - y. Derivatives come from the same
recurrence differentiated once and twice, so every quantity here is exact
for the degree-n polynomial up to rounding.

Example: ::

    from pttra.basis import laguerre_eval, laguerre_norm

    laguerre_eval(2, 0.5, 1.0)  # -0.125
    laguerre_norm(1, 0.5)       # Gamma(5/2)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Tuple, Union

import numpy as np
from scipy.special import gammaln

from pttra.util.error import ParameterError

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class LaguerreParams:
    """Order and degree of a generalized Laguerre polynomial.

    Args:
        nu (float): Order, nu > -1.
        n (int): Degree, n >= 0.
    """

    nu: float
    n: int

    def __post_init__(self) -> None:
        check_order(self.nu)
        check_degree(self.n)


def check_order(nu: float) -> None:
    if not math.isfinite(nu) or nu <= -1.0:
        raise ParameterError(f"Laguerre order must satisfy nu > -1, got {nu}")


def check_degree(n: Any) -> None:
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise ParameterError(f"Laguerre degree must be a non-negative integer, got {n}")


def _as_points(y: ArrayLike) -> np.ndarray:
    points = np.asarray(y, dtype=float)
    if np.any(points < 0.0):
        raise ParameterError("Laguerre polynomials are evaluated on y >= 0")
    return points


def laguerre_table(n_max: int, nu: float, y: ArrayLike) -> np.ndarray:
    """Evaluate L_0^nu .. L_{n_max}^nu at every point of y.

    Args:
        n_max (int): The highest degree.
        nu (float): The order.
        y (float | np.ndarray): Evaluation points, y >= 0.

    Returns:
        np.ndarray: An array of shape (n_max + 1, *np.shape(y)).
    """
    check_order(nu)
    check_degree(n_max)
    points = _as_points(y)
    table = np.empty((int(n_max) + 1,) + points.shape, dtype=float)
    table[0] = 1.0
    if n_max >= 1:
        table[1] = nu + 1.0 - points
    for n in range(1, int(n_max)):
        table[n + 1] = ((2 * n + nu + 1.0 - points) * table[n] - (n + nu) * table[n - 1]) / (n + 1)
    return table


def laguerre_eval(n: int, nu: float, y: ArrayLike) -> Any:
    """Evaluate L_n^nu(y).

    Args:
        n (int): Degree, n >= 0.
        nu (float): Order, nu > -1.
        y (float | np.ndarray): Evaluation point(s), y >= 0.

    Returns:
        float | np.ndarray: L_n^nu(y), a float for scalar y.

    Raises:
        ParameterError: Causes when nu <= -1, n < 0 or y < 0.
    """
    values = laguerre_table(n, nu, y)[int(n)]
    if np.ndim(values) == 0:
        return float(values)
    return values


def laguerre_derivatives(n: int, nu: float, y: ArrayLike) -> Tuple[Any, Any, Any]:
    """Evaluate L_n^nu and its first and second derivatives.

    Args:
        n (int): Degree, n >= 0.
        nu (float): Order, nu > -1.
        y (float | np.ndarray): Evaluation point(s), y >= 0.

    Returns:
        tuple: (L, dL/dy, d2L/dy2) at y.
    """
    check_order(nu)
    check_degree(n)
    points = _as_points(y)
    value = [np.ones_like(points), nu + 1.0 - points]
    first = [np.zeros_like(points), -np.ones_like(points)]
    second = [np.zeros_like(points), np.zeros_like(points)]
    for k in range(1, int(n)):
        a = 2 * k + nu + 1.0 - points
        c = k + nu
        value.append((a * value[k] - c * value[k - 1]) / (k + 1))
        first.append((a * first[k] - value[k] - c * first[k - 1]) / (k + 1))
        second.append((a * second[k] - 2.0 * first[k] - c * second[k - 1]) / (k + 1))
    result = (value[int(n)], first[int(n)], second[int(n)])
    if points.ndim == 0:
        return tuple(float(r) for r in result)  # type: ignore
    return result


def laguerre_norm(n: int, nu: float) -> float:
    """Squared norm of L_n^nu under the weight y^nu e^{-y} on [0, inf).

    Args:
        n (int): Degree, n >= 0.
        nu (float): Order, nu > -1.

    Returns:
        float: Gamma(n + nu + 1) / Gamma(n + 1).
    """
    check_order(nu)
    check_degree(n)
    return float(np.exp(gammaln(n + nu + 1.0) - gammaln(n + 1.0)))


def laguerre_derivative_identity(n: int, nu: float, y: float) -> Tuple[float, float]:
    """Both sides of y L_n' = n L_n - (n + nu) L_{n-1}.

    The left side uses the differentiated recurrence, the right side the
    combination of neighbouring degrees.

    Args:
        n (int): Degree.
        nu (float): Order.
        y (float): A positive evaluation point.

    Returns:
        tuple[float, float]: (lhs, rhs). For n = 0 both sides are 0.
    """
    check_order(nu)
    check_degree(n)
    if y <= 0.0:
        raise ParameterError(f"derivative identity is checked at y > 0, got {y}")
    if n == 0:
        return (y * 0.0, 0.0)
    _, first, _ = laguerre_derivatives(n, nu, y)
    table = laguerre_table(n, nu, y)
    lhs = y * first
    rhs = n * float(table[n]) - (n + nu) * float(table[n - 1])
    return (float(lhs), float(rhs))


def laguerre_ode_residual(n: int, nu: float, y: float) -> float:
    """Residual of [y d2/dy2 + (nu + 1 - y) d/dy + n] L_n^nu(y).

    Args:
        n (int): Degree.
        nu (float): Order.
        y (float): A positive evaluation point.

    Returns:
        float: The left side of the Laguerre differential equation, 0 up to rounding.
    """
    if y <= 0.0:
        raise ParameterError(f"ODE residual is checked at y > 0, got {y}")
    value, first, second = laguerre_derivatives(n, nu, y)
    return float(y * second + (nu + 1.0 - y) * first + n * value)
