"""Expansion of the monomial y^N in Laguerre polynomials L_k^nu.

Two coefficient sets are provided. ``corrected`` is the identity

    y^N = N! sum_k (-1)^k Gamma(N+nu+1) / (Gamma(N-k+1) Gamma(nu+k+1)) L_k^nu(y),

``paper_faithful`` is the sum N! sum_k (-1)^k / (N-k)! L_k^{1/2}(y) as it is
usually quoted for this Hamiltonian. The latter is not an identity (at N = 1
it gives y - 1/2) and is kept only to reproduce that pipeline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Tuple

import numpy as np
from scipy.special import gammaln

from pttra.basis.laguerre import check_order, laguerre_norm, laguerre_table
from pttra.basis.quadrature import gauss_laguerre_rule, integrate
from pttra.common import integer_tol
from pttra.util.error import ModeError, ParameterError


class ExpansionMode(Enum):
    corrected: str = "corrected"
    paper_faithful: str = "paper_faithful"

    @classmethod
    def _missing_(cls, value: Any) -> Any | None:
        value = str(value).lower().replace("-", "_")
        if value in ("paper", "faithful"):
            return cls.paper_faithful
        for member in cls:
            if member.value == value:
                return member
        return None


def is_integer(value: float) -> bool:
    return abs(value - round(value)) < integer_tol


@dataclass(frozen=True)
class ExpansionCoefficients:
    """Coefficients c_0 .. c_N of y^N = sum_k c_k L_k^nu(y).

    Args:
        N (int): The exponent.
        nu (float): The Laguerre order.
        mode (ExpansionMode): Which coefficient set.
        coeffs (tuple[float, ...]): c_0 .. c_N.
    """

    N: int
    nu: float
    mode: ExpansionMode
    coeffs: Tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.N + 1:
            raise ParameterError(f"expansion of y^{self.N} needs {self.N + 1} coefficients, got {len(self.coeffs)}")

    def __len__(self) -> int:
        return len(self.coeffs)

    def evaluate(self, y: Any) -> Any:
        """sum_k c_k L_k^nu(y)."""
        table = laguerre_table(self.N, self.nu, y)
        return np.tensordot(np.asarray(self.coeffs), table, axes=1)


def _check_exponent(n: float) -> int:
    if not is_integer(n):
        raise ModeError(f"the monomial expansion is a finite sum only for integer N, got {n}")
    exponent = int(round(n))
    if exponent < 1:
        raise ParameterError(f"the monomial expansion needs N >= 1, got {n}")
    return exponent


def monomial_expansion(
    n: float, nu: float, mode: ExpansionMode | str = ExpansionMode.corrected
) -> ExpansionCoefficients:
    """Laguerre coefficients of y^N.

    Args:
        n (float): The exponent N, a positive integer.
        nu (float): The Laguerre order, nu > -1.
        mode (ExpansionMode | str, optional): ``corrected`` (default) or ``paper_faithful``.

    Returns:
        ExpansionCoefficients: c_0 .. c_N.

    Raises:
        ModeError: Causes when N is not an integer.
        ParameterError: Causes when N < 1 or nu <= -1.
    """
    check_order(nu)
    exponent = _check_exponent(n)
    mode = ExpansionMode(mode)
    factorial = math.factorial(exponent)
    if mode is ExpansionMode.paper_faithful:
        coeffs = tuple(float(factorial * (-1) ** k / math.factorial(exponent - k)) for k in range(exponent + 1))
    else:
        coeffs = tuple(
            float(
                factorial
                * (-1) ** k
                * np.exp(gammaln(exponent + nu + 1.0) - gammaln(exponent - k + 1.0) - gammaln(nu + k + 1.0))
            )
            for k in range(exponent + 1)
        )
    return ExpansionCoefficients(N=exponent, nu=float(nu), mode=mode, coeffs=coeffs)


def monomial_projection(n: float, nu: float) -> ExpansionCoefficients:
    """Corrected coefficients computed by quadrature projection.

    c_k = integral(y^{nu+N} e^{-y} L_k^nu dy) / h_k, evaluated with the
    (N+1)-point rule of weight y^{nu+N} e^{-y}, which is exact because the
    projected polynomial has degree N.

    Args:
        n (float): The exponent N, a positive integer.
        nu (float): The Laguerre order.

    Returns:
        ExpansionCoefficients: Projection coefficients tagged as corrected.
    """
    check_order(nu)
    exponent = _check_exponent(n)
    rule = gauss_laguerre_rule(nu + exponent, exponent + 1)
    table = laguerre_table(exponent, nu, rule.nodes)
    coeffs = tuple(integrate(rule, lambda _, k=k: table[k]) / laguerre_norm(k, nu) for k in range(exponent + 1))
    return ExpansionCoefficients(N=exponent, nu=float(nu), mode=ExpansionMode.corrected, coeffs=coeffs)
