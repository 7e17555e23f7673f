"""Generalized Gauss-Laguerre quadrature for the weight y^alpha e^{-y}.

Nodes are the eigenvalues of the Jacobi matrix of the Laguerre recurrence
(Golub-Welsch). The squared first eigenvector components are evaluated
through the eigenvector-ratio identity

    v_0(x)^2 = 1 / sum_n P_n(x)^2,    P_n = v_n / v_0,

where P_n are the recurrence polynomials of the Jacobi matrix. In Laguerre
terms this is w(x) = 1 / sum_n L_n^alpha(x)^2 / h_n, which keeps the small
weights of the largest nodes accurate to full relative precision.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Optional

import numpy as np
from scipy.special import gammaln

from pttra.basis.laguerre import check_degree, check_order, laguerre_table
from pttra.eigen import jacobi_matrix, tridiag_eigen
from pttra.util.error import NumericError, ParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadratureRule:
    """A K-point rule for the weight y^alpha e^{-y} on [0, inf).

    Args:
        alpha (float): Weight exponent, alpha > -1.
        nodes (np.ndarray): Strictly increasing positive nodes.
        weights (np.ndarray): Positive weights.
    """

    alpha: float
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        nodes = np.array(self.nodes, dtype=float)
        weights = np.array(self.weights, dtype=float)
        if nodes.shape != weights.shape or nodes.ndim != 1 or len(nodes) == 0:
            raise NumericError("quadrature nodes and weights must be non-empty vectors of equal length")
        if np.any(nodes <= 0.0) or np.any(np.diff(nodes) <= 0.0):
            raise NumericError("quadrature nodes must be positive and strictly increasing")
        if np.any(weights <= 0.0):
            raise NumericError("quadrature weights must be positive")
        nodes.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    @property
    def size(self) -> int:
        return len(self.nodes)

    def total_weight(self) -> float:
        return float(np.cumsum(self.weights)[-1])


def gauss_laguerre_rule(alpha: float, k: int) -> QuadratureRule:
    """Build the K-point generalized Gauss-Laguerre rule.

    The rule integrates y^j y^alpha e^{-y} exactly for j <= 2K - 1.

    Args:
        alpha (float): Weight exponent, alpha > -1.
        k (int): Number of nodes, K >= 1.

    Returns:
        QuadratureRule: The rule; instances are cached and immutable.

    Raises:
        ParameterError: Causes when alpha <= -1 or K < 1.
        NumericError: Propagated from the tridiagonal eigensolver.
    """
    check_order(alpha)
    check_degree(k)
    if k < 1:
        raise ParameterError(f"a quadrature rule needs at least one node, got {k}")
    return _gauss_laguerre_rule(float(alpha), int(k))


@lru_cache(maxsize=256)
def _gauss_laguerre_rule(alpha: float, k: int) -> QuadratureRule:
    j = np.arange(k, dtype=float)
    diag = 2.0 * j + alpha + 1.0
    offdiag = np.sqrt(j[1:] * (j[1:] + alpha))
    nodes = tridiag_eigen(jacobi_matrix(diag, offdiag), vectors=False).real_values

    # one Newton step on L_K^alpha, with x L_K' = K L_K - (K + alpha) L_{K-1}
    table = laguerre_table(k, alpha, nodes)
    derivative = (k * table[k] - (k + alpha) * table[k - 1]) / nodes
    step = np.where(derivative != 0.0, table[k] / np.where(derivative != 0.0, derivative, 1.0), 0.0)
    step = np.where(np.abs(step) <= 1e-6 * (1.0 + np.abs(nodes)), step, 0.0)
    nodes = nodes - step

    norms = np.exp(gammaln(j + alpha + 1.0) - gammaln(j + 1.0))
    table = laguerre_table(k - 1, alpha, nodes)
    weights = 1.0 / np.sum(table**2 / norms[:, np.newaxis], axis=0)
    logger.debug(f"Gauss-Laguerre rule: alpha={alpha}, K={k}")
    return QuadratureRule(alpha=alpha, nodes=nodes, weights=weights)


def integrate(rule: QuadratureRule, f: Callable[[np.ndarray], Any]) -> Any:
    """Apply a rule to f.

    Args:
        rule (QuadratureRule): The rule.
        f (Callable[[np.ndarray], Any]): Integrand without the weight, called
            once with the array of nodes; may return real or complex values.

    Returns:
        float | complex: sum_j w_j f(node_j), accumulated in ascending node order.
    """
    values = np.broadcast_to(np.asarray(f(rule.nodes)), rule.nodes.shape)
    total = np.cumsum(rule.weights * values)[-1]
    if np.iscomplexobj(total):
        return complex(total)
    return float(total)


def triple_product(k: int, n: int, m: int, nu: float, rule: Optional[QuadratureRule] = None) -> float:
    """Integral of y^nu e^{-y} L_k^nu L_n^nu L_m^nu over [0, inf).

    Args:
        k (int): Degree of the first factor.
        n (int): Degree of the second factor.
        m (int): Degree of the third factor.
        nu (float): Order and weight exponent.
        rule (QuadratureRule | None, optional): A rule for the weight y^nu
            e^{-y} with at least floor((k+n+m)/2) + 1 nodes. Built when None.

    Returns:
        float: The exact integral up to rounding.
    """
    for degree in (k, n, m):
        check_degree(degree)
    needed = (k + n + m) // 2 + 1
    if rule is None:
        rule = gauss_laguerre_rule(nu, needed)
    assert rule.size >= needed and rule.alpha == nu, "quadrature rule too small for the triple product"
    table = laguerre_table(max(k, n, m), nu, rule.nodes)
    return integrate(rule, lambda _: table[k] * table[n] * table[m])
