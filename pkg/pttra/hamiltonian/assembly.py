"""Matrix elements of H = -1/2 d^2/dx^2 + lambda-scaled harmonic term - (ix)^{2N} in the Laguerre basis.

The potential radial integral is evaluated in one of two ways. The direct
path integrates y^{N+1/2} e^{-y} L_n L_m with the shifted-weight rule of
exponent N + 1/2, which is exact for any real N because the integrand over
the weight is a polynomial. The expansion path writes y^N as a finite sum of
L_k^{1/2} and reduces every entry to triple products.
"""

from __future__ import annotations

import logging
import math
from typing import Optional

import numpy as np
from scipy.special import gammaln

from pttra.basis import (
    ExpansionCoefficients,
    ExpansionMode,
    QuadratureRule,
    gauss_laguerre_rule,
    integrate,
    laguerre_table,
    monomial_expansion,
)
from pttra.hamiltonian.basis_spec import BasisSpec
from pttra.hamiltonian.matrix import ComplexSymmetricMatrix
from pttra.hamiltonian.potential import PotentialSpec
from pttra.util.error import ParameterError

logger = logging.getLogger(__name__)

path_quadrature = "quadrature"
path_expansion = "expansion"


def normalization_constant(n: int, lam: float) -> float:
    """A_n = sqrt(2 lambda Gamma(n+1) / Gamma(n+3/2)).

    Args:
        n (int): Basis index.
        lam (float): The scale lambda > 0.

    Returns:
        float: A_n.
    """
    if lam <= 0.0:
        raise ParameterError(f"lambda must be positive, got {lam}")
    if n < 0:
        raise ParameterError(f"basis index must be non-negative, got {n}")
    return math.sqrt(2.0 * lam * math.exp(gammaln(n + 1.0) - gammaln(n + 1.5)))


def _reduced_norms(size: int) -> np.ndarray:
    # A_n / sqrt(2 lambda)
    n = np.arange(size, dtype=float)
    return np.exp(0.5 * (gammaln(n + 1.0) - gammaln(n + 1.5)))


def default_quad_nodes(size: int, n: float) -> int:
    return size + math.ceil(n) + 2


def radial_integrals(size: int, n: float, quad_nodes: Optional[int] = None) -> tuple[np.ndarray, QuadratureRule]:
    """I[n][m] = integral of y^{N+1/2} e^{-y} L_n^{1/2} L_m^{1/2} over [0, inf).

    Each unordered pair is evaluated once on a single shared rule and mirrored.
    """
    k = default_quad_nodes(size, n) if quad_nodes is None else int(quad_nodes)
    assert k >= size, "quadrature rule too small for the radial integrals"
    rule = gauss_laguerre_rule(n + 0.5, k)
    table = laguerre_table(size - 1, 0.5, rule.nodes)
    integrals = np.zeros((size, size))
    for i in range(size):
        for j in range(i, size):
            integrals[i, j] = integrate(rule, lambda _: table[i] * table[j])
            integrals[j, i] = integrals[i, j]
    return integrals, rule


def expansion_integrals(size: int, coefficients: ExpansionCoefficients) -> tuple[np.ndarray, QuadratureRule]:
    """I[n][m] = sum_k c_k T(k, n, m), T the triple product of L^{1/2} polynomials.

    Args:
        size (int): Basis size M.
        coefficients (ExpansionCoefficients): Expansion of y^N in L_k^{1/2}.

    Returns:
        tuple[np.ndarray, QuadratureRule]: The integrals and the rule used.
    """
    if coefficients.nu != 0.5:
        raise ParameterError(f"the basis expansion needs order 1/2, got {coefficients.nu}")
    # the triple product of degrees (N, M-1, M-1) is the largest integrand
    rule = gauss_laguerre_rule(0.5, (coefficients.N + 2 * (size - 1)) // 2 + 1)
    table = laguerre_table(max(size - 1, coefficients.N), 0.5, rule.nodes)
    coeffs = coefficients.coeffs
    integrals = np.zeros((size, size))
    for i in range(size):
        for j in range(i, size):
            integrals[i, j] = sum(
                c * integrate(rule, lambda _, k=k: table[k] * table[i] * table[j]) for k, c in enumerate(coeffs)
            )
            integrals[j, i] = integrals[i, j]
    return integrals, rule


def potential_matrix(
    basis: BasisSpec,
    pot: PotentialSpec,
    quad_nodes: Optional[int] = None,
    coefficients: Optional[ExpansionCoefficients] = None,
) -> ComplexSymmetricMatrix:
    """Potential term V[n][m] = -a lambda^{-2N} A_n A_m / (2 lambda) I(n, m, N).

    Args:
        basis (BasisSpec): The basis.
        pot (PotentialSpec): Exponent, mode and phase.
        quad_nodes (int | None, optional): Node count of the direct rule;
            M + ceil(N) + 2 when None.
        coefficients (ExpansionCoefficients | None, optional): Forces the
            expansion path with these coefficients. The paper_faithful mode
            always takes the expansion path with its own coefficients.

    Returns:
        ComplexSymmetricMatrix: V.

    Raises:
        ModeError: Causes when paper_faithful is combined with non-integer N.
    """
    if coefficients is None and pot.mode is ExpansionMode.paper_faithful:
        coefficients = monomial_expansion(pot.N, 0.5, ExpansionMode.paper_faithful)
    if coefficients is None:
        integrals, rule = radial_integrals(basis.size, pot.N, quad_nodes)
        path = path_quadrature
    else:
        if int(round(pot.N)) != coefficients.N:
            raise ParameterError(f"coefficients expand y^{coefficients.N}, the potential has N = {pot.N}")
        integrals, rule = expansion_integrals(basis.size, coefficients)
        path = path_expansion
    logger.debug(f"potential matrix: N={pot.N}, M={basis.size}, path={path}, K={rule.size}")

    norms = _reduced_norms(basis.size)
    prefactor = -pot.phase * basis.lam ** (-2.0 * pot.N)
    entries = prefactor * (norms[:, np.newaxis] * integrals * norms[np.newaxis, :])
    # exact mirror, the outer product above is symmetric only up to rounding
    entries = np.triu(entries) + np.triu(entries, 1).T
    meta = {"phase": pot.phase, "quad_nodes": rule.size, "path": path, "annotations": pot.annotations()}
    return ComplexSymmetricMatrix(entries, basis, pot, meta)


def kinetic_harmonic_matrix(basis: BasisSpec) -> ComplexSymmetricMatrix:
    """Tridiagonal kinetic plus harmonic term.

    T[n][n] = 2 lambda^2 (3/4 + n - d (2n + 3/2)),
    T[n][n+1] = 2 lambda^2 d sqrt((n+1)(n+3/2)), d = 1/4 - 1/(2 lambda^4).
    """
    lam2 = basis.lam**2
    d = basis.d
    n = np.arange(basis.size, dtype=float)
    diag = 2.0 * lam2 * (0.75 + n - d * (2.0 * n + 1.5))
    offdiag = 2.0 * lam2 * d * np.sqrt((n[:-1] + 1.0) * (n[:-1] + 1.5))
    entries = np.diag(diag) + np.diag(offdiag, 1) + np.diag(offdiag, -1)
    return ComplexSymmetricMatrix(entries.astype(complex), basis)


def assemble(basis: BasisSpec, pot: PotentialSpec, quad_nodes: Optional[int] = None) -> ComplexSymmetricMatrix:
    """Full Hamiltonian matrix H = V + T.

    Args:
        basis (BasisSpec): The basis.
        pot (PotentialSpec): The potential.
        quad_nodes (int | None, optional): Direct-path node count override.

    Returns:
        ComplexSymmetricMatrix: H, exactly symmetric; exactly real for integer N.
    """
    if pot.N < 1.0:
        logger.warning(pot.annotations()[0])
    h = potential_matrix(basis, pot, quad_nodes=quad_nodes) + kinetic_harmonic_matrix(basis)
    logger.debug(f"assembled H: N={pot.N}, lambda={basis.lam}, M={basis.size}, max|Im|={h.max_imag():.3e}")
    return h
