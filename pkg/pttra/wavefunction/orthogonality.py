from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from pttra.eigen import TridiagonalSymmetric, tridiag_eigen
from pttra.wavefunction.recursion import recursion_eval


@dataclass(frozen=True)
class OrthogonalityReport:
    """Discrete orthogonality of the recursion polynomials on the eigenvalue nodes.

    Args:
        gram (np.ndarray): gram[n][m] = sum_k w_k P_n(E_k) P_m(E_k).
        weights (np.ndarray): w_k, squared first eigenvector components.
        energies (np.ndarray): The nodes E_k.
        max_offdiag (float): Largest |gram[n][m]|, n != m.
        max_diag_dev (float): Largest |gram[n][n] - 1|.
    """

    gram: np.ndarray
    weights: np.ndarray
    energies: np.ndarray
    max_offdiag: float
    max_diag_dev: float

    def passed(self, tol: float = 1e-8) -> bool:
        return self.max_offdiag <= tol and self.max_diag_dev <= tol


def discrete_orthogonality(t: TridiagonalSymmetric) -> OrthogonalityReport:
    """Check sum_k w_k P_n(E_k) P_m(E_k) = delta_nm.

    Args:
        t (TridiagonalSymmetric): A real tridiagonal matrix with nonzero off-diagonals.

    Returns:
        OrthogonalityReport: The Gram matrix and its deviations from the identity.

    Raises:
        DegenerateRecursionError: Causes when an off-diagonal coefficient vanishes.
    """
    spectrum = tridiag_eigen(t, vectors=True)
    assert spectrum.vectors is not None
    energies = spectrum.values.real
    weights = spectrum.vectors[0, :] ** 2
    p = np.column_stack([recursion_eval(t, float(e)).values for e in energies])
    gram = (p * weights) @ p.T
    offdiag = gram - np.diag(np.diag(gram))
    return OrthogonalityReport(
        gram=gram,
        weights=weights,
        energies=energies,
        max_offdiag=float(np.max(np.abs(offdiag), initial=0.0)),
        max_diag_dev=float(np.max(np.abs(np.diag(gram) - 1.0))),
    )
