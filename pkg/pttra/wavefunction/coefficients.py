from __future__ import annotations

import logging

import numpy as np

from pttra.common import default_tol_real
from pttra.eigen import Spectrum, complex_eigen, fix_gauge, householder_tridiagonalize, symmetric_eigen, tridiag_eigen
from pttra.hamiltonian import ComplexSymmetricMatrix
from pttra.util.error import ParameterError
from pttra.wavefunction.recursion import recursion_eval

logger = logging.getLogger(__name__)


def solve(h: ComplexSymmetricMatrix, tol_real: float = default_tol_real) -> Spectrum:
    """Eigenpairs of an assembled matrix.

    Real matrices go through Householder reduction and implicit QL, complex
    symmetric ones through the dense complex QR solver.
    """
    if h.is_real():
        logger.debug(f"symmetric path for a real {h.size} x {h.size} matrix")
        return symmetric_eigen(h.entries.real, tol_real=tol_real)
    logger.debug(f"complex QR path for a {h.size} x {h.size} matrix, max|Im| = {h.max_imag():.3e}")
    return complex_eigen(h.entries, vectors=True, tol_real=tol_real)


def _check_level(which: int, size: int) -> None:
    if which < 0 or which >= size:
        raise ParameterError(f"eigenvalue index {which} is outside 0 .. {size - 1}")


def eigenpair(
    h: ComplexSymmetricMatrix, which: int, tol_real: float = default_tol_real
) -> tuple[complex, np.ndarray, Spectrum]:
    """Eigenvalue E_k, its unit-norm gauged eigenvector f and the whole spectrum."""
    _check_level(which, h.size)
    spectrum = solve(h, tol_real=tol_real)
    assert spectrum.vectors is not None
    return complex(spectrum.values[which]), np.array(spectrum.vectors[:, which]), spectrum


def expansion_coefficients(h: ComplexSymmetricMatrix, which: int, tol_real: float = default_tol_real) -> np.ndarray:
    """Coefficients f_0 .. f_{M-1} of psi = sum_n f_n phi_n for the level `which`.

    The vector is normalized to sum |f_n|^2 = 1 and its first significant
    entry is positive real.

    Args:
        h (ComplexSymmetricMatrix): The assembled matrix.
        which (int): Eigenvalue index in (Re, Im) order.
        tol_real (float, optional): Classification tolerance.

    Returns:
        np.ndarray: f, real for real matrices and complex otherwise.

    Raises:
        ParameterError: Causes when `which` is out of range.
    """
    _, coefficients, _ = eigenpair(h, which, tol_real=tol_real)
    return coefficients


def recursion_coefficients(h: ComplexSymmetricMatrix, which: int) -> np.ndarray:
    """Coefficients of a real matrix rebuilt from the recursion, f = Q (f_0 P_n(E_k)).

    Args:
        h (ComplexSymmetricMatrix): A real assembled matrix.
        which (int): Eigenvalue index.

    Returns:
        np.ndarray: Unit-norm gauged coefficients.

    Raises:
        ParameterError: Causes when h is not real or `which` is out of range.
        DegenerateRecursionError: Causes when the tridiagonal form decouples.
    """
    _check_level(which, h.size)
    if not h.is_real():
        raise ParameterError("the recursion reconstruction needs a real matrix")
    t = householder_tridiagonalize(h.entries.real)
    energy = float(tridiag_eigen(t, vectors=False).values[which].real)
    p = np.array(recursion_eval(t, energy).values)
    assert t.transform is not None
    f = t.transform @ (p / np.linalg.norm(p))
    return fix_gauge(f[:, np.newaxis])[:, 0]


def coefficient_residual(h: ComplexSymmetricMatrix, energy: complex, coefficients: np.ndarray) -> float:
    """||H f - E f|| / ||f|| in coefficient space."""
    f = np.asarray(coefficients)
    return float(np.linalg.norm(h.entries @ f - energy * f) / np.linalg.norm(f))
