"""Implicit-shift QL iteration for symmetric tridiagonal matrices.

Each sweep chases a Wilkinson-shifted rotation from the bottom of the
unreduced block up to its top; eigenvector rotations are accumulated when
requested.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from pttra.common import default_tol_real, max_sweeps_per_size
from pttra.eigen.spectrum import Spectrum, fix_gauge, residual_norm, sort_order
from pttra.eigen.tridiagonal import TridiagonalSymmetric, householder_tridiagonalize
from pttra.util.error import ContractError, NumericError

logger = logging.getLogger(__name__)

eps = float(np.finfo(float).eps)


def _implicit_ql(d: list[float], e: list[float], z: np.ndarray | None, max_sweeps: int) -> int:
    """Diagonalize in place. e[i] couples d[i] and d[i + 1]; e[-1] is 0.

    Returns:
        int: Number of sweeps.
    """
    n = len(d)
    sweeps = 0
    for low in range(n):
        while True:
            m = low
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == low:
                break
            if sweeps >= max_sweeps:
                raise NumericError(
                    "implicit QL iteration did not converge",
                    partial=sorted(d[:low]),
                    diagnostics={"sweeps": sweeps, "converged": low, "offdiag": abs(e[low])},
                )
            sweeps += 1

            g = (d[low + 1] - d[low]) / (2.0 * e[low])
            r = math.hypot(g, 1.0)
            g = d[m] - d[low] + e[low] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, low - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if z is not None:
                    f_col = z[:, i + 1].copy()
                    z[:, i + 1] = s * z[:, i] + c * f_col
                    z[:, i] = c * z[:, i] - s * f_col
            if underflow:
                continue
            d[low] -= p
            e[low] = g
            e[m] = 0.0
    return sweeps


def tridiag_eigen(t: TridiagonalSymmetric, vectors: bool = True, tol_real: float = default_tol_real) -> Spectrum:
    """Eigenvalues (and eigenvectors) of a real symmetric tridiagonal matrix.

    Args:
        t (TridiagonalSymmetric): The matrix. Its transform, if any, is not applied.
        vectors (bool, optional): Whether to accumulate eigenvectors. Defaults to True.
        tol_real (float, optional): Classification tolerance. Defaults to 1e-8.

    Returns:
        Spectrum: Eigenvalues in ascending order, eigenvectors of t as columns.

    Raises:
        NumericError: Causes when more than 50 * M sweeps are needed.
    """
    if np.iscomplexobj(t.diag) or np.iscomplexobj(t.offdiag):
        raise ContractError("the symmetric tridiagonal path needs real coefficients")
    n = t.size
    d = [float(x) for x in t.diag]
    e = [float(x) for x in t.offdiag] + [0.0]
    z = np.eye(n) if vectors else None
    sweeps = _implicit_ql(d, e, z, max_sweeps_per_size * max(n, 1))
    logger.debug(f"implicit QL: size {n}, {sweeps} sweeps")

    values = np.array(d, dtype=float)
    order = sort_order(values)
    values = values[order]
    if z is None:
        return Spectrum(values=values, tol_real=tol_real, iterations=sweeps)
    z = fix_gauge(z[:, order])
    residual = residual_norm(t.to_dense(), values, z)
    return Spectrum(values=values, vectors=z, residual=residual, tol_real=tol_real, iterations=sweeps)


def symmetric_eigen(a: np.ndarray, tol_real: float = default_tol_real) -> Spectrum:
    """Eigenpairs of a real symmetric matrix via Householder reduction and implicit QL.

    Args:
        a (np.ndarray): A real symmetric matrix.
        tol_real (float, optional): Classification tolerance. Defaults to 1e-8.

    Returns:
        Spectrum: Eigenvalues in ascending order and eigenvectors of a.
    """
    t = householder_tridiagonalize(a)
    spectrum = tridiag_eigen(t, vectors=True, tol_real=tol_real)
    assert t.transform is not None and spectrum.vectors is not None
    vectors = fix_gauge(t.transform @ spectrum.vectors)
    residual = residual_norm(np.real(np.asarray(a)), spectrum.values.real, vectors)
    return Spectrum(
        values=spectrum.values, vectors=vectors, residual=residual, tol_real=tol_real, iterations=spectrum.iterations
    )
