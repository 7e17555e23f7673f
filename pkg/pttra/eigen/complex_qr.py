"""Dense eigensolver for general complex matrices.

The matrix is reduced to upper Hessenberg form by complex Householder
reflectors and then to upper triangular (Schur) form by single-shift
implicit QR sweeps with Givens rotations. Eigenvectors are obtained by
back substitution in the triangular factor and mapped back through the
accumulated unitary transform.
"""

from __future__ import annotations

import cmath
import logging

import numpy as np

from pttra.common import default_tol_real, max_dense_size, max_sweeps_per_size
from pttra.eigen.spectrum import Spectrum, fix_gauge, residual_norm, sort_order
from pttra.util.error import ContractError, NumericError

logger = logging.getLogger(__name__)

eps = float(np.finfo(float).eps)


def hessenberg_reduce(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Reduce a square matrix to upper Hessenberg form.

    Args:
        a (np.ndarray): A square matrix.

    Returns:
        tuple[np.ndarray, np.ndarray]: (H, Z) with A = Z H Z^H and Z unitary.
    """
    h = np.array(a, dtype=complex)
    n = h.shape[0]
    z = np.eye(n, dtype=complex)
    for k in range(n - 2):
        x = h[k + 1 :, k]
        if not np.any(x[1:]):
            continue
        norm_x = np.linalg.norm(x)
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x.copy()
        v[0] += phase * norm_x
        v /= np.linalg.norm(v)
        h[k + 1 :, :] -= 2.0 * np.outer(v, v.conj() @ h[k + 1 :, :])
        h[:, k + 1 :] -= 2.0 * np.outer(h[:, k + 1 :] @ v, v.conj())
        z[:, k + 1 :] -= 2.0 * np.outer(z[:, k + 1 :] @ v, v.conj())
        h[k + 2 :, k] = 0.0
    return h, z


def _givens(x: complex, y: complex) -> tuple[float, complex]:
    """Rotation [[c, s], [-conj(s), c]] mapping (x, y) to (r, 0)."""
    r = np.hypot(abs(x), abs(y))
    if r == 0.0:
        return 1.0, 0.0j
    if x == 0:
        return 0.0, complex(np.conj(y) / abs(y))
    c = abs(x) / r
    s = (x / abs(x)) * np.conj(y) / r
    return float(c), complex(s)


def _wilkinson_shift(a: complex, b: complex, c: complex, d: complex) -> complex:
    """Eigenvalue of [[a, b], [c, d]] closest to d."""
    half_trace = 0.5 * (a + d)
    disc = cmath.sqrt(0.25 * (a - d) ** 2 + b * c)
    mu1 = half_trace + disc
    mu2 = half_trace - disc
    return mu1 if abs(mu1 - d) <= abs(mu2 - d) else mu2


def _schur(h: np.ndarray, z: np.ndarray, max_sweeps: int) -> int:
    """Reduce the Hessenberg h to upper triangular form in place, updating z.

    Returns:
        int: Number of QR sweeps.
    """
    n = h.shape[0]
    scale = max(float(np.linalg.norm(h)), 1.0)
    hi = n - 1
    its = 0
    sweeps = 0
    while hi > 0:
        low = hi
        while low > 0:
            s = abs(h[low - 1, low - 1]) + abs(h[low, low])
            if s == 0.0:
                s = scale
            if abs(h[low, low - 1]) <= eps * s:
                h[low, low - 1] = 0.0
                break
            low -= 1
        if low == hi:
            hi -= 1
            its = 0
            continue

        if sweeps >= max_sweeps:
            raise NumericError(
                "complex QR iteration did not converge",
                partial=np.diag(h)[hi + 1 :].copy(),
                diagnostics={"sweeps": sweeps, "active": hi + 1, "subdiag": float(abs(h[hi, hi - 1]))},
            )
        sweeps += 1
        its += 1

        if its % 10 == 0:
            mu = h[hi, hi] + 0.75 * abs(h[hi, hi - 1])
        else:
            mu = _wilkinson_shift(h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi])

        x = h[low, low] - mu
        y = h[low + 1, low]
        for k in range(low, hi):
            if k > low:
                x = h[k, k - 1]
                y = h[k + 1, k - 1]
            c, s = _givens(x, y)
            first = k - 1 if k > low else low
            row_k = h[k, first:].copy()
            row_k1 = h[k + 1, first:].copy()
            h[k, first:] = c * row_k + s * row_k1
            h[k + 1, first:] = -np.conj(s) * row_k + c * row_k1
            if k > low:
                h[k + 1, k - 1] = 0.0

            last = min(k + 2, hi) + 1
            col_k = h[:last, k].copy()
            col_k1 = h[:last, k + 1].copy()
            h[:last, k] = c * col_k + np.conj(s) * col_k1
            h[:last, k + 1] = -s * col_k + c * col_k1

            zk = z[:, k].copy()
            zk1 = z[:, k + 1].copy()
            z[:, k] = c * zk + np.conj(s) * zk1
            z[:, k + 1] = -s * zk + c * zk1
    return sweeps


def _triangular_eigenvectors(t: np.ndarray) -> np.ndarray:
    """Eigenvectors of an upper triangular matrix by back substitution."""
    n = t.shape[0]
    small = eps * max(float(np.linalg.norm(t)), 1.0)
    y = np.zeros((n, n), dtype=complex)
    for k in range(n):
        y[k, k] = 1.0
        for j in range(k - 1, -1, -1):
            denom = t[j, j] - t[k, k]
            if abs(denom) < small:
                denom = small
            y[j, k] = -(t[j, j + 1 : k + 1] @ y[j + 1 : k + 1, k]) / denom
    return y


def complex_eigen(a: np.ndarray, vectors: bool = True, tol_real: float = default_tol_real) -> Spectrum:
    """All eigenvalues of a dense complex matrix.

    Args:
        a (np.ndarray): A square matrix of size at most 128.
        vectors (bool, optional): Whether to compute eigenvectors. Defaults to True.
        tol_real (float, optional): Classification tolerance. Defaults to 1e-8.

    Returns:
        Spectrum: Eigenvalues sorted by (Re, Im) with aligned eigenvectors.

    Raises:
        ContractError: Causes when a is not square or larger than 128.
        NumericError: Causes when more than 50 * M QR sweeps are needed.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractError(f"a square matrix is required, got shape {a.shape}")
    n = a.shape[0]
    if n > max_dense_size:
        raise ContractError(f"dense solver accepts matrices up to size {max_dense_size}, got {n}")

    h, z = hessenberg_reduce(a)
    sweeps = _schur(h, z, max_sweeps_per_size * max(n, 1))
    logger.debug(f"complex QR: size {n}, {sweeps} sweeps")

    values = np.diag(h).copy()
    order = sort_order(values)
    values = values[order]
    if not vectors:
        return Spectrum(values=values, tol_real=tol_real, iterations=sweeps)
    eigvecs = z @ _triangular_eigenvectors(np.triu(h))
    eigvecs = fix_gauge(eigvecs[:, order])
    residual = residual_norm(a, values, eigvecs)
    return Spectrum(values=values, vectors=eigvecs, residual=residual, tol_real=tol_real, iterations=sweeps)
