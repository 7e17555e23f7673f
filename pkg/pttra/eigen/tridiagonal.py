from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from pttra.common import symmetry_tol
from pttra.util.error import ContractError


@dataclass(frozen=True)
class TridiagonalSymmetric:
    """A symmetric tridiagonal matrix.

    Args:
        diag (np.ndarray): Diagonal a_0 .. a_{M-1}.
        offdiag (np.ndarray): Off-diagonal b_0 .. b_{M-2}.
        transform (np.ndarray | None, optional): Orthogonal Q with
            Q^T A Q equal to this matrix for the source matrix A.
    """

    diag: np.ndarray
    offdiag: np.ndarray
    transform: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        diag = np.array(self.diag)
        offdiag = np.array(self.offdiag)
        if diag.ndim != 1 or offdiag.ndim != 1 or len(offdiag) != max(len(diag) - 1, 0):
            raise ContractError(
                f"a tridiagonal matrix of size {len(diag)} needs {max(len(diag) - 1, 0)} off-diagonal entries"
            )
        diag.setflags(write=False)
        offdiag.setflags(write=False)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", offdiag)
        if self.transform is not None:
            transform = np.array(self.transform, dtype=float)
            transform.setflags(write=False)
            object.__setattr__(self, "transform", transform)

    @property
    def size(self) -> int:
        return len(self.diag)

    def to_dense(self) -> np.ndarray:
        dense = np.diag(self.diag)
        if self.size > 1:
            dense = dense + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)
        return dense

    def norm(self) -> float:
        """Frobenius norm."""
        return float(np.sqrt(np.sum(np.abs(self.diag) ** 2) + 2.0 * np.sum(np.abs(self.offdiag) ** 2)))


def check_symmetric(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractError(f"a square matrix is required, got shape {a.shape}")
    scale = np.linalg.norm(a)
    if np.max(np.abs(a - a.T), initial=0.0) > symmetry_tol * max(scale, 1.0):
        raise ContractError("matrix is not symmetric")
    return a


def householder_tridiagonalize(a: np.ndarray) -> TridiagonalSymmetric:
    """Reduce a real symmetric matrix to tridiagonal form by Householder reflectors.

    Column k is reduced by the reflector P = I - 2 v v^T acting on rows and
    columns k+1 .. M-1, so the first basis vector is never rotated and
    Q[:, 0] = e_0. Columns that are already reduced are skipped, which keeps
    tridiagonal input unchanged.

    Args:
        a (np.ndarray): A real symmetric M x M matrix.

    Returns:
        TridiagonalSymmetric: Diagonal, off-diagonal and the accumulated Q.

    Raises:
        ContractError: Causes when a is not square, not real, or not symmetric.
    """
    a = check_symmetric(a)
    if np.iscomplexobj(a):
        if np.any(a.imag != 0.0):
            raise ContractError("Householder tridiagonalization needs a real matrix")
        a = a.real
    t = np.array(a, dtype=float)
    n = t.shape[0]
    q = np.eye(n)
    for k in range(n - 2):
        x = t[k + 1 :, k]
        if not np.any(x[1:]):
            continue
        alpha = -np.copysign(np.linalg.norm(x), x[0])
        v = x.copy()
        v[0] -= alpha
        v /= np.linalg.norm(v)
        t[k + 1 :, :] -= 2.0 * np.outer(v, v @ t[k + 1 :, :])
        t[:, k + 1 :] -= 2.0 * np.outer(t[:, k + 1 :] @ v, v)
        q[:, k + 1 :] -= 2.0 * np.outer(q[:, k + 1 :] @ v, v)
        t[k + 2 :, k] = 0.0
        t[k, k + 2 :] = 0.0
    diag = np.diag(t).copy()
    offdiag = 0.5 * (np.diag(t, 1) + np.diag(t, -1)) if n > 1 else np.zeros(0)
    return TridiagonalSymmetric(diag=diag, offdiag=offdiag, transform=q)


def jacobi_matrix(diag: np.ndarray, offdiag: np.ndarray) -> TridiagonalSymmetric:
    """A tridiagonal matrix built from recurrence coefficients, without transform."""
    return TridiagonalSymmetric(diag=np.asarray(diag, dtype=float), offdiag=np.asarray(offdiag, dtype=float))
