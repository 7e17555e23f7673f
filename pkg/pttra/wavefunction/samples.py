"""Basis functions phi_n and sampled wavefunctions psi(x) = sum_n f_n phi_n(lambda^2 x^2).

The basis lives on the half line x > 0 where it is orthonormal. Negative x
is evaluated through y = lambda^2 x^2, which mirrors |psi| and leaves a cusp
at x = 0 from the y^{1/2} factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np
from numpy.typing import ArrayLike
from scipy.integrate import trapezoid

from pttra.basis import laguerre_table
from pttra.hamiltonian import BasisSpec, normalization_constant
from pttra.util.error import ParameterError


def basis_table(basis: BasisSpec, x: ArrayLike) -> np.ndarray:
    """phi_0 .. phi_{M-1} on the points x, shape (M, *x.shape)."""
    x = np.asarray(x, dtype=float)
    y = basis.lam**2 * x**2
    norms = np.array([normalization_constant(n, basis.lam) for n in range(basis.size)])
    envelope = basis.lam * np.abs(x) * np.exp(-0.5 * y)
    table = laguerre_table(basis.size - 1, basis.nu, y)
    return norms.reshape((-1,) + (1,) * x.ndim) * envelope * table


def basis_eval(n: int, basis: BasisSpec, x: ArrayLike) -> Any:
    """phi_n(x) = A_n y^{1/2} e^{-y/2} L_n^{1/2}(y), y = lambda^2 x^2.

    Args:
        n (int): Basis index, n < M is not required.
        basis (BasisSpec): Supplies lambda.
        x (ArrayLike): Positions.

    Returns:
        float | np.ndarray: phi_n, even in x and zero at x = 0.
    """
    if n < 0:
        raise ParameterError(f"basis index must be non-negative, got {n}")
    values = basis_table(BasisSpec(lam=basis.lam, size=n + 1), x)[n]
    return float(values) if np.ndim(values) == 0 else values


@dataclass(frozen=True)
class WavefunctionSamples:
    """psi sampled on a grid.

    Args:
        x (np.ndarray): Ordered grid.
        psi (np.ndarray): Complex samples.
        meta (dict[str, Any]): Energy, level, basis and potential parameters.
    """

    x: np.ndarray
    psi: np.ndarray
    meta: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        x = np.array(self.x, dtype=float)
        psi = np.array(self.psi, dtype=complex)
        if x.shape != psi.shape or x.ndim != 1:
            raise ParameterError("grid and samples must be vectors of equal length")
        x.setflags(write=False)
        psi.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "psi", psi)

    def __len__(self) -> int:
        return len(self.x)

    @property
    def modulus(self) -> np.ndarray:
        return np.abs(self.psi)

    def half_line_norm(self) -> float:
        """Trapezoidal integral of |psi|^2 over x >= 0."""
        mask = self.x >= 0.0
        return float(trapezoid(self.modulus[mask] ** 2, self.x[mask]))

    def rows(self) -> list[tuple[float, float, float, float]]:
        """(x, Re psi, Im psi, |psi|) per grid point."""
        return [(float(x), float(p.real), float(p.imag), float(abs(p))) for x, p in zip(self.x, self.psi)]


def reconstruct(
    coeffs: ArrayLike, basis: BasisSpec, grid: Optional[ArrayLike] = None, meta: Optional[Dict[str, Any]] = None
) -> WavefunctionSamples:
    """Sample psi = sum_n f_n phi_n on a grid.

    The coefficients are rescaled to sum |f_n|^2 = 1, which is the exact
    half-line norm of psi because the basis is orthonormal there.

    Args:
        coeffs (ArrayLike): f_0 .. f_{M-1}.
        basis (BasisSpec): The basis of size M.
        grid (ArrayLike | None, optional): Positions; basis.grid() when None.
        meta (dict[str, Any] | None, optional): Carried into the samples.

    Returns:
        WavefunctionSamples: Unit-norm samples.

    Raises:
        ParameterError: Causes when the coefficient count differs from M,
            the grid is not finite, or every coefficient is zero.
    """
    f = np.asarray(coeffs, dtype=complex)
    if f.shape != (basis.size,):
        raise ParameterError(f"expected {basis.size} coefficients, got shape {f.shape}")
    norm = np.linalg.norm(f)
    if norm == 0.0:
        raise ParameterError("all expansion coefficients vanish, the state cannot be normalized")
    x = basis.grid() if grid is None else np.asarray(grid, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ParameterError("the sampling grid must be finite")
    psi = np.tensordot(f / norm, basis_table(basis, x), axes=1)
    content = {"normalization": "half_line_unit_norm", "lambda": basis.lam, "size": basis.size}
    content.update(meta or {})
    return WavefunctionSamples(x=x, psi=psi, meta=content)


def decay_metric(samples: WavefunctionSamples, x_tail: float) -> float:
    """max |psi| on |x| >= x_tail divided by the global max |psi|.

    Raises:
        ParameterError: Causes when x_tail is negative or beyond the grid.
    """
    reach = float(np.max(np.abs(samples.x)))
    if x_tail < 0.0 or x_tail > reach:
        raise ParameterError(f"x_tail = {x_tail} lies outside the grid reach {reach}")
    modulus = samples.modulus
    peak = float(np.max(modulus))
    if peak == 0.0:
        return 0.0
    return float(np.max(modulus[np.abs(samples.x) >= x_tail]) / peak)
