"""Three-term recursion E P_n = a_n P_n + b_{n-1} P_{n-1} + b_n P_{n+1} with P_0 = 1.

For a real symmetric tridiagonal matrix with eigenpair (E_k, v_k) the
polynomials satisfy P_n(E_k) = v_k[n] / v_k[0]. Complex E and complex
coefficients are accepted as the analytic continuation of the same relation;
that form is diagnostic only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from pttra.common import recursion_offdiag_tol
from pttra.eigen import TridiagonalSymmetric
from pttra.util.error import DegenerateRecursionError

Energy = Union[float, complex]


@dataclass(frozen=True)
class RecursionPolynomials:
    """P_0(E) .. P_{M-1}(E) of a tridiagonal matrix.

    Args:
        coeffs (TridiagonalSymmetric): The recursion coefficients a_n, b_n.
        energy (float | complex): The argument E.
        values (np.ndarray): P_0(E) .. P_{M-1}(E).
    """

    coeffs: TridiagonalSymmetric
    energy: Energy
    values: np.ndarray

    def __len__(self) -> int:
        return len(self.values)

    def characteristic(self) -> Energy:
        """The recursion continued one step with a synthetic b_{M-1} = 1.

        This equals det(E - T) / (b_0 ... b_{M-2}) and vanishes exactly at
        the eigenvalues of T.
        """
        a = self.coeffs.diag
        b = self.coeffs.offdiag
        m = len(self.values)
        value = (self.energy - a[m - 1]) * self.values[m - 1]
        if m > 1:
            value = value - b[m - 2] * self.values[m - 2]
        return value


def check_offdiag(t: TridiagonalSymmetric) -> None:
    """Raise when an off-diagonal coefficient vanishes relative to ||T||.

    Raises:
        DegenerateRecursionError: Causes when |b_n| <= 1e-13 ||T|| for some n.
    """
    scale = t.norm()
    small = np.flatnonzero(np.abs(t.offdiag) <= recursion_offdiag_tol * scale)
    if len(small) > 0:
        raise DegenerateRecursionError(
            "the tridiagonal matrix decouples, split it into blocks before running the recursion",
            diagnostics={"index": int(small[0]), "offdiag": complex(t.offdiag[small[0]]), "norm": scale},
        )


def recursion_eval(t: TridiagonalSymmetric, energy: Energy) -> RecursionPolynomials:
    """Evaluate P_{n+1} = ((E - a_n) P_n - b_{n-1} P_{n-1}) / b_n upward from P_0 = 1.

    Args:
        t (TridiagonalSymmetric): Coefficients a_n (diagonal) and b_n (off-diagonal).
        energy (float | complex): The argument E.

    Returns:
        RecursionPolynomials: The M values; complex when E or the coefficients are.

    Raises:
        DegenerateRecursionError: Causes when an off-diagonal coefficient vanishes.
    """
    check_offdiag(t)
    a = t.diag
    b = t.offdiag
    complex_valued = isinstance(energy, complex) or np.iscomplexobj(a) or np.iscomplexobj(b)
    values = np.zeros(t.size, dtype=complex if complex_valued else float)
    values[0] = 1.0
    for n in range(t.size - 1):
        previous = b[n - 1] * values[n - 1] if n > 0 else 0.0
        values[n + 1] = ((energy - a[n]) * values[n] - previous) / b[n]
    values.setflags(write=False)
    return RecursionPolynomials(coeffs=t, energy=energy, values=values)
