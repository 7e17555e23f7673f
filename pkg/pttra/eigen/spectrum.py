from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, List, NamedTuple, Optional

import numpy as np

from pttra.common import default_tol_real, gauge_threshold, tag_complex, tag_real


class SpectrumSummary(NamedTuple):
    n_real: int
    n_complex: int


def is_real_eigenvalue(value: complex, tol_real: float) -> bool:
    return abs(value.imag) <= tol_real * (1.0 + abs(value))


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of a matrix with optional eigenvectors.

    Args:
        values (np.ndarray): Complex eigenvalues sorted by (Re, Im).
        vectors (np.ndarray | None): Eigenvectors as columns aligned with values.
        residual (float | None): max_k ||A v_k - E_k v_k|| / ||A||, None when
            no eigenvectors were computed.
        tol_real (float): Tolerance of the real/complex classification.
        iterations (int): Iteration sweeps spent by the solver.

    Attributes:
        classification (list[str]): "real" or "complex" for every eigenvalue.
    """

    values: np.ndarray
    vectors: Optional[np.ndarray] = None
    residual: Optional[float] = None
    tol_real: float = default_tol_real
    iterations: int = 0
    classification: List[str] = field(init=False)

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=complex)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        if self.vectors is not None:
            vectors = np.array(self.vectors)
            vectors.setflags(write=False)
            object.__setattr__(self, "vectors", vectors)
        tags = [tag_real if is_real_eigenvalue(v, self.tol_real) else tag_complex for v in values]
        object.__setattr__(self, "classification", tags)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def real_values(self) -> np.ndarray:
        """Real parts of the eigenvalues."""
        return self.values.real.copy()

    def summary(self) -> SpectrumSummary:
        n_real = self.classification.count(tag_real)
        return SpectrumSummary(n_real, len(self.values) - n_real)

    def to_dict(self) -> dict[str, Any]:
        n_real, n_complex = self.summary()
        return {
            "values": [[float(v.real), float(v.imag)] for v in self.values],
            "residual": None if self.residual is None else float(self.residual),
            "n_real": n_real,
            "n_complex": n_complex,
            "tol_real": float(self.tol_real),
        }


def classify(spectrum: Spectrum, tol_real: float | None = None) -> SpectrumSummary:
    """Count real and complex eigenvalues.

    Args:
        spectrum (Spectrum): A converged spectrum.
        tol_real (float | None, optional): Tolerance; the spectrum's own
            tolerance when None.

    Returns:
        SpectrumSummary: (n_real, n_complex).
    """
    if tol_real is None:
        return spectrum.summary()
    n_real = sum(1 for v in spectrum.values if is_real_eigenvalue(complex(v), tol_real))
    return SpectrumSummary(n_real, len(spectrum.values) - n_real)


def sort_order(values: np.ndarray) -> np.ndarray:
    """Stable ordering by real part, then imaginary part."""
    values = np.asarray(values, dtype=complex)
    return np.lexsort((values.imag, values.real))


def fix_gauge(vectors: np.ndarray) -> np.ndarray:
    """Normalize columns and rotate each so its first significant entry is positive real.

    An entry is significant when its modulus exceeds gauge_threshold times
    the largest modulus of the column.
    """
    vectors = np.array(vectors)
    for k in range(vectors.shape[1]):
        column = vectors[:, k]
        norm = np.linalg.norm(column)
        if norm == 0.0:
            continue
        column = column / norm
        moduli = np.abs(column)
        first = int(np.argmax(moduli > gauge_threshold * moduli.max()))
        phase = column[first] / moduli[first]
        vectors[:, k] = column / phase if np.iscomplexobj(column) else column * np.sign(column[first])
    return vectors


def residual_norm(a: np.ndarray, values: np.ndarray, vectors: np.ndarray) -> float:
    """max_k ||A v_k - E_k v_k|| / ||A||_F."""
    scale = np.linalg.norm(a)
    if scale == 0.0:
        scale = 1.0
    errors = a @ vectors - vectors * values[np.newaxis, :]
    return float(np.max(np.linalg.norm(errors, axis=0)) / scale) if len(values) > 0 else 0.0
