from pttra.wavefunction.coefficients import (
    coefficient_residual,
    eigenpair,
    expansion_coefficients,
    recursion_coefficients,
    solve,
)
from pttra.wavefunction.orthogonality import OrthogonalityReport, discrete_orthogonality
from pttra.wavefunction.recursion import RecursionPolynomials, check_offdiag, recursion_eval
from pttra.wavefunction.samples import WavefunctionSamples, basis_eval, basis_table, decay_metric, reconstruct

__all__ = [
    "OrthogonalityReport",
    "RecursionPolynomials",
    "WavefunctionSamples",
    "basis_eval",
    "basis_table",
    "check_offdiag",
    "coefficient_residual",
    "decay_metric",
    "discrete_orthogonality",
    "eigenpair",
    "expansion_coefficients",
    "reconstruct",
    "recursion_coefficients",
    "recursion_eval",
    "solve",
]
