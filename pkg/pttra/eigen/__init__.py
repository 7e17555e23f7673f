from pttra.eigen.complex_qr import complex_eigen, hessenberg_reduce
from pttra.eigen.ql import symmetric_eigen, tridiag_eigen
from pttra.eigen.spectrum import Spectrum, SpectrumSummary, classify, fix_gauge, is_real_eigenvalue, sort_order
from pttra.eigen.tridiagonal import TridiagonalSymmetric, householder_tridiagonalize, jacobi_matrix

__all__ = [
    "Spectrum",
    "SpectrumSummary",
    "TridiagonalSymmetric",
    "classify",
    "complex_eigen",
    "fix_gauge",
    "hessenberg_reduce",
    "householder_tridiagonalize",
    "is_real_eigenvalue",
    "jacobi_matrix",
    "sort_order",
    "symmetric_eigen",
    "tridiag_eigen",
]
