from pttra.hamiltonian.assembly import (
    assemble,
    default_quad_nodes,
    expansion_integrals,
    kinetic_harmonic_matrix,
    normalization_constant,
    potential_matrix,
    radial_integrals,
)
from pttra.hamiltonian.basis_spec import BasisSpec
from pttra.hamiltonian.matrix import ComplexSymmetricMatrix
from pttra.hamiltonian.potential import PotentialSpec, is_hermitian, phase_factor

__all__ = [
    "BasisSpec",
    "ComplexSymmetricMatrix",
    "PotentialSpec",
    "assemble",
    "default_quad_nodes",
    "expansion_integrals",
    "is_hermitian",
    "kinetic_harmonic_matrix",
    "normalization_constant",
    "phase_factor",
    "potential_matrix",
    "radial_integrals",
]
