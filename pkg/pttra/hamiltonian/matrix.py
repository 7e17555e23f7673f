from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from pttra.hamiltonian.basis_spec import BasisSpec
from pttra.hamiltonian.potential import PotentialSpec
from pttra.util.error import ContractError


@dataclass(frozen=True)
class ComplexSymmetricMatrix:
    """An assembled M x M matrix with its provenance.

    Args:
        entries (np.ndarray): M x M complex entries, symmetric.
        basis (BasisSpec): The basis the matrix is expressed in.
        potential (PotentialSpec | None): The potential; None for the
            kinetic-harmonic part alone.
        meta (dict[str, Any]): d, phase, quadrature node count, annotations.
    """

    entries: np.ndarray
    basis: BasisSpec
    potential: Optional[PotentialSpec] = None
    meta: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ContractError(f"matrix entries must be square, got shape {entries.shape}")
        if entries.shape[0] != self.basis.size:
            raise ContractError(f"matrix size {entries.shape[0]} does not match basis size {self.basis.size}")
        if not np.array_equal(entries, entries.T):
            raise ContractError("matrix entries must be exactly symmetric")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)
        meta = {"d": self.basis.d}
        meta.update(self.meta)
        object.__setattr__(self, "meta", meta)

    @property
    def size(self) -> int:
        return int(self.entries.shape[0])

    def max_imag(self) -> float:
        return float(np.max(np.abs(self.entries.imag)))

    def scale(self) -> float:
        """Largest entry modulus."""
        return float(np.max(np.abs(self.entries)))

    def is_real(self, rtol: float = 1e-12) -> bool:
        return self.max_imag() <= rtol * self.scale()

    def annotations(self) -> list[str]:
        return list(self.meta.get("annotations", []))

    def __add__(self, other: ComplexSymmetricMatrix) -> ComplexSymmetricMatrix:
        if other.basis != self.basis:
            raise ContractError("matrices built on different bases cannot be added")
        potential = self.potential if self.potential is not None else other.potential
        meta = {**other.meta, **self.meta}
        return ComplexSymmetricMatrix(self.entries + other.entries, self.basis, potential, meta)

    def to_dict(self) -> dict[str, Any]:
        """Serializable form: size, lambda, N, mode, row-major [re, im] entries and metadata."""
        phase = self.meta.get("phase")
        return {
            "size": self.size,
            "lambda": self.basis.lam,
            "N": None if self.potential is None else self.potential.N,
            "mode": None if self.potential is None else self.potential.mode.value,
            "entries": [[float(z.real), float(z.imag)] for z in self.entries.ravel()],
            "d": float(self.meta["d"]),
            "phase": None if phase is None else [float(phase.real), float(phase.imag)],
            "quad_nodes": self.meta.get("quad_nodes"),
            "annotations": self.annotations(),
        }

    @classmethod
    def from_dict(cls, content: dict[str, Any]) -> ComplexSymmetricMatrix:
        """Rebuild a matrix from its serialized form.

        Raises:
            ContractError: Causes when the entry list does not hold size^2 pairs.
        """
        size = int(content["size"])
        pairs = np.asarray(content["entries"], dtype=float)
        if pairs.shape != (size * size, 2):
            raise ContractError(f"expected {size * size} [re, im] pairs, got shape {pairs.shape}")
        entries = (pairs[:, 0] + 1j * pairs[:, 1]).reshape(size, size)
        basis = BasisSpec(lam=float(content["lambda"]), size=size)
        potential = None
        if content.get("N") is not None:
            potential = PotentialSpec(N=float(content["N"]), mode=content["mode"])
        meta: dict[str, Any] = {"annotations": list(content.get("annotations") or [])}
        if content.get("phase") is not None:
            meta["phase"] = complex(*content["phase"])
        if content.get("quad_nodes") is not None:
            meta["quad_nodes"] = int(content["quad_nodes"])
        return cls(entries, basis, potential, meta)
