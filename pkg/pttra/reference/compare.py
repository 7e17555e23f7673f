from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from pttra.basis import ExpansionMode
from pttra.common import default_tol_real
from pttra.hamiltonian import BasisSpec, ComplexSymmetricMatrix, PotentialSpec, assemble
from pttra.reference.dataset import reference_dataset, table1_column
from pttra.util.error import ContractError, ParameterError
from pttra.wavefunction import solve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DeltaReport:
    """Entrywise differences between computed and printed values.

    Args:
        name (str): What was compared, e.g. "eq22" or "table1/our_case".
        ours (np.ndarray): Computed values.
        reference (np.ndarray): Printed values, same shape.
        parameters (dict[str, Any]): N, lambda, size and mode of the computation.
        notes (list[str]): Annotations such as printed asymmetries.

    Attributes:
        abs_delta (np.ndarray): |ours - reference|.
        rel_delta (np.ndarray): |ours - reference| / |reference|, 0 where both vanish.
        max_abs_delta (float): Largest absolute delta.
        frobenius_delta (float): Frobenius norm of ours - reference.
    """

    name: str
    ours: np.ndarray
    reference: np.ndarray
    parameters: Dict[str, Any] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    abs_delta: np.ndarray = field(init=False)
    rel_delta: np.ndarray = field(init=False)
    max_abs_delta: float = field(init=False)
    frobenius_delta: float = field(init=False)

    def __post_init__(self) -> None:
        ours = np.array(self.ours, dtype=complex)
        reference = np.array(self.reference, dtype=complex)
        if ours.shape != reference.shape:
            raise ContractError(f"cannot compare shape {ours.shape} with reference shape {reference.shape}")
        diff = ours - reference
        abs_delta = np.abs(diff)
        scale = np.abs(reference)
        rel_delta = np.divide(abs_delta, scale, out=np.where(abs_delta == 0.0, 0.0, np.inf), where=scale > 0.0)
        object.__setattr__(self, "ours", ours)
        object.__setattr__(self, "reference", reference)
        object.__setattr__(self, "abs_delta", abs_delta)
        object.__setattr__(self, "rel_delta", rel_delta)
        object.__setattr__(self, "max_abs_delta", float(np.max(abs_delta, initial=0.0)))
        object.__setattr__(self, "frobenius_delta", float(np.sqrt(np.sum(abs_delta**2))))

    def to_dict(self) -> dict[str, Any]:
        def pairs(array: np.ndarray) -> Any:
            if array.ndim == 1:
                return [[float(z.real), float(z.imag)] for z in array]
            return [pairs(row) for row in array]

        return {
            "name": self.name,
            "parameters": dict(self.parameters),
            "max_abs_delta": self.max_abs_delta,
            "frobenius_delta": self.frobenius_delta,
            "ours": pairs(self.ours),
            "reference": pairs(self.reference),
            "abs_delta": self.abs_delta.tolist(),
            "rel_delta": [float(v) for v in self.rel_delta.ravel()],
            "notes": list(self.notes),
        }


def _parameters(matrix: ComplexSymmetricMatrix) -> dict[str, Any]:
    potential = matrix.potential
    return {
        "N": None if potential is None else potential.N,
        "lambda": matrix.basis.lam,
        "size": matrix.size,
        "mode": None if potential is None else potential.mode.value,
    }


def compare_matrix(ours: ComplexSymmetricMatrix, ref: np.ndarray, name: str = "matrix") -> DeltaReport:
    """Entrywise comparison of an assembled matrix with a printed one; never asserts a tolerance.

    Raises:
        ContractError: Causes when the sizes differ.
    """
    ref = np.asarray(ref)
    if ref.shape != ours.entries.shape:
        raise ContractError(f"matrix of size {ours.size} cannot be compared with a {ref.shape} reference")
    notes = [a.describe() for a in reference_dataset().asymmetries() if a.matrix == name]
    for note in notes:
        logger.warning(note)
    return DeltaReport(name=name, ours=ours.entries, reference=ref, parameters=_parameters(ours), notes=notes)


def compare_reference_matrix(
    name: str, mode: ExpansionMode | str = ExpansionMode.corrected, quad_nodes: Optional[int] = None
) -> DeltaReport:
    """Assemble at the printed parameters (lambda = 1, M = 5) and compare with matrix `name`.

    The N = 1.1 matrix has no paper_faithful counterpart; that mode raises ModeError.
    """
    n = {"eq22": 1.0, "eq23": 1.1}[name]
    h = assemble(BasisSpec(lam=1.0, size=5), PotentialSpec(N=n, mode=mode), quad_nodes=quad_nodes)
    return compare_matrix(h, reference_dataset().matrix(name), name=name)


def table1_eigenvalues(
    mode: ExpansionMode | str = ExpansionMode.corrected, tol_real: float = default_tol_real
) -> np.ndarray:
    """The four lowest eigenvalues at the table parameters lambda = 2.9, N = 2, M = 5."""
    dataset = reference_dataset()
    basis = BasisSpec(lam=dataset.table1_lambda, size=dataset.table1_size)
    h = assemble(basis, PotentialSpec(N=dataset.table1_n, mode=mode))
    spectrum = solve(h, tol_real=tol_real)
    return np.array(spectrum.values[: len(dataset.table1)])


def compare_table1(
    mode: ExpansionMode | str = ExpansionMode.corrected, tol_real: float = default_tol_real
) -> list[DeltaReport]:
    """Compare the lowest eigenvalues with both printed table columns.

    Returns:
        list[DeltaReport]: One report per column, "our_case" then "reference_1".

    Raises:
        NumericError: Propagated from the eigensolver.
    """
    dataset = reference_dataset()
    parameters = {
        "N": float(dataset.table1_n),
        "lambda": dataset.table1_lambda,
        "size": dataset.table1_size,
        "mode": ExpansionMode(mode).value,
    }
    return compare_spectrum_table1(table1_eigenvalues(mode, tol_real=tol_real), parameters)


def compare_spectrum_table1(values: np.ndarray, parameters: dict[str, Any]) -> list[DeltaReport]:
    """Compare the lowest computed eigenvalues with both printed table columns.

    Args:
        values (np.ndarray): Eigenvalues in (Re, Im) order, at least as many as table rows.
        parameters (dict[str, Any]): Parameters of the computation, for the report.

    Returns:
        list[DeltaReport]: "our_case" then "reference_1".

    Raises:
        ParameterError: Causes when fewer eigenvalues than table rows are given.
    """
    dataset = reference_dataset()
    rows = len(dataset.table1)
    if len(values) < rows:
        raise ParameterError(f"the table lists {rows} levels, only {len(values)} eigenvalues were given")
    ours = np.asarray(values)[:rows]
    notes = [dataset.annotations()[-1]]
    return [
        DeltaReport(
            name=f"table1/{column}",
            ours=ours,
            reference=table1_column(column),
            parameters=parameters,
            notes=notes,
        )
        for column in ("our_case", "reference_1")
    ]
