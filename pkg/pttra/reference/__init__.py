from pttra.reference.compare import (
    DeltaReport,
    compare_matrix,
    compare_reference_matrix,
    compare_spectrum_table1,
    compare_table1,
    table1_eigenvalues,
)
from pttra.reference.dataset import Asymmetry, ReferenceDataset, describe, reference_dataset, table1_column
from pttra.reference.sweep import (
    ConvergenceRow,
    SweepRow,
    convergence_header,
    convergence_table,
    sweep_header,
    sweep_reality,
)

__all__ = [
    "Asymmetry",
    "ConvergenceRow",
    "DeltaReport",
    "ReferenceDataset",
    "SweepRow",
    "compare_matrix",
    "compare_reference_matrix",
    "compare_spectrum_table1",
    "compare_table1",
    "convergence_header",
    "convergence_table",
    "describe",
    "reference_dataset",
    "sweep_header",
    "sweep_reality",
    "table1_column",
    "table1_eigenvalues",
]
