"""Printed reference artifacts for the oscillator-basis TRA Hamiltonian.

The values are transcriptions of published results, three decimals for the
N = 1 matrix, two for the N = 1.1 matrix and four for the energy table. They
are stored verbatim, including entries where the printed matrices are not
symmetric.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Tuple

import numpy as np

# N = 1, lambda = 1, M = 5
_matrix_eq22 = (
    (3.096, -1.879, 0.335, 0.060, 0.024),
    (-1.879, 8.776, -4.367, 0.677, 0.105),
    (0.335, -4.367, 15.479, -7.371, 1.079),
    (0.060, 0.676, -7.371, 22.975, -10.805),
    (0.024, 0.105, 1.079, -10.805, 31.143),
)

# N = 1.1, lambda = 1, M = 5, (re, im) pairs
_matrix_eq23 = (
    ((3.08, 0.27), (-1.92, -0.42), (0.36, 0.12), (0.06, 0.02), (0.03, 0.01)),
    ((-1.92, -0.42), (8.86, 1.17), (-4.49, -1.09), (0.71, 0.23), (0.11, 0.04)),
    ((0.36, 0.11), (-4.49, -1.09), (15.72, 2.42), (-7.60, -1.94), (1.14, 0.37)),
    ((0.06, 0.02), (0.71, 0.23), (-7.60, -1.94), (23.40, 3.95), (-11.16, -2.94)),
    ((0.03, 0.01), (0.11, 0.04), (1.12, 0.37), (-11.16, -2.94), (31.79, 5.70)),
)

# (level, our case, reference 1)
_table1 = (
    (0, 1.4868, 1.4771),
    (1, 6.6219, 6.0333),
    (2, 16.6386, 11.8023),
    (3, 32.1948, 18.4590),
)

table1_lambda = 2.9
table1_size = 5
table1_n = 2
table1_n_label = 4


@dataclass(frozen=True)
class Asymmetry:
    matrix: str
    row: int
    column: int
    upper: complex
    lower: complex

    def describe(self) -> str:
        return (
            f"{self.matrix}: printed ({self.row},{self.column}) = {self.upper} "
            f"but ({self.column},{self.row}) = {self.lower}"
        )


@dataclass(frozen=True)
class ReferenceDataset:
    """Read-only printed matrices and energy table.

    Attributes:
        matrix_eq22 (np.ndarray): 5 x 5 real matrix, N = 1, lambda = 1.
        matrix_eq23 (np.ndarray): 5 x 5 complex matrix, N = 1.1, lambda = 1.
        table1 (tuple): Rows (level, our case, reference 1) at lambda = 2.9, M = 5.
    """

    matrix_eq22: np.ndarray
    matrix_eq23: np.ndarray
    table1: Tuple[Tuple[int, float, float], ...]
    table1_lambda: float = table1_lambda
    table1_size: int = table1_size
    table1_n: int = table1_n
    table1_n_label: int = table1_n_label

    def __post_init__(self) -> None:
        for name in ("matrix_eq22", "matrix_eq23"):
            array = np.array(getattr(self, name))
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    def matrix(self, name: str) -> np.ndarray:
        if name not in ("eq22", "eq23"):
            raise KeyError(f"unknown reference matrix {name}")
        return self.matrix_eq22 if name == "eq22" else self.matrix_eq23

    def asymmetries(self) -> list[Asymmetry]:
        """Printed entries whose mirror image differs."""
        found = []
        for name in ("eq22", "eq23"):
            m = self.matrix(name)
            for i, j in zip(*np.triu_indices(m.shape[0], 1)):
                if m[i, j] != m[j, i]:
                    found.append(Asymmetry(name, int(i), int(j), complex(m[i, j]), complex(m[j, i])))
        return found

    def annotations(self) -> list[str]:
        notes = [a.describe() for a in self.asymmetries()]
        notes.append(
            f"table1: printed with the label N = {self.table1_n_label} (power 2N of the comparison model); "
            f"computed here as N = {self.table1_n}"
        )
        return notes

    def digest(self) -> str:
        """sha256 of the canonical JSON form of the printed values."""
        payload = json.dumps(
            {
                "eq22": [[float(v) for v in row] for row in self.matrix_eq22],
                "eq23": [[[float(v.real), float(v.imag)] for v in row] for row in self.matrix_eq23],
                "table1": [[int(n), float(ours), float(ref)] for n, ours, ref in self.table1],
                "table1_params": {
                    "N": self.table1_n,
                    "N_label": self.table1_n_label,
                    "lambda": self.table1_lambda,
                    "size": self.table1_size,
                },
            },
            sort_keys=True,
            separators=(",", ":"),
        )
        return "sha256:" + hashlib.sha256(payload.encode("utf-8")).hexdigest()


@lru_cache(maxsize=1)
def reference_dataset() -> ReferenceDataset:
    return ReferenceDataset(
        matrix_eq22=np.array(_matrix_eq22, dtype=float),
        matrix_eq23=np.array([[complex(re, im) for re, im in row] for row in _matrix_eq23]),
        table1=_table1,
    )


def table1_column(column: str) -> np.ndarray:
    """The energies of one table column, "our_case" or "reference_1"."""
    index = {"our_case": 1, "reference_1": 2}[column]
    return np.array([row[index] for row in reference_dataset().table1])


def describe(dataset: ReferenceDataset) -> dict[str, Any]:
    return {
        "digest": dataset.digest(),
        "table1": {"lambda": dataset.table1_lambda, "size": dataset.table1_size, "N": dataset.table1_n},
        "annotations": dataset.annotations(),
    }
