"""Reality scans over the exponent N and truncation-size convergence tables."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from multiprocessing.pool import Pool, ThreadPool
from typing import Any, Iterable, List, Optional, Sequence

import numpy as np

from pttra.basis import ExpansionMode, is_integer
from pttra.common import default_tol_real, max_dense_size
from pttra.hamiltonian import BasisSpec, PotentialSpec, assemble
from pttra.util.error import ParameterError, TraError
from pttra.wavefunction import solve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepRow:
    """Classification of one N.

    Counts and ground values are None when the row was skipped or failed;
    `note` says why.
    """

    N: float
    n_real: Optional[int] = None
    n_complex: Optional[int] = None
    ground_re: Optional[float] = None
    ground_im: Optional[float] = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.n_real is not None

    def to_row(self) -> list[Any]:
        return [self.N, self.n_real, self.n_complex, self.ground_re, self.ground_im, self.note]


sweep_header = ["N", "n_real", "n_complex", "ground_re", "ground_im", "note"]


def _sweep_row(args: tuple[float, float, int, str, float]) -> SweepRow:
    n, lam, size, mode, tol_real = args
    if ExpansionMode(mode) is ExpansionMode.paper_faithful and not is_integer(n):
        return SweepRow(N=n, note="skipped: paper_faithful needs an integer N")
    try:
        h = assemble(BasisSpec(lam=lam, size=size), PotentialSpec(N=n, mode=mode))
        spectrum = solve(h, tol_real=tol_real)
    except TraError as e:
        logger.debug(f"sweep row N={n} failed: {e}")
        return SweepRow(N=n, note=f"error: {e}")
    n_real, n_complex = spectrum.summary()
    ground = complex(spectrum.values[0])
    note = "N < 1" if n < 1.0 else ""
    return SweepRow(N=n, n_real=n_real, n_complex=n_complex, ground_re=ground.real, ground_im=ground.imag, note=note)


def sweep_reality(
    n_range: Iterable[float],
    basis: BasisSpec,
    mode: ExpansionMode | str = ExpansionMode.corrected,
    tol_real: float = default_tol_real,
    num_workers: int = 1,
) -> list[SweepRow]:
    """Classify the spectrum for every N in `n_range`.

    Rows follow the input order whatever the completion order of workers.
    A failing row is recorded with its error and the sweep continues.

    Args:
        n_range (Iterable[float]): Exponents, each > 0.
        basis (BasisSpec): Fixed lambda and M.
        mode (ExpansionMode | str, optional): Defaults to corrected.
        tol_real (float, optional): Classification tolerance.
        num_workers (int, optional): Processes; one runs in a thread pool.

    Returns:
        list[SweepRow]: One row per N.

    Raises:
        ParameterError: Causes when some N <= 0.
    """
    values = [float(n) for n in n_range]
    if any(n <= 0.0 for n in values):
        raise ParameterError(f"every N of a sweep must be positive, got {values}")
    mode = ExpansionMode(mode).value
    args = [(n, basis.lam, basis.size, mode, tol_real) for n in values]
    Pool_ = Pool if num_workers > 1 else ThreadPool  # noqa: N806
    with Pool_(max(num_workers, 1)) as pool:
        rows = pool.map(_sweep_row, args)
    logger.debug(f"sweep of {len(rows)} exponents done, {sum(not r.ok for r in rows)} rows without counts")
    return rows


@dataclass(frozen=True)
class ConvergenceRow:
    size: int
    values: np.ndarray

    def to_row(self) -> list[Any]:
        row: List[Any] = [self.size]
        for value in self.values:
            row.extend([float(value.real), float(value.imag)])
        return row


def convergence_header(levels: int) -> list[str]:
    header = ["size"]
    for k in range(levels):
        header.extend([f"E{k}_re", f"E{k}_im"])
    return header


def convergence_table(
    n: float,
    lam: float,
    sizes: Sequence[int],
    mode: ExpansionMode | str = ExpansionMode.corrected,
    levels: int = 3,
    tol_real: float = default_tol_real,
) -> list[ConvergenceRow]:
    """Lowest eigenvalues as a function of the truncation size M.

    Args:
        n (float): The exponent N.
        lam (float): The scale lambda.
        sizes (Sequence[int]): Truncation sizes, each at least `levels`.
        mode (ExpansionMode | str, optional): Defaults to corrected.
        levels (int, optional): Number of eigenvalues per row. Defaults to 3.
        tol_real (float, optional): Classification tolerance.

    Returns:
        list[ConvergenceRow]: One row per size, in input order.
    """
    if levels < 1:
        raise ParameterError(f"at least one level is needed, got {levels}")
    for size in sizes:
        if size < levels or size > max_dense_size:
            raise ParameterError(f"sizes must lie in {levels} .. {max_dense_size}, got {size}")
    potential = PotentialSpec(N=n, mode=mode)
    rows = []
    for size in sizes:
        spectrum = solve(assemble(BasisSpec(lam=lam, size=size), potential), tol_real=tol_real)
        rows.append(ConvergenceRow(size=int(size), values=np.array(spectrum.values[:levels])))
        logger.debug(f"convergence: M={size}, lowest {spectrum.values[0]}")
    return rows
