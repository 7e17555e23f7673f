from __future__ import annotations

import os
from pathlib import Path
from typing import Optional

from pttra.common import (
    default_output_dir,
    dict_lock,
    dict_log,
    env_output_dir,
    file_compare_yaml,
    file_convergence_csv,
    file_matrix,
    file_spectrum_csv,
    file_spectrum_yaml,
    file_sweep_csv,
    file_wavefunction_csv,
)
from pttra.util.filesystem import make_directory


def resolve_output_directory(flag: Optional[str] = None, configured: Optional[str] = None) -> Path:
    """Pick the output directory: command-line flag, then PTTRA_OUTPUT_DIR, then the configured value.

    Args:
        flag (str | None, optional): The --output value.
        configured (str | None, optional): output.directory of the configuration.

    Returns:
        Path: The resolved directory.
    """
    for candidate in (flag, os.getenv(env_output_dir), configured):
        if candidate:
            return Path(candidate).resolve()
    return Path(default_output_dir).resolve()


class Workspace:
    """Provides interface to the output directory.

    Args:
        base_path (str | Path): Path to the output directory.

    Attributes:
        path (Path): Path to the output directory.
        lock (Path): Path to the lock directory.
        log (Path): Path to the log directory, one file per command.
        consists (list[Path]): List of required directories.
        matrix_file (Path): Path to the matrix.yaml file.
        spectrum_csv_file (Path): Path to the spectrum.csv file.
        spectrum_yaml_file (Path): Path to the spectrum.yaml file.
        wavefunction_csv_file (Path): Path to the wavefunction.csv file.
        sweep_csv_file (Path): Path to the sweep.csv file.
        compare_file (Path): Path to the compare.yaml file.
        convergence_csv_file (Path): Path to the convergence.csv file.
    """

    def __init__(self, base_path: str | Path):
        self.path = Path(base_path).resolve()
        self.lock = self.path / dict_lock
        self.log = self.path / dict_log
        self.consists = [self.path, self.lock, self.log]
        self.matrix_file = self.path / file_matrix
        self.spectrum_csv_file = self.path / file_spectrum_csv
        self.spectrum_yaml_file = self.path / file_spectrum_yaml
        self.wavefunction_csv_file = self.path / file_wavefunction_csv
        self.sweep_csv_file = self.path / file_sweep_csv
        self.compare_file = self.path / file_compare_yaml
        self.convergence_csv_file = self.path / file_convergence_csv

    def create(self) -> bool:
        """Create the output directory and its lock and log folders.

        Returns:
            bool: False when every directory already existed.

        Raises:
            NotADirectoryError: Causes when the path exists but is a file.
        """
        if self.path.exists() and not self.path.is_dir():
            raise NotADirectoryError(f"{self.path} is not a directory")
        if self.check_consists():
            return False
        for d in self.consists:
            make_directory(d)
        return True

    def exists(self) -> bool:
        return self.path.exists()

    def check_consists(self) -> bool:
        """Check required directories exist or not."""
        return all(d.is_dir() for d in self.consists)
