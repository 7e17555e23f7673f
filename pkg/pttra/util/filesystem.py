from __future__ import annotations

import csv
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

import fasteners
import yaml


def interprocess_lock_file(path: Path, dict_lock: Path) -> Path:
    """Get a lock file path for an output file.

    Args:
        path (Path): The output file guarded by the lock.
        dict_lock (Path): A directory to store lock files.

    Returns:
        Path: A lock file inside dict_lock named after the output file.
    """
    return dict_lock / f"{path.name}.lock"


def format_float(value: float) -> str:
    """Format a float with 17 significant digits so that it round-trips."""
    return format(float(value), ".17g")


def create_yaml(path: Path, content: Any, dict_lock: Path | None = None) -> None:
    """Create a yaml file.

    Args:
        path (Path): The path of the created yaml file.
        content (Any): Plain python data (dict, list, float, int, str).
        dict_lock (Path | None, optional): The path to store lock files. Defaults to None.

    Returns:
        None
    """
    text = yaml.safe_dump(content, default_flow_style=None, sort_keys=False, width=120)
    file_create(path, text, dict_lock)


def file_create(path: Path, content: str, dict_lock: Path | None = None) -> None:
    """Create a text file.

    Args:
        path (Path): The path of the created file.
        content (str): The content of the created file.
        dict_lock (Path | None, optional): The path to store lock files. Defaults to None.

    Returns:
        None
    """
    if dict_lock is None:
        with open(path, "w") as f:
            f.write(content)
    else:
        make_directory(dict_lock)
        with fasteners.InterProcessLock(interprocess_lock_file(path, dict_lock)):
            with open(path, "w") as f:
                f.write(content)


def create_csv(
    path: Path,
    header: Sequence[str],
    rows: Iterable[Sequence[Any]],
    comments: Sequence[str] = (),
    dict_lock: Path | None = None,
) -> None:
    """Create a csv file.

    Floats are written with 17 significant digits, None as an empty cell
    and other values with str().

    Args:
        path (Path): The path of the created csv file.
        header (Sequence[str]): Column names.
        rows (Iterable[Sequence[Any]]): Data rows.
        comments (Sequence[str], optional): Lines written before the header,
            each prefixed with "# ". Defaults to ().
        dict_lock (Path | None, optional): The path to store lock files. Defaults to None.

    Returns:
        None
    """

    def _cell(value: Any) -> str:
        if value is None:
            return ""
        if isinstance(value, float):
            return format_float(value)
        return str(value)

    def _write() -> None:
        with open(path, "w", newline="") as f:
            for comment in comments:
                f.write(f"# {comment}\n")
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            writer.writerows([[_cell(value) for value in row] for row in rows])

    if dict_lock is None:
        _write()
    else:
        make_directory(dict_lock)
        with fasteners.InterProcessLock(interprocess_lock_file(path, dict_lock)):
            _write()


def load_yaml(path: Path) -> Any:
    """Load a content of a yaml file.

    Args:
        path (Path): A path of a yaml file.

    Returns:
        Any: A loaded content.
    """
    with open(path, "r") as f:
        return yaml.safe_load(f)


def load_csv(path: Path) -> list[dict[str, str]]:
    """Load the data rows of a csv file written by create_csv.

    Args:
        path (Path): A path of a csv file.

    Returns:
        list[dict[str, str]]: One dict per data row keyed by the header.
    """
    with open(path, "r", newline="") as f:
        lines = [line for line in f if not line.startswith("#")]
    return list(csv.DictReader(lines))


def make_directory(d: Path) -> None:
    """Make a directory and its parents when missing.

    Args:
        d (Path): A path of making directory.

    Returns:
        None
    """
    if not d.exists():
        d.mkdir(parents=True, exist_ok=True)
