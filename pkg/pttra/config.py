from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from importlib.resources import read_text
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from omegaconf import OmegaConf
from omegaconf.dictconfig import DictConfig
from omegaconf.errors import OmegaConfBaseException

from pttra.basis import ExpansionMode, is_integer
from pttra.common import max_dense_size
from pttra.hamiltonian import BasisSpec, PotentialSpec
from pttra.util.error import ConfigError


class OutputFormat(Enum):
    csv: str = "csv"
    yaml: str = "yaml"

    @classmethod
    def _missing_(cls, value: Any) -> Any | None:
        value = str(value).lower()
        if value in ("yml", "structured", "structured_text"):
            return cls.yaml
        for member in cls:
            if member.value == value:
                return member
        return None


@dataclass
class GenericConfig:
    logging_level: str = "INFO"
    logfile: Optional[str] = None
    num_workers: int = 1


@dataclass
class BasisConfig:
    lam: float = 1.0
    size: int = 5


@dataclass
class PotentialConfig:
    N: float = 1.0
    mode: str = "corrected"


@dataclass
class SolverConfig:
    tol_real: float = 1e-8
    quad_nodes: Optional[int] = None


@dataclass
class GridConfig:
    x_max: Optional[float] = None
    points: int = 401
    x_tail: Optional[float] = 4.0


@dataclass
class OutputConfig:
    directory: str = "./pttra_out"
    format: str = "csv"  # noqa: A003
    # human-readable rounding of printed values; stored files keep 17 digits
    digits: Optional[int] = None


@dataclass
class SweepConfig:
    n_values: List[float] = field(default_factory=lambda: [0.5, 1.0, 1.5, 2.0, 2.5, 3.0])
    sizes: List[int] = field(default_factory=lambda: [8, 16, 32])
    levels: int = 3


@dataclass
class RunConfig:
    generic: GenericConfig = field(default_factory=GenericConfig)
    basis: BasisConfig = field(default_factory=BasisConfig)
    potential: PotentialConfig = field(default_factory=PotentialConfig)
    solver: SolverConfig = field(default_factory=SolverConfig)
    grid: GridConfig = field(default_factory=GridConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)
    level: int = 0
    config_path: Optional[str] = None


def load_config(
    config_path: Optional[Union[Path, str]] = None, overrides: Optional[Dict[str, Any]] = None
) -> DictConfig:
    """Merge the schema, the packaged defaults, a user file and overrides.

    Args:
        config_path (Path | str | None, optional): A user YAML file.
        overrides (dict[str, Any] | None, optional): Nested values from the
            command line; None entries are dropped.

    Returns:
        DictConfig: The merged configuration, still in struct mode.

    Raises:
        ConfigError: Causes when the file is missing, holds unknown keys or
            values of the wrong type.
    """
    try:
        base = OmegaConf.structured(RunConfig)
        default = OmegaConf.create(read_text("pttra", "default_config.yaml"))
        config = OmegaConf.merge(base, default)
        if config_path is not None:
            path = Path(config_path).resolve()
            if not path.exists():
                raise ConfigError(f"config file {path} is not found")
            customize = OmegaConf.load(path)
            config = OmegaConf.merge(config, customize)
            config.config_path = str(path)
        if overrides:
            config = OmegaConf.merge(config, OmegaConf.create(_drop_none(overrides)))
    except OmegaConfBaseException as e:
        raise ConfigError(f"invalid configuration: {e}") from e
    if not isinstance(config, DictConfig):
        raise ConfigError("the configuration is not a mapping")
    return config


def _drop_none(values: Dict[str, Any]) -> Dict[str, Any]:
    cleaned: Dict[str, Any] = {}
    for key, value in values.items():
        if isinstance(value, dict):
            value = _drop_none(value)
            if len(value) == 0:
                continue
        if value is None:
            continue
        cleaned[key] = value
    return cleaned


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ConfigError(message)


def validate_config(config: DictConfig) -> None:
    """Check every run invariant before any computation.

    Raises:
        ConfigError: Causes at the first violated invariant, with a single
            diagnostic message.
    """
    n = float(config.potential.N)
    lam = float(config.basis.lam)
    size = int(config.basis.size)
    _require(math.isfinite(n) and n > 0.0, f"N must be positive, got {n}")
    _require(math.isfinite(lam) and lam > 0.0, f"lambda must be positive, got {lam}")
    _require(1 <= size <= max_dense_size, f"size must lie in 1 .. {max_dense_size}, got {size}")
    try:
        mode = ExpansionMode(config.potential.mode)
    except ValueError:
        raise ConfigError(f"unknown mode {config.potential.mode}, expected corrected or paper_faithful") from None
    _require(
        mode is not ExpansionMode.paper_faithful or is_integer(n),
        f"paper_faithful mode needs an integer N, got {n}",
    )
    quad_nodes = config.solver.quad_nodes
    _require(
        quad_nodes is None or int(quad_nodes) >= size, f"quad_nodes must be at least size {size}, got {quad_nodes}"
    )
    _require(float(config.solver.tol_real) > 0.0, f"tol_real must be positive, got {config.solver.tol_real}")
    _require(int(config.grid.points) >= 3, f"a grid needs at least 3 points, got {config.grid.points}")
    x_max = config.grid.x_max
    _require(x_max is None or float(x_max) > 0.0, f"x_max must be positive, got {x_max}")
    x_tail = config.grid.x_tail
    _require(x_tail is None or float(x_tail) >= 0.0, f"x_tail must not be negative, got {x_tail}")
    level = int(config.level)
    _require(0 <= level < size, f"level index {level} is outside 0 .. {size - 1}")
    try:
        OutputFormat(config.output.format)
    except ValueError:
        raise ConfigError(f"unknown output format {config.output.format}, expected csv or yaml") from None
    digits = config.output.digits
    _require(digits is None or 1 <= int(digits) <= 17, f"digits must lie in 1 .. 17, got {digits}")
    _require(int(config.generic.num_workers) >= 1, f"num_workers must be positive, got {config.generic.num_workers}")
    _require(all(float(v) > 0.0 for v in config.sweep.n_values), "every sweep exponent must be positive")
    _require(int(config.sweep.levels) >= 1, f"sweep levels must be positive, got {config.sweep.levels}")
    _require(
        all(int(config.sweep.levels) <= int(s) <= max_dense_size for s in config.sweep.sizes),
        f"convergence sizes must lie in {config.sweep.levels} .. {max_dense_size}",
    )


def basis_spec(config: DictConfig) -> BasisSpec:
    return BasisSpec(lam=float(config.basis.lam), size=int(config.basis.size))


def potential_spec(config: DictConfig) -> PotentialSpec:
    return PotentialSpec(N=float(config.potential.N), mode=ExpansionMode(config.potential.mode))


def output_format(config: DictConfig) -> OutputFormat:
    return OutputFormat(config.output.format)


def check_grid_tail(config: DictConfig) -> None:
    """Check that x_tail lies on the sampling grid.

    Only commands that sample a grid call this; the default x_tail does not
    constrain an x_max given to the other commands.

    Raises:
        ConfigError: Causes when x_tail lies beyond the grid reach.
    """
    x_tail = config.grid.x_tail
    if x_tail is None:
        return
    x_max = config.grid.x_max
    reach = float(x_max) if x_max is not None else basis_spec(config).default_x_max()
    _require(float(x_tail) <= reach, f"x_tail = {x_tail} lies outside the grid reach {reach}")
