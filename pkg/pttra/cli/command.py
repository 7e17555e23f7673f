from __future__ import annotations

import os
from argparse import ArgumentParser, Namespace
from logging import Logger, getLogger
from pathlib import Path
from typing import Any, Optional, Sequence, Type

from omegaconf.dictconfig import DictConfig

from pttra.common import exit_config_error, exit_failure, exit_numeric_error, exit_success
from pttra.config import basis_spec, load_config, output_format, potential_spec, validate_config
from pttra.util import NumericError, ParameterError, TraError, create_logger, make_directory
from pttra.workspace import Workspace, resolve_output_directory


def parse_float_list(text: str) -> list[float]:
    """Parse "0.5,1,1.5" into floats."""
    try:
        return [float(v) for v in text.split(",") if v.strip() != ""]
    except ValueError:
        raise ParameterError(f"expected a comma separated list of numbers, got {text!r}") from None


def parse_int_list(text: str) -> list[int]:
    """Parse "8,16,32" into integers."""
    try:
        return [int(v) for v in text.split(",") if v.strip() != ""]
    except ValueError:
        raise ParameterError(f"expected a comma separated list of integers, got {text!r}") from None


def build_parser(prog: str, description: str) -> ArgumentParser:
    """A parser with the options shared by every command."""
    parser = ArgumentParser(prog=prog, description=description)
    parser.add_argument("--config", "-c", type=str, default=None, help="A YAML file merged over the defaults.")
    parser.add_argument("--bigN", dest="bigN", type=float, default=None, help="Potential exponent N > 0.")
    parser.add_argument("--lambda", dest="lam", type=float, default=None, help="Basis scale lambda > 0.")
    parser.add_argument("--size", type=int, default=None, help="Truncation size M.")
    parser.add_argument("--mode", type=str, default=None, help="corrected (default) or paper_faithful.")
    parser.add_argument("--quad-nodes", dest="quad_nodes", type=int, default=None)
    parser.add_argument("--tol-real", dest="tol_real", type=float, default=None)
    parser.add_argument("--x-max", dest="x_max", type=float, default=None)
    parser.add_argument("--points", type=int, default=None)
    parser.add_argument("--output", "-o", type=str, default=None, help="Output directory.")
    parser.add_argument("--format", dest="output_format", type=str, default=None, help="csv or yaml.")
    parser.add_argument("--digits", type=int, default=None, help="Rounding of printed values.")
    parser.add_argument("--log-level", dest="log_level", type=str, default=None)
    parser.add_argument("--logfile", type=str, default=None)
    return parser


def overrides_from_args(args: Namespace) -> dict[str, Any]:
    """Nested configuration values given on the command line."""

    def get(name: str) -> Any:
        return getattr(args, name, None)

    n_values = get("n_values")
    sizes = get("convergence")
    return {
        "generic": {"logging_level": get("log_level"), "logfile": get("logfile"), "num_workers": get("workers")},
        "basis": {"lam": get("lam"), "size": get("size")},
        "potential": {"N": get("bigN"), "mode": get("mode")},
        "solver": {"tol_real": get("tol_real"), "quad_nodes": get("quad_nodes")},
        "grid": {"x_max": get("x_max"), "points": get("points"), "x_tail": get("x_tail")},
        "output": {"format": get("output_format"), "digits": get("digits")},
        "sweep": {
            "n_values": None if n_values is None else parse_float_list(n_values),
            "sizes": None if sizes is None else parse_int_list(sizes),
        },
        "level": get("level"),
    }


class AbstractCommand(object):
    """Base class of the command front-ends.

    A command reads a validated configuration, computes, and writes its
    artifacts into the workspace. Subclasses implement run().

    Args:
        config (DictConfig): A validated configuration.
        args (Namespace | None, optional): Parsed command-line options.

    Attributes:
        config (DictConfig): The configuration.
        args (Namespace): Command-line options, empty when not given.
        workspace (Workspace): The output directory.
        logger (Logger): The command logger.
        digits (int | None): Rounding of printed values.
    """

    command_name = "command"

    def __init__(self, config: DictConfig, args: Optional[Namespace] = None) -> None:
        self.config = config
        self.args = args if args is not None else Namespace()
        output = resolve_output_directory(getattr(self.args, "output", None), config.output.directory)
        self.workspace = Workspace(output)
        self.basis = basis_spec(config)
        self.potential = potential_spec(config)
        self.format = output_format(config)
        self.digits: Optional[int] = config.output.digits
        self.logger: Logger = getLogger(f"pttra.cli.{self.command_name}")

    def run(self) -> list[Path]:
        """Compute and write the artifacts.

        Returns:
            list[Path]: The written files.
        """
        raise NotImplementedError

    def parameters(self) -> dict[str, Any]:
        return {
            "N": self.potential.N,
            "lambda": self.basis.lam,
            "size": self.basis.size,
            "mode": self.potential.mode.value,
        }

    def number(self, value: complex | float) -> str:
        """A value for the terminal, rounded to `digits` when configured."""
        digits = 17 if self.digits is None else int(self.digits)
        z = complex(value)
        if z.imag == 0.0:
            return format(z.real, f".{digits}g")
        return f"{format(z.real, f'.{digits}g')}{format(z.imag, f'+.{digits}g')}i"


def _stream_level(args: Namespace, config: Optional[DictConfig] = None) -> str:
    if getattr(args, "log_level", None):
        return str(args.log_level)
    if os.getenv("LOG_LEVEL"):
        return str(os.getenv("LOG_LEVEL"))
    if config is not None:
        return str(config.generic.logging_level)
    return "INFO"


def execute(command_type: Type[AbstractCommand], parser: ArgumentParser, argv: Optional[Sequence[str]] = None) -> int:
    """Parse options, validate the configuration and run a command.

    Args:
        command_type (type[AbstractCommand]): The command to run.
        parser (ArgumentParser): Its parser.
        argv (Sequence[str] | None, optional): Arguments; sys.argv when None.

    Returns:
        int: 0 on success, 2 on a configuration error, 3 on non-convergence, 1 otherwise.
    """
    args = parser.parse_args(argv)
    root = create_logger("pttra", _stream_level(args))
    try:
        config = load_config(args.config, overrides_from_args(args))
        validate_config(config)
        command = command_type(config, args)
        command.workspace.create()
        if config.generic.logfile:
            logfile = Path(config.generic.logfile).resolve()
            make_directory(logfile.parent)
        else:
            logfile = command.workspace.log / f"{command_type.command_name}.log"
        root = create_logger("pttra", _stream_level(args, config), logfile=logfile)
        for path in command.run():
            root.info(f"wrote {path}")
    except ParameterError as e:
        root.error(f"configuration error: {e}")
        return exit_config_error
    except NumericError as e:
        root.error(f"numeric error: {e}")
        return exit_numeric_error
    except (TraError, OSError) as e:
        root.error(f"{command_type.command_name} failed: {e}")
        return exit_failure
    return exit_success
