from pttra.util.easy_visualizer import EasyVisualizer
from pttra.util.error import (
    ConfigError,
    ContractError,
    DegenerateRecursionError,
    ModeError,
    NumericError,
    ParameterError,
    TraError,
)
from pttra.util.filesystem import (
    create_csv,
    create_yaml,
    file_create,
    format_float,
    interprocess_lock_file,
    load_csv,
    load_yaml,
    make_directory,
)
from pttra.util.logger import ColoredHandler, create_logger, str_to_logging_level

__all__ = [
    "ColoredHandler",
    "ConfigError",
    "ContractError",
    "DegenerateRecursionError",
    "EasyVisualizer",
    "ModeError",
    "NumericError",
    "ParameterError",
    "TraError",
    "create_csv",
    "create_logger",
    "create_yaml",
    "file_create",
    "format_float",
    "interprocess_lock_file",
    "load_csv",
    "load_yaml",
    "make_directory",
    "str_to_logging_level",
]
