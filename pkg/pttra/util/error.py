from __future__ import annotations

from typing import Any


class TraError(Exception):
    """Base class of every error raised by pttra."""


class ParameterError(TraError, ValueError):
    """An invalid numeric parameter, e.g. a Laguerre order nu <= -1."""


class ModeError(ParameterError):
    """An expansion mode that is not defined for the given exponent."""


class ConfigError(ParameterError):
    """An invalid run configuration."""


class ContractError(TraError):
    """An input that violates the contract of an operation."""


class NumericError(TraError, ArithmeticError):
    """An iteration that failed to converge.

    Args:
        message (str): A description of the failure.
        partial (Any, optional): Results obtained before the failure, e.g.
            eigenvalues that already deflated. Defaults to None.
        diagnostics (dict[str, Any] | None, optional): Iteration counters and
            residual information. Defaults to None.

    Attributes:
        partial (Any): Results obtained before the failure.
        diagnostics (dict[str, Any]): Iteration counters and residuals.
    """

    def __init__(self, message: str, partial: Any = None, diagnostics: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.partial = partial
        self.diagnostics = diagnostics if diagnostics is not None else {}

    def __str__(self) -> str:
        message = super().__str__()
        if len(self.diagnostics) == 0:
            return message
        details = ", ".join(f"{key}={value}" for key, value in self.diagnostics.items())
        return f"{message} ({details})"


class DegenerateRecursionError(NumericError):
    """A three-term recursion with a vanishing off-diagonal coefficient."""
