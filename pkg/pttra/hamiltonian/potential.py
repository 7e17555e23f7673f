"""The potential -(ix)^{2N} = -x^{2N} e^{i pi N} on the half line x > 0."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from pttra.basis.expansion import ExpansionMode, is_integer
from pttra.common import mass
from pttra.util.error import ModeError, ParameterError


def _check_exponent(n: float) -> None:
    if not math.isfinite(n) or n <= 0.0:
        raise ParameterError(f"the exponent N must be positive, got {n}")


def phase_factor(n: float) -> complex:
    """a = (i)^{2N} = e^{i pi N}.

    For N within 1e-9 of an integer the phase is returned as exactly +1 or -1,
    so that Hermitian cases assemble to exactly real matrices.

    Args:
        n (float): The exponent N > 0.

    Returns:
        complex: The phase.
    """
    _check_exponent(n)
    if is_integer(n):
        return complex((-1) ** int(round(n)), 0.0)
    return cmath.exp(1j * math.pi * n)


def is_hermitian(n: float) -> bool:
    """Whether e^{2 i pi N} = 1, i.e. N is an integer within 1e-9."""
    _check_exponent(n)
    return is_integer(n)


@dataclass(frozen=True)
class PotentialSpec:
    """Exponent and expansion mode of the potential term.

    Args:
        N (float): The exponent, N > 0.
        mode (ExpansionMode | str, optional): Defaults to corrected.

    Attributes:
        phase (complex): a = e^{i pi N}.
        mass (float): The particle mass, fixed to 1.
    """

    N: float
    mode: ExpansionMode = ExpansionMode.corrected
    phase: complex = field(init=False)
    mass: float = field(init=False, default=mass)

    def __post_init__(self) -> None:
        _check_exponent(self.N)
        object.__setattr__(self, "N", float(self.N))
        object.__setattr__(self, "mode", ExpansionMode(self.mode))
        if self.mode is ExpansionMode.paper_faithful and not is_integer(self.N):
            raise ModeError(f"paper_faithful mode needs an integer N, got {self.N}")
        object.__setattr__(self, "phase", phase_factor(self.N))

    @property
    def hermitian(self) -> bool:
        return is_hermitian(self.N)

    def annotations(self) -> list[str]:
        """Remarks attached to outputs built from this potential."""
        notes = []
        if self.N < 1.0:
            notes.append(f"N = {self.N} < 1: outside the N >= 1 range, complex eigenvalues are expected")
        if not self.hermitian:
            notes.append("non-integer N: complex symmetric, non-Hermitian matrix")
        return notes

    def to_dict(self) -> dict[str, object]:
        return {
            "N": self.N,
            "mode": self.mode.value,
            "phase": [self.phase.real, self.phase.imag],
        }
