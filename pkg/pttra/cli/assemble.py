from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence

from pttra.cli.command import AbstractCommand, build_parser, execute
from pttra.hamiltonian import assemble
from pttra.util import create_yaml


class AssembleCommand(AbstractCommand):
    """Writes the assembled matrix as matrix.yaml."""

    command_name = "assemble"

    def run(self) -> list[Path]:
        h = assemble(self.basis, self.potential, quad_nodes=self.config.solver.quad_nodes)
        content = h.to_dict()
        create_yaml(self.workspace.matrix_file, content, self.workspace.lock)
        self.logger.info(
            f"H: N={self.potential.N}, lambda={self.basis.lam}, M={h.size}, mode={self.potential.mode.value}, "
            f"H[0][0]={self.number(h.entries[0, 0])}, real={h.is_real()}"
        )
        return [self.workspace.matrix_file]


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parses command line options and writes the Hamiltonian matrix."""
    parser = build_parser("pttra-assemble", "Assemble the oscillator-basis TRA Hamiltonian matrix.")
    return execute(AssembleCommand, parser, argv)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
