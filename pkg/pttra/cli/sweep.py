from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence

from pttra.cli.command import AbstractCommand, build_parser, execute
from pttra.reference import sweep_header, sweep_reality
from pttra.util import create_csv


class SweepCommand(AbstractCommand):
    """Classifies the spectrum over a list of exponents and writes sweep.csv."""

    command_name = "sweep"

    def run(self) -> list[Path]:
        rows = sweep_reality(
            list(self.config.sweep.n_values),
            self.basis,
            mode=self.potential.mode,
            tol_real=float(self.config.solver.tol_real),
            num_workers=int(self.config.generic.num_workers),
        )
        for row in rows:
            if row.ok:
                ground = self.number(complex(row.ground_re or 0.0, row.ground_im or 0.0))
                print(f"N={row.N}: {row.n_real} real, {row.n_complex} complex, ground {ground} {row.note}".rstrip())
            else:
                print(f"N={row.N}: {row.note}")
        comments = [f"lambda={self.basis.lam}", f"size={self.basis.size}", f"mode={self.potential.mode.value}"]
        create_csv(
            self.workspace.sweep_csv_file, sweep_header, [row.to_row() for row in rows], comments, self.workspace.lock
        )
        return [self.workspace.sweep_csv_file]


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parses command line options and runs the reality sweep."""
    parser = build_parser("pttra-sweep", "Real/complex classification of the spectrum over N.")
    parser.add_argument("--n-values", dest="n_values", type=str, default=None, help="Exponents such as 0.5,1,2.")
    parser.add_argument("--workers", type=int, default=None)
    return execute(SweepCommand, parser, argv)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
