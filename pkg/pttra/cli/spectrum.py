from __future__ import annotations

from pathlib import Path
from typing import Any, Optional, Sequence

from pttra.cli.command import AbstractCommand, build_parser, execute
from pttra.config import OutputFormat
from pttra.eigen import Spectrum
from pttra.hamiltonian import ComplexSymmetricMatrix, assemble
from pttra.reference import compare_spectrum_table1, convergence_header, convergence_table, reference_dataset
from pttra.util import create_csv, create_yaml
from pttra.wavefunction import solve

spectrum_header = ["index", "re", "im", "class"]


class SpectrumCommand(AbstractCommand):
    """Solves the assembled matrix and writes its eigenvalues.

    With --compare the lowest eigenvalues are reported next to the printed
    energy table, with --convergence the lowest eigenvalues are tabulated
    against the truncation size.
    """

    command_name = "spectrum"

    def run(self) -> list[Path]:
        h = assemble(self.basis, self.potential, quad_nodes=self.config.solver.quad_nodes)
        spectrum = solve(h, tol_real=float(self.config.solver.tol_real))
        comparison = self.compare(spectrum) if getattr(self.args, "compare", False) else None
        self.report(spectrum, comparison)

        written = [self.write(h, spectrum, comparison)]
        if getattr(self.args, "convergence", None):
            written.append(self.write_convergence())
        return written

    def compare(self, spectrum: Spectrum) -> list[dict[str, Any]]:
        dataset = reference_dataset()
        if (self.potential.N, self.basis.lam, self.basis.size) != (
            float(dataset.table1_n),
            dataset.table1_lambda,
            dataset.table1_size,
        ):
            self.logger.warning(
                f"the printed table belongs to N={dataset.table1_n}, lambda={dataset.table1_lambda}, "
                f"M={dataset.table1_size}"
            )
        return [report.to_dict() for report in compare_spectrum_table1(spectrum.values, self.parameters())]

    def report(self, spectrum: Spectrum, comparison: Optional[list[dict[str, Any]]]) -> None:
        n_real, n_complex = spectrum.summary()
        self.logger.info(f"{n_real} real and {n_complex} complex eigenvalues, residual {spectrum.residual:.3e}")
        for note in self.potential.annotations():
            self.logger.warning(note)
        for k, (value, tag) in enumerate(zip(spectrum.values, spectrum.classification)):
            line = f"E[{k}] = {self.number(value)} ({tag})"
            if comparison is not None and k < len(comparison[0]["reference"]):
                line += "  table: " + ", ".join(
                    f"{c['name'].split('/')[-1]}={self.number(c['reference'][k][0])}" for c in comparison
                )
            print(line)

    def write(self, h: ComplexSymmetricMatrix, spectrum: Spectrum, comparison: Optional[list[dict[str, Any]]]) -> Path:
        comments = [f"{key}={value}" for key, value in self.parameters().items()]
        comments.append(f"residual={spectrum.residual}")
        comments.extend(h.annotations())
        if self.format is OutputFormat.yaml:
            content: dict[str, Any] = {"parameters": self.parameters(), **spectrum.to_dict()}
            content["classification"] = list(spectrum.classification)
            content["annotations"] = h.annotations()
            if comparison is not None:
                content["table1"] = comparison
            create_yaml(self.workspace.spectrum_yaml_file, content, self.workspace.lock)
            return self.workspace.spectrum_yaml_file
        rows = [
            [k, float(value.real), float(value.imag), tag]
            for k, (value, tag) in enumerate(zip(spectrum.values, spectrum.classification))
        ]
        if comparison is not None:
            for c in comparison:
                comments.append(f"{c['name']} max_abs_delta={c['max_abs_delta']!r}")
        create_csv(self.workspace.spectrum_csv_file, spectrum_header, rows, comments, self.workspace.lock)
        return self.workspace.spectrum_csv_file

    def write_convergence(self) -> Path:
        levels = int(self.config.sweep.levels)
        rows = convergence_table(
            self.potential.N,
            self.basis.lam,
            list(self.config.sweep.sizes),
            mode=self.potential.mode,
            levels=levels,
            tol_real=float(self.config.solver.tol_real),
        )
        for row in rows:
            print(f"M={row.size}: " + ", ".join(self.number(v) for v in row.values))
        comments = [f"N={self.potential.N}", f"lambda={self.basis.lam}", f"mode={self.potential.mode.value}"]
        create_csv(
            self.workspace.convergence_csv_file,
            convergence_header(levels),
            [row.to_row() for row in rows],
            comments,
            self.workspace.lock,
        )
        return self.workspace.convergence_csv_file


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parses command line options and writes the spectrum."""
    parser = build_parser("pttra-spectrum", "Eigenvalues of the oscillator-basis TRA Hamiltonian.")
    parser.add_argument("--compare", action="store_true", help="Show the printed energy table alongside.")
    parser.add_argument("--convergence", type=str, default=None, help="Sizes such as 8,16,32.")
    return execute(SpectrumCommand, parser, argv)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
