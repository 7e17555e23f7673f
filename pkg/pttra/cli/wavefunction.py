from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence

from pttra.cli.command import AbstractCommand, build_parser, execute
from pttra.config import check_grid_tail
from pttra.hamiltonian import assemble
from pttra.util import EasyVisualizer, create_csv
from pttra.wavefunction import WavefunctionSamples, decay_metric, eigenpair, reconstruct

wavefunction_header = ["x", "re", "im", "abs"]


class WavefunctionCommand(AbstractCommand):
    """Samples psi of one level on the plotting grid and writes wavefunction.csv."""

    command_name = "wavefunction"

    def run(self) -> list[Path]:
        check_grid_tail(self.config)
        level = int(self.config.level)
        h = assemble(self.basis, self.potential, quad_nodes=self.config.solver.quad_nodes)
        energy, coefficients, _ = eigenpair(h, level, tol_real=float(self.config.solver.tol_real))
        x_max = self.config.grid.x_max
        grid = self.basis.grid(int(self.config.grid.points), None if x_max is None else float(x_max))
        samples = reconstruct(coefficients, self.basis, grid, meta={"level": level, "E": energy})

        comments = [f"{key}={value}" for key, value in self.parameters().items()]
        comments.extend([f"level={level}", f"E={self.number(energy)}"])
        x_tail = self.config.grid.x_tail
        if x_tail is not None:
            metric = decay_metric(samples, float(x_tail))
            comments.append(f"decay(x_tail={float(x_tail)})={metric!r}")
            self.logger.info(f"level {level}: E = {self.number(energy)}, tail ratio beyond {x_tail} = {metric:.3e}")
        comments.extend(h.annotations())
        create_csv(
            self.workspace.wavefunction_csv_file, wavefunction_header, samples.rows(), comments, self.workspace.lock
        )

        if getattr(self.args, "plot", False):
            self.plot(samples)
        return [self.workspace.wavefunction_csv_file]

    def plot(self, samples: WavefunctionSamples) -> None:
        cplt = EasyVisualizer()
        cplt.set_colors(["green"])
        print(cplt.caption([f"|psi(x)|, x in [{samples.x[0]:.3g}, {samples.x[-1]:.3g}]"]))
        print(cplt.line_plot([samples.modulus.tolist()]))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parses command line options and writes the sampled wavefunction."""
    parser = build_parser("pttra-wavefunction", "Sample a TRA wavefunction on a grid.")
    parser.add_argument("--level", type=int, default=None, help="Eigenvalue index in (Re, Im) order.")
    parser.add_argument("--x-tail", dest="x_tail", type=float, default=None)
    parser.add_argument("--plot", action="store_true", help="Draw |psi| in the terminal.")
    return execute(WavefunctionCommand, parser, argv)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
