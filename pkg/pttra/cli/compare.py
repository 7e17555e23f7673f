from __future__ import annotations

from pathlib import Path
from typing import Any, Optional, Sequence

from pttra.basis import ExpansionMode
from pttra.cli.command import AbstractCommand, build_parser, execute
from pttra.reference import compare_reference_matrix, compare_table1, describe, reference_dataset
from pttra.util import create_yaml


class CompareCommand(AbstractCommand):
    """Writes compare.yaml, the delta reports against the printed matrices and energy table.

    Both expansion modes are reported for the N = 1 matrix and the table; the
    N = 1.1 matrix exists in corrected mode only. The reports never assert a
    tolerance.
    """

    command_name = "compare"

    def run(self) -> list[Path]:
        tol_real = float(self.config.solver.tol_real)
        modes = [ExpansionMode.corrected, ExpansionMode.paper_faithful]
        content: dict[str, Any] = {"dataset": describe(reference_dataset())}
        content["eq22"] = {m.value: compare_reference_matrix("eq22", m).to_dict() for m in modes}
        eq23 = compare_reference_matrix("eq23", ExpansionMode.corrected)
        content["eq23"] = {
            ExpansionMode.corrected.value: eq23.to_dict(),
            ExpansionMode.paper_faithful.value: None,
        }
        content["table1"] = {m.value: [r.to_dict() for r in compare_table1(m, tol_real=tol_real)] for m in modes}

        for m in modes:
            report = content["eq22"][m.value]
            delta = self.number(report["abs_delta"][0][0])
            print(f"eq22 {m.value}: |delta(0,0)| = {delta}, max {self.number(report['max_abs_delta'])}")
        report = content["eq23"][ExpansionMode.corrected.value]
        print(f"eq23 corrected: max |delta| = {self.number(report['max_abs_delta'])}")
        for m in modes:
            for r in content["table1"][m.value]:
                print(f"{r['name']} {m.value}: max |delta| = {self.number(r['max_abs_delta'])}")

        create_yaml(self.workspace.compare_file, content, self.workspace.lock)
        return [self.workspace.compare_file]


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parses command line options and writes the comparison report."""
    parser = build_parser("pttra-compare", "Delta reports against the printed reference values.")
    return execute(CompareCommand, parser, argv)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
