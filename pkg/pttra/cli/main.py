from __future__ import annotations

from argparse import REMAINDER, ArgumentParser
from typing import Callable, Dict, Optional, Sequence

from pttra.cli import assemble, compare, selftest, spectrum, sweep, wavefunction

commands: Dict[str, Callable[[Optional[Sequence[str]]], int]] = {
    "assemble": assemble.main,
    "compare": compare.main,
    "selftest": selftest.main,
    "spectrum": spectrum.main,
    "sweep": sweep.main,
    "wavefunction": wavefunction.main,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Dispatches `pttra <command> [options]` to the command front-ends."""
    parser = ArgumentParser(prog="pttra", description="Oscillator-basis TRA spectra of -(ix)^{2N} Hamiltonians.")
    parser.add_argument("command", choices=sorted(commands))
    parser.add_argument("args", nargs=REMAINDER)
    args = parser.parse_args(argv)
    return commands[args.command](args.args)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
